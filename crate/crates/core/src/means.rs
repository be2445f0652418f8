//! Power sums `S_p`, generalized means `M_p`, and the rule that turns a bound
//! on one power mean into a bound on a power sum.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Relative tolerance for mean comparisons.
pub const REL_TOL: f64 = 1e-9;
/// Absolute floor applied under [`REL_TOL`].
pub const ABS_TOL: f64 = 1e-12;

/// `a ≤ b` up to the module tolerance.
pub fn approx_le(a: f64, b: f64) -> bool {
    a <= b + ABS_TOL.max(REL_TOL * a.abs().max(b.abs()))
}

pub fn approx_eq(a: f64, b: f64) -> bool {
    approx_le(a, b) && approx_le(b, a)
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeansError {
    #[error("value list is empty")]
    Empty,
    #[error("value {value} at index {index} is not a positive finite real")]
    NotPositive { index: usize, value: f64 },
    #[error("exponent p = 0 has no sign; the derived bound is undefined")]
    ZeroExponent,
    #[error("p = {p} lies on the wrong side of q = {q} for a {direction:?} bound on M_q")]
    WrongSide { p: f64, q: f64, direction: Direction },
    #[error("mean bound value must be positive, got {0}")]
    NonPositiveBound(f64),
}

/// Positive reals `w_1, ..., w_n` with `n ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueList(Vec<f64>);

impl ValueList {
    pub fn new(values: Vec<f64>) -> Result<Self, MeansError> {
        if values.is_empty() {
            return Err(MeansError::Empty);
        }
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(MeansError::NotPositive { index, value });
        }
        Ok(Self(values))
    }

    pub fn from_counts<I: IntoIterator<Item = T>, T: Into<u64>>(values: I) -> Result<Self, MeansError> {
        Self::new(values.into_iter().map(|v| v.into() as f64).collect())
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Lower,
    Upper,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Lower => Direction::Upper,
            Direction::Upper => Direction::Lower,
        }
    }
}

/// `x^p` with small integer exponents done by repeated multiplication so the
/// integer cases are bit-reproducible.
pub fn real_pow(x: f64, p: f64) -> f64 {
    if p.fract() == 0.0 && p.abs() <= 16.0 {
        let k = p.abs() as u32;
        let mut acc = 1.0;
        for _ in 0..k {
            acc *= x;
        }
        if p < 0.0 {
            1.0 / acc
        } else {
            acc
        }
    } else {
        x.powf(p)
    }
}

/// Sums addends in descending order of magnitude.
pub(crate) fn ordered_sum(mut terms: Vec<f64>) -> f64 {
    terms.sort_unstable_by(|a, b| b.abs().total_cmp(&a.abs()));
    terms.iter().sum()
}

/// `S_p = Σ w_i^p`; `S_0 = n`.
pub fn sum_power(v: &ValueList, p: f64) -> f64 {
    if p == 0.0 {
        return v.len() as f64;
    }
    ordered_sum(v.values().iter().map(|&w| real_pow(w, p)).collect())
}

/// Generalized mean `M_p = (S_p / n)^{1/p}`, with `M_0` the geometric mean.
///
/// Evaluated around the log-mean `c = (1/n) Σ ln w_i` as
/// `M_p = exp(c + ln(mean(exp(p (ln w_i - c)))) / p)`. When every `|p (ln w_i - c)|`
/// is small the inner mean is taken through `expm1`/`ln_1p`, which keeps the
/// result continuous through `p = 0` and free of cancellation; otherwise a
/// max-shifted log-sum-exp is used.
pub fn power_mean(v: &ValueList, p: f64) -> f64 {
    let n = v.len() as f64;
    let logs: Vec<f64> = v.values().iter().map(|w| w.ln()).collect();
    let c = ordered_sum(logs.clone()) / n;
    if p == 0.0 {
        return c.exp();
    }
    let scaled: Vec<f64> = logs.iter().map(|l| p * (l - c)).collect();
    let spread = scaled.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let log_mean = if spread < 0.5 {
        (ordered_sum(scaled.iter().map(|x| x.exp_m1()).collect()) / n).ln_1p()
    } else {
        let top = scaled.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        top + (ordered_sum(scaled.iter().map(|x| (x - top).exp()).collect()) / n).ln()
    };
    (c + log_mean / p).exp()
}

/// A bound `L ≤ M_q` or `M_q ≤ U`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanBound {
    pub q: f64,
    pub direction: Direction,
    pub value: f64,
}

/// A bound on `S_p` obtained from a [`MeanBound`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedSumBound {
    pub p: f64,
    pub direction: Direction,
    pub value: f64,
    pub count: usize,
}

impl DerivedSumBound {
    /// Whether `s` satisfies this bound up to the module tolerance.
    pub fn admits(&self, s: f64) -> bool {
        match self.direction {
            Direction::Lower => approx_le(self.value, s),
            Direction::Upper => approx_le(s, self.value),
        }
    }
}

/// Converts a bound on `M_q` over `n` values into a bound on `S_p`.
///
/// An upper bound `U` transfers to every `p ≤ q` and a lower bound `L` to
/// every `p ≥ q` (power mean monotonicity); raising to `n x^p` keeps the
/// direction for `p > 0` and reverses it for `p < 0`.
pub fn derive_sum_bound(n: usize, p: f64, bound: MeanBound) -> Result<DerivedSumBound, MeansError> {
    if bound.value.is_nan() || bound.value <= 0.0 {
        return Err(MeansError::NonPositiveBound(bound.value));
    }
    if p == 0.0 {
        return Err(MeansError::ZeroExponent);
    }
    let on_side = match bound.direction {
        Direction::Upper => p <= bound.q,
        Direction::Lower => p >= bound.q,
    };
    if !on_side {
        return Err(MeansError::WrongSide {
            p,
            q: bound.q,
            direction: bound.direction,
        });
    }
    let direction = if p > 0.0 {
        bound.direction
    } else {
        bound.direction.flip()
    };
    Ok(DerivedSumBound {
        p,
        direction,
        value: n as f64 * real_pow(bound.value, p),
        count: n,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonotonicityCheck {
    pub holds: bool,
    /// All values equal, the case where `M_p = M_q`.
    pub equality: bool,
    pub lower_mean: f64,
    pub upper_mean: f64,
}

/// Checks `M_p ≤ M_q` for `p < q`.
pub fn check_monotonicity(v: &ValueList, p: f64, q: f64) -> MonotonicityCheck {
    debug_assert!(p < q, "check_monotonicity expects p < q");
    let lower_mean = power_mean(v, p);
    let upper_mean = power_mean(v, q);
    let first = v.values()[0];
    MonotonicityCheck {
        holds: approx_le(lower_mean, upper_mean),
        equality: v.values().iter().all(|&w| w == first),
        lower_mean,
        upper_mean,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vl(xs: &[f64]) -> ValueList {
        ValueList::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_lists() {
        assert_eq!(ValueList::new(vec![]), Err(MeansError::Empty));
        assert_eq!(
            ValueList::new(vec![1.0, 0.0]),
            Err(MeansError::NotPositive { index: 1, value: 0.0 })
        );
        assert!(ValueList::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn sum_power_examples() {
        assert_eq!(sum_power(&vl(&[1.0, 2.0, 3.0]), 2.0), 14.0);
        assert_eq!(sum_power(&vl(&[5.0, 7.0, 9.0]), 0.0), 3.0);
        assert_eq!(sum_power(&vl(&[2.0, 4.0]), -1.0), 0.75);
    }

    #[test]
    fn power_mean_examples() {
        assert!((power_mean(&vl(&[1.0, 2.0, 3.0]), 1.0) - 2.0).abs() < 1e-15);
        assert!((power_mean(&vl(&[2.0, 8.0]), 0.0) - 4.0).abs() < 1e-15);
        assert!((power_mean(&vl(&[1.0, 3.0]), -1.0) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn geometric_mean_survives_large_products() {
        let v = ValueList::new(vec![1e200; 50]).unwrap();
        assert!((power_mean(&v, 0.0) / 1e200 - 1.0).abs() < 1e-12);
        assert!((power_mean(&v, 2.0) / 1e200 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn derive_sum_bound_examples() {
        let upper = |q, value| MeanBound { q, direction: Direction::Upper, value };
        let lower = |q, value| MeanBound { q, direction: Direction::Lower, value };

        let d = derive_sum_bound(3, -1.0, upper(0.5, 4.0)).unwrap();
        assert_eq!((d.direction, d.value), (Direction::Lower, 0.75));

        let d = derive_sum_bound(5, 1.0, lower(0.0, 2.0)).unwrap();
        assert_eq!((d.direction, d.value), (Direction::Lower, 10.0));

        // Petersen: 15 edges, every edge product 9, λ² = 9.
        let d = derive_sum_bound(15, -1.0, upper(0.5, 9.0)).unwrap();
        assert_eq!(d.direction, Direction::Lower);
        assert!((d.value - 15.0 / 9.0).abs() < 1e-15);
        let s = sum_power(&vl(&[9.0; 15]), -1.0);
        assert!((s - 15.0 / 9.0).abs() < 1e-15 && d.admits(s));

        let d = derive_sum_bound(4, 0.5, upper(1.0, 3.0)).unwrap();
        assert_eq!(d.direction, Direction::Upper);
        let d = derive_sum_bound(4, -2.0, lower(-3.0, 3.0)).unwrap();
        assert_eq!(d.direction, Direction::Upper);
    }

    #[test]
    fn derive_sum_bound_domain_errors() {
        let up = MeanBound { q: 0.5, direction: Direction::Upper, value: 4.0 };
        assert!(matches!(derive_sum_bound(3, 1.0, up), Err(MeansError::WrongSide { .. })));
        let lo = MeanBound { q: 1.0, direction: Direction::Lower, value: 4.0 };
        assert!(matches!(derive_sum_bound(3, 0.5, lo), Err(MeansError::WrongSide { .. })));
        assert_eq!(derive_sum_bound(3, 0.0, up), Err(MeansError::ZeroExponent));
        let zero = MeanBound { value: 0.0, ..up };
        assert_eq!(derive_sum_bound(3, -1.0, zero), Err(MeansError::NonPositiveBound(0.0)));
    }

    #[test]
    fn monotonicity_examples() {
        let c = check_monotonicity(&vl(&[1.0, 2.0, 3.0]), -1.0, 2.0);
        assert!(c.holds && !c.equality);
        let c = check_monotonicity(&vl(&[4.0, 4.0, 4.0]), -3.0, 7.0);
        assert!(c.holds && c.equality);
        assert!((c.lower_mean - 4.0).abs() < 1e-14 && (c.upper_mean - 4.0).abs() < 1e-14);
        let c = check_monotonicity(&vl(&[2.0, 8.0]), -0.001, 0.001);
        assert!(c.holds);
        assert!((c.lower_mean / 4.0 - 1.0).abs() < 1e-3);
        assert!((c.upper_mean / 4.0 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn integer_powers_are_exact() {
        assert_eq!(real_pow(3.0, 4.0), 81.0);
        assert_eq!(real_pow(2.0, -3.0), 0.125);
        assert_eq!(real_pow(9.0, 0.5), 3.0);
    }

    fn values() -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(0.05f64..20.0, 1..40)
    }

    proptest! {
        #[test]
        fn means_are_monotone(xs in values(), a in -5.0f64..5.0, b in -5.0f64..5.0) {
            prop_assume!(a != b);
            let (p, q) = if a < b { (a, b) } else { (b, a) };
            let v = ValueList::new(xs).unwrap();
            let mp = power_mean(&v, p);
            let mq = power_mean(&v, q);
            prop_assert!(mp <= mq + 1e-12 * mq.max(1.0), "M_{p} = {mp} > M_{q} = {mq}");
        }

        #[test]
        fn mean_sum_identity(xs in values(), p in -5.0f64..5.0) {
            let v = ValueList::new(xs).unwrap();
            let s = sum_power(&v, p);
            let via_mean = v.len() as f64 * real_pow(power_mean(&v, p), p);
            prop_assert!((via_mean - s).abs() <= 1e-12 * s.abs());
        }

        #[test]
        fn derived_bound_is_tight_on_its_own_mean(xs in values(), q in -4.0f64..4.0, dp in 0.0f64..3.0) {
            let v = ValueList::new(xs).unwrap();
            let mq = power_mean(&v, q);
            for d in [dp, 0.0] {
                for (direction, p) in [(Direction::Upper, q - d), (Direction::Lower, q + d)] {
                    if p == 0.0 { continue; }
                    let bound = MeanBound { q, direction, value: mq };
                    let derived = derive_sum_bound(v.len(), p, bound).unwrap();
                    prop_assert!(derived.admits(sum_power(&v, p)), "{derived:?}");
                    if d == 0.0 {
                        prop_assert!(approx_eq(derived.value, sum_power(&v, p)));
                    }
                }
            }
        }
    }
}
