use std::sync::OnceLock;

use super::invariants::{EvalContext, Value};
use super::{
    AlphaDomain, BoundSpec, Direction, Endpoint, EqualityPredicate, GraphPredicate, Interval,
    MeanAnchor, MeanValues, Target,
};
use crate::means::real_pow;

use Endpoint::{Closed, Open, Unbounded};

const NEGATIVE: &[Interval] = &[Interval::new(Unbounded, Open(0.0))];
const UP_TO_HALF: &[Interval] = &[Interval::new(Open(0.0), Closed(0.5))];
const UP_TO_ONE: &[Interval] = &[Interval::new(Open(0.0), Closed(1.0))];
const MINUS_ONE_TO_ZERO: &[Interval] = &[Interval::new(Closed(-1.0), Open(0.0))];
const AT_MOST_MINUS_ONE: &[Interval] = &[Interval::new(Unbounded, Closed(-1.0))];
const NON_NEGATIVE: &[Interval] = &[Interval::new(Closed(0.0), Unbounded)];
const NEGATIVE_OR_AT_LEAST_ONE: &[Interval] = &[
    Interval::new(Unbounded, Open(0.0)),
    Interval::new(Closed(1.0), Unbounded),
];

const LAMBDA_SQUARED: MeanAnchor = MeanAnchor {
    values: MeanValues::EdgeProducts,
    order: 0.5,
    side: Direction::Upper,
    expression: "λ²",
    eval: |c| Ok(c.lambda()?.powi(2)),
};
const AVG_DEGREE_SQUARED: MeanAnchor = MeanAnchor {
    values: MeanValues::EdgeProducts,
    order: 0.0,
    side: Direction::Lower,
    expression: "d²",
    eval: |c| Ok(c.avg_degree().powi(2)),
};
const HONG: MeanAnchor = MeanAnchor {
    values: MeanValues::EdgeProducts,
    order: 1.0,
    side: Direction::Upper,
    expression: "2m − n + 1",
    eval: |c| Ok(c.hong()),
};
const LAMBDA: MeanAnchor = MeanAnchor {
    values: MeanValues::Degrees,
    order: 1.0,
    side: Direction::Upper,
    expression: "λ",
    eval: |c| c.lambda(),
};
const AVG_DEGREE_LOWER: MeanAnchor = MeanAnchor {
    values: MeanValues::Degrees,
    order: 1.0,
    side: Direction::Lower,
    expression: "d",
    eval: |c| Ok(c.avg_degree()),
};
const AVG_DEGREE_UPPER: MeanAnchor = MeanAnchor {
    values: MeanValues::Degrees,
    order: 1.0,
    side: Direction::Upper,
    expression: "d",
    eval: |c| Ok(c.avg_degree()),
};
const DAS: MeanAnchor = MeanAnchor {
    values: MeanValues::Degrees,
    order: 2.0,
    side: Direction::Upper,
    expression: "√(d(Δ + δ) − Δδ)",
    eval: |c| Ok(c.das().sqrt()),
};

fn r(c: &EvalContext<'_>, a: f64) -> Value {
    Ok(c.randic(a))
}

fn q(c: &EvalContext<'_>, a: f64) -> Value {
    Ok(c.zeroth(a))
}

fn r_minus_one(c: &EvalContext<'_>, _: f64) -> Value {
    Ok(c.randic(-1.0))
}

fn r_minus_half(c: &EvalContext<'_>, _: f64) -> Value {
    Ok(c.randic(-0.5))
}

/// `m / √(2m − n + 1)`.
fn hong_randic(c: &EvalContext<'_>) -> f64 {
    c.m() / c.hong().sqrt()
}

/// `n^{2α+2} (ω−1)^{2α+1} / (2 ω^{2α+1})`.
fn clique_randic(c: &EvalContext<'_>, a: f64) -> Value {
    let w = c.omega()?;
    Ok(real_pow(c.n(), 2.0 * a + 2.0) * real_pow(w - 1.0, 2.0 * a + 1.0)
        / (2.0 * real_pow(w, 2.0 * a + 1.0)))
}

/// `2m² − (n−1)mδ + ½(δ−1)m(2m/(n−1) + n − 2)`.
fn das_gutman(c: &EvalContext<'_>) -> f64 {
    let (n, m, delta) = (c.n(), c.m(), c.min_degree());
    2.0 * m * m - (n - 1.0) * m * delta
        + 0.5 * (delta - 1.0) * m * (2.0 * m / (n - 1.0) + n - 2.0)
}

pub fn registry() -> &'static [BoundSpec] {
    static REGISTRY: OnceLock<Vec<BoundSpec>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

#[allow(clippy::too_many_arguments)]
fn spec(
    id: &'static str,
    statement: &'static str,
    target: Target,
    direction: Direction,
    alpha_domain: AlphaDomain,
    source: &'static str,
    lhs: super::Evaluator,
    rhs: super::Evaluator,
) -> BoundSpec {
    BoundSpec {
        id,
        statement,
        target,
        direction,
        alpha_domain,
        graph_predicate: GraphPredicate::Any,
        equality: None,
        anchors: &[],
        source,
        uses_chromatic: false,
        lhs,
        rhs,
    }
}

impl BoundSpec {
    fn requires(mut self, p: GraphPredicate) -> Self {
        self.graph_predicate = p;
        self
    }

    fn tight_on(mut self, e: EqualityPredicate) -> Self {
        self.equality = Some(e);
        self
    }

    fn anchored(mut self, anchors: &'static [MeanAnchor]) -> Self {
        self.anchors = anchors;
        self
    }

    fn with_chromatic(mut self) -> Self {
        self.uses_chromatic = true;
        self
    }
}

fn build() -> Vec<BoundSpec> {
    use AlphaDomain::{Fixed, Free, Intervals};
    use Direction::{Lower, Upper};
    use EqualityPredicate as Eq;
    use Target::{RandicAlpha as R, Scalar, ZerothAlpha as Q};

    vec![
        // Spectral power-mean bounds.
        spec("T1a", "R_α ≥ m λ^{2α}", R, Lower, Intervals(NEGATIVE),
            "power-mean transfer of the Favaron–Mahéo–Saclé bound", r,
            |c, a| Ok(c.m() * real_pow(c.lambda()?, 2.0 * a)))
            .tight_on(Eq::RegularOrSemiregularBipartite)
            .anchored(&[LAMBDA_SQUARED]),
        spec("T1b", "R_α ≤ m λ^{2α}", R, Upper, Intervals(UP_TO_HALF),
            "power-mean transfer of the Favaron–Mahéo–Saclé bound", r,
            |c, a| Ok(c.m() * real_pow(c.lambda()?, 2.0 * a)))
            .tight_on(Eq::RegularOrSemiregularBipartite)
            .anchored(&[LAMBDA_SQUARED]),
        spec("T1c", "Q_α ≥ n λ^α", Q, Lower, Intervals(NEGATIVE),
            "power-mean transfer of d ≤ λ", q,
            |c, a| Ok(c.n() * real_pow(c.lambda()?, a)))
            .tight_on(Eq::Regular)
            .anchored(&[LAMBDA]),
        spec("T1d", "Q_α ≤ n λ^α", Q, Upper, Intervals(UP_TO_ONE),
            "power-mean transfer of d ≤ λ", q,
            |c, a| Ok(c.n() * real_pow(c.lambda()?, a)))
            .tight_on(Eq::Regular)
            .anchored(&[LAMBDA]),
        spec("C1", "R_α ≥ m (2m − n + 1)^α", R, Lower, Intervals(NEGATIVE),
            "spectral bound combined with Hong's λ² ≤ 2m − n + 1", r,
            |c, a| Ok(c.m() * real_pow(c.hong(), a))),
        spec("BE-L", "R_α ≥ m ((√(8m+1) − 1)/2)^{2α}", R, Lower, Intervals(MINUS_ONE_TO_ZERO),
            "Bollobás–Erdős", r,
            |c, a| Ok(c.m() * real_pow(c.bollobas_erdos_base(), 2.0 * a))),
        spec("C2", "R_α ≥ n^{2α+2} (ω−1)^{2α+1} / (2 ω^{2α+1})", R, Lower,
            Intervals(AT_MOST_MINUS_ONE),
            "spectral bound combined with Nikiforov's bound and Turán's theorem", r,
            clique_randic),
        spec("LY", "R_α ≥ n (n−1)^{1+2α} / 2", R, Lower, Intervals(AT_MOST_MINUS_ONE),
            "Li–Yang", r,
            |c, a| Ok(c.n() * real_pow(c.n() - 1.0, 1.0 + 2.0 * a) / 2.0)),
        spec("C3", "R_α ≥ 2^{−α} n^α m^{1−α} λ^{3α}", R, Lower, Intervals(NEGATIVE),
            "extension of Lu–Liu–Tian to all α < 0", r,
            |c, a| {
                Ok(real_pow(2.0, -a) * real_pow(c.n(), a) * real_pow(c.m(), 1.0 - a)
                    * real_pow(c.lambda()?, 3.0 * a))
            }),
        // Degree-based power-mean bounds.
        spec("T2R", "R_α ≥ m d^{2α}", R, Lower, Intervals(NON_NEGATIVE),
            "Ilić–Stevanović", r,
            |c, a| Ok(c.m() * real_pow(c.avg_degree(), 2.0 * a)))
            .anchored(&[AVG_DEGREE_SQUARED]),
        spec("T2Qa", "Q_α ≥ n d^α", Q, Lower, Intervals(NEGATIVE_OR_AT_LEAST_ONE),
            "power-mean transfer of Q_1 / n = d", q,
            |c, a| Ok(c.n() * real_pow(c.avg_degree(), a)))
            .tight_on(Eq::Regular)
            .anchored(&[AVG_DEGREE_LOWER, AVG_DEGREE_UPPER]),
        spec("T2Qb", "Q_α ≤ n d^α", Q, Upper, Intervals(UP_TO_ONE),
            "power-mean transfer of Q_1 / n = d", q,
            |c, a| Ok(c.n() * real_pow(c.avg_degree(), a)))
            .tight_on(Eq::Regular)
            .anchored(&[AVG_DEGREE_UPPER]),
        spec("T3", "R_α ≤ m (2m − n + 1)^α", R, Upper, Intervals(UP_TO_ONE),
            "power-mean transfer of R_1 ≤ m(2m − n + 1)", r,
            |c, a| Ok(c.m() * real_pow(c.hong(), a)))
            .anchored(&[HONG]),
        spec("BE-U", "R_α ≤ m ((√(8m+1) − 1)/2)^{2α}", R, Upper, Intervals(UP_TO_ONE),
            "Bollobás–Erdős", r,
            |c, a| Ok(c.m() * real_pow(c.bollobas_erdos_base(), 2.0 * a))),
        spec("DG", "R_1 ≤ 2m² − (n−1)mδ + ½(δ−1)m(2m/(n−1) + n − 2)", R, Upper, Fixed(1.0),
            "Das–Gutman", r, |c, _| Ok(das_gutman(c)))
            .requires(GraphPredicate::OrderAtLeastTwo),
        spec("T4", "Q_α ≥ n (d(Δ+δ) − Δδ)^{α/2}", Q, Lower, Intervals(NEGATIVE),
            "power-mean transfer of Das's Q_2 bound", q,
            |c, a| Ok(c.n() * real_pow(c.das(), a / 2.0)))
            .anchored(&[DAS]),
        spec("DAS", "Q_2 ≤ n (d(Δ+δ) − Δδ)", Q, Upper, Fixed(2.0),
            "Das", q, |c, _| Ok(c.n() * c.das())),
        // R_{-1}.
        spec("SHI", "R_{−1} ≥ n / (2Δ)", R, Lower, Fixed(-1.0),
            "Shi", r_minus_one, |c, _| Ok(c.n() / (2.0 * c.max_degree())))
            .tight_on(Eq::Regular),
        spec("LY6", "R_{−1} ≥ n / (2(n−1))", R, Lower, Fixed(-1.0),
            "Li–Yang", r_minus_one, |c, _| Ok(c.n() / (2.0 * (c.n() - 1.0))))
            .tight_on(Eq::Complete),
        spec("LG", "R_{−1} ≥ (n−1) / m", R, Lower, Fixed(-1.0),
            "Liu–Gutman", r_minus_one, |c, _| Ok((c.n() - 1.0) / c.m()))
            .tight_on(Eq::Star),
        spec("CM", "R_{−1} ≥ 1", R, Lower, Fixed(-1.0),
            "Clark–Moon", r_minus_one, |_, _| Ok(1.0))
            .requires(GraphPredicate::Tree),
        spec("C4", "R_{−1} ≥ ω / (2(ω−1))", R, Lower, Fixed(-1.0),
            "spectral bound combined with Nikiforov's bound", r_minus_one,
            |c, _| {
                let w = c.omega()?;
                Ok(w / (2.0 * (w - 1.0)))
            })
            .tight_on(Eq::CompleteBipartiteOrRegularCompleteMultipartite),
        spec("C5", "R_{−1} ≥ 2/3", R, Lower, Fixed(-1.0),
            "clique bound with Brooks' theorem (ω ≤ Δ ≤ 4)", r_minus_one, |_, _| Ok(2.0 / 3.0))
            .requires(GraphPredicate::ChemicalNotK5)
            .tight_on(Eq::K4),
        // R_{-0.5}.
        spec("BE9-L", "R_{−0.5} ≥ √(n−1)", R, Lower, Fixed(-0.5),
            "Bollobás–Erdős", r_minus_half, |c, _| Ok((c.n() - 1.0).sqrt()))
            .tight_on(Eq::Star),
        spec("BE9-U", "R_{−0.5} ≤ n/2", R, Upper, Fixed(-0.5),
            "Bollobás–Erdős", r_minus_half, |c, _| Ok(c.n() / 2.0)),
        spec("C7", "R_{−0.5} ≥ m / √(2m − n + 1)", R, Lower, Fixed(-0.5),
            "spectral bound combined with Hong's bound", r_minus_half, |c, _| Ok(hong_randic(c))),
        spec("C7-CHAIN", "m / √(2m − n + 1) ≥ √(n−1)", Scalar, Lower, Free,
            "comparison of the Hong-based bound with Bollobás–Erdős", |c, _| Ok(hong_randic(c)),
            |c, _| Ok((c.n() - 1.0).sqrt()))
            .requires(GraphPredicate::Connected),
        spec("C6", "2R_{−0.5} ≥ λ + 1", Scalar, Lower, Free,
            "spectral bound with λ(λ+1) ≤ 2m", |c, _| Ok(2.0 * c.randic(-0.5)),
            |c, _| Ok(c.lambda()? + 1.0)),
        spec("C6-CHI", "χ ≤ λ + 1", Scalar, Upper, Free,
            "Wilf", |c, _| c.chi(), |c, _| Ok(c.lambda()? + 1.0))
            .with_chromatic(),
        spec("HV", "χ ≤ 2R_{−0.5}", Scalar, Upper, Free,
            "Hansen–Vukičević", |c, _| c.chi(), |c, _| Ok(2.0 * c.randic(-0.5)))
            .with_chromatic(),
        // Auxiliary inequalities used along the way.
        spec("AUX-HONG", "λ² ≤ 2m − n + 1", Scalar, Upper, Free,
            "Hong", |c, _| Ok(c.lambda()?.powi(2)), |c, _| Ok(c.hong())),
        spec("AUX-NIK", "λ² ≤ 2m(ω−1)/ω", Scalar, Upper, Free,
            "Nikiforov", |c, _| Ok(c.lambda()?.powi(2)),
            |c, _| {
                let w = c.omega()?;
                Ok(2.0 * c.m() * (w - 1.0) / w)
            }),
        spec("AUX-FAV", "(R_{0.5} / m)² ≤ λ²", Scalar, Upper, Free,
            "Favaron–Mahéo–Saclé", |c, _| Ok((c.randic(0.5) / c.m()).powi(2)),
            |c, _| Ok(c.lambda()?.powi(2))),
        spec("AUX-IS", "M_0(d_u d_v) ≥ d²", Scalar, Lower, Free,
            "Ilić–Stevanović", |c, _| Ok(c.edge_product_geometric_mean()),
            |c, _| Ok(c.avg_degree().powi(2))),
        spec("AUX-TUR", "m ≤ n²(ω−1)/(2ω)", Scalar, Upper, Free,
            "Turán", |c, _| Ok(c.m()),
            |c, _| {
                let w = c.omega()?;
                Ok(c.n() * c.n() * (w - 1.0) / (2.0 * w))
            }),
        spec("AUX-DL", "d ≤ λ", Scalar, Upper, Free,
            "average degree bound", |c, _| Ok(c.avg_degree()), |c, _| c.lambda())
            .tight_on(Eq::Regular),
        spec("AUX-LO", "λ ≤ 2m/ω", Scalar, Upper, Free,
            "Nikiforov with (ω−1)ω ≤ 2m", |c, _| c.lambda(), |c, _| Ok(2.0 * c.m() / c.omega()?)),
        spec("AUX-LO-W", "(ω−1)ω ≤ 2m", Scalar, Upper, Free,
            "clique edge count", |c, _| {
                let w = c.omega()?;
                Ok((w - 1.0) * w)
            }, |c, _| Ok(2.0 * c.m())),
        spec("AUX-LO-X", "(χ−1)χ ≤ 2m", Scalar, Upper, Free,
            "colour-class edge count", |c, _| {
                let x = c.chi()?;
                Ok((x - 1.0) * x)
            }, |c, _| Ok(2.0 * c.m()))
            .with_chromatic(),
        spec("AUX-LL", "λ(λ+1) ≤ 2m", Scalar, Upper, Free,
            "Stanley", |c, _| {
                let l = c.lambda()?;
                Ok(l * (l + 1.0))
            }, |c, _| Ok(2.0 * c.m())),
    ]
}
