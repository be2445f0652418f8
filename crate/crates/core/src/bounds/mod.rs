//! Executable catalogue of inequalities on `R_α`, `Q_α`, `λ`, `ω` and `χ`.
//!
//! Each [`BoundSpec`] is one inequality `lhs ≥ rhs` (lower) or `lhs ≤ rhs`
//! (upper) together with the exponents and graphs it applies to and the
//! graph class on which it is claimed to be tight. Every graph with an
//! isolated vertex is refused up front.

mod catalogue;
mod invariants;

pub use catalogue::registry;
pub use invariants::{EvalContext, GraphInvariants, InvariantConfig, MissingInvariant};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::GraphClassFlags;
pub use crate::means::Direction;

/// Default relative slack for bound comparisons.
pub const DEFAULT_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// `R_α`
    RandicAlpha,
    /// `Q_α`
    ZerothAlpha,
    /// Anything else: spectral, clique or chromatic quantities.
    Scalar,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Endpoint {
    Unbounded,
    Open(f64),
    Closed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub const fn new(lo: Endpoint, hi: Endpoint) -> Self {
        Self { lo, hi }
    }

    pub fn contains(&self, a: f64) -> bool {
        let above = match self.lo {
            Endpoint::Unbounded => true,
            Endpoint::Open(x) => a > x,
            Endpoint::Closed(x) => a >= x,
        };
        let below = match self.hi {
            Endpoint::Unbounded => true,
            Endpoint::Open(x) => a < x,
            Endpoint::Closed(x) => a <= x,
        };
        above && below
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.lo, self.hi) {
            (Endpoint::Unbounded, Endpoint::Unbounded) => write!(f, "α∈ℝ"),
            (Endpoint::Unbounded, Endpoint::Open(h)) => write!(f, "α<{h}"),
            (Endpoint::Unbounded, Endpoint::Closed(h)) => write!(f, "α≤{h}"),
            (Endpoint::Open(l), Endpoint::Unbounded) => write!(f, "α>{l}"),
            (Endpoint::Closed(l), Endpoint::Unbounded) => write!(f, "α≥{l}"),
            (lo, hi) => {
                match lo {
                    Endpoint::Open(l) => write!(f, "{l}<")?,
                    Endpoint::Closed(l) => write!(f, "{l}≤")?,
                    Endpoint::Unbounded => unreachable!(),
                }
                write!(f, "α")?;
                match hi {
                    Endpoint::Open(h) => write!(f, "<{h}"),
                    Endpoint::Closed(h) => write!(f, "≤{h}"),
                    Endpoint::Unbounded => unreachable!(),
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlphaDomain {
    /// Union of intervals.
    Intervals(&'static [Interval]),
    /// The bound is stated for one exponent only.
    Fixed(f64),
    /// The inequality has no free exponent.
    Free,
}

impl AlphaDomain {
    pub fn contains(&self, a: f64) -> bool {
        match *self {
            AlphaDomain::Intervals(parts) => parts.iter().any(|i| i.contains(a)),
            AlphaDomain::Fixed(x) => a == x,
            AlphaDomain::Free => false,
        }
    }

    /// Whether evaluation iterates over an exponent grid.
    pub fn is_swept(&self) -> bool {
        matches!(self, AlphaDomain::Intervals(_))
    }
}

impl fmt::Display for AlphaDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaDomain::Intervals(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ∪ ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            AlphaDomain::Fixed(x) => write!(f, "α={x}"),
            AlphaDomain::Free => write!(f, "none"),
        }
    }
}

/// Applicability beyond the global `δ ≥ 1` requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphPredicate {
    Any,
    Connected,
    Tree,
    /// `Δ ≤ 4` and not `K_5`.
    ChemicalNotK5,
    OrderAtLeastTwo,
}

impl GraphPredicate {
    pub fn holds(self, flags: &GraphClassFlags, order: usize) -> bool {
        match self {
            GraphPredicate::Any => true,
            GraphPredicate::Connected => flags.connected,
            GraphPredicate::Tree => flags.tree,
            GraphPredicate::ChemicalNotK5 => flags.chemical && !flags.is_k5,
            GraphPredicate::OrderAtLeastTwo => order >= 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphPredicate::Any => "min_degree_at_least_1",
            GraphPredicate::Connected => "connected",
            GraphPredicate::Tree => "tree",
            GraphPredicate::ChemicalNotK5 => "chemical_not_k5",
            GraphPredicate::OrderAtLeastTwo => "order_at_least_2",
        }
    }
}

/// Graph classes on which a bound is claimed to hold with equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EqualityPredicate {
    Regular,
    RegularOrSemiregularBipartite,
    Complete,
    Star,
    CompleteBipartiteOrRegularCompleteMultipartite,
    K4,
}

impl EqualityPredicate {
    pub fn holds(self, flags: &GraphClassFlags, order: usize) -> bool {
        match self {
            EqualityPredicate::Regular => flags.regular,
            EqualityPredicate::RegularOrSemiregularBipartite => {
                flags.regular || flags.semiregular_bipartite
            }
            EqualityPredicate::Complete => flags.complete,
            EqualityPredicate::Star => flags.star,
            EqualityPredicate::CompleteBipartiteOrRegularCompleteMultipartite => {
                flags.complete_bipartite || flags.regular_complete_multipartite
            }
            EqualityPredicate::K4 => flags.complete && order == 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EqualityPredicate::Regular => "regular",
            EqualityPredicate::RegularOrSemiregularBipartite => "regular_or_semiregular_bipartite",
            EqualityPredicate::Complete => "complete",
            EqualityPredicate::Star => "star",
            EqualityPredicate::CompleteBipartiteOrRegularCompleteMultipartite => {
                "complete_bipartite_or_regular_complete_multipartite"
            }
            EqualityPredicate::K4 => "k4",
        }
    }
}

/// Which multiset a power-mean anchor is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeanValues {
    /// `{d_u d_v : uv ∈ E}`, `m` values; power sums give `R_α`.
    EdgeProducts,
    /// `{d_v : v ∈ V}`, `n` values; power sums give `Q_α`.
    Degrees,
}

/// A bound `L ≤ M_q` or `M_q ≤ U` from which a power-sum bound is derived.
#[derive(Debug, Clone, Copy)]
pub struct MeanAnchor {
    pub values: MeanValues,
    pub order: f64,
    pub side: Direction,
    pub expression: &'static str,
    pub eval: fn(&EvalContext<'_>) -> Result<f64, MissingInvariant>,
}

pub type Evaluator = fn(&EvalContext<'_>, f64) -> Result<f64, MissingInvariant>;

/// One inequality of the catalogue.
#[derive(Clone)]
pub struct BoundSpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub target: Target,
    pub direction: Direction,
    pub alpha_domain: AlphaDomain,
    pub graph_predicate: GraphPredicate,
    pub equality: Option<EqualityPredicate>,
    pub anchors: &'static [MeanAnchor],
    /// Where the inequality comes from.
    pub source: &'static str,
    /// χ appears on the small side; an upper bound on χ still certifies it.
    pub uses_chromatic: bool,
    pub lhs: Evaluator,
    pub rhs: Evaluator,
}

impl fmt::Debug for BoundSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundSpec")
            .field("id", &self.id)
            .field("statement", &self.statement)
            .field("direction", &self.direction)
            .field("alpha_domain", &self.alpha_domain.to_string())
            .finish_non_exhaustive()
    }
}

impl BoundSpec {
    pub fn find(id: &str) -> Option<&'static BoundSpec> {
        registry().iter().find(|b| b.id == id)
    }

    pub fn info(&self) -> BoundInfo {
        BoundInfo {
            id: self.id.to_string(),
            statement: self.statement.to_string(),
            target: self.target,
            direction: self.direction,
            alpha_domain: self.alpha_domain.to_string(),
            graph_predicate: self.graph_predicate.name().to_string(),
            equality_predicate: self.equality.map(|e| e.name().to_string()),
            mean_anchors: self
                .anchors
                .iter()
                .map(|a| AnchorInfo {
                    values: a.values,
                    order: a.order,
                    side: a.side,
                    bound: a.expression.to_string(),
                })
                .collect(),
            source: self.source.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnchorInfo {
    pub values: MeanValues,
    pub order: f64,
    pub side: Direction,
    pub bound: String,
}

/// Serializable description of a [`BoundSpec`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundInfo {
    pub id: String,
    pub statement: String,
    pub target: Target,
    pub direction: Direction,
    pub alpha_domain: String,
    pub graph_predicate: String,
    pub equality_predicate: Option<String>,
    pub mean_anchors: Vec<AnchorInfo>,
    pub source: String,
}

/// Outcome of checking one bound on one graph at one exponent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub bound_id: String,
    pub graph_id: String,
    pub alpha: Option<f64>,
    pub applicable: bool,
    pub skipped: bool,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub holds: Option<bool>,
    pub abs_gap: Option<f64>,
    pub rel_gap: Option<f64>,
    pub equality_observed: Option<bool>,
    pub equality_predicted: Option<bool>,
    /// Why the row is inapplicable or skipped, or a qualifier on a held row.
    pub note: Option<String>,
}

impl BoundResult {
    fn blank(spec: &BoundSpec, graph_id: &str, alpha: Option<f64>) -> Self {
        Self {
            bound_id: spec.id.to_string(),
            graph_id: graph_id.to_string(),
            alpha,
            applicable: false,
            skipped: false,
            lhs: None,
            rhs: None,
            holds: None,
            abs_gap: None,
            rel_gap: None,
            equality_observed: None,
            equality_predicted: None,
            note: None,
        }
    }

    pub fn violated(&self) -> bool {
        self.holds == Some(false)
    }

    /// Equality was claimed for this graph class but not observed.
    pub fn equality_failure(&self) -> bool {
        self.equality_predicted == Some(true) && self.equality_observed == Some(false)
    }
}

/// `slack = rel · max(1, |lhs|, |rhs|)`.
pub fn slack(lhs: f64, rhs: f64, rel: f64) -> f64 {
    rel * 1f64.max(lhs.abs()).max(rhs.abs())
}

fn resolve_alpha(domain: &AlphaDomain, alpha: Option<f64>) -> Result<Option<f64>, String> {
    match (*domain, alpha) {
        (AlphaDomain::Intervals(_), None) => Err("bound needs an exponent".into()),
        (AlphaDomain::Intervals(_), Some(a)) if !domain.contains(a) => {
            Err(format!("α = {a} outside {domain}"))
        }
        (AlphaDomain::Intervals(_), Some(a)) => Ok(Some(a)),
        (AlphaDomain::Fixed(x), None) => Ok(Some(x)),
        (AlphaDomain::Fixed(x), Some(a)) if a == x => Ok(Some(x)),
        (AlphaDomain::Fixed(x), Some(a)) => Err(format!("α = {a} but bound is stated at α = {x}")),
        (AlphaDomain::Free, _) => Ok(None),
    }
}

/// Evaluates `spec` on a graph whose invariants are already computed.
///
/// `alpha` is required for interval domains; fixed-exponent bounds use their
/// own exponent when `alpha` is `None`. `rel_slack` scales the comparison
/// slack (see [`slack`]).
pub fn evaluate_bound(
    spec: &BoundSpec,
    ctx: &EvalContext<'_>,
    graph_id: &str,
    alpha: Option<f64>,
    rel_slack: f64,
) -> BoundResult {
    let mut out = BoundResult::blank(spec, graph_id, alpha);
    let alpha = match resolve_alpha(&spec.alpha_domain, alpha) {
        Ok(a) => a,
        Err(why) => {
            out.note = Some(why);
            return out;
        }
    };
    out.alpha = alpha;
    let flags = &ctx.inv.flags;
    if flags.has_isolated_vertex || ctx.inv.size == 0 {
        out.note = Some("graph has an isolated vertex".into());
        return out;
    }
    if !spec.graph_predicate.holds(flags, ctx.inv.order) {
        out.note = Some(format!("requires {}", spec.graph_predicate.name()));
        return out;
    }
    out.applicable = true;
    let a = alpha.unwrap_or(f64::NAN);
    let (lhs, rhs) = match ((spec.lhs)(ctx, a), (spec.rhs)(ctx, a)) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => {
            out.skipped = true;
            out.note = Some(format!("missing invariant: {e:?}"));
            return out;
        }
    };
    let s = slack(lhs, rhs, rel_slack);
    let holds = match spec.direction {
        Direction::Lower => lhs >= rhs - s,
        Direction::Upper => lhs <= rhs + s,
    };
    if spec.uses_chromatic && !ctx.chi_exact() {
        if !holds {
            out.skipped = true;
            out.note = Some("chromatic number is only an upper bound".into());
            return out;
        }
        out.note = Some("certified with a chromatic upper bound".into());
    }
    let gap = (lhs - rhs).abs();
    out.lhs = Some(lhs);
    out.rhs = Some(rhs);
    out.holds = Some(holds);
    out.abs_gap = Some(gap);
    out.rel_gap = Some(gap / lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE));
    out.equality_observed = Some(gap <= s);
    out.equality_predicted = spec.equality.map(|e| e.holds(flags, ctx.inv.order));
    out
}

/// Whether the bound is claimed to be tight on this graph's class.
pub fn check_equality_prediction(spec: &BoundSpec, flags: &GraphClassFlags, order: usize) -> bool {
    spec.equality.is_some_and(|e| e.holds(flags, order))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tighter {
    First,
    Second,
    Tie,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dominance {
    pub first: String,
    pub second: String,
    pub alpha: Option<f64>,
    pub first_rhs: f64,
    pub second_rhs: f64,
    pub tighter: Tighter,
    /// `|first_rhs − second_rhs|`.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DominanceError {
    #[error("{0} and {1} bound in opposite directions")]
    MixedDirection(String, String),
    #[error("{0} and {1} bound different quantities")]
    MixedTarget(String, String),
    #[error("{id} is not applicable: {reason}")]
    NotApplicable { id: String, reason: String },
}

/// Compares the right-hand sides of two same-direction bounds on one graph;
/// for lower bounds the larger side is tighter, for upper bounds the smaller.
pub fn dominance_check(
    first: &BoundSpec,
    second: &BoundSpec,
    ctx: &EvalContext<'_>,
    alpha: Option<f64>,
    rel_slack: f64,
) -> Result<Dominance, DominanceError> {
    if first.direction != second.direction {
        return Err(DominanceError::MixedDirection(first.id.into(), second.id.into()));
    }
    if first.target != second.target {
        return Err(DominanceError::MixedTarget(first.id.into(), second.id.into()));
    }
    let rhs_of = |spec: &BoundSpec| -> Result<(f64, Option<f64>), DominanceError> {
        let r = evaluate_bound(spec, ctx, "", alpha, rel_slack);
        match r.rhs {
            Some(v) if r.applicable => Ok((v, r.alpha)),
            _ => Err(DominanceError::NotApplicable {
                id: spec.id.into(),
                reason: r.note.unwrap_or_default(),
            }),
        }
    };
    let (a, alpha_a) = rhs_of(first)?;
    let (b, _) = rhs_of(second)?;
    let gap = (a - b).abs();
    let tighter = if gap <= slack(a, b, rel_slack) {
        Tighter::Tie
    } else if (a > b) == (first.direction == Direction::Lower) {
        Tighter::First
    } else {
        Tighter::Second
    };
    Ok(Dominance {
        first: first.id.into(),
        second: second.id.into(),
        alpha: alpha_a,
        first_rhs: a,
        second_rhs: b,
        tighter,
        gap,
    })
}
