//! Pairwise comparison of bound right-hand sides over a corpus.

use rayon::prelude::*;
use randic_core::bounds::{
    dominance_check, AlphaDomain, BoundSpec, EvalContext, GraphInvariants, InvariantConfig, Tighter,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::output::{timestamp, SCHEMA_VERSION, TOOL_VERSION};
use crate::source::NamedGraph;

pub const DEFAULT_PAIRS: [(&str, &str); 3] = [("C1", "BE-L"), ("C2", "LY"), ("C7", "BE9-L")];

#[derive(Debug, Error, PartialEq)]
pub enum PairError {
    #[error("pair `{0}` is not of the form FIRST:SECOND")]
    Syntax(String),
    #[error("unknown bound id `{0}`")]
    UnknownBound(String),
    #[error("{0} and {1} do not bound the same quantity in the same direction")]
    Incomparable(String, String),
}

#[derive(Debug, Clone, Copy)]
pub struct Pair {
    pub first: &'static BoundSpec,
    pub second: &'static BoundSpec,
}

impl Pair {
    pub fn new(first: &str, second: &str) -> Result<Self, PairError> {
        let find = |id: &str| BoundSpec::find(id).ok_or_else(|| PairError::UnknownBound(id.to_string()));
        let (a, b) = (find(first)?, find(second)?);
        if a.direction != b.direction || a.target != b.target {
            return Err(PairError::Incomparable(a.id.into(), b.id.into()));
        }
        Ok(Self { first: a, second: b })
    }

    /// Parses `FIRST:SECOND`.
    pub fn parse(text: &str) -> Result<Self, PairError> {
        let (a, b) = text
            .split_once(':')
            .ok_or_else(|| PairError::Syntax(text.to_string()))?;
        Self::new(a.trim(), b.trim())
    }

    fn exponents(&self, grid: &[f64]) -> Vec<Option<f64>> {
        let swept = |s: &BoundSpec| matches!(s.alpha_domain, AlphaDomain::Intervals(_));
        if swept(self.first) || swept(self.second) {
            grid.iter().copied().map(Some).collect()
        } else {
            vec![None]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceRow {
    pub first: String,
    pub second: String,
    pub graph: String,
    pub alpha: Option<f64>,
    pub first_rhs: f64,
    pub second_rhs: f64,
    pub tighter: Tighter,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSummary {
    pub first: String,
    pub second: String,
    pub compared: usize,
    pub first_tighter: usize,
    pub second_tighter: usize,
    pub ties: usize,
    /// (graph, exponent) combinations where either bound did not apply.
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceReport {
    pub schema: u32,
    pub tool_version: String,
    pub generated_at: u64,
    pub summary: Vec<PairSummary>,
    pub rows: Vec<DominanceRow>,
}

fn compare_graph(
    g: &NamedGraph,
    pairs: &[Pair],
    grid: &[f64],
    tol: f64,
    cfg: &InvariantConfig,
) -> Vec<(usize, Option<DominanceRow>)> {
    let inv = GraphInvariants::compute(&g.graph, cfg);
    let ctx = EvalContext { graph: &g.graph, inv: &inv };
    let mut out = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        for alpha in p.exponents(grid) {
            let row = dominance_check(p.first, p.second, &ctx, alpha, tol).ok().map(|d| DominanceRow {
                first: d.first,
                second: d.second,
                graph: g.id.clone(),
                alpha: d.alpha,
                first_rhs: d.first_rhs,
                second_rhs: d.second_rhs,
                tighter: d.tighter,
                gap: d.gap,
            });
            out.push((i, row));
        }
    }
    out
}

/// Compares each pair on every graph; call inside a pool to bound threads.
pub fn run_dominance(
    graphs: &[NamedGraph],
    pairs: &[Pair],
    grid: &[f64],
    tol: f64,
    cfg: &InvariantConfig,
) -> DominanceReport {
    let outcomes: Vec<_> = graphs
        .par_iter()
        .map(|g| compare_graph(g, pairs, grid, tol, cfg))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let mut summary: Vec<PairSummary> = pairs
        .iter()
        .map(|p| PairSummary {
            first: p.first.id.into(),
            second: p.second.id.into(),
            compared: 0,
            first_tighter: 0,
            second_tighter: 0,
            ties: 0,
            not_applicable: 0,
        })
        .collect();
    let mut rows = Vec::new();
    for (i, row) in outcomes {
        let s = &mut summary[i];
        match row {
            None => s.not_applicable += 1,
            Some(r) => {
                s.compared += 1;
                match r.tighter {
                    Tighter::First => s.first_tighter += 1,
                    Tighter::Second => s.second_tighter += 1,
                    Tighter::Tie => s.ties += 1,
                }
                rows.push(r);
            }
        }
    }
    DominanceReport {
        schema: SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        generated_at: timestamp(),
        summary,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::{load_family, Sampling};
    use randic_core::bounds::DEFAULT_SLACK;

    const S: Sampling = Sampling { seed: 3, trials: 60 };

    fn run(family: &str, params: &str, pair: &str, grid: &[f64]) -> PairSummary {
        let graphs = load_family(family, params, S).unwrap();
        let p = Pair::parse(pair).unwrap();
        run_dominance(&graphs, &[p], grid, DEFAULT_SLACK, &InvariantConfig::default())
            .summary
            .remove(0)
    }

    #[test]
    fn c1_beats_bollobas_erdos_on_stars() {
        let s = run("star", "3..20", "C1:BE-L", &[-1.0]);
        assert_eq!((s.compared, s.first_tighter), (18, 18));
    }

    #[test]
    fn c2_never_worse_than_li_yang() {
        let s = run("gnp", "n=4..12,p=0.3;0.5;0.8", "C2:LY", &[-1.0, -2.0]);
        assert_eq!(s.compared, 120);
        assert_eq!(s.second_tighter, 0);
    }

    #[test]
    fn c7_never_worse_on_trees() {
        let s = run("tree", "n=3..15", "C7:BE9-L", &[]);
        assert_eq!(s.compared, 60);
        assert_eq!(s.second_tighter, 0);
    }

    #[test]
    fn pair_errors() {
        assert!(matches!(Pair::parse("C1"), Err(PairError::Syntax(_))));
        assert!(matches!(Pair::parse("C1:nope"), Err(PairError::UnknownBound(_))));
        assert!(matches!(Pair::parse("C1:T1b"), Err(PairError::Incomparable(..))));
        assert!(matches!(Pair::parse("C1:T1c"), Err(PairError::Incomparable(..))));
    }
}
