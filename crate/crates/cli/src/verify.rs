//! Runs the bound catalogue over a corpus and an exponent grid.

use rayon::prelude::*;
use randic_core::bounds::{
    evaluate_bound, registry, AlphaDomain, BoundResult, BoundSpec, EvalContext, GraphInvariants,
    InvariantConfig, DEFAULT_SLACK,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::output::{timestamp, OutputFormat, SCHEMA_VERSION, TOOL_VERSION};
use crate::source::{load_sources, GraphSource, NamedGraph, Sampling, SourceError};

pub const DEFAULT_ALPHAS: [f64; 7] = [-2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0];

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("exponent grid is empty")]
    EmptyGrid,
    #[error("exponent {0} is not finite")]
    NonFiniteAlpha(f64),
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error("unknown bound id `{0}`")]
    UnknownBound(String),
    #[error("could not start worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Source(#[from] SourceError),
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub sources: Vec<GraphSource>,
    pub alphas: Vec<f64>,
    /// Relative slack for comparisons and equality detection.
    pub tol: f64,
    pub seed: u64,
    pub trials: usize,
    /// Restrict to these bound ids; all bounds when `None`.
    pub bounds: Option<Vec<String>>,
    /// Worker threads; 0 means one per core.
    pub jobs: usize,
    pub format: OutputFormat,
    pub invariants: InvariantConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            sources: Vec::new(),
            alphas: DEFAULT_ALPHAS.to_vec(),
            tol: DEFAULT_SLACK,
            seed: 1,
            trials: 100,
            bounds: None,
            jobs: 0,
            format: OutputFormat::Csv,
            invariants: InvariantConfig::default(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.alphas.is_empty() {
            return Err(ConfigError::EmptyGrid);
        }
        if let Some(&a) = self.alphas.iter().find(|a| !a.is_finite()) {
            return Err(ConfigError::NonFiniteAlpha(a));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(ConfigError::BadTolerance(self.tol));
        }
        self.selected_bounds().map(|_| ())
    }

    pub fn sampling(&self) -> Sampling {
        Sampling {
            seed: self.seed,
            trials: self.trials,
        }
    }

    pub fn selected_bounds(&self) -> Result<Vec<&'static BoundSpec>, ConfigError> {
        match &self.bounds {
            None => Ok(registry().iter().collect()),
            Some(ids) => ids
                .iter()
                .map(|id| BoundSpec::find(id).ok_or_else(|| ConfigError::UnknownBound(id.clone())))
                .collect(),
        }
    }

    pub fn load_graphs(&self) -> Result<Vec<NamedGraph>, ConfigError> {
        Ok(load_sources(&self.sources, self.sampling())?)
    }
}

/// Runs `f` on a pool with `jobs` threads (0 for the rayon default).
pub fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, ConfigError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| ConfigError::Pool(e.to_string()))?;
    Ok(pool.install(f))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusFingerprint {
    pub sources: Vec<String>,
    pub seed: u64,
    pub trials: usize,
    pub graphs: usize,
    /// Graphs with an isolated vertex; every bound refuses them.
    pub refused_graphs: usize,
    pub min_order: usize,
    pub max_order: usize,
    pub total_edges: usize,
    pub alphas: Vec<f64>,
    pub tol: f64,
    pub bounds: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub checked: usize,
    pub held: usize,
    pub violated: usize,
    pub skipped: usize,
    pub equality_predicted: usize,
    pub equality_observed: usize,
    pub equality_failures: usize,
}

impl Summary {
    pub fn of(rows: &[BoundResult]) -> Self {
        let count = |f: &dyn Fn(&BoundResult) -> bool| rows.iter().filter(|r| f(r)).count();
        Self {
            checked: count(&|r| r.holds.is_some()),
            held: count(&|r| r.holds == Some(true)),
            violated: count(&|r| r.violated()),
            skipped: count(&|r| r.skipped),
            equality_predicted: count(&|r| r.equality_predicted == Some(true)),
            equality_observed: count(&|r| r.equality_observed == Some(true)),
            equality_failures: count(&|r| r.equality_failure()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub tool_version: String,
    pub generated_at: u64,
    pub corpus: CorpusFingerprint,
    pub summary: Summary,
    /// Applicable rows only, ordered by corpus position, catalogue order, then exponent.
    pub results: Vec<BoundResult>,
}

impl VerificationReport {
    /// 0 when everything held, 1 on violations or missed equalities, 3 when
    /// `strict` and some rows were skipped.
    pub fn exit_code(&self, strict: bool) -> u8 {
        if self.summary.violated > 0 || self.summary.equality_failures > 0 {
            1
        } else if strict && self.summary.skipped > 0 {
            3
        } else {
            0
        }
    }
}

/// Exponents at which `spec` is evaluated: the grid points inside an interval
/// domain, otherwise a single evaluation at the bound's own exponent.
pub fn exponents_for(spec: &BoundSpec, grid: &[f64]) -> Vec<Option<f64>> {
    match spec.alpha_domain {
        AlphaDomain::Intervals(_) => grid
            .iter()
            .copied()
            .filter(|&a| spec.alpha_domain.contains(a))
            .map(Some)
            .collect(),
        AlphaDomain::Fixed(_) | AlphaDomain::Free => vec![None],
    }
}

pub fn evaluate_graph(
    g: &NamedGraph,
    specs: &[&BoundSpec],
    grid: &[f64],
    tol: f64,
    invariants: &InvariantConfig,
) -> Vec<BoundResult> {
    let inv = GraphInvariants::compute(&g.graph, invariants);
    let ctx = EvalContext {
        graph: &g.graph,
        inv: &inv,
    };
    let mut out = Vec::new();
    for spec in specs {
        for alpha in exponents_for(spec, grid) {
            let r = evaluate_bound(spec, &ctx, &g.id, alpha, tol);
            if r.applicable {
                out.push(r);
            }
        }
    }
    out
}

/// Evaluates every selected bound on every graph, one task per graph.
pub fn run_verification(graphs: &[NamedGraph], cfg: &SuiteConfig) -> Result<VerificationReport, ConfigError> {
    cfg.validate()?;
    let specs = cfg.selected_bounds()?;
    let results: Vec<BoundResult> = with_pool(cfg.jobs, || {
        graphs
            .par_iter()
            .map(|g| evaluate_graph(g, &specs, &cfg.alphas, cfg.tol, &cfg.invariants))
            .collect::<Vec<_>>()
    })?
    .into_iter()
    .flatten()
    .collect();
    let orders = graphs.iter().map(|g| g.graph.order());
    let corpus = CorpusFingerprint {
        sources: cfg.sources.iter().map(ToString::to_string).collect(),
        seed: cfg.seed,
        trials: cfg.trials,
        graphs: graphs.len(),
        refused_graphs: graphs.iter().filter(|g| g.graph.has_isolated_vertex()).count(),
        min_order: orders.clone().min().unwrap_or(0),
        max_order: orders.max().unwrap_or(0),
        total_edges: graphs.iter().map(|g| g.graph.size()).sum(),
        alphas: cfg.alphas.clone(),
        tol: cfg.tol,
        bounds: specs.iter().map(|s| s.id.to_string()).collect(),
    };
    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        generated_at: timestamp(),
        corpus,
        summary: Summary::of(&results),
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::load_family;

    fn graphs(name: &str, params: &str) -> Vec<NamedGraph> {
        load_family(name, params, Sampling { seed: 1, trials: 20 }).unwrap()
    }

    #[test]
    fn complete_graphs_hit_ly6_equality() {
        let report = run_verification(&graphs("complete", "3..8"), &SuiteConfig::default()).unwrap();
        assert_eq!(report.summary.violated, 0);
        assert_eq!(report.summary.equality_failures, 0);
        let ly6: Vec<_> = report.results.iter().filter(|r| r.bound_id == "LY6").collect();
        assert_eq!(ly6.len(), 6);
        assert!(ly6.iter().all(|r| r.equality_observed == Some(true)));
        assert_eq!(report.exit_code(true), 0);
    }

    #[test]
    fn stars_hit_lg_and_be9_lower() {
        let report = run_verification(&graphs("star", "2..20"), &SuiteConfig::default()).unwrap();
        for id in ["LG", "BE9-L"] {
            let rows: Vec<_> = report.results.iter().filter(|r| r.bound_id == id).collect();
            assert_eq!(rows.len(), 19, "{id}");
            assert!(rows.iter().all(|r| r.equality_observed == Some(true)), "{id}");
        }
    }

    #[test]
    fn summary_matches_rows() {
        let report = run_verification(&graphs("gnp", "n=5..9,p=0.5"), &SuiteConfig::default()).unwrap();
        assert_eq!(report.summary, Summary::of(&report.results));
        assert_eq!(report.summary.checked + report.summary.skipped, report.results.len());
        assert_eq!(report.corpus.graphs, 20);
    }

    #[test]
    fn bound_filter_and_validation() {
        let cfg = SuiteConfig {
            bounds: Some(vec!["SHI".into(), "T1a".into()]),
            alphas: vec![-1.0],
            ..Default::default()
        };
        let report = run_verification(&graphs("cycle", "5"), &cfg).unwrap();
        let ids: Vec<_> = report.results.iter().map(|r| r.bound_id.as_str()).collect();
        assert_eq!(ids, ["SHI", "T1a"]);

        let bad = SuiteConfig { bounds: Some(vec!["nope".into()]), ..Default::default() };
        assert!(matches!(bad.validate(), Err(ConfigError::UnknownBound(_))));
        let bad = SuiteConfig { alphas: vec![], ..Default::default() };
        assert!(matches!(bad.validate(), Err(ConfigError::EmptyGrid)));
        let bad = SuiteConfig { tol: 0.0, ..Default::default() };
        assert!(matches!(bad.validate(), Err(ConfigError::BadTolerance(_))));
    }

    #[test]
    fn skips_trigger_strict_exit() {
        let mut cfg = SuiteConfig::default();
        cfg.invariants.combinatorial.clique_node_budget = 1;
        let report = run_verification(&graphs("petersen", ""), &cfg).unwrap();
        assert!(report.summary.skipped > 0);
        assert_eq!(report.exit_code(false), 0);
        assert_eq!(report.exit_code(true), 3);
    }
}
