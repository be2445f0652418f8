use serde::{Deserialize, Serialize};

use crate::combinatorial::{CombinatorialConfig, CombinatorialInvariants};
use crate::graph::{classify, edge_degree_products, DegreeStats, Graph, GraphClassFlags};
use crate::indices::{randic_general, zeroth_order};
use crate::means::{power_mean, ValueList};
use crate::spectral::{spectral_radius_with, SpectralOptions, SpectralResult};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct InvariantConfig {
    pub spectral: SpectralOptions,
    pub combinatorial: CombinatorialConfig,
}

/// Everything about one graph that the bound evaluators read, computed once.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphInvariants {
    pub order: usize,
    pub size: usize,
    pub degrees: DegreeStats,
    pub flags: GraphClassFlags,
    pub spectral: Option<SpectralResult>,
    pub spectral_error: Option<String>,
    pub combinatorial: Option<CombinatorialInvariants>,
    pub combinatorial_error: Option<String>,
}

impl GraphInvariants {
    pub fn compute(g: &Graph, cfg: &InvariantConfig) -> Self {
        let (spectral, spectral_error) = match spectral_radius_with(g, &cfg.spectral) {
            Ok(r) => (Some(r), None),
            Err(e) => (None, Some(e.to_string())),
        };
        let (combinatorial, combinatorial_error) =
            match CombinatorialInvariants::compute(g, &cfg.combinatorial) {
                Ok(c) => (Some(c), None),
                Err(e) => (None, Some(e.to_string())),
            };
        Self {
            order: g.order(),
            size: g.size(),
            degrees: DegreeStats::of(g),
            flags: classify(g),
            spectral,
            spectral_error,
            combinatorial,
            combinatorial_error,
        }
    }
}

/// An invariant a bound needs but that could not be computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MissingInvariant {
    SpectralRadius,
    CliqueNumber,
    ChromaticNumber,
}

/// Read access for bound evaluators. Only constructed for graphs that passed
/// the `δ ≥ 1` gate, so index sums are always defined.
pub struct EvalContext<'a> {
    pub graph: &'a Graph,
    pub inv: &'a GraphInvariants,
}

pub(crate) type Value = Result<f64, MissingInvariant>;

impl EvalContext<'_> {
    pub fn n(&self) -> f64 {
        self.inv.order as f64
    }

    pub fn m(&self) -> f64 {
        self.inv.size as f64
    }

    pub fn max_degree(&self) -> f64 {
        self.inv.degrees.max_degree as f64
    }

    pub fn min_degree(&self) -> f64 {
        self.inv.degrees.min_degree as f64
    }

    pub fn avg_degree(&self) -> f64 {
        self.inv.degrees.average_degree
    }

    pub fn lambda(&self) -> Value {
        self.inv
            .spectral
            .map(|s| s.lambda)
            .ok_or(MissingInvariant::SpectralRadius)
    }

    pub fn omega(&self) -> Value {
        self.inv
            .combinatorial
            .map(|c| c.clique_number as f64)
            .ok_or(MissingInvariant::CliqueNumber)
    }

    /// χ, or a DSATUR upper bound on it when the exact search was skipped.
    pub fn chi(&self) -> Value {
        self.inv
            .combinatorial
            .map(|c| c.chromatic_number as f64)
            .ok_or(MissingInvariant::ChromaticNumber)
    }

    pub fn chi_exact(&self) -> bool {
        self.inv.combinatorial.is_some_and(|c| c.chromatic_exact)
    }

    pub fn randic(&self, alpha: f64) -> f64 {
        randic_general(self.graph, alpha).expect("evaluators run only on graphs with δ ≥ 1")
    }

    pub fn zeroth(&self, alpha: f64) -> f64 {
        zeroth_order(self.graph, alpha).expect("evaluators run only on graphs with δ ≥ 1")
    }

    /// Geometric mean of the edge degree products.
    pub fn edge_product_geometric_mean(&self) -> f64 {
        let products = edge_degree_products(self.graph).expect("graph has edges");
        power_mean(&ValueList::from_counts(products).expect("positive"), 0.0)
    }

    /// `2m − n + 1`.
    pub fn hong(&self) -> f64 {
        2.0 * self.m() - self.n() + 1.0
    }

    /// `(√(8m + 1) − 1) / 2`.
    pub fn bollobas_erdos_base(&self) -> f64 {
        ((8.0 * self.m() + 1.0).sqrt() - 1.0) / 2.0
    }

    /// `d(Δ + δ) − Δδ`.
    pub fn das(&self) -> f64 {
        let (big, small) = (self.max_degree(), self.min_degree());
        self.avg_degree() * (big + small) - big * small
    }
}
