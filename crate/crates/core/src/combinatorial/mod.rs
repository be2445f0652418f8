//! Exact clique number and chromatic number for desk-scale graphs.

mod clique;
mod coloring;

pub use clique::{clique_number, clique_number_with_budget};
pub use coloring::{chromatic_number, dsatur_coloring, ChromaticResult};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;
pub const DEFAULT_CHROMATIC_EXACT_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CombinatorialError {
    #[error("search exceeded its budget of {budget} nodes")]
    BudgetExceeded { budget: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinatorialConfig {
    pub clique_node_budget: u64,
    /// Largest order for which χ is searched exactly.
    pub chromatic_exact_limit: usize,
    pub coloring_node_budget: u64,
}

impl Default for CombinatorialConfig {
    fn default() -> Self {
        Self {
            clique_node_budget: DEFAULT_NODE_BUDGET,
            chromatic_exact_limit: DEFAULT_CHROMATIC_EXACT_LIMIT,
            coloring_node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinatorialInvariants {
    pub clique_number: usize,
    pub chromatic_number: usize,
    /// False when only an upper bound on χ was computed.
    pub chromatic_exact: bool,
}

impl CombinatorialInvariants {
    pub fn compute(g: &Graph, cfg: &CombinatorialConfig) -> Result<Self, CombinatorialError> {
        let omega = clique_number_with_budget(g, cfg.clique_node_budget)?;
        let chi = coloring::chromatic_number_given_clique(g, omega, cfg)?;
        Ok(Self {
            clique_number: omega,
            chromatic_number: chi.value,
            chromatic_exact: chi.exact,
        })
    }
}

/// Vertices sorted by descending degree, ties by index.
pub(crate) fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}
