//! General Randić index `R_α = Σ_{uv ∈ E} (d_u d_v)^α` and zeroth-order
//! index `Q_α = Σ_{v ∈ V} d_v^α`.
//!
//! Both go through [`crate::means::sum_power`], so `R_α` is literally the
//! power sum of the edge degree products and `Q_α` that of the degrees.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{edge_degree_products, Graph};
use crate::means::{sum_power, ValueList};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("graph has an isolated vertex")]
    IsolatedVertex,
    #[error("graph has no edges")]
    NoEdges,
    #[error("exponent must be finite")]
    NonFiniteAlpha,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexKind {
    /// `R_α`
    Randic,
    /// `Q_α`
    Zeroth,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IndexQuery {
    pub alpha: f64,
    pub kind: IndexKind,
}

impl IndexQuery {
    pub fn evaluate(&self, g: &Graph) -> Result<f64, IndexError> {
        match self.kind {
            IndexKind::Randic => randic_general(g, self.alpha),
            IndexKind::Zeroth => zeroth_order(g, self.alpha),
        }
    }
}

pub fn randic_general(g: &Graph, alpha: f64) -> Result<f64, IndexError> {
    if !alpha.is_finite() {
        return Err(IndexError::NonFiniteAlpha);
    }
    if g.size() == 0 {
        return Err(IndexError::NoEdges);
    }
    if g.min_degree() == 0 {
        return Err(IndexError::IsolatedVertex);
    }
    let products = edge_degree_products(g).map_err(|_| IndexError::NoEdges)?;
    let values = ValueList::from_counts(products).expect("edge products are positive");
    Ok(sum_power(&values, alpha))
}

pub fn zeroth_order(g: &Graph, alpha: f64) -> Result<f64, IndexError> {
    if !alpha.is_finite() {
        return Err(IndexError::NonFiniteAlpha);
    }
    if g.min_degree() == 0 {
        return Err(IndexError::IsolatedVertex);
    }
    let values = ValueList::from_counts(g.degrees().iter().map(|&d| d as u64))
        .expect("degrees are positive");
    Ok(sum_power(&values, alpha))
}
