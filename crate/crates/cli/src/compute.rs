use rayon::prelude::*;
use randic_core::bounds::{GraphInvariants, InvariantConfig};
use randic_core::indices::{randic_general, zeroth_order};
use serde::{Deserialize, Serialize};

use crate::source::NamedGraph;

/// One graph at one exponent. Index columns are empty for graphs with an
/// isolated vertex; `lambda`, `omega`, `chi` are empty if their computation failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComputeRow {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub avg_degree: f64,
    pub lambda: Option<f64>,
    pub omega: Option<usize>,
    pub chi: Option<usize>,
    pub chi_exact: Option<bool>,
    pub alpha: f64,
    pub randic: Option<f64>,
    pub zeroth: Option<f64>,
}

pub fn compute_rows(g: &NamedGraph, alphas: &[f64], cfg: &InvariantConfig) -> Vec<ComputeRow> {
    let inv = GraphInvariants::compute(&g.graph, cfg);
    alphas
        .iter()
        .map(|&alpha| ComputeRow {
            graph: g.id.clone(),
            n: inv.order,
            m: inv.size,
            max_degree: inv.degrees.max_degree,
            min_degree: inv.degrees.min_degree,
            avg_degree: inv.degrees.average_degree,
            lambda: inv.spectral.map(|s| s.lambda),
            omega: inv.combinatorial.map(|c| c.clique_number),
            chi: inv.combinatorial.map(|c| c.chromatic_number),
            chi_exact: inv.combinatorial.map(|c| c.chromatic_exact),
            alpha,
            randic: randic_general(&g.graph, alpha).ok(),
            zeroth: zeroth_order(&g.graph, alpha).ok(),
        })
        .collect()
}

/// Rows for every graph in corpus order; call inside a pool to bound threads.
pub fn compute_all(graphs: &[NamedGraph], alphas: &[f64], cfg: &InvariantConfig) -> Vec<ComputeRow> {
    graphs
        .par_iter()
        .map(|g| compute_rows(g, alphas, cfg))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use randic_core::Family;

    fn rows(f: Family, alphas: &[f64]) -> Vec<ComputeRow> {
        let g = NamedGraph { id: f.to_string(), graph: f.generate().unwrap() };
        compute_rows(&g, alphas, &InvariantConfig::default())
    }

    #[test]
    fn k4() {
        let r = &rows(Family::Complete(4), &[-1.0])[0];
        assert!((r.randic.unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!((r.lambda.unwrap() - 3.0).abs() < 1e-10);
        assert_eq!(r.omega, Some(4));
        assert_eq!(format!("{:.6}", r.randic.unwrap()), "0.666667");
    }

    #[test]
    fn star_ten() {
        let r = &rows(Family::Star(10), &[-0.5])[0];
        assert!((r.randic.unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn c5_closed_form() {
        let grid = [-2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0];
        for r in rows(Family::Cycle(5), &grid) {
            let expected = 5.0 * 4f64.powf(r.alpha);
            assert!((r.randic.unwrap() - expected).abs() <= 1e-12 * expected);
        }
    }

    #[test]
    fn isolated_vertices_leave_indices_empty() {
        let g = NamedGraph {
            id: "k2+k1".into(),
            graph: randic_core::Graph::from_edges(3, [(0, 1)]).unwrap(),
        };
        let r = &compute_rows(&g, &[1.0], &InvariantConfig::default())[0];
        assert_eq!((r.randic, r.zeroth), (None, None));
        assert_eq!(r.omega, Some(2));
    }
}
