use serde::{Deserialize, Serialize};

use super::{clique_number_with_budget, CombinatorialConfig, CombinatorialError};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticResult {
    pub value: usize,
    /// False when `value` is only a DSATUR upper bound.
    pub exact: bool,
}

/// Chromatic number: exact for `n ≤ cfg.chromatic_exact_limit` (or whenever
/// DSATUR already meets the clique bound), otherwise a DSATUR upper bound.
pub fn chromatic_number(g: &Graph, cfg: &CombinatorialConfig) -> Result<ChromaticResult, CombinatorialError> {
    let omega = clique_number_with_budget(g, cfg.clique_node_budget)?;
    chromatic_number_given_clique(g, omega, cfg)
}

pub(super) fn chromatic_number_given_clique(
    g: &Graph,
    omega: usize,
    cfg: &CombinatorialConfig,
) -> Result<ChromaticResult, CombinatorialError> {
    let greedy = dsatur_coloring(g);
    let upper = greedy.iter().copied().max().map_or(1, |c| c + 1);
    if upper == omega {
        return Ok(ChromaticResult { value: upper, exact: true });
    }
    // Colour sets are u64 masks in the exact search.
    if g.order() > cfg.chromatic_exact_limit.min(64) {
        return Ok(ChromaticResult { value: upper, exact: false });
    }
    let mut nodes = 0;
    for k in omega..upper {
        if colorable(g, k, &mut nodes, cfg.coloring_node_budget)? {
            return Ok(ChromaticResult { value: k, exact: true });
        }
    }
    Ok(ChromaticResult { value: upper, exact: true })
}

/// DSATUR greedy colouring: repeatedly colour the vertex with the most
/// distinct neighbour colours (ties by degree, then index) with its smallest
/// free colour. Returns the colour of each vertex.
pub fn dsatur_coloring(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v].is_none())
            .max_by_key(|&v| (saturation[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        color[v] = Some(c);
        for u in g.neighbors(v) {
            let s = &mut seen[u];
            if s.len() <= c {
                s.resize(c + 1, false);
            }
            if !s[c] {
                s[c] = true;
                saturation[u] += 1;
            }
        }
    }
    color.into_iter().map(|c| c.unwrap()).collect()
}

/// Backtracking `k`-colourability with DSATUR branching and colour-symmetry
/// breaking (a fresh colour is only ever the next unused one).
fn colorable(g: &Graph, k: usize, nodes: &mut u64, budget: u64) -> Result<bool, CombinatorialError> {
    let mut color = vec![usize::MAX; g.order()];
    extend(g, k, &mut color, 0, 0, nodes, budget)
}

fn extend(
    g: &Graph,
    k: usize,
    color: &mut [usize],
    done: usize,
    used: usize,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool, CombinatorialError> {
    let n = g.order();
    if done == n {
        return Ok(true);
    }
    *nodes += 1;
    if *nodes > budget {
        return Err(CombinatorialError::BudgetExceeded { budget });
    }
    let blocked = |v: usize, color: &[usize]| -> u64 {
        g.neighbors(v)
            .filter(|&u| color[u] != usize::MAX)
            .fold(0u64, |acc, u| acc | 1 << color[u])
    };
    let v = (0..n)
        .filter(|&v| color[v] == usize::MAX)
        .max_by_key(|&v| (blocked(v, color).count_ones(), g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let mask = blocked(v, color);
    for c in 0..k.min(used + 1) {
        if mask & (1 << c) != 0 {
            continue;
        }
        color[v] = c;
        if extend(g, k, color, done + 1, used.max(c + 1), nodes, budget)? {
            return Ok(true);
        }
    }
    color[v] = usize::MAX;
    Ok(false)
}
