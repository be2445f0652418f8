use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{iter_bits, Graph};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
    /// `2m / n`.
    pub average_degree: f64,
    /// Degrees sorted in non-increasing order.
    pub sequence: Vec<usize>,
}

impl DegreeStats {
    pub fn of(g: &Graph) -> Self {
        let mut sequence = g.degrees().to_vec();
        sequence.sort_unstable_by(|a, b| b.cmp(a));
        Self {
            max_degree: sequence[0],
            min_degree: *sequence.last().unwrap(),
            average_degree: 2.0 * g.size() as f64 / g.order() as f64,
            sequence,
        }
    }
}

/// Structural classes referenced by equality conditions and applicability
/// rules of the bound catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GraphClassFlags {
    pub connected: bool,
    pub regular: bool,
    pub semiregular_bipartite: bool,
    pub bipartite: bool,
    pub triangle_free: bool,
    pub tree: bool,
    /// `Δ ≤ 4`.
    pub chemical: bool,
    pub complete: bool,
    pub star: bool,
    pub has_isolated_vertex: bool,
    /// Connected `K_{a,b}` with `a, b ≥ 1`.
    pub complete_bipartite: bool,
    /// Complete multipartite with all parts of equal size and at least one edge.
    pub regular_complete_multipartite: bool,
    /// Exactly `K_5`, by the order/size/degree test.
    pub is_k5: bool,
}

pub fn classify(g: &Graph) -> GraphClassFlags {
    let n = g.order();
    let m = g.size();
    let components = g.components();
    let connected = components.len() == 1;
    let max = g.max_degree();
    let min = g.min_degree();
    let regular = max == min;
    let sides = two_coloring(g, &components);
    let bipartite = sides.is_some();
    let semiregular_bipartite = sides
        .as_ref()
        .is_some_and(|s| semiregular_sides(g, &components, s));
    let tree = connected && m + 1 == n;
    let complete = m == n * (n - 1) / 2;
    let complete_bipartite = connected
        && m > 0
        && sides.as_ref().is_some_and(|s| {
            let left = s.iter().filter(|&&x| x).count();
            left * (n - left) == m
        });
    GraphClassFlags {
        connected,
        regular,
        semiregular_bipartite,
        bipartite,
        triangle_free: is_triangle_free(g),
        tree,
        chemical: max <= 4,
        complete,
        star: tree && n >= 2 && max == n - 1,
        has_isolated_vertex: min == 0,
        complete_bipartite,
        regular_complete_multipartite: m > 0 && regular && is_complete_multipartite(g),
        is_k5: n == 5 && m == 10 && regular && max == 4,
    }
}

/// The multiset `{d_u · d_v : uv ∈ E}` in lexicographic edge order.
pub fn edge_degree_products(g: &Graph) -> Result<Vec<u64>, EmptyEdgeSet> {
    if g.size() == 0 {
        return Err(EmptyEdgeSet);
    }
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| (g.degree(u) * g.degree(v)) as u64)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("graph has no edges")]
pub struct EmptyEdgeSet;

/// Breadth-first 2-colouring; `None` when an odd cycle exists.
fn two_coloring(g: &Graph, components: &[Vec<usize>]) -> Option<Vec<bool>> {
    let mut side = vec![false; g.order()];
    let mut seen = vec![false; g.order()];
    for comp in components {
        let root = comp[0];
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    side[u] = !side[v];
                    queue.push_back(u);
                } else if side[u] == side[v] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// A bipartition exists whose two sides are each degree-uniform. Each
/// component's colouring may be flipped independently, so components are
/// compared by their unordered side-degree pair.
fn semiregular_sides(g: &Graph, components: &[Vec<usize>], side: &[bool]) -> bool {
    let mut pair: Option<(usize, usize)> = None;
    let mut lone: Vec<usize> = Vec::new();
    for comp in components {
        let uniform = |s: bool| -> Result<Option<usize>, ()> {
            let mut deg = None;
            for &v in comp.iter().filter(|&&v| side[v] == s) {
                match deg {
                    None => deg = Some(g.degree(v)),
                    Some(d) if d != g.degree(v) => return Err(()),
                    _ => {}
                }
            }
            Ok(deg)
        };
        let (Ok(a), Ok(b)) = (uniform(false), uniform(true)) else {
            return false;
        };
        match (a, b) {
            (Some(a), Some(b)) => {
                let key = (a.min(b), a.max(b));
                match pair {
                    None => pair = Some(key),
                    Some(p) if p != key => return false,
                    _ => {}
                }
            }
            (Some(d), None) | (None, Some(d)) => lone.push(d),
            (None, None) => {}
        }
    }
    match pair {
        None => lone.windows(2).all(|w| w[0] == w[1]) || lone.len() <= 1,
        Some((a, b)) => lone.iter().all(|&d| d == a || d == b),
    }
}

fn is_triangle_free(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| {
        g.row(u)
            .iter()
            .zip(g.row(v))
            .all(|(a, b)| a & b == 0)
    })
}

/// Non-adjacency is an equivalence relation.
fn is_complete_multipartite(g: &Graph) -> bool {
    let n = g.order();
    let words = g.words();
    let class_of = |v: usize| -> Vec<u64> {
        let mut row: Vec<u64> = g.row(v).iter().map(|w| !w).collect();
        let tail = n % 64;
        if tail != 0 {
            row[words - 1] &= (1u64 << tail) - 1;
        }
        row
    };
    (0..n).all(|v| {
        let class = class_of(v);
        let same = iter_bits(&class).all(|u| class_of(u) == class);
        same
    })
}
