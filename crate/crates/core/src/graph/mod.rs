//! Simple undirected graphs.
//!
//! A [`Graph`] is immutable once built. Adjacency is kept twice: as bitset
//! rows (one `u64` word per 64 vertices) for triangle and clique work, and as
//! a lexicographically ordered edge list for index sums.

mod classify;
pub mod families;
pub mod graph6;

pub use classify::{classify, edge_degree_products, DegreeStats, GraphClassFlags};
pub use families::Family;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) appears more than once")]
    ParallelEdge(usize, usize),
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterates the set bits of a bitset row in increasing order.
pub fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + tz)
            }
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, std::iter::empty())
    }

    /// Builds a graph from an edge list. Endpoint order within an edge does
    /// not matter; repeated edges and self-loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let words = words_for(n);
        let mut rows = vec![0u64; n * words];
        let mut list = Vec::new();
        let mut degrees = vec![0usize; n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            let slot = &mut rows[u * words + v / 64];
            if *slot & (1 << (v % 64)) != 0 {
                return Err(GraphError::ParallelEdge(u, v));
            }
            *slot |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
            degrees[u] += 1;
            degrees[v] += 1;
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Self {
            n,
            words,
            rows,
            edges: list,
            degrees,
        })
    }

    /// Vertex count `n`.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Edge count `m`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    /// Neighbourhood of `v` as a bitset row of `words()` words.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Number of `u64` words in each adjacency row.
    pub fn words(&self) -> usize {
        self.words
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    /// Degrees indexed by vertex (not sorted).
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.min_degree() == 0
    }

    /// Connected components, each listed in increasing vertex order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }
}
