//! Named graph families.
//!
//! Random families draw from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded
//! explicitly via `seed_from_u64`, so a `(family, seed)` pair always yields
//! the same graph on every platform.

use std::collections::{BTreeSet, BinaryHeap};
use std::cmp::Reverse;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `K_{1,n-1}` on `n` vertices, centre 0.
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    /// Complete `r`-partite graph on `n` vertices with equal parts; needs `r | n`.
    Turan(usize, usize),
    Cycle(usize),
    Path(usize),
    /// `i ~ i ± k (mod n)` for each offset `k`.
    Circulant(usize, Vec<usize>),
    Petersen,
    RandomGnp { n: usize, p: f64, seed: u64 },
    /// Uniform labelled tree via a random Prüfer sequence.
    RandomTree { n: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameter { family: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl Family {
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        let bad = |reason: &str| FamilyError::InvalidParameter {
            family: self.to_string(),
            reason: reason.to_string(),
        };
        let g = match *self {
            Family::Star(n) => {
                if n < 2 {
                    return Err(bad("star needs n >= 2"));
                }
                Graph::from_edges(n, (1..n).map(|v| (0, v)))?
            }
            Family::Complete(n) => {
                if n < 1 {
                    return Err(bad("complete graph needs n >= 1"));
                }
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?
            }
            Family::CompleteBipartite(a, b) => {
                if a < 1 || b < 1 {
                    return Err(bad("both sides need at least one vertex"));
                }
                multipartite(&[a, b])?
            }
            Family::CompleteMultipartite(ref parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(bad("parts must be non-empty"));
                }
                multipartite(parts)?
            }
            Family::Turan(n, r) => {
                if r < 1 || n < 1 || n % r != 0 {
                    return Err(bad("need r >= 1 dividing n"));
                }
                multipartite(&vec![n / r; r])?
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(bad("cycle needs n >= 3"));
                }
                Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))?
            }
            Family::Path(n) => {
                if n < 2 {
                    return Err(bad("path needs n >= 2"));
                }
                Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?
            }
            Family::Circulant(n, ref offsets) => {
                if n < 1 {
                    return Err(bad("circulant needs n >= 1"));
                }
                if offsets.iter().any(|&k| k % n == 0) {
                    return Err(bad("offsets must be nonzero mod n"));
                }
                let edges: BTreeSet<(usize, usize)> = offsets
                    .iter()
                    .flat_map(|&k| {
                        (0..n).map(move |v| {
                            let u = (v + k) % n;
                            (v.min(u), v.max(u))
                        })
                    })
                    .collect();
                Graph::from_edges(n, edges)?
            }
            Family::Petersen => {
                let outer = (0..5).map(|i| (i, (i + 1) % 5));
                let spokes = (0..5).map(|i| (i, i + 5));
                let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
                Graph::from_edges(10, outer.chain(spokes).chain(inner))?
            }
            Family::RandomGnp { n, p, seed } => {
                if n < 1 || !(0.0..=1.0).contains(&p) {
                    return Err(bad("need n >= 1 and 0 <= p <= 1"));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.random::<f64>() < p {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, edges)?
            }
            Family::RandomTree { n, seed } => {
                if n < 2 {
                    return Err(bad("tree needs n >= 2"));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
                Graph::from_edges(n, prufer_decode(n, &code))?
            }
        };
        Ok(g)
    }
}

fn multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let mut starts = Vec::with_capacity(parts.len());
    let mut n = 0;
    for &p in parts {
        starts.push(n);
        n += p;
    }
    let mut edges = Vec::new();
    for (i, (&si, &pi)) in starts.iter().zip(parts).enumerate() {
        for (&sj, &pj) in starts.iter().zip(parts).skip(i + 1) {
            for u in si..si + pi {
                edges.extend((sj..sj + pj).map(|v| (u, v)));
            }
        }
    }
    Graph::from_edges(n, edges)
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let Reverse(leaf) = leaves.pop().expect("prufer code always leaves a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(";")
        };
        match self {
            Family::Star(n) => write!(f, "star({n})"),
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
            Family::CompleteMultipartite(parts) => write!(f, "complete_multipartite({})", list(parts)),
            Family::Turan(n, r) => write!(f, "turan({n},{r})"),
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Path(n) => write!(f, "path({n})"),
            Family::Circulant(n, offsets) => write!(f, "circulant({n},{})", list(offsets)),
            Family::Petersen => write!(f, "petersen"),
            Family::RandomGnp { n, p, seed } => write!(f, "gnp(n={n},p={p},seed={seed})"),
            Family::RandomTree { n, seed } => write!(f, "tree(n={n},seed={seed})"),
        }
    }
}
