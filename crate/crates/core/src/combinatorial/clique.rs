//! Maximum clique by branch and bound with greedy-colouring bounds.
//!
//! Vertices are relabelled by descending degree. At each node the candidate
//! set is greedily coloured; a vertex with colour `c` can extend the current
//! clique by at most `c`, so candidates are expanded in decreasing colour
//! order and the branch is cut once `size + c` cannot beat the incumbent.

use super::{degree_order, CombinatorialError, DEFAULT_NODE_BUDGET};
use crate::graph::{iter_bits, Graph};

pub fn clique_number(g: &Graph) -> Result<usize, CombinatorialError> {
    clique_number_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn clique_number_with_budget(g: &Graph, budget: u64) -> Result<usize, CombinatorialError> {
    if g.size() == 0 {
        return Ok(1);
    }
    let n = g.order();
    let order = degree_order(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let words = g.words();
    let mut adj = vec![0u64; n * words];
    for &(u, v) in g.edges() {
        let (a, b) = (pos[u], pos[v]);
        adj[a * words + b / 64] |= 1 << (b % 64);
        adj[b * words + a / 64] |= 1 << (a % 64);
    }
    let mut all = vec![0u64; words];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut search = Search {
        adj,
        words,
        best: 2,
        nodes: 0,
        budget,
    };
    search.expand(all, 0)?;
    Ok(search.best)
}

struct Search {
    adj: Vec<u64>,
    words: usize,
    best: usize,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Candidates in colour-class order with their colour numbers.
    fn color_sort(&self, cand: &[u64]) -> Vec<(usize, usize)> {
        let mut uncolored = cand.to_vec();
        let mut out = Vec::new();
        let mut color = 0;
        while uncolored.iter().any(|&w| w != 0) {
            color += 1;
            let mut avail = uncolored.clone();
            loop {
                let Some(v) = iter_bits(&avail).next() else { break };
                avail[v / 64] &= !(1 << (v % 64));
                uncolored[v / 64] &= !(1 << (v % 64));
                for (a, r) in avail.iter_mut().zip(self.row(v)) {
                    *a &= !r;
                }
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, mut cand: Vec<u64>, size: usize) -> Result<(), CombinatorialError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(CombinatorialError::BudgetExceeded { budget: self.budget });
        }
        let colored = self.color_sort(&cand);
        for &(v, color) in colored.iter().rev() {
            if size + color <= self.best {
                return Ok(());
            }
            let next: Vec<u64> = cand.iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                self.best = self.best.max(size + 1);
            } else {
                self.expand(next, size + 1)?;
            }
            cand[v / 64] &= !(1 << (v % 64));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    /// Largest subset of vertices that is pairwise adjacent, by enumeration.
    fn brute_force(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|&mask| {
                (0..n).all(|u| {
                    (u + 1..n).all(|v| mask & (1 << u) == 0 || mask & (1 << v) == 0 || g.has_edge(u, v))
                })
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
            .max(1)
    }

    #[test]
    fn examples() {
        let w = |f: Family| clique_number(&f.generate().unwrap()).unwrap();
        assert_eq!(w(Family::Complete(5)), 5);
        assert_eq!(w(Family::Cycle(5)), 2);
        assert_eq!(w(Family::Petersen), 2);
        assert_eq!(brute_force(&Family::Petersen.generate().unwrap()), 2);
        assert_eq!(w(Family::Turan(12, 4)), 4);
        assert_eq!(clique_number(&Graph::empty(4).unwrap()).unwrap(), 1);
        assert_eq!(w(Family::Complete(70)), 70);
    }

    #[test]
    fn agrees_with_enumeration() {
        for seed in 0..300 {
            let n = 2 + (seed as usize % 9);
            let p = [0.2, 0.5, 0.8][seed as usize % 3];
            let g = Family::RandomGnp { n, p, seed }.generate().unwrap();
            assert_eq!(clique_number(&g).unwrap(), brute_force(&g), "seed {seed}");
        }
    }

    #[test]
    fn budget_is_reported() {
        let g = Family::RandomGnp { n: 60, p: 0.9, seed: 1 }.generate().unwrap();
        assert_eq!(
            clique_number_with_budget(&g, 5),
            Err(CombinatorialError::BudgetExceeded { budget: 5 })
        );
    }
}
