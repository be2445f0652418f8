use nalgebra::DMatrix;
use proptest::prelude::*;
use randic_core::spectral::{spectral_radius, DEFAULT_TOL};
use randic_core::{Family, Graph};

fn dense_oracle(g: &Graph) -> f64 {
    let n = g.order();
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    a.symmetric_eigenvalues().max()
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn matches_dense_eigensolver_up_to_8(g in graph_strategy(8)) {
        let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
        let oracle = dense_oracle(&g);
        prop_assert!((r.lambda - oracle).abs() <= 1e-8, "{} vs {oracle}", r.lambda);
    }
}

#[test]
fn matches_dense_eigensolver_on_larger_graphs() {
    let graphs = [
        Family::RandomGnp { n: 40, p: 0.2, seed: 4 },
        Family::RandomGnp { n: 90, p: 0.1, seed: 5 },
        Family::RandomTree { n: 80, seed: 6 },
        Family::Circulant(100, vec![1, 7, 20]),
        Family::CompleteBipartite(30, 45),
    ];
    for f in graphs {
        let g = f.generate().unwrap();
        let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
        let oracle = dense_oracle(&g);
        assert!((r.lambda - oracle).abs() <= 1e-8, "{f}: {} vs {oracle}", r.lambda);
    }
}
