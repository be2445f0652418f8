use randic_core::bounds::{
    evaluate_bound, registry, EvalContext, GraphInvariants, InvariantConfig, DEFAULT_SLACK,
};
use randic_core::{Family, Graph};

const GRID: [f64; 7] = [-2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0];

fn sweep(label: &str, g: &Graph) -> (usize, usize) {
    let inv = GraphInvariants::compute(g, &InvariantConfig::default());
    let ctx = EvalContext { graph: g, inv: &inv };
    let mut checked = 0;
    let mut equalities = 0;
    for spec in registry() {
        let alphas: Vec<Option<f64>> = if spec.alpha_domain.is_swept() {
            GRID.iter().copied().filter(|&a| spec.alpha_domain.contains(a)).map(Some).collect()
        } else {
            vec![None]
        };
        for a in alphas {
            let r = evaluate_bound(spec, &ctx, label, a, DEFAULT_SLACK);
            assert!(!r.violated(), "{} violated on {label} at {a:?}: {r:?}", spec.id);
            assert!(!r.equality_failure(), "{} not tight on {label} at {a:?}: {r:?}", spec.id);
            assert!(!r.skipped, "{} skipped on {label}: {:?}", spec.id, r.note);
            if r.holds.is_some() {
                checked += 1;
            }
            if r.equality_predicted == Some(true) {
                equalities += 1;
            }
        }
    }
    (checked, equalities)
}

#[test]
fn random_graphs_satisfy_every_bound() {
    let mut total = 0;
    for seed in 0..300u64 {
        let n = 4 + (seed as usize % 9);
        let p = [0.3, 0.5, 0.8][(seed / 9) as usize % 3];
        let f = Family::RandomGnp { n, p, seed };
        let g = f.generate().unwrap();
        if g.has_isolated_vertex() {
            continue;
        }
        total += sweep(&f.to_string(), &g).0;
    }
    assert!(total > 10_000);
}

#[test]
fn equality_classes_are_tight() {
    let mut families = vec![Family::Petersen];
    for n in 2..10 {
        families.push(Family::Star(n));
        families.push(Family::Complete(n));
    }
    for n in 3..13 {
        families.push(Family::Cycle(n));
    }
    for a in 1..7 {
        for b in 1..7 {
            families.push(Family::CompleteBipartite(a, b));
        }
    }
    for (n, r) in [(6, 2), (6, 3), (8, 4), (9, 3), (12, 4)] {
        families.push(Family::Turan(n, r));
    }
    families.push(Family::Circulant(10, vec![1, 3]));
    families.push(Family::Circulant(12, vec![2, 5]));
    families.push(Family::CompleteMultipartite(vec![1, 2, 3]));
    let mut predicted = 0;
    for f in families {
        predicted += sweep(&f.to_string(), &f.generate().unwrap()).1;
    }
    assert!(predicted > 200);
}

#[test]
fn disconnected_graphs_satisfy_every_bound() {
    let graphs = [
        Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap(),
        Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap(),
        Graph::from_edges(9, [(0, 1), (0, 2), (0, 3), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4)]).unwrap(),
    ];
    for (i, g) in graphs.iter().enumerate() {
        sweep(&format!("disconnected#{i}"), g);
    }
}
