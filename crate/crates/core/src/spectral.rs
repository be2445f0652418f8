//! Spectral radius of the adjacency matrix.
//!
//! Small graphs go through a dense cyclic Jacobi eigensolver; larger ones
//! through power iteration on `A + ΔI`, whose Perron value is strictly
//! dominant even for bipartite graphs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITERATIONS: usize = 100_000;
/// Graphs with at most this many vertices use the dense solver.
pub const DENSE_CUTOFF: usize = 64;
const MAX_JACOBI_SWEEPS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectralMethod {
    Dense,
    Iterative,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub lambda: f64,
    /// `‖Av − λv‖∞` for the returned unit eigenvector estimate `v`.
    pub residual: f64,
    pub method: SpectralMethod,
    /// Jacobi sweeps or power-iteration steps.
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralOptions {
    pub tol: f64,
    pub max_iterations: usize,
    pub dense_cutoff: usize,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            max_iterations: DEFAULT_MAX_ITERATIONS,
            dense_cutoff: DENSE_CUTOFF,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("eigensolver did not converge: best λ = {}, residual {}", .0.lambda, .0.residual)]
    NotConverged(SpectralResult),
    #[error("λ = {lambda} escapes [2m/n, Δ] = [{lower}, {upper}]")]
    SandwichViolated { lambda: f64, lower: f64, upper: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RhsError {
    #[error("graph has an isolated vertex")]
    IsolatedVertex,
    #[error("graph has no edges")]
    NoEdges,
    #[error("clique number {0} is below 2")]
    CliqueTooSmall(usize),
}

pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult, SpectralError> {
    spectral_radius_with(
        g,
        &SpectralOptions {
            tol,
            ..SpectralOptions::default()
        },
    )
}

pub fn spectral_radius_with(g: &Graph, opts: &SpectralOptions) -> Result<SpectralResult, SpectralError> {
    let result = if g.order() <= opts.dense_cutoff {
        jacobi(g, opts)?
    } else {
        power_iteration(g, opts)?
    };
    if g.min_degree() >= 1 {
        let lower = 2.0 * g.size() as f64 / g.order() as f64;
        let upper = g.max_degree() as f64;
        if result.lambda < lower - opts.tol || result.lambda > upper + opts.tol {
            return Err(SpectralError::SandwichViolated {
                lambda: result.lambda,
                lower,
                upper,
            });
        }
    }
    Ok(result)
}

/// `‖Av − λv‖∞`.
fn residual(g: &Graph, v: &[f64], lambda: f64) -> f64 {
    (0..g.order())
        .map(|i| {
            let av: f64 = g.neighbors(i).map(|j| v[j]).sum();
            (av - lambda * v[i]).abs()
        })
        .fold(0.0, f64::max)
}

fn jacobi(g: &Graph, opts: &SpectralOptions) -> Result<SpectralResult, SpectralError> {
    let n = g.order();
    let mut a = vec![0.0f64; n * n];
    for &(u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    let mut vecs = vec![0.0f64; n * n];
    for i in 0..n {
        vecs[i * n + i] = 1.0;
    }
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s += a[p * n + q] * a[p * n + q];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    let mut best = None;
    loop {
        if off_norm(&a) < opts.tol {
            let (k, lambda) = (0..n)
                .map(|i| (i, a[i * n + i]))
                .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
            let v: Vec<f64> = (0..n).map(|i| vecs[i * n + k]).collect();
            let result = SpectralResult {
                lambda,
                residual: residual(g, &v, lambda),
                method: SpectralMethod::Dense,
                iterations: sweeps,
            };
            if result.residual <= opts.tol {
                return Ok(result);
            }
            best = Some(result);
        }
        if sweeps >= MAX_JACOBI_SWEEPS {
            let result = best.unwrap_or_else(|| {
                let lambda = (0..n).map(|i| a[i * n + i]).fold(f64::NEG_INFINITY, f64::max);
                SpectralResult {
                    lambda,
                    residual: f64::INFINITY,
                    method: SpectralMethod::Dense,
                    iterations: sweeps,
                }
            });
            return Err(SpectralError::NotConverged(result));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = vecs[k * n + p];
                    let vkq = vecs[k * n + q];
                    vecs[k * n + p] = c * vkp - s * vkq;
                    vecs[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
}

fn power_iteration(g: &Graph, opts: &SpectralOptions) -> Result<SpectralResult, SpectralError> {
    let n = g.order();
    let shift = g.max_degree() as f64;
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut best = SpectralResult {
        lambda: 0.0,
        residual: f64::INFINITY,
        method: SpectralMethod::Iterative,
        iterations: 0,
    };
    for it in 1..=opts.max_iterations {
        for i in 0..n {
            y[i] = shift * x[i] + g.neighbors(i).map(|j| x[j]).sum::<f64>();
        }
        let mu: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let res = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (yi - mu * xi).abs())
            .fold(0.0, f64::max);
        if res < best.residual {
            best = SpectralResult {
                lambda: mu - shift,
                residual: res,
                method: SpectralMethod::Iterative,
                iterations: it,
            };
        }
        if res <= opts.tol {
            return Ok(best);
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            break;
        }
        for i in 0..n {
            x[i] = y[i] / norm;
        }
    }
    Err(SpectralError::NotConverged(best))
}

/// `√(2m − n + 1)`, an upper bound on `λ` for graphs without isolated vertices.
pub fn hong_rhs(g: &Graph) -> Result<f64, RhsError> {
    if g.min_degree() == 0 {
        return Err(RhsError::IsolatedVertex);
    }
    Ok(((2 * g.size() + 1 - g.order()) as f64).sqrt())
}

/// `√(2m(ω − 1)/ω)`, an upper bound on `λ` given the clique number `ω`.
pub fn nikiforov_rhs(g: &Graph, omega: usize) -> Result<f64, RhsError> {
    if g.size() == 0 {
        return Err(RhsError::NoEdges);
    }
    if omega < 2 {
        return Err(RhsError::CliqueTooSmall(omega));
    }
    let w = omega as f64;
    Ok((2.0 * g.size() as f64 * (w - 1.0) / w).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn lambda(f: Family) -> f64 {
        spectral_radius(&f.generate().unwrap(), DEFAULT_TOL).unwrap().lambda
    }

    #[test]
    fn closed_forms() {
        assert!((lambda(Family::Complete(4)) - 3.0).abs() < 1e-10);
        assert!((lambda(Family::CompleteBipartite(2, 3)) - 6f64.sqrt()).abs() < 1e-10);
        // x^3 - 2x = 0.
        assert!((lambda(Family::Path(3)) - 2f64.sqrt()).abs() < 1e-10);
        assert!((lambda(Family::Petersen) - 3.0).abs() < 1e-10);
        assert_eq!(lambda(Family::Complete(1)), 0.0);
    }

    #[test]
    fn iterative_path_agrees_with_dense() {
        let opts = SpectralOptions::default();
        let forced = SpectralOptions { dense_cutoff: 0, ..opts };
        for f in [
            Family::CompleteBipartite(3, 5),
            Family::Cycle(8),
            Family::Path(7),
            Family::RandomGnp { n: 30, p: 0.3, seed: 4 },
        ] {
            let g = f.generate().unwrap();
            let dense = spectral_radius_with(&g, &opts).unwrap();
            let iter = spectral_radius_with(&g, &forced).unwrap();
            assert_eq!(dense.method, SpectralMethod::Dense);
            assert_eq!(iter.method, SpectralMethod::Iterative);
            assert!((dense.lambda - iter.lambda).abs() < 1e-8, "{f}");
            assert!(iter.residual <= DEFAULT_TOL);
        }
    }

    #[test]
    fn large_graph_uses_power_iteration() {
        let g = Family::Circulant(200, vec![1, 5, 17]).generate().unwrap();
        let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
        assert_eq!(r.method, SpectralMethod::Iterative);
        assert!((r.lambda - 6.0).abs() < 1e-9);
    }

    #[test]
    fn iteration_cap_reports_best_estimate() {
        let g = Family::Path(40).generate().unwrap();
        let opts = SpectralOptions { dense_cutoff: 0, max_iterations: 3, tol: 1e-14 };
        match spectral_radius_with(&g, &opts) {
            Err(SpectralError::NotConverged(best)) => {
                assert!(best.residual.is_finite() && best.residual > 1e-14);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn hong_and_nikiforov_examples() {
        let k4 = Family::Complete(4).generate().unwrap();
        assert_eq!(hong_rhs(&k4).unwrap(), 3.0);
        assert_eq!(nikiforov_rhs(&k4, 4).unwrap(), 3.0);
        assert_eq!(hong_rhs(&Family::Star(5).generate().unwrap()).unwrap(), 2.0);
        let c5 = Family::Cycle(5).generate().unwrap();
        assert!((hong_rhs(&c5).unwrap() - 6f64.sqrt()).abs() < 1e-15);
        assert!((nikiforov_rhs(&c5, 2).unwrap() - 5f64.sqrt()).abs() < 1e-15);
        let k33 = Family::CompleteBipartite(3, 3).generate().unwrap();
        assert_eq!(nikiforov_rhs(&k33, 2).unwrap(), 3.0);

        let e = Graph::empty(3).unwrap();
        assert_eq!(hong_rhs(&e), Err(RhsError::IsolatedVertex));
        assert_eq!(nikiforov_rhs(&e, 2), Err(RhsError::NoEdges));
        assert_eq!(nikiforov_rhs(&c5, 1), Err(RhsError::CliqueTooSmall(1)));
    }
}
