//! Normalized adjacency spectrum via cyclic Jacobi rotations.
//!
//! The solver is deterministic (fixed sweep order, no random start), so a
//! given input yields bit-identical eigenvalues on a given platform. Every
//! reported eigenpair carries a residual certificate against the original
//! matrix.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Convergence threshold on the off-diagonal Frobenius norm.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
/// Maximum accepted `‖Mx − λx‖₂` for a reported eigenpair.
pub const RESIDUAL_TOL: f64 = 1e-9;
pub const DEFAULT_MAX_SWEEPS: usize = 100;
/// Eigenvalues closer than this are reported as one cluster by
/// [`SpectralSummary::multiplicities`].
pub const MULTIPLICITY_TOL: f64 = 1e-7;
/// Tolerance for deciding that the top eigenvalue 1 is repeated.
pub const TRIVIAL_TOL: f64 = 1e-9;

/// Eigen-decomposition of a dense real symmetric matrix.
#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    /// Eigenvalues sorted descending.
    pub values: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector for `values[k]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * s).sqrt()
}

/// Cyclic Jacobi diagonalization of the row-major symmetric `matrix`.
pub fn jacobi_eigen(matrix: &[f64], n: usize, max_sweeps: usize) -> Result<SymmetricEigen> {
    assert_eq!(matrix.len(), n * n, "matrix is not n x n");
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a, n);
        if off < OFF_DIAGONAL_TOL {
            break;
        }
        if sweeps == max_sweeps {
            return Err(Error::ConvergenceFailure { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
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
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&i| {
            let col: Vec<f64> = (0..n).map(|k| v[k * n + i]).collect();
            let norm = col.iter().map(|x| x * x).sum::<f64>().sqrt();
            col.into_iter().map(|x| x / norm).collect()
        })
        .collect();
    Ok(SymmetricEigen { values, vectors, sweeps })
}

/// Largest `‖Mx − λx‖₂` over the given eigenpairs.
pub fn max_residual(matrix: &[f64], n: usize, eig: &SymmetricEigen) -> f64 {
    eig.values
        .iter()
        .zip(&eig.vectors)
        .map(|(&lambda, x)| {
            (0..n)
                .map(|r| {
                    let mx: f64 = (0..n).map(|k| matrix[r * n + k] * x[k]).sum();
                    let e = mx - lambda * x[r];
                    e * e
                })
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralSummary {
    /// All `n` eigenvalues of `adj/d`, sorted descending.
    pub eigenvalues: Vec<f64>,
    /// Second-largest eigenvalue; for a single vertex this is the only one.
    pub lambda2: f64,
    pub lambda_min: f64,
    pub max_residual: f64,
}

impl SpectralSummary {
    /// Clusters eigenvalues within [`MULTIPLICITY_TOL`] of the cluster head,
    /// returning `(head value, multiplicity)` in descending order.
    pub fn multiplicities(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &x in &self.eigenvalues {
            match out.last_mut() {
                Some((head, k)) if (*head - x).abs() <= MULTIPLICITY_TOL => *k += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }
}

pub fn normalized_spectrum(g: &Multigraph, d: u64) -> Result<SpectralSummary> {
    normalized_spectrum_with(g, d, DEFAULT_MAX_SWEEPS)
}

/// Spectrum of `adj/d`; `d` must be the common row sum of `g`.
pub fn normalized_spectrum_with(g: &Multigraph, d: u64, max_sweeps: usize) -> Result<SpectralSummary> {
    let actual = g.validate_regular()?;
    if actual != d {
        return Err(Error::NotRegular { u: 0, du: actual, v: 0, dv: d });
    }
    if d == 0 {
        return Err(Error::InvalidDegree(d));
    }
    let n = g.n();
    let m: Vec<f64> = g.to_dense_f64().into_iter().map(|x| x / d as f64).collect();
    let eig = jacobi_eigen(&m, n, max_sweeps)?;
    let max_residual = max_residual(&m, n, &eig);
    let lambda_min = *eig.values.last().expect("n >= 1");
    let lambda2 = eig.values.get(1).copied().unwrap_or(lambda_min);
    Ok(SpectralSummary { eigenvalues: eig.values, lambda2, lambda_min, max_residual })
}

/// Removes one copy of the trivial eigenvalue 1.
pub fn nontrivial_spectrum(s: &SpectralSummary) -> Result<Vec<f64>> {
    if s.eigenvalues.len() > 1 && s.eigenvalues[1] >= 1.0 - TRIVIAL_TOL {
        return Err(Error::Disconnected);
    }
    Ok(s.eigenvalues[1..].to_vec())
}
