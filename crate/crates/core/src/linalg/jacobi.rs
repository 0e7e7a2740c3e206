//! Cyclic Jacobi eigensolver for small dense symmetric matrices.

use thiserror::Error;

use super::matrix::IntSymMatrix;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum JacobiError {
    #[error("Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NonConvergence { sweeps: usize, residual: f64 },
    #[error("matrix is not square")]
    NotSquare,
}

/// Eigenvalues in descending order, with unit eigenvectors as columns of
/// `vectors` (row-major `n × n`, column `k` belongs to `values[k]`).
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
}

impl EigenDecomposition {
    pub fn vector(&self, k: usize) -> Vec<f64> {
        let n = self.values.len();
        (0..n).map(|i| self.vectors[i * n + k]).collect()
    }
}

fn off_diagonal_norm(n: usize, a: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Symmetric eigendecomposition of a row-major `n × n` matrix.
pub fn jacobi_eigen(n: usize, matrix: &[f64]) -> Result<EigenDecomposition, JacobiError> {
    if matrix.len() != n * n {
        return Err(JacobiError::NotSquare);
    }
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = a.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
    let target = f64::EPSILON * scale * n as f64;

    let mut converged = off_diagonal_norm(n, &a) <= target;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(n, &a) <= target;
    }
    if !converged {
        return Err(JacobiError::NonConvergence {
            sweeps,
            residual: off_diagonal_norm(n, &a),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (k, &src) in order.iter().enumerate() {
        for i in 0..n {
            vectors[i * n + k] = v[i * n + src];
        }
    }
    Ok(EigenDecomposition { values, vectors })
}

/// Floating-point eigenvalues of an integer symmetric matrix, descending.
pub fn numeric_eigenvalues(m: &IntSymMatrix) -> Result<Vec<f64>, JacobiError> {
    jacobi_eigen(m.order(), &m.to_f64()).map(|d| d.values)
}
