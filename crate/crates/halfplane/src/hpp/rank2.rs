//! Exact rank-2 decision via the second eigenvalue of the coefficient matrix.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::ToleranceConfig;
use crate::error::{Error, Result};
use crate::poly::{same_phase, GeneralPolynomial, MultiAffinePolynomial, PhaseCheck};

/// Eigenvalues of a real symmetric matrix, sorted in decreasing order.
#[derive(Clone, Debug, PartialEq)]
pub struct Eigen {
    pub values: Vec<f64>,
    /// Frobenius norm of the off-diagonal part after the last sweep.
    pub off_norm: f64,
    pub sweeps: usize,
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j {
                s += v * v;
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi rotations until the off-diagonal norm drops below
/// `1e-14·‖A‖_F` (or 100 sweeps).
pub fn jacobi_eigen(matrix: &[Vec<f64>]) -> Result<Eigen> {
    let n = matrix.len();
    if let Some(row) = matrix.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: row.len() });
    }
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    for i in 0..n {
        for j in 0..i {
            if !a[i][j].is_finite() || a[i][j] != a[j][i] {
                return Err(Error::Precondition("matrix must be finite and symmetric".into()));
            }
        }
    }
    let total = a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let target = 1e-14 * total;
    let mut sweeps = 0;
    while sweeps < 100 && off_diagonal_norm(&a) > target {
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let off_norm = off_diagonal_norm(&a);
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Eigen { values, off_norm, sweeps })
}

/// Outcome of the exact rank-2 test.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rank2Report {
    pub hpp: bool,
    /// Second-largest eigenvalue (0 for a 1×1 or zero matrix).
    pub lambda2: f64,
    pub eigenvalues: Vec<f64>,
    /// Common phase removed before building the matrix.
    pub theta: f64,
}

fn normalized(p: &GeneralPolynomial, cfg: &ToleranceConfig) -> Result<(f64, Vec<(Vec<u32>, f64)>)> {
    let theta = match same_phase(p, 1e-9) {
        PhaseCheck::Same { theta } => theta,
        PhaseCheck::Mixed { .. } => return Err(Error::NotNonnegative),
    };
    let rot = Complex64::from_polar(1.0, -theta);
    let mut out = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let v = c * rot;
        if v.re < 0.0 || v.im.abs() > cfg.eval_tol * v.norm().max(1.0) {
            return Err(Error::NotNonnegative);
        }
        out.push((m.to_vec(), v.re));
    }
    Ok((theta, out))
}

fn decide(a: Vec<Vec<f64>>, theta: f64, cfg: &ToleranceConfig) -> Result<Rank2Report> {
    let eig = jacobi_eigen(&a)?;
    let lambda2 = eig.values.get(1).copied().unwrap_or(0.0);
    Ok(Rank2Report { hpp: lambda2 <= cfg.eigen_tol, lambda2, eigenvalues: eig.values, theta })
}

/// Decide the half-plane property of a homogeneous quadratic
/// `P = ½ zᵀAz` (with `A_ii = 2·[z_i²]P`, `A_ij = [z_i z_j]P`).
pub fn rank2_exact_general(p: &GeneralPolynomial, cfg: &ToleranceConfig) -> Result<Rank2Report> {
    cfg.validate()?;
    let n = p.n();
    if !p.is_zero() && (p.degree() != Some(2) || !p.is_homogeneous()) {
        return Err(Error::Precondition("polynomial must be homogeneous of degree 2".into()));
    }
    let (theta, terms) = normalized(p, cfg)?;
    let mut a = vec![vec![0.0; n]; n];
    for (m, v) in terms {
        let idx: Vec<usize> = m.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i).collect();
        match idx[..] {
            [i] => a[i][i] = 2.0 * v,
            [i, j] => {
                a[i][j] = v;
                a[j][i] = v;
            }
            _ => unreachable!("degree-2 monomial"),
        }
    }
    decide(a, theta, cfg)
}

/// Rank-2 test for multiaffine polynomials (zero diagonal).
pub fn rank2_exact(p: &MultiAffinePolynomial, cfg: &ToleranceConfig) -> Result<Rank2Report> {
    if !p.is_zero() && (p.degree() != Some(2) || !p.is_homogeneous()) {
        return Err(Error::Precondition("polynomial must be homogeneous of degree 2".into()));
    }
    rank2_exact_general(&p.to_general(), cfg)
}
