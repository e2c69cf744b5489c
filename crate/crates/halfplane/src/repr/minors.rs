//! Determinants, permanents and the polynomials built from their minors.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{ComplexMatrix, NonnegMatrix};
use crate::error::{Error, Result};
use crate::poly::MultiAffinePolynomial;
use crate::subset;

/// Determinant by Gaussian elimination with partial pivoting.
pub fn det_of(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let p = (k..n).max_by(|&a, &b| m[a][k].norm().total_cmp(&m[b][k].norm())).expect("nonempty range");
        if m[p][k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let pivot = m[k][k];
        det *= pivot;
        for i in k + 1..n {
            let f = m[i][k] / pivot;
            if f.norm() == 0.0 {
                continue;
            }
            for j in k..n {
                let v = m[k][j];
                m[i][j] -= f * v;
            }
        }
    }
    det
}

/// Permanent by Ryser's formula, visiting column subsets in Gray-code order.
pub fn per_of(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    if n == 0 {
        return 1.0;
    }
    let mut row_sums = vec![0.0; n];
    let mut total = 0.0;
    let mut gray = 0u64;
    for k in 1..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        gray ^= 1 << j;
        let sign = if gray & (1 << j) != 0 { 1.0 } else { -1.0 };
        for (i, s) in row_sums.iter_mut().enumerate() {
            *s += sign * a[i][j];
        }
        let prod: f64 = row_sums.iter().product();
        total += if gray.count_ones() % 2 == n as u32 % 2 { prod } else { -prod };
    }
    total
}

fn check_columns(s: u64, rows: usize, cols: usize) -> Result<()> {
    if s & !subset::full(cols) != 0 {
        return Err(Error::ElementOutOfRange { element: (s & !subset::full(cols)).trailing_zeros() as usize, n: cols });
    }
    if s.count_ones() as usize != rows {
        return Err(Error::DimensionMismatch { expected: rows, got: s.count_ones() as usize });
    }
    Ok(())
}

fn submatrix(a: &ComplexMatrix, s: u64) -> Vec<Vec<Complex64>> {
    (0..a.rows()).map(|i| subset::elems(s).map(|j| a[(i, j)]).collect()).collect()
}

/// `det(A↾S)` for a column set `S` of size `rows`.
pub fn minor_det(a: &ComplexMatrix, s: u64) -> Result<Complex64> {
    check_columns(s, a.rows(), a.cols())?;
    Ok(det_of(submatrix(a, s)))
}

/// `per(Λ↾S)` for a column set `S` of size `rows` (at most 20 rows).
pub fn minor_per(l: &NonnegMatrix, s: u64) -> Result<f64> {
    check_columns(s, l.rows(), l.cols())?;
    if l.rows() > 20 {
        return Err(Error::Precondition("permanents are limited to 20 rows".into()));
    }
    let sub: Vec<Vec<f64>> = (0..l.rows()).map(|i| subset::elems(s).map(|j| l[(i, j)]).collect()).collect();
    Ok(per_of(&sub))
}

/// `det(A·diag(x)·A*)`.
pub fn gram_determinant(a: &ComplexMatrix, x: &[Complex64]) -> Result<Complex64> {
    if x.len() != a.cols() {
        return Err(Error::DimensionMismatch { expected: a.cols(), got: x.len() });
    }
    let r = a.rows();
    let m: Vec<Vec<Complex64>> = (0..r)
        .map(|i| (0..r).map(|k| (0..a.cols()).map(|j| a[(i, j)] * x[j] * a[(k, j)].conj()).sum()).collect())
        .collect();
    Ok(det_of(m))
}

fn check_shape(rows: usize, cols: usize) -> Result<()> {
    subset::check_ground(cols)?;
    if rows > cols {
        return Err(Error::Precondition(format!("need rows ≤ columns, got {rows} × {cols}")));
    }
    Ok(())
}

/// `Σ_S |det(A↾S)|² x^S`, cross-checked against `det(A·diag(x)·A*)` at three
/// random points of the right half-plane to `1e-8` relative.
///
/// A minor below `1e-12` times the Hadamard bound of its columns is treated
/// as an exact zero.
pub fn det_construction(a: &ComplexMatrix) -> Result<MultiAffinePolynomial> {
    check_shape(a.rows(), a.cols())?;
    let col_norm: Vec<f64> =
        (0..a.cols()).map(|j| (0..a.rows()).map(|i| a[(i, j)].norm_sqr()).sum::<f64>().sqrt()).collect();
    let subsets: Vec<u64> = subset::k_subsets(a.cols(), a.rows()).collect();
    let terms: Vec<(u64, Complex64)> = subsets
        .par_iter()
        .filter_map(|&s| {
            let d = det_of(submatrix(a, s));
            let bound: f64 = subset::elems(s).map(|j| col_norm[j]).product();
            (d.norm() > 1e-12 * bound).then(|| (s, Complex64::new(d.norm_sqr(), 0.0)))
        })
        .collect();
    let p = MultiAffinePolynomial::from_terms(a.cols(), terms)?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..3 {
        let x: Vec<Complex64> =
            (0..a.cols()).map(|_| Complex64::new(rng.gen_range(0.1..2.0), rng.gen_range(-1.0..1.0))).collect();
        let lhs = p.evaluate(&x)?;
        let rhs = gram_determinant(a, &x)?;
        let scale: f64 = p.terms().map(|(s, c)| c.norm() * subset::elems(s).map(|j| x[j].norm()).product::<f64>()).sum();
        // rank-deficient A gives the zero polynomial, so also scale by the row sizes of AXA*
        let rows: f64 = (0..a.rows())
            .map(|i| (0..a.cols()).map(|j| a[(i, j)].norm_sqr() * x[j].norm()).sum::<f64>())
            .product();
        if (lhs - rhs).norm() > 1e-8 * scale.max(rows).max(rhs.norm()).max(f64::MIN_POSITIVE) {
            return Err(Error::CrossCheck(format!("minor expansion {lhs} vs det(AXA*) {rhs}")));
        }
    }
    Ok(p)
}

/// `Σ_S per(Λ↾S) x^S`. A permanent below `1e-12` times the product of its
/// row sums is treated as an exact zero.
pub fn per_construction(l: &NonnegMatrix) -> Result<MultiAffinePolynomial> {
    check_shape(l.rows(), l.cols())?;
    if l.rows() > 20 {
        return Err(Error::Precondition("permanents are limited to 20 rows".into()));
    }
    let subsets: Vec<u64> = subset::k_subsets(l.cols(), l.rows()).collect();
    let terms: Vec<(u64, Complex64)> = subsets
        .par_iter()
        .filter_map(|&s| {
            let sub: Vec<Vec<f64>> = (0..l.rows()).map(|i| subset::elems(s).map(|j| l[(i, j)]).collect()).collect();
            let bound: f64 = sub.iter().map(|row| row.iter().sum::<f64>()).product();
            let v = per_of(&sub);
            (v > 1e-12 * bound).then(|| (s, Complex64::new(v, 0.0)))
        })
        .collect();
    MultiAffinePolynomial::from_terms(l.cols(), terms)
}

/// Every maximal minor is zero or of modulus one, within `tol`.
pub fn unimodular_minor_check(a: &ComplexMatrix, tol: f64) -> Result<bool> {
    check_shape(a.rows(), a.cols())?;
    Ok(subset::k_subsets(a.cols(), a.rows()).all(|s| {
        let d = det_of(submatrix(a, s)).norm();
        d <= tol || (d - 1.0).abs() <= tol
    }))
}
