//! Independent re-check of counterexample certificates.
//!
//! Univariate restrictions are rebuilt here by sampling the polynomial on
//! roots of unity and interpolating, not by the coefficient expansion used
//! in the searches.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::roots::{univariate_roots, RootConfig};
use super::{classify_roots, Counterexample, ToleranceConfig};
use crate::error::{Error, Result};
use crate::poly::GeneralPolynomial;

/// Ascending coefficients of a polynomial of degree `< len` from its values
/// at the `len`-th roots of unity.
fn interpolate<F: Fn(Complex64) -> Result<Complex64>>(len: usize, f: F) -> Result<Vec<Complex64>> {
    let w: Vec<Complex64> = (0..len).map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / len as f64)).collect();
    let vals: Vec<Complex64> = w.iter().map(|&z| f(z)).collect::<Result<_>>()?;
    Ok((0..len)
        .map(|k| {
            let s: Complex64 = (0..len).map(|j| vals[j] * w[(j * k) % len].conj()).sum();
            s / len as f64
        })
        .collect())
}

fn clean(mut c: Vec<Complex64>, scale: f64) -> Vec<Complex64> {
    for v in &mut c {
        if v.norm() <= 1e-12 * scale {
            *v = Complex64::new(0.0, 0.0);
        }
    }
    c
}

fn check_nonneg(v: &[f64], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: v.len() });
    }
    if v.iter().any(|x| !(x.is_finite() && *x >= 0.0)) {
        return Err(Error::Malformed("certificate vectors must be nonnegative".into()));
    }
    Ok(())
}

fn l1(p: &GeneralPolynomial) -> f64 {
    p.terms().map(|(_, c)| c.norm()).sum()
}

/// Confirm a certificate against `p` from scratch.
pub fn counterexample_verify(p: &GeneralPolynomial, cert: &Counterexample, cfg: &ToleranceConfig) -> Result<bool> {
    cfg.validate()?;
    let n = p.n();
    let deg = p.degree().unwrap_or(0);
    let scale = 1.0 + l1(p);
    match cert {
        Counterexample::Ray { a, b, root } => {
            check_nonneg(a, n)?;
            check_nonneg(b, n)?;
            if !p.is_homogeneous() {
                return Ok(false);
            }
            let coeffs = interpolate(deg + 1, |z| {
                let x: Vec<Complex64> = a.iter().zip(b).map(|(&ai, &bi)| z * ai + bi).collect();
                p.evaluate(&x)
            })?;
            let coeffs = clean(coeffs, scale);
            if coeffs.iter().all(|c| c.norm() == 0.0) {
                return Ok(false);
            }
            let roots = univariate_roots(&coeffs, &RootConfig::default())?;
            let bad: Vec<Complex64> =
                roots.roots.iter().copied().filter(|z| classify_roots(&[*z], cfg).is_some()).collect();
            Ok(bad.iter().any(|z| (z - root).norm() <= 1e-6 * (1.0 + root.norm())))
        }
        Counterexample::Elementary { x, pivot, residual } => {
            if x.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: x.len() });
            }
            if *pivot >= n {
                return Err(Error::ElementOutOfRange { element: *pivot, n });
            }
            if x.iter().any(|v| v.re <= cfg.eval_tol) {
                return Ok(false);
            }
            let value = p.evaluate(x)?.norm();
            let bound = cfg.eval_tol * scale;
            Ok(value <= bound && *residual <= bound && (residual - value).abs() <= bound)
        }
        Counterexample::Shifted { x, y, root } => {
            check_nonneg(x, n)?;
            check_nonneg(y, n)?;
            let coeffs = interpolate(2 * deg + 1, |z| {
                let pt: Vec<Complex64> = x.iter().zip(y).map(|(&xi, &yi)| z * xi + yi / z).collect();
                Ok(p.evaluate(&pt)? * z.powu(deg as u32))
            })?;
            let coeffs = clean(coeffs, scale);
            if coeffs.iter().all(|c| c.norm() == 0.0) {
                return Ok(false);
            }
            let roots = univariate_roots(&coeffs, &RootConfig::default())?;
            Ok(roots
                .roots
                .iter()
                .any(|z| z.re > cfg.root_re_tol && (z - root).norm() <= 1e-6 * (1.0 + root.norm())))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiAffinePolynomial;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn interpolation_recovers_coefficients() {
        let want = [c(1.0), Complex64::new(0.0, 2.0), c(-3.0)];
        let got = interpolate(3, |z| Ok(want[0] + want[1] * z + want[2] * z * z)).unwrap();
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).norm() < 1e-14);
        }
    }

    #[test]
    fn elementary_certificates() {
        let cfg = ToleranceConfig::default();
        // x0 − x1 vanishes at (1, 1)
        let p = MultiAffinePolynomial::from_subsets(2, &[(&[0], c(1.0)), (&[1], c(-1.0))]).unwrap().to_general();
        let good = Counterexample::Elementary { x: vec![c(1.0), c(1.0)], pivot: 0, residual: 0.0 };
        assert!(counterexample_verify(&p, &good, &cfg).unwrap());
        let imag = Counterexample::Elementary { x: vec![Complex64::i(), Complex64::i()], pivot: 0, residual: 0.0 };
        assert!(!counterexample_verify(&p, &imag, &cfg).unwrap());
        let tampered = Counterexample::Elementary { x: vec![c(1.0), c(1.0)], pivot: 0, residual: 0.5 };
        assert!(!counterexample_verify(&p, &tampered, &cfg).unwrap());
    }

    #[test]
    fn ray_certificates() {
        let cfg = ToleranceConfig::default();
        // x0x1 + x0x2 + x1x2 on a = (1,1,0), b = (0,0,1): ζ² + 2ζ, roots 0, −2
        let p = MultiAffinePolynomial::elementary_symmetric(2, 3).unwrap().to_general();
        let cert = Counterexample::Ray { a: vec![1.0, 1.0, 0.0], b: vec![0.0, 0.0, 1.0], root: c(-2.0) };
        assert!(!counterexample_verify(&p, &cert, &cfg).unwrap());
        // x0² + x1² along a = (1,0), b = (0,1): ζ² + 1, roots ±i
        let q = GeneralPolynomial::from_terms(2, [(vec![2, 0], c(1.0)), (vec![0, 2], c(1.0))]).unwrap();
        let cert = Counterexample::Ray { a: vec![1.0, 0.0], b: vec![0.0, 1.0], root: Complex64::i() };
        assert!(counterexample_verify(&q, &cert, &cfg).unwrap());
        let wrong = Counterexample::Ray { a: vec![1.0, 0.0], b: vec![0.0, 1.0], root: c(3.0) };
        assert!(!counterexample_verify(&q, &wrong, &cfg).unwrap());
    }
}
