//! All roots of a univariate complex polynomial by simultaneous Weierstrass iteration.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::cser;

/// Iteration limits for [`univariate_roots`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootConfig {
    pub max_iterations: usize,
    /// Relative step size below which a root counts as settled.
    pub step_tol: f64,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self { max_iterations: 2000, step_tol: 1e-14 }
    }
}

/// Roots of a polynomial with the largest `|p(root)|` among them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    #[serde(with = "cser::vec")]
    pub roots: Vec<Complex64>,
    pub residual: f64,
    pub iterations: usize,
}

/// Starting angle offset; any value not a rational multiple of π works.
const START_ANGLE: f64 = 0.577_215_664_901_532_9;

fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &k| acc * z + k)
}

fn horner_abs(c: &[Complex64], r: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, k| acc * r + k.norm())
}

/// Roots of `Σ coeffs[k] ζ^k` (ascending powers).
///
/// Zero roots are split off exactly from trailing zero coefficients; the rest
/// come from Gauss–Seidel Durand–Kerner iteration started on a rotated circle of
/// radius `1 + max |c_k / c_deg|`.
pub fn univariate_roots(coeffs: &[Complex64], cfg: &RootConfig) -> Result<RootSet> {
    let Some(deg) = coeffs.iter().rposition(|c| *c != Complex64::new(0.0, 0.0)) else {
        return Err(Error::Degenerate("zero polynomial has no finite root set".into()));
    };
    let zeros = coeffs.iter().position(|c| *c != Complex64::new(0.0, 0.0)).unwrap();
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs[zeros..=deg].iter().map(|c| c / lead).collect();
    let m = monic.len() - 1;
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let mut iterations = 0;
    if m > 0 {
        let radius = 1.0 + monic[..m].iter().map(|c| c.norm()).fold(0.0, f64::max);
        let mut z: Vec<Complex64> = (0..m)
            .map(|j| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * j as f64 / m as f64 + START_ANGLE))
            .collect();
        let eps = f64::EPSILON;
        let mut converged = false;
        while iterations < cfg.max_iterations {
            iterations += 1;
            let mut settled = true;
            for j in 0..m {
                let zj = z[j];
                let val = horner(&monic, zj);
                let floor = 16.0 * eps * horner_abs(&monic, zj.norm());
                let mut denom = Complex64::new(1.0, 0.0);
                for (k, &zk) in z.iter().enumerate() {
                    if k != j {
                        denom *= zj - zk;
                    }
                }
                if denom == Complex64::new(0.0, 0.0) {
                    denom = Complex64::new(eps, 0.0);
                }
                let step = val / denom;
                z[j] = zj - step;
                if !(step.norm() <= cfg.step_tol * (1.0 + zj.norm()) || val.norm() <= floor) {
                    settled = false;
                }
            }
            if settled {
                converged = true;
                break;
            }
        }
        if !converged || z.iter().any(|r| !r.re.is_finite() || !r.im.is_finite()) {
            let residual = z.iter().map(|&r| horner(coeffs, r).norm()).fold(0.0, f64::max);
            return Err(Error::RootsNotConverged { iterations, residual });
        }
        roots.extend(z);
    }
    let residual = roots.iter().map(|&r| horner(coeffs, r).norm()).fold(0.0, f64::max);
    Ok(RootSet { roots, residual, iterations })
}

/// Real-coefficient convenience wrapper.
pub fn real_roots_of(coeffs: &[f64], cfg: &RootConfig) -> Result<RootSet> {
    let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    univariate_roots(&c, cfg)
}
