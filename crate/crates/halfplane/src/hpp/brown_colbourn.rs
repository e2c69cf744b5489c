//! Root location for the independent-set polynomials of uniform matroids.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::roots::{real_roots_of, RootConfig};
use crate::error::{Error, Result};
use crate::io::cser;

/// Roots of `H_{r,n}(q) = Σ_{ℓ≤r} C(n−r−1+ℓ, ℓ) q^ℓ` and of
/// `I_{r,n}(z) = Σ_{k≤r} C(n,k) z^k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BrownColbournReport {
    pub r: usize,
    pub n: usize,
    /// Ascending coefficients of `H_{r,n}`.
    pub h_coeffs: Vec<f64>,
    #[serde(with = "cser::vec")]
    pub h_roots: Vec<Complex64>,
    /// `[1/(n−r), r/(n−1)]`.
    pub annulus: (f64, f64),
    /// Every root of `H` lies in the annulus within the tolerance.
    pub annulus_ok: bool,
    #[serde(with = "cser::vec")]
    pub i_roots: Vec<Complex64>,
    /// Smallest and largest real part over the roots of `I` (`None` without roots).
    pub i_min_re: Option<f64>,
    pub i_max_re: Option<f64>,
    /// Every root of `I` has `Re z ≥ −½` within the tolerance.
    pub i_right_of_half: bool,
    /// Every root of `I` has `Re z ≤ −½` within the tolerance.
    pub i_left_of_half: bool,
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Coefficients and roots of `H_{r,n}` and `I_{r,n}` for `0 ≤ r < n`, with
/// the annulus and half-line checks evaluated at tolerance `tol`.
pub fn brown_colbourn_uniform(r: usize, n: usize, tol: f64) -> Result<BrownColbournReport> {
    if r >= n {
        return Err(Error::Precondition(format!("need r < n, got r = {r}, n = {n}")));
    }
    let cfg = RootConfig::default();
    let h_coeffs: Vec<f64> = (0..=r).map(|l| binomial(n - r - 1 + l, l).round()).collect();
    let h_roots = real_roots_of(&h_coeffs, &cfg)?.roots;
    let inner = 1.0 / (n - r) as f64;
    let outer = if n == 1 { 0.0 } else { r as f64 / (n - 1) as f64 };
    let annulus_ok = h_roots.iter().all(|q| q.norm() >= inner - tol && q.norm() <= outer + tol);

    let i_coeffs: Vec<f64> = (0..=r).map(|k| binomial(n, k).round()).collect();
    let i_roots = real_roots_of(&i_coeffs, &cfg)?.roots;
    let re = i_roots.iter().map(|z| z.re);
    let i_min_re = re.clone().reduce(f64::min);
    let i_max_re = re.reduce(f64::max);
    let i_right_of_half = i_min_re.is_none_or(|v| v >= -0.5 - tol);
    let i_left_of_half = i_max_re.is_none_or(|v| v <= -0.5 + tol);
    Ok(BrownColbournReport {
        r,
        n,
        h_coeffs,
        h_roots,
        annulus: (inner, outer),
        annulus_ok,
        i_roots,
        i_min_re,
        i_max_re,
        i_right_of_half,
        i_left_of_half,
    })
}
