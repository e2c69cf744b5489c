//! Sampled necessary conditions: the local half-plane property and the
//! coefficient-slice conditions for a single variable.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::search::trial_rng;
use super::ToleranceConfig;
use crate::error::{Error, Result};
use crate::io::cser;
use crate::poly::{GeneralPolynomial, MultiAffinePolynomial};

/// A point of the open right half-plane: argument uniform in `(−π/2, π/2)`,
/// modulus log-uniform in `[e^{-3}, e^3]`.
fn sample_right(rng: &mut ChaCha8Rng) -> Complex64 {
    let arg = loop {
        let t = (2.0 * rng.gen::<f64>() - 1.0) * FRAC_PI_2;
        if t.abs() < FRAC_PI_2 {
            break t;
        }
    };
    let r = (6.0 * rng.gen::<f64>() - 3.0).exp();
    Complex64::from_polar(r, arg)
}

/// Outcome of [`local_hpp_probe`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalProbe {
    pub trials: u64,
    /// Samples where `P/e` vanished.
    pub skipped: u64,
    /// Point of `H^{E∖e}` (with `x_e` set to 0) where `Re(P\e / P/e) < 0`.
    #[serde(with = "cser::vec")]
    pub witness: Vec<Complex64>,
    #[serde(with = "cser")]
    pub ratio: Complex64,
    pub violated: bool,
}

/// Sample `Re(P\e / P/e) ≥ 0` on the open right half-plane.
///
/// `e` may be a coloop (the ratio is then identically 0) but not a loop.
pub fn local_hpp_probe(
    p: &MultiAffinePolynomial,
    e: usize,
    trials: u64,
    seed: u64,
    cfg: &ToleranceConfig,
) -> Result<LocalProbe> {
    cfg.validate()?;
    let del = p.without(e)?;
    let con = p.derivative(e)?;
    if con.is_zero() {
        return Err(Error::Degenerate(format!("element {e} is a loop")));
    }
    let n = p.n();
    let mut skipped = 0;
    for i in 0..trials {
        let mut rng = trial_rng(seed, i);
        let mut x: Vec<Complex64> = (0..n).map(|_| sample_right(&mut rng)).collect();
        x[e] = Complex64::new(0.0, 0.0);
        let den = con.eval_unchecked(&x);
        if den == Complex64::new(0.0, 0.0) {
            skipped += 1;
            continue;
        }
        let ratio = del.eval_unchecked(&x) / den;
        if ratio.re < -cfg.eval_tol * (1.0 + ratio.norm()) {
            return Ok(LocalProbe { trials: i + 1, skipped, witness: x, ratio, violated: true });
        }
    }
    Ok(LocalProbe { trials, skipped, witness: Vec::new(), ratio: Complex64::new(0.0, 0.0), violated: false })
}

/// Result of the slice conditions for one variable.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FettweisFinding {
    Consistent,
    /// `P_r ≢ 0`, then `len ≥ 2` vanishing slices, then a nonzero one.
    Gap { r: usize, len: usize },
    /// `P_{r+1} ≡ 0` and `P_{r+2}/P_r` differs between two samples.
    RatioNotConstant {
        r: usize,
        #[serde(with = "cser")]
        first: Complex64,
        #[serde(with = "cser")]
        second: Complex64,
    },
    /// `P_{r+1} ≡ 0` and `P_{r+2}/P_r` is not a positive real.
    RatioNotPositive {
        r: usize,
        #[serde(with = "cser")]
        value: Complex64,
    },
    /// `Re(P_{r+1}/P_r) < 0` at the point `x` (ground set `E∖e`).
    RealPartNegative {
        r: usize,
        #[serde(with = "cser::vec")]
        x: Vec<Complex64>,
        #[serde(with = "cser")]
        value: Complex64,
    },
}

/// Structural check: no run of two or more vanishing slices between nonzero ones.
pub fn fettweis_gap_check(p: &GeneralPolynomial, e: usize) -> Result<FettweisFinding> {
    let slices = p.coefficient_slices(e)?;
    let nonzero: Vec<usize> = (0..slices.len()).filter(|&k| !slices[k].is_zero()).collect();
    for w in nonzero.windows(2) {
        let len = w[1] - w[0] - 1;
        if len >= 2 {
            return Ok(FettweisFinding::Gap { r: w[0], len });
        }
    }
    Ok(FettweisFinding::Consistent)
}

/// Sampled check of the remaining slice conditions: constant positive ratio
/// across a single vanishing slice, and real-part positivity of consecutive
/// ratios. Runs the gap check first.
pub fn fettweis_ratio_probe(
    p: &GeneralPolynomial,
    e: usize,
    trials: u64,
    seed: u64,
    cfg: &ToleranceConfig,
) -> Result<FettweisFinding> {
    cfg.validate()?;
    let gap = fettweis_gap_check(p, e)?;
    if gap != FettweisFinding::Consistent {
        return Ok(gap);
    }
    let slices = p.coefficient_slices(e)?;
    let m = slices.len();
    let dim = p.n() - 1;
    let mut reference: Vec<Option<Complex64>> = vec![None; m];
    for i in 0..trials {
        let mut rng = trial_rng(seed, i);
        let x: Vec<Complex64> = (0..dim).map(|_| sample_right(&mut rng)).collect();
        let vals: Vec<Complex64> = slices.iter().map(|s| s.evaluate(&x)).collect::<Result<_>>()?;
        for r in 0..m {
            if slices[r].is_zero() || vals[r] == Complex64::new(0.0, 0.0) {
                continue;
            }
            if r + 1 < m && !slices[r + 1].is_zero() {
                let value = vals[r + 1] / vals[r];
                if value.re < -cfg.eval_tol * (1.0 + value.norm()) {
                    return Ok(FettweisFinding::RealPartNegative { r, x, value });
                }
            } else if r + 2 < m && !slices[r + 2].is_zero() {
                let value = vals[r + 2] / vals[r];
                let scale = 1.0 + value.norm();
                if value.re <= 0.0 || value.im.abs() > cfg.root_im_tol * scale {
                    return Ok(FettweisFinding::RatioNotPositive { r, value });
                }
                match reference[r] {
                    None => reference[r] = Some(value),
                    Some(first) if (first - value).norm() > cfg.root_im_tol * scale => {
                        return Ok(FettweisFinding::RatioNotConstant { r, first, second: value });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(FettweisFinding::Consistent)
}
