//! Half-plane property tests: root finding, randomized searches, exact rank-2
//! decision, necessary-condition probes and uniform-matroid root bounds.

mod brown_colbourn;
mod probes;
mod rank2;
mod rays;
pub mod roots;
mod search;
mod verify;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::cser;

pub use brown_colbourn::{brown_colbourn_uniform, BrownColbournReport};
pub use probes::{fettweis_gap_check, fettweis_ratio_probe, local_hpp_probe, FettweisFinding, LocalProbe};
pub use rank2::{jacobi_eigen, rank2_exact, rank2_exact_general, Eigen, Rank2Report};
pub use rays::{
    classify_roots, hpp_random_elementary, hpp_random_rays, ray_polynomial, ray_polynomial_general,
    ray_test_homogeneous, select_pivot, shifted_hpp_random, shifted_polynomial, RayResult,
};
pub use roots::{univariate_roots, RootConfig, RootSet};
pub use search::SearchOptions;
pub use verify::counterexample_verify;

/// Numerical thresholds shared by the tests.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    /// A root counts as real when `|Im ζ| ≤ root_im_tol·(1 + |ζ|)`.
    pub root_im_tol: f64,
    /// A root counts as nonpositive when `Re ζ ≤ root_re_tol`.
    pub root_re_tol: f64,
    pub eval_tol: f64,
    pub eigen_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self { root_im_tol: 1e-7, root_re_tol: 1e-9, eval_tol: 1e-9, eigen_tol: 1e-10 }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<()> {
        let all = [self.root_im_tol, self.root_re_tol, self.eval_tol, self.eigen_tol];
        if all.iter().all(|t| *t > 0.0 && t.is_finite()) {
            Ok(())
        } else {
            Err(Error::Precondition("tolerances must be positive and finite".into()))
        }
    }
}

/// Which randomized search produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Rays,
    Elementary,
    Shifted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    NoCounterexampleFound,
    Counterexample,
}

/// Independently checkable evidence that a polynomial lacks the half-plane property.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// `P(ζa + b)` has the root `root` off the nonpositive real axis.
    Ray {
        a: Vec<f64>,
        b: Vec<f64>,
        #[serde(with = "cser")]
        root: Complex64,
    },
    /// `P(x) ≈ 0` with every `Re x_e > 0`; `x[pivot]` was solved for.
    Elementary {
        #[serde(with = "cser::vec")]
        x: Vec<Complex64>,
        pivot: usize,
        residual: f64,
    },
    /// `ζ^k P(ζx + y/ζ)` has the root `root` in the open right half-plane.
    Shifted {
        x: Vec<f64>,
        y: Vec<f64>,
        #[serde(with = "cser")]
        root: Complex64,
    },
}

/// Outcome of a randomized search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HppReport {
    pub method: Method,
    pub verdict: Verdict,
    /// Trials requested.
    pub requested: u64,
    /// Trials actually run (fewer when stopping at the first counterexample).
    pub trials: u64,
    pub counterexamples: u64,
    /// Trials that produced no decision (degenerate sample or root failure).
    pub inconclusive: u64,
    pub seed: u64,
    /// Index of the trial that produced the certificate.
    pub first_index: Option<u64>,
    pub certificate: Option<Counterexample>,
}

impl HppReport {
    pub fn rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.counterexamples as f64 / self.trials as f64
        }
    }
}
