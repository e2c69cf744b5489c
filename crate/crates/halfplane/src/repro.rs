//! Reproduction harness for the worked counterexamples, the rank-2 threshold
//! family and the random-search rates.
//!
//! Expected values live in `fixtures/manifest.json`, compiled into the
//! library. Each fixture carries an `origin` and a `quote` that anchors its
//! numbers to the source text.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hpp::{
    hpp_random_elementary, hpp_random_rays, rank2_exact, ray_polynomial, univariate_roots, HppReport, Method,
    RootConfig, SearchOptions, ToleranceConfig,
};
use crate::io::{cser, MatrixJson};
use crate::matroid::{catalog, graphic_matroid, Graph, Matroid};
use crate::poly::MultiAffinePolynomial;
use crate::repr::det_construction;
use crate::subset;

const MANIFEST: &str = include_str!("../fixtures/manifest.json");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub fixtures: Vec<Fixture>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    #[serde(default = "default_origin")]
    pub origin: String,
    pub quote: String,
    #[serde(default)]
    pub cases: Vec<Case>,
    #[serde(default)]
    pub thresholds: Vec<Threshold>,
    #[serde(default)]
    pub searches: Vec<SearchRow>,
}

fn default_origin() -> String {
    "paper".into()
}

/// Where the polynomial of a case comes from.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Basis polynomial of a catalog matroid.
    Matroid(String),
    /// Basis polynomial of the cycle matroid of `K_k`.
    GraphicComplete(usize),
    /// `P_F7 + μ·z1z3z5 + ν·z0z3z6 + ρ·z2z3z4`.
    F7Family([f64; 3]),
    /// `Σ |det A_S|² z^S`.
    Matrix(MatrixJson),
}

/// One coordinate of a direction vector: `(index, constant, ε-coefficient,
/// aε-coefficient)`.
pub type Entry = (usize, f64, f64, f64);

/// `P(ζx + y)` at one choice of `(ε, a)`, with the checks to apply.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Case {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub origin: Option<String>,
    pub source: Source,
    pub x: Vec<Entry>,
    pub y: Vec<Entry>,
    pub eps: f64,
    pub a: f64,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Check {
    /// Ascending coefficients, each `const + e·ε + ae·aε`.
    Coefficients { values: Vec<[f64; 3]>, tol: f64 },
    /// Roots `[re, im]`, matched one to one within `tol`.
    Roots { values: Vec<[f64; 2]>, tol: f64 },
    /// At least two roots within `tol` of `at`.
    DoubleRoot { at: [f64; 2], tol: f64 },
    Real,
    Nonreal,
    /// Largest `|Im ζ|` equals `√(num/den)·√ε` within `rel_tol`.
    ImagLeading { factor_sq: [f64; 2], rel_tol: f64 },
    /// Nonreal roots exactly for `lo < ε < hi`, probed just inside and just
    /// outside each end at relative distance `rel_margin`.
    NonrealWindow { lo: f64, hi: f64, rel_margin: f64 },
    /// The case polynomial equals a member of the F7 family.
    Equals { f7_family: [f64; 3] },
}

/// `½ Σ a_ij z_i z_j` with `a_01 = μ`, other off-diagonal entries 1 and zero
/// diagonal; the property should hold exactly for `0 ≤ μ ≤ upper`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Threshold {
    pub n: usize,
    /// `upper = num/den`.
    pub upper: [f64; 2],
    pub margin: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchRow {
    pub matroid: String,
    pub method: Method,
    pub trials: u64,
    /// Accepted range for the counterexample rate.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rate: Option<[f64; 2]>,
    /// Accepted range for the counterexample count.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<[u64; 2]>,
}

/// Overrides applied when running fixtures.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReproOptions {
    /// Replaces the `ε` of every case.
    pub eps: Option<f64>,
    /// Replaces the trial count of every search row; count ranges scale with it.
    pub trials: Option<u64>,
    pub seed: u64,
    pub tol: ToleranceConfig,
}

impl Default for ReproOptions {
    fn default() -> Self {
        Self { eps: None, trials: None, seed: 1, tol: ToleranceConfig::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub kind: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseReport {
    pub label: String,
    pub eps: f64,
    pub a: f64,
    #[serde(with = "cser::vec")]
    pub coeffs: Vec<Complex64>,
    #[serde(with = "cser::vec")]
    pub roots: Vec<Complex64>,
    pub checks: Vec<CheckOutcome>,
    /// `(ε, max |Im ζ| / √ε)` over a logarithmic grid, for cases whose
    /// imaginary parts are predicted to grow like `√ε`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sweep: Vec<(f64, f64)>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdReport {
    pub n: usize,
    pub upper: f64,
    pub probes: Vec<ThresholdProbe>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdProbe {
    pub mu: f64,
    /// `None` when a negative coefficient already rules the property out.
    pub lambda2: Option<f64>,
    pub hpp: bool,
    pub expected: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub matroid: String,
    pub expected: String,
    pub report: HppReport,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FixtureReport {
    pub name: String,
    pub origin: String,
    pub quote: String,
    pub cases: Vec<CaseReport>,
    pub thresholds: Vec<ThresholdReport>,
    pub searches: Vec<SearchReport>,
    pub pass: bool,
}

/// The checked-in manifest.
pub fn manifest() -> Result<Manifest> {
    serde_json::from_str(MANIFEST).map_err(|e| Error::Malformed(format!("fixture manifest: {e}")))
}

pub fn fixture_names() -> Result<Vec<String>> {
    Ok(manifest()?.fixtures.into_iter().map(|f| f.name).collect())
}

pub fn fixture(name: &str) -> Result<Fixture> {
    manifest()?.fixtures.into_iter().find(|f| f.name == name).ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// `P_F7 + μ·z1z3z5 + ν·z0z3z6 + ρ·z2z3z4` (0-indexed).
pub fn f7_family(mu: f64, nu: f64, rho: f64) -> Result<MultiAffinePolynomial> {
    let base = catalog("F7")?.basis_polynomial();
    let extra = MultiAffinePolynomial::from_subsets(
        7,
        &[(&[1, 3, 5], Complex64::new(mu, 0.0)), (&[0, 3, 6], Complex64::new(nu, 0.0)), (&[2, 3, 4], Complex64::new(rho, 0.0))],
    )?;
    base.add(&extra)
}

/// The degree-2 polynomial of the threshold family.
pub fn rank2_mu_family(n: usize, mu: f64) -> Result<MultiAffinePolynomial> {
    if n < 2 {
        return Err(Error::Precondition("need at least two variables".into()));
    }
    let terms: Vec<(u64, Complex64)> = subset::k_subsets(n, 2)
        .map(|s| (s, Complex64::new(if s == 0b11 { mu } else { 1.0 }, 0.0)))
        .collect();
    MultiAffinePolynomial::from_terms(n, terms)
}

fn source_polynomial(src: &Source) -> Result<MultiAffinePolynomial> {
    match src {
        Source::Matroid(name) => Ok(catalog(name)?.basis_polynomial()),
        Source::GraphicComplete(k) => Ok(graphic_matroid(&Graph::complete(*k)?).basis_polynomial()),
        Source::F7Family([mu, nu, rho]) => f7_family(*mu, *nu, *rho),
        Source::Matrix(m) => det_construction(&m.to_complex()?),
    }
}

fn vector(entries: &[Entry], n: usize, eps: f64, a: f64) -> Result<Vec<f64>> {
    let mut v = vec![0.0; n];
    for &(i, c, e, ae) in entries {
        if i >= n {
            return Err(Error::ElementOutOfRange { element: i, n });
        }
        v[i] += c + e * eps + ae * a * eps;
    }
    Ok(v)
}

fn restricted_roots(p: &MultiAffinePolynomial, case: &Case, eps: f64) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    let x = vector(&case.x, p.n(), eps, case.a)?;
    let y = vector(&case.y, p.n(), eps, case.a)?;
    let coeffs = ray_polynomial(p, &x, &y)?;
    let roots = univariate_roots(&coeffs, &RootConfig::default())?.roots;
    Ok((coeffs, roots))
}

fn is_real(z: Complex64, tol: &ToleranceConfig) -> bool {
    z.im.abs() <= tol.root_im_tol * (1.0 + z.norm())
}

fn fmt_roots(r: &[Complex64]) -> String {
    r.iter().map(|z| format!("{:.6}{:+.6}i", z.re, z.im)).collect::<Vec<_>>().join(", ")
}

/// Match every expected root to a distinct computed root; returns the worst
/// distance, or `None` when the counts differ.
fn match_roots(expected: &[Complex64], got: &[Complex64]) -> Option<f64> {
    if expected.len() != got.len() {
        return None;
    }
    let mut used = vec![false; got.len()];
    let mut worst: f64 = 0.0;
    for w in expected {
        let (j, d) = got
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, g)| (j, (g - w).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))?;
        used[j] = true;
        worst = worst.max(d);
    }
    Some(worst)
}

fn run_check(
    check: &Check,
    p: &MultiAffinePolynomial,
    case: &Case,
    eps: f64,
    coeffs: &[Complex64],
    roots: &[Complex64],
    tol: &ToleranceConfig,
) -> Result<CheckOutcome> {
    let out = |kind, pass, detail| Ok(CheckOutcome { kind, pass, detail });
    match check {
        Check::Coefficients { values, tol: ctol } => {
            let want: Vec<f64> = values.iter().map(|[c, e, ae]| c + e * eps + ae * case.a * eps).collect();
            // missing entries on either side are zero coefficients
            let len = want.len().max(coeffs.len());
            let worst = (0..len)
                .map(|k| {
                    let w = want.get(k).copied().unwrap_or(0.0);
                    let g = coeffs.get(k).copied().unwrap_or_default();
                    (g - w).norm() / (1.0 + w.abs())
                })
                .fold(0.0, f64::max);
            let got: Vec<String> = coeffs.iter().map(|c| format!("{:.6}", c.re)).collect();
            out("coefficients", worst <= *ctol, format!("got [{}], want {:?}", got.join(", "), want))
        }
        Check::Roots { values, tol: rtol } => {
            let want: Vec<Complex64> = values.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
            let worst = match_roots(&want, roots);
            let pass = worst.is_some_and(|d| d <= *rtol);
            out("roots", pass, format!("worst deviation {:?}, roots {}", worst, fmt_roots(roots)))
        }
        Check::DoubleRoot { at, tol: dtol } => {
            let at = Complex64::new(at[0], at[1]);
            let near = roots.iter().filter(|z| (*z - at).norm() <= *dtol).count();
            out("double_root", near >= 2, format!("{near} roots near {at}"))
        }
        Check::Real => {
            let pass = roots.iter().all(|z| is_real(*z, tol));
            out("real", pass, fmt_roots(roots))
        }
        Check::Nonreal => {
            let pass = roots.iter().any(|z| !is_real(*z, tol));
            out("nonreal", pass, fmt_roots(roots))
        }
        Check::ImagLeading { factor_sq, rel_tol } => {
            let want = (factor_sq[0] / factor_sq[1]).sqrt() * eps.max(0.0).sqrt();
            let got = roots.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
            let slack = rel_tol * want + tol.root_im_tol * 10.0;
            out("imag_leading", (got - want).abs() <= slack, format!("max |Im| {got:.6e}, predicted {want:.6e}"))
        }
        Check::NonrealWindow { lo, hi, rel_margin } => {
            let probes = [
                (lo * (1.0 - rel_margin), false),
                (lo * (1.0 + rel_margin), true),
                (0.5 * (lo + hi), true),
                (hi * (1.0 - rel_margin), true),
                (hi * (1.0 + rel_margin), false),
            ];
            let mut pass = true;
            let mut detail = Vec::new();
            for (e, want) in probes {
                let (_, r) = restricted_roots(p, case, e)?;
                let nonreal = r.iter().any(|z| !is_real(*z, tol));
                pass &= nonreal == want;
                detail.push(format!("ε={e:.6}: {}", if nonreal { "nonreal" } else { "real" }));
            }
            out("nonreal_window", pass, detail.join("; "))
        }
        Check::Equals { f7_family: [mu, nu, rho] } => {
            let q = f7_family(*mu, *nu, *rho)?;
            let diff = p.max_abs_diff(&q)?;
            out("equals", diff <= 1e-9 * (1.0 + q.l1_norm()), format!("max coefficient difference {diff:.3e}"))
        }
    }
}

fn run_case(case: &Case, opts: &ReproOptions) -> Result<CaseReport> {
    let p = source_polynomial(&case.source)?;
    let eps = opts.eps.unwrap_or(case.eps);
    let (coeffs, roots) = restricted_roots(&p, case, eps)?;
    let checks: Vec<CheckOutcome> =
        case.checks.iter().map(|c| run_check(c, &p, case, eps, &coeffs, &roots, &opts.tol)).collect::<Result<_>>()?;
    let pass = checks.iter().all(|c| c.pass);
    let mut sweep = Vec::new();
    if case.checks.iter().any(|c| matches!(c, Check::ImagLeading { .. })) {
        for k in 1..=6 {
            let e = 10f64.powi(-k);
            let (_, r) = restricted_roots(&p, case, e)?;
            sweep.push((e, r.iter().map(|z| z.im.abs()).fold(0.0, f64::max) / e.sqrt()));
        }
    }
    Ok(CaseReport { label: case.label.clone(), eps, a: case.a, coeffs, roots, checks, sweep, pass })
}

fn run_threshold(t: &Threshold, tol: &ToleranceConfig) -> Result<ThresholdReport> {
    let upper = t.upper[0] / t.upper[1];
    let probes_at = [(-t.margin, false), (t.margin, true), (upper - t.margin, true), (upper + t.margin, false)];
    let mut probes = Vec::new();
    for (mu, expected) in probes_at {
        let (lambda2, hpp) = match rank2_exact(&rank2_mu_family(t.n, mu)?, tol) {
            Ok(r) => (Some(r.lambda2), r.hpp),
            Err(Error::NotNonnegative) => (None, false),
            Err(e) => return Err(e),
        };
        probes.push(ThresholdProbe { mu, lambda2, hpp, expected });
    }
    let pass = probes.iter().all(|p| p.hpp == p.expected);
    Ok(ThresholdReport { n: t.n, upper, probes, pass })
}

fn run_search(row: &SearchRow, opts: &ReproOptions) -> Result<SearchReport> {
    let p: MultiAffinePolynomial = catalog(&row.matroid).map(|m: Matroid| m.basis_polynomial())?;
    let trials = opts.trials.unwrap_or(row.trials);
    let search = SearchOptions::count(trials, opts.seed);
    let report = match row.method {
        Method::Rays => hpp_random_rays(&p, search, &opts.tol)?,
        Method::Elementary => hpp_random_elementary(&p, search, &opts.tol)?,
        Method::Shifted => return Err(Error::Precondition("shifted search is not a table method".into())),
    };
    let scale = trials as f64 / row.trials as f64;
    let mut pass = true;
    let mut expected = Vec::new();
    if let Some([lo, hi]) = row.rate {
        pass &= report.rate() >= lo && report.rate() <= hi;
        expected.push(format!("rate in [{lo}, {hi}]"));
    }
    if let Some([lo, hi]) = row.count {
        let (lo, hi) = ((lo as f64 * scale).floor() as u64, (hi as f64 * scale).ceil() as u64);
        pass &= report.counterexamples >= lo && report.counterexamples <= hi;
        expected.push(format!("count in [{lo}, {hi}]"));
    }
    Ok(SearchReport { matroid: row.matroid.clone(), expected: expected.join(", "), report, pass })
}

/// Run one fixture.
pub fn run_fixture(f: &Fixture, opts: &ReproOptions) -> Result<FixtureReport> {
    opts.tol.validate()?;
    let cases: Vec<CaseReport> = f.cases.iter().map(|c| run_case(c, opts)).collect::<Result<_>>()?;
    let thresholds: Vec<ThresholdReport> =
        f.thresholds.iter().map(|t| run_threshold(t, &opts.tol)).collect::<Result<_>>()?;
    let searches: Vec<SearchReport> = f.searches.iter().map(|s| run_search(s, opts)).collect::<Result<_>>()?;
    let pass = cases.iter().all(|c| c.pass) && thresholds.iter().all(|t| t.pass) && searches.iter().all(|s| s.pass);
    Ok(FixtureReport {
        name: f.name.clone(),
        origin: f.origin.clone(),
        quote: f.quote.clone(),
        cases,
        thresholds,
        searches,
        pass,
    })
}

/// Run the fixture called `name`, or every fixture for `"all"`.
pub fn reproduce(name: &str, opts: &ReproOptions) -> Result<Vec<FixtureReport>> {
    if name == "all" {
        manifest()?.fixtures.iter().map(|f| run_fixture(f, opts)).collect()
    } else {
        Ok(vec![run_fixture(&fixture(name)?, opts)?])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str) -> FixtureReport {
        reproduce(name, &ReproOptions::default()).unwrap().remove(0)
    }

    #[test]
    fn manifest_parses_and_names_are_unique() {
        let names = fixture_names().unwrap();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert!(fixture("nope").is_err());
    }

    #[test]
    fn f7_family_members_are_basis_polynomials() {
        let pairs = [([1.0, 0.0, 0.0], "F7m"), ([1.0, 1.0, 0.0], "F7mm"), ([1.0, 1.0, 1.0], "MK4pe")];
        for ([mu, nu, rho], name) in pairs {
            let p = f7_family(mu, nu, rho).unwrap();
            assert_eq!(p.max_abs_diff(&catalog(name).unwrap().basis_polynomial()).unwrap(), 0.0, "{name}");
        }
    }

    #[test]
    fn characteristic_vector_fixtures() {
        for name in ["ex11.1", "ex11.2", "ex11.3", "ex11.8"] {
            let r = run(name);
            assert!(r.pass, "{}", serde_json::to_string_pretty(&r).unwrap());
        }
    }

    #[test]
    fn perturbed_fixtures() {
        for name in ["ex11.4", "ex11.5", "ex11.6", "ex11.7", "ex11.9", "ex11.10", "ex13.1"] {
            let r = run(name);
            assert!(r.pass, "{}", serde_json::to_string_pretty(&r).unwrap());
        }
    }

    #[test]
    fn eps_override_reaches_every_case() {
        let opts = ReproOptions { eps: Some(0.0), ..ReproOptions::default() };
        let r = reproduce("ex11.4", &opts).unwrap().remove(0);
        assert!(r.cases.iter().all(|c| c.eps == 0.0));
        // at ε = 0 each F7-family case is M(K4) with a double root at −3
        let f7 = r.cases.iter().find(|c| c.label == "F7, a = 0").unwrap();
        assert_eq!(f7.roots.iter().filter(|z| (*z + 3.0).norm() < 1e-6).count(), 2);
    }
}
