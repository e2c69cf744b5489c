//! Ray, elementary and shifted randomized tests.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::roots::{univariate_roots, RootConfig, RootSet};
use super::search::{run, SearchOptions, Trial};
use super::{Counterexample, HppReport, Method, ToleranceConfig};
use crate::error::{Error, Result};
use crate::poly::{GeneralPolynomial, MultiAffinePolynomial};
use crate::subset;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn mul_linear(poly: &mut Vec<Complex64>, slope: f64, offset: f64) {
    poly.push(ZERO);
    for k in (0..poly.len()).rev() {
        let lower = if k > 0 { poly[k - 1] } else { ZERO };
        poly[k] = poly[k] * offset + lower * slope;
    }
}

/// Coefficients (ascending) of `ζ ↦ P(ζa + b)`.
pub fn ray_polynomial(p: &MultiAffinePolynomial, a: &[f64], b: &[f64]) -> Result<Vec<Complex64>> {
    check_vec(a, p.n())?;
    check_vec(b, p.n())?;
    let deg = p.degree().unwrap_or(0);
    let mut out = vec![ZERO; deg + 1];
    let mut factor = Vec::with_capacity(deg + 1);
    for (s, c) in p.terms() {
        factor.clear();
        factor.push(c);
        for e in subset::elems(s) {
            mul_linear(&mut factor, a[e], b[e]);
        }
        for (k, v) in factor.iter().enumerate() {
            out[k] += v;
        }
    }
    Ok(out)
}

/// Coefficients (ascending) of `ζ ↦ P(ζa + b)` for a general polynomial.
pub fn ray_polynomial_general(p: &GeneralPolynomial, a: &[f64], b: &[f64]) -> Result<Vec<Complex64>> {
    check_vec(a, p.n())?;
    check_vec(b, p.n())?;
    let deg = p.degree().unwrap_or(0);
    let mut out = vec![ZERO; deg + 1];
    for (m, c) in p.terms() {
        let mut factor = vec![c];
        for (e, &k) in m.iter().enumerate() {
            for _ in 0..k {
                mul_linear(&mut factor, a[e], b[e]);
            }
        }
        for (k, v) in factor.iter().enumerate() {
            out[k] += v;
        }
    }
    Ok(out)
}

fn check_vec(v: &[f64], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: v.len() });
    }
    if let Some((index, &value)) = v.iter().enumerate().find(|(_, x)| !(**x >= 0.0 && x.is_finite())) {
        return Err(Error::NegativeWeight { index, value });
    }
    Ok(())
}

/// Worst root off the nonpositive real axis, if any.
pub fn classify_roots(roots: &[Complex64], cfg: &ToleranceConfig) -> Option<Complex64> {
    let badness = |z: &Complex64| {
        let im = z.im.abs() - cfg.root_im_tol * (1.0 + z.norm());
        let re = z.re - cfg.root_re_tol;
        im.max(re)
    };
    roots
        .iter()
        .filter(|z| badness(z) > 0.0)
        .max_by(|x, y| badness(x).total_cmp(&badness(y)))
        .copied()
}

/// Ray polynomial, its roots, and a certificate when some root is not in `(−∞, 0]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RayResult {
    pub coeffs: Vec<Complex64>,
    pub roots: RootSet,
    pub counterexample: Option<Counterexample>,
}

/// Test one ray `ζa + b` against a homogeneous polynomial.
pub fn ray_test_homogeneous(
    p: &MultiAffinePolynomial,
    a: &[f64],
    b: &[f64],
    cfg: &ToleranceConfig,
) -> Result<RayResult> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let coeffs = ray_polynomial(p, a, b)?;
    if let Some(e) = a.iter().zip(b).position(|(x, y)| x + y <= 0.0) {
        return Err(Error::Precondition(format!("a + b must be positive, fails at element {e}")));
    }
    if coeffs.iter().all(|c| *c == ZERO) {
        return Err(Error::Degenerate("ray polynomial is identically zero".into()));
    }
    let roots = univariate_roots(&coeffs, &RootConfig::default())?;
    let counterexample =
        classify_roots(&roots.roots, cfg).map(|root| Counterexample::Ray { a: a.to_vec(), b: b.to_vec(), root });
    Ok(RayResult { coeffs, roots, counterexample })
}

fn uniform_open(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let u: f64 = rng.gen();
        if u > 0.0 {
            return u;
        }
    }
}

/// Random rays with `a, b` uniform on `[0,1]^n`.
pub fn hpp_random_rays(p: &MultiAffinePolynomial, opts: SearchOptions, cfg: &ToleranceConfig) -> Result<HppReport> {
    cfg.validate()?;
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = p.n();
    Ok(run(Method::Rays, opts, |rng| {
        let a: Vec<f64> = (0..n).map(|_| uniform_open(rng)).collect();
        let b: Vec<f64> = (0..n).map(|_| uniform_open(rng)).collect();
        match ray_test_homogeneous(p, &a, &b, cfg) {
            Ok(RayResult { counterexample: Some(c), .. }) => Trial::Fail(c),
            Ok(_) => Trial::Pass,
            Err(_) => Trial::Inconclusive,
        }
    }))
}

/// Largest element that is neither a loop (`P/e ≡ 0`) nor a coloop (`P\e ≡ 0`).
pub fn select_pivot(p: &MultiAffinePolynomial) -> Result<usize> {
    (0..p.n())
        .rev()
        .find(|&e| {
            let mut with = false;
            let mut without = false;
            for (s, _) in p.terms() {
                if subset::contains(s, e) {
                    with = true;
                } else {
                    without = true;
                }
            }
            with && without
        })
        .ok_or_else(|| Error::Degenerate("every element is a loop or a coloop".into()))
}

/// Sample `x_f ∈ (0,1) + (−1,1)i` for `f ≠ e` and solve `P = 0` for `x_e`.
pub fn hpp_random_elementary(
    p: &MultiAffinePolynomial,
    opts: SearchOptions,
    cfg: &ToleranceConfig,
) -> Result<HppReport> {
    cfg.validate()?;
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let pivot = select_pivot(p)?;
    let del: Vec<(u64, Complex64)> = p.without(pivot)?.terms().collect();
    let con: Vec<(u64, Complex64)> = p.derivative(pivot)?.terms().collect();
    let n = p.n();
    let eval = |terms: &[(u64, Complex64)], x: &[Complex64]| {
        terms.iter().fold(ZERO, |acc, &(s, c)| acc + subset::elems(s).fold(c, |t, e| t * x[e]))
    };
    Ok(run(Method::Elementary, opts, |rng| {
        let mut x: Vec<Complex64> = (0..n)
            .map(|_| {
                let re = uniform_open(rng);
                let im = 2.0 * rng.gen::<f64>() - 1.0;
                Complex64::new(re, im)
            })
            .collect();
        x[pivot] = ZERO;
        let num = eval(&del, &x);
        let den = eval(&con, &x);
        if den == ZERO {
            return Trial::Inconclusive;
        }
        let xe = -num / den;
        if xe.re > cfg.eval_tol {
            x[pivot] = xe;
            let residual = p.eval_unchecked(&x).norm();
            Trial::Fail(Counterexample::Elementary { x, pivot, residual })
        } else {
            Trial::Pass
        }
    }))
}

/// Coefficients (ascending) of `ζ ↦ ζ^k P(ζx + y/ζ)` with `k = deg P`.
pub fn shifted_polynomial(p: &GeneralPolynomial, x: &[f64], y: &[f64]) -> Result<Vec<Complex64>> {
    check_vec(x, p.n())?;
    check_vec(y, p.n())?;
    let k = p.degree().unwrap_or(0);
    let mut out = vec![ZERO; 2 * k + 1];
    for (m, c) in p.terms() {
        // ζ^{k-|m|} ∏ (ζ² x_e + y_e)^{m_e}
        let mut factor = vec![c];
        for (e, &power) in m.iter().enumerate() {
            for _ in 0..power {
                let mut next = vec![ZERO; factor.len() + 2];
                for (i, v) in factor.iter().enumerate() {
                    next[i] += v * y[e];
                    next[i + 2] += v * x[e];
                }
                factor = next;
            }
        }
        let shift = k - m.iter().map(|&v| v as usize).sum::<usize>();
        for (i, v) in factor.iter().enumerate() {
            out[i + shift] += v;
        }
    }
    Ok(out)
}

/// Random shifted test for general polynomials: all roots of the shifted
/// polynomial must lie in the closed left half-plane.
pub fn shifted_hpp_random(p: &GeneralPolynomial, opts: SearchOptions, cfg: &ToleranceConfig) -> Result<HppReport> {
    cfg.validate()?;
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = p.n();
    Ok(run(Method::Shifted, opts, |rng| {
        let x: Vec<f64> = (0..n).map(|_| uniform_open(rng)).collect();
        let y: Vec<f64> = (0..n).map(|_| uniform_open(rng)).collect();
        let Ok(coeffs) = shifted_polynomial(p, &x, &y) else {
            return Trial::Inconclusive;
        };
        if coeffs.iter().all(|c| *c == ZERO) {
            return Trial::Inconclusive;
        }
        match univariate_roots(&coeffs, &RootConfig::default()) {
            Ok(r) => match r.roots.iter().filter(|z| z.re > cfg.root_re_tol).max_by(|a, b| a.re.total_cmp(&b.re)) {
                Some(&root) => Trial::Fail(Counterexample::Shifted { x, y, root }),
                None => Trial::Pass,
            },
            Err(_) => Trial::Inconclusive,
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn chi(n: usize, s: &[usize]) -> Vec<f64> {
        let mut v = vec![0.0; n];
        for &e in s {
            v[e] = 1.0;
        }
        v
    }

    #[test]
    fn ray_polynomial_of_e23() {
        // E_{2,3}(ζ,ζ,1) = ζ² + 2ζ
        let p = MultiAffinePolynomial::elementary_symmetric(2, 3).unwrap();
        let r = ray_polynomial(&p, &chi(3, &[0, 1]), &chi(3, &[2])).unwrap();
        assert_eq!(r, vec![c(0.0), c(2.0), c(1.0)]);
        let g = ray_polynomial_general(&p.to_general(), &chi(3, &[0, 1]), &chi(3, &[2])).unwrap();
        assert_eq!(g, r);
    }

    #[test]
    fn uniform_rays_pass() {
        let p = MultiAffinePolynomial::elementary_symmetric(2, 4).unwrap();
        let cfg = ToleranceConfig::default();
        let r = ray_test_homogeneous(&p, &[0.3, 0.9, 0.1, 0.5], &[0.7, 0.2, 0.8, 0.4], &cfg).unwrap();
        assert!(r.counterexample.is_none());
        let report = hpp_random_rays(&p, SearchOptions::first(2000, 5), &cfg).unwrap();
        assert_eq!(report.counterexamples, 0);
        assert_eq!(report.trials, 2000);
    }

    #[test]
    fn ray_preconditions() {
        let cfg = ToleranceConfig::default();
        let nonhom = MultiAffinePolynomial::from_subsets(2, &[(&[0], c(1.0)), (&[0, 1], c(1.0))]).unwrap();
        assert_eq!(ray_test_homogeneous(&nonhom, &[1.0, 1.0], &[1.0, 1.0], &cfg).unwrap_err(), Error::NotHomogeneous);
        let p = MultiAffinePolynomial::elementary_symmetric(1, 2).unwrap();
        assert!(ray_test_homogeneous(&p, &[1.0, 0.0], &[0.0, 0.0], &cfg).is_err());
        assert!(matches!(
            ray_test_homogeneous(&p, &[-1.0, 1.0], &[1.0, 1.0], &cfg),
            Err(Error::NegativeWeight { .. })
        ));
    }

    #[test]
    fn single_basis_never_fails_elementary() {
        let p = MultiAffinePolynomial::from_subsets(2, &[(&[0, 1], c(1.0))]).unwrap();
        // both elements are coloops: no pivot exists
        assert!(hpp_random_elementary(&p, SearchOptions::count(10, 1), &ToleranceConfig::default()).is_err());
        let q = MultiAffinePolynomial::from_subsets(3, &[(&[0, 1], c(1.0))]).unwrap();
        // element 2 is a loop, 0 and 1 coloops
        assert!(select_pivot(&q).is_err());
    }

    #[test]
    fn shifted_examples() {
        let cfg = ToleranceConfig::default();
        let one_plus_x = GeneralPolynomial::from_terms(1, [(vec![0], c(1.0)), (vec![1], c(1.0))]).unwrap();
        let r = shifted_hpp_random(&one_plus_x, SearchOptions::count(500, 3), &cfg).unwrap();
        assert_eq!(r.counterexamples, 0);

        let x_minus_1 = GeneralPolynomial::from_terms(1, [(vec![0], c(-1.0)), (vec![1], c(1.0))]).unwrap();
        let r = shifted_hpp_random(&x_minus_1, SearchOptions::first(500, 3), &cfg).unwrap();
        assert!(r.certificate.is_some());

        let three = GeneralPolynomial::constant(2, c(3.0)).unwrap();
        let r = shifted_hpp_random(&three, SearchOptions::count(50, 3), &cfg).unwrap();
        assert_eq!(r.counterexamples, 0);
        assert_eq!(r.inconclusive, 0);

        // ζ(ζx + y/ζ) − ζ = xζ² − ζ + y
        let s = shifted_polynomial(&x_minus_1, &[2.0], &[3.0]).unwrap();
        assert_eq!(s, vec![c(3.0), c(-1.0), c(2.0)]);
    }

    #[test]
    fn deterministic_given_seed() {
        let p = MultiAffinePolynomial::elementary_symmetric(2, 4).unwrap();
        let cfg = ToleranceConfig::default();
        let a = hpp_random_elementary(&p, SearchOptions::count(3000, 9), &cfg).unwrap();
        let b = hpp_random_elementary(&p, SearchOptions::count(3000, 9), &cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.counterexamples, 0);
    }
}
