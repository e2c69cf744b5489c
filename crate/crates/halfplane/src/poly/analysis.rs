//! Polarization, differential operators, coefficient transforms and phase checks.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hpp::roots::{univariate_roots, RootConfig};
use crate::poly::general::falling;
use crate::poly::{GeneralPolynomial, MultiAffinePolynomial};
use crate::subset;

/// Multiaffine polarization of a general polynomial.
///
/// Element `e` of the input becomes the block `offsets[e] .. offsets[e] + degrees[e]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polarization {
    pub poly: MultiAffinePolynomial,
    pub degrees: Vec<usize>,
    pub offsets: Vec<usize>,
}

impl Polarization {
    /// Repeat each `x_e` across its block.
    pub fn diagonal_point(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        if x.len() != self.degrees.len() {
            return Err(Error::DimensionMismatch { expected: self.degrees.len(), got: x.len() });
        }
        Ok(x.iter().zip(&self.degrees).flat_map(|(&v, &k)| std::iter::repeat_n(v, k)).collect())
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Unique multiaffine polynomial symmetric in each block that restricts to `q`
/// on the diagonal.
pub fn polarize(q: &GeneralPolynomial, degrees: &[usize]) -> Result<Polarization> {
    let n = q.n();
    if degrees.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: degrees.len() });
    }
    for (e, &d) in degrees.iter().enumerate() {
        let needed = q.degree_in(e)?;
        if d < needed {
            return Err(Error::DegreeTooSmall { element: e, given: d, needed });
        }
    }
    let mut offsets = Vec::with_capacity(n);
    let mut total = 0;
    for &d in degrees {
        offsets.push(total);
        total += d;
    }
    subset::check_ground(total)?;
    let mut out = MultiAffinePolynomial::zero(total)?;
    for (m, c) in q.terms() {
        let mut masks = vec![0u64];
        let mut norm = 1.0;
        for e in 0..n {
            let k = m[e] as usize;
            norm *= binomial(degrees[e], k);
            let block: Vec<u64> = subset::k_subsets(degrees[e], k).map(|s| s << offsets[e]).collect();
            masks = masks.iter().flat_map(|&a| block.iter().map(move |&b| a | b)).collect();
        }
        for s in masks {
            out.add_term(s, c / norm);
        }
    }
    Ok(Polarization { poly: out, degrees: degrees.to_vec(), offsets })
}

/// Closed circular region used by the coincidence witness.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Region {
    /// `|x - center| ≤ radius`
    Disc { center: Complex64, radius: f64 },
    /// `Re(conj(normal)·x) ≥ offset`, with `normal` nonzero
    HalfPlane { normal: Complex64, offset: f64 },
}

impl Region {
    pub fn closed_right_half_plane() -> Self {
        Region::HalfPlane { normal: Complex64::new(1.0, 0.0), offset: 0.0 }
    }

    /// Distance from `x` to the region (0 inside).
    pub fn distance(&self, x: Complex64) -> f64 {
        match *self {
            Region::Disc { center, radius } => ((x - center).norm() - radius).max(0.0),
            Region::HalfPlane { normal, offset } => {
                let u = normal.norm();
                ((offset - (normal.conj() * x).re) / u).max(0.0)
            }
        }
    }
}

/// Tolerance for deciding that a computed point lies in a region.
const REGION_TOL: f64 = 1e-7;

/// Given a symmetric multiaffine `p` and points in `region`, find `ξ` in the
/// region with `p(ξ,…,ξ) = p(point)`.
pub fn gws_witness(p: &MultiAffinePolynomial, point: &[Complex64], region: Region) -> Result<Complex64> {
    let n = p.n();
    if point.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: point.len() });
    }
    for (i, &z) in point.iter().enumerate() {
        if region.distance(z) > 1e-12 * (1.0 + z.norm()) {
            return Err(Error::PointOutsideRegion(i));
        }
    }
    // diagonal coefficients, checking that a_S depends on |S| only
    let mut per_size: Vec<Option<Complex64>> = vec![None; n + 1];
    let scale = 1.0 + p.terms().map(|(_, c)| c.norm()).fold(0.0, f64::max);
    let mut diag = vec![Complex64::new(0.0, 0.0); n + 1];
    for (s, c) in p.terms() {
        let k = subset::size(s);
        match per_size[k] {
            None => per_size[k] = Some(c),
            Some(first) if (first - c).norm() > 1e-12 * scale => return Err(Error::NotSymmetric),
            _ => {}
        }
    }
    for (k, a) in per_size.iter().enumerate() {
        if let Some(a) = a {
            // a missing term of some size means that size is entirely absent
            let count = subset::k_subsets(n, k).filter(|&s| p.coeff(s) != Complex64::new(0.0, 0.0)).count();
            if count as f64 != binomial(n, k) {
                return Err(Error::NotSymmetric);
            }
            diag[k] = a * binomial(n, k);
        }
    }
    let target = p.evaluate(point)?;
    diag[0] -= target;
    let lead = diag.iter().rposition(|c| c.norm() > 1e-14 * scale);
    match lead {
        None => return Ok(point.first().copied().unwrap_or_default()),
        Some(0) => return Err(Error::NoRootInRegion(f64::INFINITY)),
        Some(_) => {}
    }
    let roots = univariate_roots(&diag, &RootConfig::default())?;
    let best = roots
        .roots
        .iter()
        .copied()
        .min_by(|a, b| region.distance(*a).total_cmp(&region.distance(*b)))
        .expect("nonconstant polynomial has a root");
    let d = region.distance(best);
    if d <= REGION_TOL * (1.0 + best.norm()) {
        Ok(best)
    } else {
        Err(Error::NoRootInRegion(d))
    }
}

/// `Σ_i P_i(∂/∂x) Q_i(x)`.
pub fn apply_diff_operator(pairs: &[(GeneralPolynomial, GeneralPolynomial)]) -> Result<GeneralPolynomial> {
    let n = match pairs.first() {
        Some((p, _)) => p.n(),
        None => return GeneralPolynomial::zero(0),
    };
    let mut out = GeneralPolynomial::zero(n)?;
    for (p, q) in pairs {
        if p.n() != n || q.n() != n {
            return Err(Error::GroundSetMismatch(n, if p.n() != n { p.n() } else { q.n() }));
        }
        for (m, a) in p.terms() {
            for (k, b) in q.terms() {
                if m.iter().zip(k).any(|(x, y)| x > y) {
                    continue;
                }
                let factor: f64 = m.iter().zip(k).map(|(&x, &y)| falling(y, x)).product();
                let rest: Vec<u32> = k.iter().zip(m).map(|(y, x)| y - x).collect();
                out.add_term(rest, a * b * factor);
            }
        }
    }
    Ok(out)
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// `Σ_{k=r}^{s} [k!/(k−r)!]·[(M−k)!/(s−k)!]·P_k x_e^k` with `M = deg_e P`.
pub fn fettweis_transform(p: &GeneralPolynomial, e: usize, r: usize, s: usize) -> Result<GeneralPolynomial> {
    let slices = p.coefficient_slices(e)?;
    let m = slices.len() - 1;
    if !(r <= s && s <= m) {
        return Err(Error::IndexOutOfRange(format!("need r ≤ s ≤ {m}, got r = {r}, s = {s}")));
    }
    let weighted: Vec<GeneralPolynomial> = slices
        .iter()
        .enumerate()
        .map(|(k, pk)| {
            if k < r || k > s {
                pk.scale(Complex64::new(0.0, 0.0))
            } else {
                let w = factorial(k) / factorial(k - r) * factorial(m - k) / factorial(s - k);
                pk.scale(Complex64::new(w, 0.0))
            }
        })
        .collect();
    GeneralPolynomial::from_slices(&weighted, e)
}

/// Outcome of the common-phase check.
#[derive(Clone, Debug, PartialEq)]
pub enum PhaseCheck {
    /// All nonzero coefficients share the phase `theta ∈ (−π, π]`.
    Same { theta: f64 },
    /// Two coefficients whose phases differ by more than the tolerance.
    Mixed { first: Vec<u32>, second: Vec<u32> },
}

fn wrap(a: f64) -> f64 {
    let mut t = a % (2.0 * PI);
    if t <= -PI {
        t += 2.0 * PI;
    } else if t > PI {
        t -= 2.0 * PI;
    }
    t
}

/// Check that every nonzero coefficient has the same argument within `tol`.
///
/// The reference term is the first one in colexicographic order of exponents,
/// which for multiaffine polynomials is ascending subset-mask order.
pub fn same_phase(p: &GeneralPolynomial, tol: f64) -> PhaseCheck {
    let mut terms: Vec<(&[u32], Complex64)> = p.terms().collect();
    terms.sort_by(|a, b| a.0.iter().rev().cmp(b.0.iter().rev()));
    let Some(&(m0, c0)) = terms.first() else {
        return PhaseCheck::Same { theta: 0.0 };
    };
    let theta = wrap(c0.arg());
    for &(m, c) in &terms[1..] {
        if wrap(c.arg() - theta).abs() > tol {
            return PhaseCheck::Mixed { first: m0.to_vec(), second: m.to_vec() };
        }
    }
    PhaseCheck::Same { theta }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn poly(n: usize, t: &[(&[u32], f64)]) -> GeneralPolynomial {
        GeneralPolynomial::from_terms(n, t.iter().map(|(m, v)| (m.to_vec(), c(*v)))).unwrap()
    }

    #[test]
    fn polarize_examples() {
        let sq = poly(1, &[(&[2], 1.0)]);
        let pol = polarize(&sq, &[2]).unwrap();
        assert_eq!(pol.poly, MultiAffinePolynomial::from_subsets(2, &[(&[0, 1], c(1.0))]).unwrap());

        let q = poly(1, &[(&[2], 1.0), (&[1], 2.0)]);
        let want = MultiAffinePolynomial::from_subsets(2, &[(&[0, 1], c(1.0)), (&[0], c(1.0)), (&[1], c(1.0))]).unwrap();
        assert_eq!(polarize(&q, &[2]).unwrap().poly, want);
        assert!(matches!(polarize(&q, &[1]), Err(Error::DegreeTooSmall { .. })));
    }

    #[test]
    fn witness_examples() {
        let pol = polarize(&poly(1, &[(&[2], 1.0)]), &[2]).unwrap().poly;
        let z = Complex64::new(0.3, -0.2);
        let xi = gws_witness(&pol, &[z, z], Region::Disc { center: c(0.0), radius: 1.0 }).unwrap();
        assert!((xi - z).norm() < 1e-9);

        let disc = Region::Disc { center: c(1.0), radius: 1.5 };
        let xi = gws_witness(&pol, &[Complex64::new(1.0, 1.0), Complex64::new(1.0, -1.0)], disc).unwrap();
        assert!((xi - c(2f64.sqrt())).norm() < 1e-9);

        let far = Region::Disc { center: c(10.0), radius: 1.0 };
        assert_eq!(gws_witness(&pol, &[c(1.0), c(1.0)], far), Err(Error::PointOutsideRegion(0)));

        let skew = MultiAffinePolynomial::from_subsets(2, &[(&[0], c(1.0))]).unwrap();
        assert_eq!(gws_witness(&skew, &[c(1.0), c(1.0)], disc), Err(Error::NotSymmetric));
    }

    #[test]
    fn diff_operator_examples() {
        let x0 = poly(2, &[(&[1, 0], 1.0)]);
        let x0x1 = poly(2, &[(&[1, 1], 1.0)]);
        assert_eq!(apply_diff_operator(&[(x0, x0x1.clone())]).unwrap(), poly(2, &[(&[0, 1], 1.0)]));
        let sq = poly(1, &[(&[2], 1.0)]);
        assert_eq!(apply_diff_operator(&[(sq.clone(), sq)]).unwrap(), poly(1, &[(&[0], 2.0)]));
        let one = poly(2, &[(&[0, 0], 1.0)]);
        assert_eq!(apply_diff_operator(&[(one, x0x1.clone())]).unwrap(), x0x1);
    }

    #[test]
    fn fettweis_examples() {
        // affine in e: identity for r = 0, s = 1
        let p = poly(2, &[(&[1, 1], 2.0), (&[0, 1], 3.0)]);
        assert_eq!(fettweis_transform(&p, 0, 0, 1).unwrap(), p);
        // P0 + P1 x + P2 x^2 with r = 0, s = 1 gives 2 P0 + P1 x
        let q = poly(2, &[(&[0, 1], 1.0), (&[1, 0], 5.0), (&[2, 1], 7.0)]);
        let want = poly(2, &[(&[0, 1], 2.0), (&[1, 0], 5.0)]);
        assert_eq!(fettweis_transform(&q, 0, 0, 1).unwrap(), want);
        // r = s = M keeps M! P_M x^M
        assert_eq!(fettweis_transform(&q, 0, 2, 2).unwrap(), poly(2, &[(&[2, 1], 14.0)]));
        assert!(fettweis_transform(&q, 0, 2, 3).is_err());
    }

    #[test]
    fn phase_examples() {
        let p = poly(3, &[(&[1, 1, 0], 1.0), (&[1, 0, 1], 2.0)]);
        assert_eq!(same_phase(&p, 1e-9), PhaseCheck::Same { theta: 0.0 });
        let i = p.scale(Complex64::new(0.0, 1.0));
        match same_phase(&i, 1e-9) {
            PhaseCheck::Same { theta } => assert!((theta - PI / 2.0).abs() < 1e-15),
            other => panic!("{other:?}"),
        }
        let mixed = poly(3, &[(&[1, 1, 0], 1.0), (&[1, 0, 1], -1.0)]);
        assert_eq!(
            same_phase(&mixed, 1e-9),
            PhaseCheck::Mixed { first: vec![1, 1, 0], second: vec![1, 0, 1] }
        );
        // -1 and a value just below the branch cut agree
        let cut = GeneralPolynomial::from_terms(
            1,
            [(vec![0], c(-1.0)), (vec![1], Complex64::new(-1.0, -1e-12))],
        )
        .unwrap();
        assert!(matches!(same_phase(&cut, 1e-9), PhaseCheck::Same { .. }));
    }
}
