//! Constructions that preserve the half-plane property.

use crate::error::{Error, Result};
use crate::poly::MultiAffinePolynomial;
use crate::subset;

/// Result of gluing `Q` onto `P` along a shared element.
///
/// `q_map[j]` is the index of `Q`'s element `j` in the glued ground set.
#[derive(Clone, Debug, PartialEq)]
pub struct Glued<T> {
    pub value: T,
    pub q_map: Vec<usize>,
}

pub(crate) fn check_weights(lambda: &[f64], n: usize) -> Result<()> {
    if lambda.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: lambda.len() });
    }
    for (index, &value) in lambda.iter().enumerate() {
        if !(value >= 0.0 && value.is_finite()) {
            return Err(Error::NegativeWeight { index, value });
        }
    }
    Ok(())
}

/// Embed both polynomials in the glued ground set and split each into
/// the parts without and with the shared element (the latter with it removed).
struct Split {
    n: usize,
    e: usize,
    p0: MultiAffinePolynomial,
    p1: MultiAffinePolynomial,
    q0: MultiAffinePolynomial,
    q1: MultiAffinePolynomial,
    q_map: Vec<usize>,
}

fn split(p: &MultiAffinePolynomial, e_p: usize, q: &MultiAffinePolynomial, e_q: usize) -> Result<Split> {
    let q_map = subset::gluing_map(p.n(), e_p, q.n(), e_q)?;
    let n = p.n() + q.n() - 1;
    let pe = p.extend_ground(n - p.n())?;
    let qe = q.relabel(n, &q_map)?;
    Ok(Split {
        n,
        e: e_p,
        p0: pe.without(e_p)?,
        p1: pe.derivative(e_p)?,
        q0: qe.without(e_p)?,
        q1: qe.derivative(e_p)?,
        q_map,
    })
}

/// Parallel connection `P\e·Q/e + P/e·Q\e + x_e·P/e·Q/e`.
pub fn parallel_connection(
    p: &MultiAffinePolynomial,
    e_p: usize,
    q: &MultiAffinePolynomial,
    e_q: usize,
) -> Result<Glued<MultiAffinePolynomial>> {
    let s = split(p, e_p, q, e_q)?;
    let mut out = s.p0.mul(&s.q1)?.add(&s.p1.mul(&s.q0)?)?;
    out = out.add(&s.p1.mul(&s.q1)?.times_variable(s.e)?)?;
    debug_assert_eq!(out.n(), s.n);
    Ok(Glued { value: out, q_map: s.q_map })
}

/// Series connection `P\e·Q\e + x_e·(P\e·Q/e + P/e·Q\e)`.
pub fn series_connection(
    p: &MultiAffinePolynomial,
    e_p: usize,
    q: &MultiAffinePolynomial,
    e_q: usize,
) -> Result<Glued<MultiAffinePolynomial>> {
    let s = split(p, e_p, q, e_q)?;
    let cross = s.p0.mul(&s.q1)?.add(&s.p1.mul(&s.q0)?)?;
    let out = s.p0.mul(&s.q0)?.add(&cross.times_variable(s.e)?)?;
    Ok(Glued { value: out, q_map: s.q_map })
}

/// 2-sum: the parallel connection with the shared element deleted.
///
/// The shared element disappears, so indices above `e_p` shift down by one;
/// `q_map` refers to the ground set after that shift, with the shared element
/// mapped to `usize::MAX`.
pub fn two_sum(
    p: &MultiAffinePolynomial,
    e_p: usize,
    q: &MultiAffinePolynomial,
    e_q: usize,
) -> Result<Glued<MultiAffinePolynomial>> {
    let g = parallel_connection(p, e_p, q, e_q)?;
    let value = g.value.delete(e_p)?;
    let q_map = g
        .q_map
        .iter()
        .map(|&i| match i.cmp(&e_p) {
            std::cmp::Ordering::Less => i,
            std::cmp::Ordering::Equal => usize::MAX,
            std::cmp::Ordering::Greater => i - 1,
        })
        .collect();
    Ok(Glued { value, q_map })
}

/// Weighted principal truncation `Σ λ_e ∂P/∂x_e`, on the same ground set.
pub fn principal_truncation(p: &MultiAffinePolynomial, lambda: &[f64]) -> Result<MultiAffinePolynomial> {
    check_weights(lambda, p.n())?;
    let mut out = MultiAffinePolynomial::zero_unchecked(p.n());
    for (s, c) in p.terms() {
        for e in subset::elems(s) {
            out.add_term(s & !(1 << e), c * lambda[e]);
        }
    }
    Ok(out)
}

/// Weighted principal extension `P + x_a·tr_λ P`, the new element `a` at index `n`.
pub fn principal_extension(p: &MultiAffinePolynomial, lambda: &[f64]) -> Result<MultiAffinePolynomial> {
    let n = p.n();
    let tr = principal_truncation(p, lambda)?.extend_ground(1)?;
    p.extend_ground(1)?.add(&tr.times_variable(n)?)
}

/// Weighted principal cotruncation `Σ λ_e x_e P\e`, on the same ground set.
pub fn principal_cotruncation(p: &MultiAffinePolynomial, lambda: &[f64]) -> Result<MultiAffinePolynomial> {
    check_weights(lambda, p.n())?;
    let mut out = MultiAffinePolynomial::zero_unchecked(p.n());
    for (s, c) in p.terms() {
        for (e, &l) in lambda.iter().enumerate() {
            if !subset::contains(s, e) {
                out.add_term(s | 1 << e, c * l);
            }
        }
    }
    Ok(out)
}

/// Weighted principal coextension `cotr_λ P + x_a·P`, the new element `a` at index `n`.
pub fn principal_coextension(p: &MultiAffinePolynomial, lambda: &[f64]) -> Result<MultiAffinePolynomial> {
    let n = p.n();
    let cotr = principal_cotruncation(p, lambda)?.extend_ground(1)?;
    cotr.add(&p.extend_ground(1)?.times_variable(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn ma(n: usize, t: &[&[usize]]) -> MultiAffinePolynomial {
        let terms: Vec<(&[usize], Complex64)> = t.iter().map(|s| (*s, c(1.0))).collect();
        MultiAffinePolynomial::from_subsets(n, &terms).unwrap()
    }

    #[test]
    fn parallel_examples() {
        let xe = ma(1, &[&[0]]);
        assert_eq!(parallel_connection(&xe, 0, &xe, 0).unwrap().value, xe);

        // (x_e + x_1) ∥ (x_e + x_2) with e = 0
        let p = ma(2, &[&[0], &[1]]);
        let g = parallel_connection(&p, 0, &p, 0).unwrap();
        assert_eq!(g.q_map, vec![0, 2]);
        assert_eq!(g.value, ma(3, &[&[0], &[1], &[2]]));

        let h = parallel_connection(&p, 0, &xe, 0).unwrap().value;
        assert_eq!(h, ma(2, &[&[0], &[1]]));
    }

    #[test]
    fn series_examples() {
        let p = ma(2, &[&[0], &[1]]);
        let g = series_connection(&p, 0, &p, 0).unwrap().value;
        assert_eq!(g, MultiAffinePolynomial::elementary_symmetric(2, 3).unwrap());
        let xe = ma(1, &[&[0]]);
        assert!(series_connection(&xe, 0, &xe, 0).unwrap().value.is_zero());
    }

    #[test]
    fn two_sum_examples() {
        let p = ma(2, &[&[0], &[1]]);
        let g = two_sum(&p, 0, &p, 0).unwrap();
        assert_eq!(g.value, ma(2, &[&[0], &[1]]));
        assert_eq!(g.q_map, vec![usize::MAX, 1]);

        let u23 = MultiAffinePolynomial::elementary_symmetric(2, 3).unwrap();
        let t = two_sum(&u23, 2, &u23, 0).unwrap().value;
        // two triangles glued along an edge, minus that edge: the 4-cycle
        assert_eq!(t, MultiAffinePolynomial::elementary_symmetric(3, 4).unwrap());
    }

    #[test]
    fn truncation_examples() {
        let e23 = MultiAffinePolynomial::elementary_symmetric(2, 3).unwrap();
        let e13 = MultiAffinePolynomial::elementary_symmetric(1, 3).unwrap();
        assert_eq!(principal_truncation(&e23, &[0.5; 3]).unwrap(), e13);
        assert!(principal_truncation(&e23, &[0.0; 3]).unwrap().is_zero());
        let x01 = ma(2, &[&[0, 1]]);
        assert_eq!(principal_truncation(&x01, &[1.0, 0.0]).unwrap(), ma(2, &[&[1]]));
        assert!(matches!(
            principal_truncation(&e23, &[0.5, -1.0, 0.5]),
            Err(Error::NegativeWeight { index: 1, .. })
        ));
    }

    #[test]
    fn extension_examples() {
        let e23 = MultiAffinePolynomial::elementary_symmetric(2, 3).unwrap();
        let e24 = MultiAffinePolynomial::elementary_symmetric(2, 4).unwrap();
        assert_eq!(principal_extension(&e23, &[0.5; 3]).unwrap(), e24);
        assert_eq!(principal_extension(&e23, &[0.0; 3]).unwrap(), e23.extend_ground(1).unwrap());
        let x0 = ma(1, &[&[0]]);
        assert_eq!(principal_extension(&x0, &[1.0]).unwrap(), ma(2, &[&[0], &[1]]));
    }

    #[test]
    fn cotruncation_examples() {
        let e13 = MultiAffinePolynomial::elementary_symmetric(1, 3).unwrap();
        let e23 = MultiAffinePolynomial::elementary_symmetric(2, 3).unwrap();
        assert_eq!(principal_cotruncation(&e13, &[0.5; 3]).unwrap(), e23);
        assert_eq!(
            principal_cotruncation(&e13, &[0.5; 3]).unwrap().dual(),
            principal_truncation(&e13.dual(), &[0.5; 3]).unwrap()
        );
        assert!(principal_cotruncation(&e13, &[0.0; 3]).unwrap().is_zero());
        let co = principal_coextension(&e13, &[0.0; 3]).unwrap();
        assert_eq!(co, e13.extend_ground(1).unwrap().times_variable(3).unwrap());
    }
}
