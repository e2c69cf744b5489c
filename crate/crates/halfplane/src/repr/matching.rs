//! Weighted matchings: transversal weight sums and graph matching polynomials.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{transversal_matroid, Graph, Presentation};
use crate::poly::MultiAffinePolynomial;
use crate::subset;

/// Per-basis weighted matching sums `c(S; λ)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransversalWeights {
    /// All values equal and nonzero within `1e-9` relative.
    pub uniform: bool,
    /// `(basis, c(S; λ))` in basis order.
    pub values: Vec<(Vec<usize>, f64)>,
    /// The number of sets carrying a nonzero weight differs from the rank.
    pub rank_mismatch: bool,
}

/// Sum over injections of the elements of `s` into the sets, of the product
/// of edge weights; a dynamic program over the subsets of used sets.
fn matching_sum(lambda: &[Vec<f64>], s: u64) -> f64 {
    let k = lambda.len();
    let mut dp: HashMap<u64, f64> = HashMap::from([(0u64, 1.0)]);
    for e in subset::elems(s) {
        let mut next: HashMap<u64, f64> = HashMap::new();
        for (&used, &w) in &dp {
            for (j, row) in lambda.iter().enumerate().take(k) {
                if used & 1 << j == 0 && row[e] != 0.0 {
                    *next.entry(used | 1 << j).or_insert(0.0) += w * row[e];
                }
            }
        }
        dp = next;
    }
    dp.values().sum()
}

/// `c(S; λ)` for every basis of the transversal matroid of `pres`.
///
/// `weights[j]` lists the weights of the edges from set `j` to its elements
/// in ascending element order.
pub fn transversal_weight_verify(pres: &Presentation, weights: &[Vec<f64>]) -> Result<TransversalWeights> {
    let sets = pres.sets();
    if weights.len() != sets.len() {
        return Err(Error::DimensionMismatch { expected: sets.len(), got: weights.len() });
    }
    if sets.len() > 63 {
        return Err(Error::Precondition("at most 63 sets are supported".into()));
    }
    let n = pres.n();
    let mut lambda = vec![vec![0.0; n]; sets.len()];
    let mut index = 0;
    for (j, (&a, w)) in sets.iter().zip(weights).enumerate() {
        if w.len() != a.count_ones() as usize {
            return Err(Error::DimensionMismatch { expected: a.count_ones() as usize, got: w.len() });
        }
        for (e, &v) in subset::elems(a).zip(w) {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::NegativeWeight { index, value: v });
            }
            lambda[j][e] = v;
            index += 1;
        }
    }
    let m = transversal_matroid(pres);
    let values: Vec<(Vec<usize>, f64)> = m.bases().map(|b| (subset::to_vec(b), matching_sum(&lambda, b))).collect();
    let first = values.first().map_or(0.0, |v| v.1);
    let uniform = first != 0.0 && values.iter().all(|(_, v)| (v - first).abs() <= 1e-9 * first.abs());
    let weighted_sets = lambda.iter().filter(|row| row.iter().any(|&v| v != 0.0)).count();
    Ok(TransversalWeights { uniform, values, rank_mismatch: weighted_sets != m.rank() })
}

/// Matching polynomial `Σ_matchings Π λ_e x_i x_j` in vertex variables, by
/// the recursion `M_G = M_{G∖e} + λ_e x_i x_j M_{G−i−j}` memoized on edge sets.
///
/// The complementary polynomial is its `dual()` on the vertex set.
pub fn matching_polynomial(g: &Graph, lambda: &[f64]) -> Result<MultiAffinePolynomial> {
    let edges = g.edges();
    if lambda.len() != edges.len() {
        return Err(Error::DimensionMismatch { expected: edges.len(), got: lambda.len() });
    }
    if let Some((index, &value)) = lambda.iter().enumerate().find(|(_, v)| !(**v >= 0.0 && v.is_finite())) {
        return Err(Error::NegativeWeight { index, value });
    }
    if g.vertices() > 20 {
        return Err(Error::Precondition("matching polynomials are limited to 20 vertices".into()));
    }
    if let Some(e) = (0..edges.len()).find(|&e| g.is_loop(e)) {
        return Err(Error::Precondition(format!("edge {e} is a loop")));
    }
    let n = g.vertices();
    let incident: Vec<u64> = (0..n)
        .map(|v| edges.iter().enumerate().filter(|(_, &(a, b))| a == v || b == v).fold(0u64, |m, (e, _)| m | 1 << e))
        .collect();

    fn rec(
        mask: u64,
        edges: &[(usize, usize)],
        lambda: &[f64],
        incident: &[u64],
        n: usize,
        memo: &mut HashMap<u64, MultiAffinePolynomial>,
    ) -> Result<MultiAffinePolynomial> {
        if let Some(p) = memo.get(&mask) {
            return Ok(p.clone());
        }
        let out = if mask == 0 {
            MultiAffinePolynomial::constant(n, Complex64::new(1.0, 0.0))?
        } else {
            let e = 63 - mask.leading_zeros() as usize;
            let (i, j) = edges[e];
            let without = rec(mask & !(1 << e), edges, lambda, incident, n, memo)?;
            let rest = rec(mask & !incident[i] & !incident[j], edges, lambda, incident, n, memo)?;
            let with: Vec<(u64, Complex64)> =
                rest.terms().map(|(s, c)| (s | 1 << i | 1 << j, c * lambda[e])).collect();
            without.add(&MultiAffinePolynomial::from_terms(n, with)?)?
        };
        memo.insert(mask, out.clone());
        Ok(out)
    }

    let mut memo = HashMap::new();
    rec(subset::full(edges.len()), edges, lambda, &incident, n, &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn matching_polynomial_examples() {
        let k2 = Graph::new(2, vec![(0, 1)]).unwrap();
        let m = matching_polynomial(&k2, &[1.0]).unwrap();
        assert_eq!(m.dual(), MultiAffinePolynomial::from_support(2, [0b00, 0b11]).unwrap());
        let k3 = Graph::complete(3).unwrap();
        let want = MultiAffinePolynomial::from_support(3, [0b000, 0b011, 0b101, 0b110]).unwrap();
        assert_eq!(matching_polynomial(&k3, &[1.0; 3]).unwrap(), want);
        let empty = Graph::new(3, vec![]).unwrap();
        assert_eq!(matching_polynomial(&empty, &[]).unwrap(), MultiAffinePolynomial::constant(3, c(1.0)).unwrap());
        let looped = Graph::new(1, vec![(0, 0)]).unwrap();
        assert!(matching_polynomial(&looped, &[1.0]).is_err());
    }

    #[test]
    fn weighted_sums_on_whirl() {
        let pres = Presentation::from_lists(6, &[vec![3, 4, 5], vec![0, 1, 5], vec![1, 2, 3]]).unwrap();
        let r = transversal_weight_verify(&pres, &[vec![1.0; 3], vec![1.0; 3], vec![1.0; 3]]).unwrap();
        assert!(!r.uniform);
        let get = |s: &[usize]| r.values.iter().find(|(b, _)| b == s).unwrap().1;
        assert_eq!(get(&[0, 2, 4]), 1.0);
        assert_eq!(get(&[1, 3, 5]), 2.0);
        assert!(!r.rank_mismatch);
        assert!(transversal_weight_verify(&pres, &[vec![1.0; 3], vec![1.0; 3]]).is_err());
        assert!(transversal_weight_verify(&pres, &[vec![1.0; 3], vec![1.0; 3], vec![1.0, -1.0, 1.0]]).is_err());
    }
}
