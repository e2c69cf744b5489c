//! Matrix constructions, matching polynomials and niceness weights.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use halfplane::hpp::hpp_random_rays;
use halfplane::hpp::SearchOptions;
use halfplane::matroid::{catalog, support_matroid, verify_basis_axioms, Graph, Matroid};
use halfplane::poly::{principal_truncation, GeneralPolynomial, MultiAffinePolynomial};
use halfplane::repr::{
    det_construction, matching_polynomial, nice_principal_solve, per_construction, ComplexMatrix, NicenessStatus,
    NonnegMatrix,
};
use halfplane::{subset, ToleranceConfig};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn complex_matrix() -> impl Strategy<Value = ComplexMatrix> {
    (1usize..=8).prop_flat_map(|n| {
        (1..=n.min(4)).prop_flat_map(move |r| {
            prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), r * n).prop_map(move |v| {
                ComplexMatrix::new(r, n, v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap()
            })
        })
    })
}

fn nonneg_matrix() -> impl Strategy<Value = NonnegMatrix> {
    (1usize..=6).prop_flat_map(|n| {
        (1..=n.min(4)).prop_flat_map(move |r| {
            prop::collection::vec(prop_oneof![Just(0.0), 0.1f64..3.0], r * n)
                .prop_map(move |v| NonnegMatrix::new(r, n, v).unwrap())
        })
    })
}

/// Determinant by permutation expansion.
fn leibniz(m: &[Vec<Complex64>]) -> Complex64 {
    let r = m.len();
    let mut total = c(0.0);
    for perm in permutations(r) {
        let inversions = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let sign = if inversions % 2 == 0 { 1.0 } else { -1.0 };
        total += (0..r).map(|i| m[i][perm[i]]).product::<Complex64>() * sign;
    }
    total
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(r - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, r - 1);
            out.push(q);
        }
    }
    out
}

/// `Σ` over injective row-to-column assignments of the product of entries,
/// accumulated on the image.
fn matching_enumeration(l: &NonnegMatrix) -> MultiAffinePolynomial {
    fn go(l: &NonnegMatrix, row: usize, used: u64, w: f64, acc: &mut Vec<(u64, Complex64)>) {
        if row == l.rows() {
            acc.push((used, c(w)));
            return;
        }
        for j in 0..l.cols() {
            if used & 1 << j == 0 && l[(row, j)] != 0.0 {
                go(l, row + 1, used | 1 << j, w * l[(row, j)], acc);
            }
        }
    }
    let mut acc = Vec::new();
    go(l, 0, 0, 1.0, &mut acc);
    MultiAffinePolynomial::from_terms(l.cols(), acc).unwrap()
}

proptest! {
    #[test]
    fn cauchy_binet(a in complex_matrix(), x in prop::collection::vec((0.05f64..2.0, -2.0f64..2.0), 8)) {
        let p = det_construction(&a).unwrap();
        let x: Vec<Complex64> = x[..a.cols()].iter().map(|&(u, v)| Complex64::new(u, v)).collect();
        let gram: Vec<Vec<Complex64>> = (0..a.rows())
            .map(|i| (0..a.rows()).map(|k| (0..a.cols()).map(|j| a[(i, j)] * x[j] * a[(k, j)].conj()).sum()).collect())
            .collect();
        let want = leibniz(&gram);
        let got = p.evaluate(&x).unwrap();
        prop_assert!((got - want).norm() <= 1e-8 * want.norm().max(1e-12));
    }

    #[test]
    fn det_construction_support_is_a_matroid(a in complex_matrix()) {
        let p = det_construction(&a).unwrap();
        prop_assume!(!p.is_zero());
        let m = support_matroid(&p).unwrap();
        let bases: Vec<u64> = m.bases().collect();
        prop_assert!(verify_basis_axioms(m.n(), &bases).is_ok());
    }

    #[test]
    fn permanent_construction_matches_enumeration(l in nonneg_matrix()) {
        let p = per_construction(&l).unwrap();
        let want = matching_enumeration(&l);
        prop_assert!(p.max_abs_diff(&want).unwrap() <= 1e-9 * want.l1_norm().max(1.0));
    }

    #[test]
    fn matching_polynomial_is_the_multiaffine_part(
        k in 2usize..=5, pairs in prop::collection::vec((0usize..5, 0usize..5, 1u8..=4), 0..=8),
    ) {
        let edges: Vec<(usize, usize, f64)> = pairs
            .into_iter()
            .map(|(a, b, w)| (a % k, b % k, w as f64))
            .filter(|(a, b, _)| a != b)
            .map(|(a, b, w)| (a.min(b), a.max(b), w))
            .collect();
        let g = Graph::new(k, edges.iter().map(|&(a, b, _)| (a, b)).collect()).unwrap();
        let lambda: Vec<f64> = edges.iter().map(|e| e.2).collect();
        let m = matching_polynomial(&g, &lambda).unwrap();
        let mut product = GeneralPolynomial::constant(k, c(1.0)).unwrap();
        for &(a, b, w) in &edges {
            let mut mono = vec![0u32; k];
            mono[a] = 1;
            mono[b] = 1;
            let factor = GeneralPolynomial::from_terms(k, [(vec![0; k], c(1.0)), (mono, c(w))]).unwrap();
            product = product.mul(&factor).unwrap();
        }
        let want = product.multiaffine_part(subset::full(k)).unwrap().to_multiaffine().unwrap();
        prop_assert_eq!(m, want);
    }
}

/// Flats as closures of subsets.
fn closure(m: &Matroid, s: u64) -> u64 {
    let r = m.rank_of(s);
    (0..m.n()).filter(|&e| m.rank_of(s | 1 << e) == r).fold(s, |acc, e| acc | 1 << e)
}

#[test]
fn nice_weights_truncate_to_the_basis_polynomial() {
    let mut checked = 0;
    for name in ["M(K4)", "F7m4", "F7m5", "F7m6", "W3", "P6", "Q6", "U24", "U35", "P7"] {
        let m = catalog(name).unwrap();
        let flats: std::collections::BTreeSet<u64> = (0..1u64 << m.n()).map(|s| closure(&m, s)).collect();
        for flat in flats.into_iter().filter(|&f| f != 0) {
            let sol = nice_principal_solve(&m, flat).unwrap();
            if sol.status != NicenessStatus::Nice || sol.heuristic {
                continue;
            }
            checked += 1;
            let target = Matroid::from_bases(m.n(), m.truncation_bases(flat)).unwrap();
            // exact: Σ λ_e over e ∉ T with T ∪ e a basis is 1 for each truncated basis T
            for t in target.bases() {
                let sum = (0..m.n())
                    .filter(|&e| t & 1 << e == 0 && m.is_basis(t | 1 << e))
                    .fold(BigRational::zero(), |acc, e| acc + &sol.weights[e]);
                assert!(sum.is_one(), "{name} flat {flat:#b}: {sum}");
            }
            let tr = principal_truncation(&m.basis_polynomial(), &sol.weights_f64).unwrap();
            assert_eq!(support_matroid(&tr).unwrap(), target, "{name} flat {flat:#b}");
            assert!(tr.max_abs_diff(&target.basis_polynomial()).unwrap() <= 1e-12, "{name} flat {flat:#b}");
        }
    }
    assert!(checked > 10);
}

#[test]
fn matrix_constructions_pass_random_ray_searches() {
    let cfg = ToleranceConfig::default();
    let a = ComplexMatrix::new(
        3,
        6,
        vec![
            c(1.0), c(0.0), c(0.0), c(1.0), Complex64::new(0.5, 0.5), c(-1.0),
            c(0.0), c(1.0), c(0.0), Complex64::new(0.0, 1.0), c(1.0), c(2.0),
            c(0.0), c(0.0), c(1.0), c(1.0), c(-1.0), Complex64::new(0.3, -0.7),
        ],
    )
    .unwrap();
    let l = NonnegMatrix::from_rows(&[vec![1.0, 2.0, 0.0, 1.0, 0.5, 0.0], vec![0.0, 1.0, 1.0, 3.0, 0.0, 1.0], vec![
        1.0, 0.0, 2.0, 0.0, 1.0, 1.0,
    ]])
    .unwrap();
    for p in [det_construction(&a).unwrap(), per_construction(&l).unwrap()] {
        let report = hpp_random_rays(&p, SearchOptions::count(100_000, 3), &cfg).unwrap();
        assert_eq!(report.counterexamples, 0);
    }
}
