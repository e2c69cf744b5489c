//! Matroid invariants, checked on graphic and transversal matroids.

use std::collections::BTreeSet;

use num_complex::Complex64;
use proptest::prelude::*;

use halfplane::matroid::{
    catalog, catalog_names, graphic_matroid, transversal_matroid, verify_basis_axioms, Graph, Matroid, Presentation,
};
use halfplane::poly::{parallel_connection, MultiAffinePolynomial};
use halfplane::subset;

fn graph() -> impl Strategy<Value = Graph> {
    (2usize..=5).prop_flat_map(|k| {
        prop::collection::vec((0..k, 0..k), 1..=8).prop_map(move |pairs| {
            let edges = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
            Graph::new(k, edges).unwrap()
        })
    })
}

fn presentation() -> impl Strategy<Value = Presentation> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::vec(0..1u64 << n, 1..=4).prop_map(move |sets| Presentation::new(n, sets).unwrap())
    })
}

fn matroid() -> impl Strategy<Value = Matroid> {
    prop_oneof![graph().prop_map(|g| graphic_matroid(&g)), presentation().prop_map(|p| transversal_matroid(&p))]
}

/// Bases of `M|keep` re-indexed in order: the largest intersections `B ∩ keep`.
fn restriction_bases(m: &Matroid, keep: u64) -> BTreeSet<u64> {
    let gone = subset::full(m.n()) & !keep;
    let best = m.bases().map(|b| (b & keep).count_ones()).max().unwrap_or(0);
    m.bases()
        .filter(|b| (b & keep).count_ones() == best)
        .map(|b| subset::compress(b & keep, gone))
        .collect()
}

proptest! {
    #[test]
    fn dual_is_an_involution_and_complements_rank(m in matroid()) {
        let d = m.dual();
        prop_assert_eq!(d.rank(), m.n() - m.rank());
        prop_assert_eq!(d.dual(), m);
    }

    #[test]
    fn dual_basis_polynomial_is_the_polynomial_dual(m in matroid()) {
        prop_assert_eq!(m.dual().basis_polynomial(), m.basis_polynomial().dual());
    }

    #[test]
    fn generated_matroids_satisfy_the_axioms(m in matroid()) {
        let bases: Vec<u64> = m.bases().collect();
        prop_assert!(verify_basis_axioms(m.n(), &bases).is_ok());
    }

    #[test]
    fn parallel_connection_commutes_with_basis_polynomial(
        m in matroid(), n in matroid(), e in 0usize..8, f in 0usize..8,
    ) {
        let (e, f) = (e % m.n(), f % n.n());
        prop_assume!(!(m.is_loop(e) && n.is_loop(f)));
        let glued = m.parallel_connection(e, &n, f).unwrap();
        let poly = parallel_connection(&m.basis_polynomial(), e, &n.basis_polynomial(), f).unwrap();
        prop_assert_eq!(&glued.q_map, &poly.q_map);
        prop_assert_eq!(glued.value.basis_polynomial(), poly.value);
    }

    #[test]
    fn transversal_restriction_is_deletion(pres in presentation(), keep in any::<u64>()) {
        let keep = keep & subset::full(pres.n());
        let restricted = transversal_matroid(&pres.restrict(keep));
        let want = restriction_bases(&transversal_matroid(&pres), keep);
        prop_assert_eq!(restricted.bases().collect::<BTreeSet<u64>>(), want);
    }
}

#[test]
fn every_catalog_matroid_satisfies_the_axioms() {
    for name in catalog_names() {
        let m = catalog(name).unwrap();
        let bases: Vec<u64> = m.bases().collect();
        assert!(verify_basis_axioms(m.n(), &bases).is_ok(), "{name}");
    }
}

#[test]
fn relaxing_a_line_of_f7_adds_one_monomial() {
    let f7 = catalog("F7").unwrap();
    let line = 0b101010;
    let diff = f7.relax(line).unwrap().basis_polynomial().sub(&f7.basis_polynomial()).unwrap();
    let want = MultiAffinePolynomial::from_subsets(7, &[(&[1, 3, 5], Complex64::new(1.0, 0.0))]).unwrap();
    assert_eq!(diff, want);
}

/// Spanning trees of `K4` found by union-find, independent of the rank oracle.
fn k4_spanning_trees() -> Vec<u64> {
    let edges: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    subset::k_subsets(6, 3)
        .filter(|&s| {
            let mut parent: Vec<usize> = (0..4).collect();
            fn root(p: &mut [usize], v: usize) -> usize {
                if p[v] == v { v } else { let r = root(p, p[v]); p[v] = r; r }
            }
            subset::elems(s).all(|e| {
                let (a, b) = (root(&mut parent, edges[e].0), root(&mut parent, edges[e].1));
                parent[a] = b;
                a != b
            })
        })
        .collect()
}

#[test]
fn cographic_k4_is_the_complementary_tree_polynomial() {
    let trees = k4_spanning_trees();
    assert_eq!(trees.len(), 16);
    let complementary = MultiAffinePolynomial::from_support(6, trees.iter().map(|&t| subset::full(6) & !t)).unwrap();
    let k4 = graphic_matroid(&Graph::complete(4).unwrap());
    assert_eq!(k4.dual().basis_polynomial(), complementary);

    // x^E T(1/x) at a generic point
    let x: Vec<Complex64> = (0..6).map(|k| Complex64::new(0.3 + k as f64, 0.7 - k as f64 * 0.2)).collect();
    let inv: Vec<Complex64> = x.iter().map(|v| v.inv()).collect();
    let xe: Complex64 = x.iter().product();
    let lhs = complementary.evaluate(&x).unwrap();
    let rhs = xe * k4.basis_polynomial().evaluate(&inv).unwrap();
    assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm());
}
