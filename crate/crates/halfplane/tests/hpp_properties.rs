//! Root finding, search determinism, certificates, eigenvalues and JSON.

use num_complex::Complex64;
use proptest::prelude::*;

use halfplane::hpp::{
    counterexample_verify, hpp_random_elementary, hpp_random_rays, jacobi_eigen, ray_polynomial, univariate_roots,
    RootConfig, SearchOptions,
};
use halfplane::io::{from_json, to_json, MatrixJson, MatroidJson, PolynomialJson};
use halfplane::matroid::catalog;
use halfplane::repr::ComplexMatrix;
use halfplane::repro::f7_family;
use halfplane::{HppReport, MultiAffinePolynomial, ToleranceConfig};

fn chi(n: usize, idx: &[usize]) -> Vec<f64> {
    (0..n).map(|i| if idx.contains(&i) { 1.0 } else { 0.0 }).collect()
}

#[test]
fn root_residuals_on_ray_restrictions() {
    let cases: [(&str, &[usize], &[usize]); 6] = [
        ("F7", &[0, 1, 3, 4], &[2, 5, 6]),
        ("F7m", &[0, 1, 3, 4], &[2, 5, 6]),
        ("F7mm", &[0, 3, 6], &[1, 2, 4, 5]),
        ("P8", &[0, 3, 4, 7], &[1, 2, 5, 6]),
        ("P8p", &[0, 3, 4, 7], &[1, 2, 5, 6]),
        ("P8pp", &[0, 3, 4, 7], &[1, 2, 5, 6]),
    ];
    for (name, a, b) in cases {
        let m = catalog(name).unwrap();
        let coeffs = ray_polynomial(&m.basis_polynomial(), &chi(m.n(), a), &chi(m.n(), b)).unwrap();
        let roots = univariate_roots(&coeffs, &RootConfig::default()).unwrap();
        let top = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(roots.residual <= 1e-8 * (1.0 + top), "{name}: {}", roots.residual);
        let degree = coeffs.iter().rposition(|z| z.norm() != 0.0).unwrap();
        assert_eq!(roots.roots.len(), degree, "{name}");
    }
}

#[test]
fn searches_do_not_depend_on_thread_count() {
    let cfg = ToleranceConfig::default();
    let p = catalog("F7").unwrap().basis_polynomial();
    let run = || {
        (
            hpp_random_rays(&p, SearchOptions::count(5_000, 42), &cfg).unwrap(),
            hpp_random_elementary(&p, SearchOptions::count(20_000, 42), &cfg).unwrap(),
            hpp_random_rays(&p, SearchOptions::first(5_000, 7), &cfg).unwrap(),
        )
    };
    let default = run();
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(run);
    assert_eq!(default, single);
    assert_eq!(default, run());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn certificates_verify_independently(mu in 0u8..=4, nu in 0u8..=2, rho in 0u8..=1, seed in any::<u64>()) {
        let cfg = ToleranceConfig::default();
        let p = f7_family(mu as f64, nu as f64, rho as f64).unwrap();
        let general = p.to_general();
        for report in [
            hpp_random_rays(&p, SearchOptions::first(2_000, seed), &cfg).unwrap(),
            hpp_random_elementary(&p, SearchOptions::first(20_000, seed), &cfg).unwrap(),
        ] {
            prop_assert_eq!(report.certificate.is_some(), report.counterexamples > 0);
            if let Some(cert) = &report.certificate {
                prop_assert!(counterexample_verify(&general, cert, &cfg).unwrap());
            }
        }
    }

    #[test]
    fn jacobi_diagonalizes(n in 1usize..=8, v in prop::collection::vec(-5.0f64..5.0, 64)) {
        let a: Vec<Vec<f64>> =
            (0..n).map(|i| (0..n).map(|j| v[i.min(j) * 8 + i.max(j)]).collect()).collect();
        let norm = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
        let eig = jacobi_eigen(&a).unwrap();
        prop_assert!(eig.off_norm <= 1e-12 * norm.max(f64::MIN_POSITIVE));
        let trace: f64 = (0..n).map(|i| a[i][i]).sum();
        prop_assert!((eig.values.iter().sum::<f64>() - trace).abs() <= 1e-10 * norm.max(1.0));
        prop_assert!(eig.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn polynomial_json_round_trips(
        n in 1usize..=10, terms in prop::collection::vec((any::<u64>(), any::<f64>(), any::<f64>()), 0..20),
    ) {
        let terms = terms
            .into_iter()
            .filter(|(_, a, b)| a.is_finite() && b.is_finite())
            .map(|(s, a, b)| (s & ((1 << n) - 1), Complex64::new(a, b)));
        let p = MultiAffinePolynomial::from_terms(n, terms).unwrap();
        let text = to_json(&PolynomialJson::from_multiaffine(&p));
        let back = from_json::<PolynomialJson>(&text).unwrap().to_multiaffine().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn matrix_json_round_trips(v in prop::collection::vec((any::<f64>(), any::<f64>()), 6)) {
        prop_assume!(v.iter().all(|(a, b)| a.is_finite() && b.is_finite()));
        let a = ComplexMatrix::new(2, 3, v.into_iter().map(|(x, y)| Complex64::new(x, y)).collect()).unwrap();
        let text = to_json(&MatrixJson::from_complex(&a));
        prop_assert_eq!(from_json::<MatrixJson>(&text).unwrap().to_complex().unwrap(), a);
    }
}

#[test]
fn matroid_and_report_json_round_trip() {
    let cfg = ToleranceConfig::default();
    for name in ["F7", "P8pp", "U36", "V8"] {
        let m = catalog(name).unwrap();
        let text = to_json(&MatroidJson::from_matroid(&m));
        assert_eq!(from_json::<MatroidJson>(&text).unwrap().to_matroid().unwrap(), m);
    }
    let p = catalog("F7").unwrap().basis_polynomial();
    let report = hpp_random_rays(&p, SearchOptions::first(1_000, 5), &cfg).unwrap();
    assert!(report.certificate.is_some());
    let back: HppReport = from_json(&to_json(&report)).unwrap();
    assert_eq!(back, report);
}
