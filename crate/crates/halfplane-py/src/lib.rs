//! Python bindings: catalog access, polynomials, ray restrictions, randomized
//! and exact half-plane tests, niceness solving and the reproduction harness.
//!
//! Structured results (reports, fixtures) come back as JSON strings.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use halfplane::hpp::{
    hpp_random_elementary, hpp_random_rays, rank2_exact, ray_polynomial, univariate_roots, RootConfig, SearchOptions,
};
use halfplane::io::{from_json, to_json, PolynomialJson};
use halfplane::matroid::{catalog, catalog_names as names};
use halfplane::repr::{nice_cotruncation_solve, nice_principal_solve};
use halfplane::repro::{reproduce as run_fixtures, ReproOptions};
use halfplane::{subset, MultiAffinePolynomial, ToleranceConfig};

fn err(e: halfplane::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A multiaffine polynomial with complex coefficients.
#[pyclass(frozen, skip_from_py_object, module = "pyhalfplane")]
#[derive(Clone)]
struct Polynomial {
    inner: MultiAffinePolynomial,
}

#[pymethods]
impl Polynomial {
    /// Build from `[(subset, coefficient), ...]` on `n` elements.
    #[new]
    fn new(n: usize, terms: Vec<(Vec<usize>, Complex64)>) -> PyResult<Self> {
        let masks = terms
            .into_iter()
            .map(|(s, c)| subset::from_elems(&s, n).map(|m| (m, c)))
            .collect::<halfplane::Result<Vec<_>>>()
            .map_err(err)?;
        Ok(Self { inner: MultiAffinePolynomial::from_terms(n, masks).map_err(err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let p = from_json::<PolynomialJson>(text).and_then(|j| j.to_multiaffine()).map_err(err)?;
        Ok(Self { inner: p })
    }

    fn to_json(&self) -> String {
        to_json(&PolynomialJson::from_multiaffine(&self.inner))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn terms(&self) -> Vec<(Vec<usize>, Complex64)> {
        self.inner.terms().map(|(s, c)| (subset::to_vec(s), c)).collect()
    }

    fn evaluate(&self, x: Vec<Complex64>) -> PyResult<Complex64> {
        self.inner.evaluate(&x).map_err(err)
    }

    fn dual(&self) -> Self {
        Self { inner: self.inner.dual() }
    }

    fn delete(&self, e: usize) -> PyResult<Self> {
        Ok(Self { inner: self.inner.delete(e).map_err(err)? })
    }

    fn contract(&self, e: usize) -> PyResult<Self> {
        Ok(Self { inner: self.inner.contract(e).map_err(err)? })
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Polynomial(n={}, terms={})", self.inner.n(), self.inner.len())
    }
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    names()
}

/// Bases of a catalog matroid as sorted element lists.
#[pyfunction]
fn matroid_bases(name: &str) -> PyResult<Vec<Vec<usize>>> {
    Ok(catalog(name).map_err(err)?.bases().map(subset::to_vec).collect())
}

#[pyfunction]
fn basis_polynomial(name: &str) -> PyResult<Polynomial> {
    Ok(Polynomial { inner: catalog(name).map_err(err)?.basis_polynomial() })
}

/// Ascending coefficients of `ζ ↦ P(ζa + b)` and its roots.
#[pyfunction]
fn ray_roots(p: &Polynomial, a: Vec<f64>, b: Vec<f64>) -> PyResult<(Vec<Complex64>, Vec<Complex64>)> {
    let coeffs = ray_polynomial(&p.inner, &a, &b).map_err(err)?;
    let roots = univariate_roots(&coeffs, &RootConfig::default()).map_err(err)?.roots;
    Ok((coeffs, roots))
}

/// Randomized search; returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (p, method = "rays", trials = 100_000, seed = 1, first = false))]
fn hpp_search(py: Python<'_>, p: &Polynomial, method: &str, trials: u64, seed: u64, first: bool) -> PyResult<String> {
    let opts = if first { SearchOptions::first(trials, seed) } else { SearchOptions::count(trials, seed) };
    let cfg = ToleranceConfig::default();
    let poly = p.inner.clone();
    let report = match method {
        "rays" => py.detach(|| hpp_random_rays(&poly, opts, &cfg)),
        "elementary" => py.detach(|| hpp_random_elementary(&poly, opts, &cfg)),
        other => return Err(PyValueError::new_err(format!("unknown method `{other}`"))),
    }
    .map_err(err)?;
    Ok(to_json(&report))
}

/// Exact test for homogeneous quadratics: `(hpp, λ₂)`.
#[pyfunction]
fn rank2(p: &Polynomial) -> PyResult<(bool, f64)> {
    let r = rank2_exact(&p.inner, &ToleranceConfig::default()).map_err(err)?;
    Ok((r.hpp, r.lambda2))
}

/// Niceness system of a catalog matroid for a flat (or, with
/// `cotruncation=True`, a cotruncation set): `(status, weights as "p/q")`.
#[pyfunction]
#[pyo3(signature = (name, elements = None, cotruncation = false))]
fn nice(name: &str, elements: Option<Vec<usize>>, cotruncation: bool) -> PyResult<(String, Vec<String>)> {
    let m = catalog(name).map_err(err)?;
    let set = match elements {
        Some(e) => subset::from_elems(&e, m.n()).map_err(err)?,
        None => subset::full(m.n()),
    };
    let sol = if cotruncation { nice_cotruncation_solve(&m, set) } else { nice_principal_solve(&m, set) }.map_err(err)?;
    let status = serde_json::to_value(sol.status).expect("serializable status");
    Ok((status.as_str().unwrap_or_default().to_string(), sol.weights.iter().map(|w| w.to_string()).collect()))
}

/// Run a reproduction fixture (or `"all"`); returns the reports as JSON.
#[pyfunction]
#[pyo3(signature = (name, eps = None, trials = None, seed = 1))]
fn reproduce(py: Python<'_>, name: &str, eps: Option<f64>, trials: Option<u64>, seed: u64) -> PyResult<String> {
    let opts = ReproOptions { eps, trials, seed, tol: ToleranceConfig::default() };
    let reports = py.detach(|| run_fixtures(name, &opts)).map_err(err)?;
    Ok(to_json(&reports))
}

#[pymodule]
fn pyhalfplane(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polynomial>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(matroid_bases, m)?)?;
    m.add_function(wrap_pyfunction!(basis_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(ray_roots, m)?)?;
    m.add_function(wrap_pyfunction!(hpp_search, m)?)?;
    m.add_function(wrap_pyfunction!(rank2, m)?)?;
    m.add_function(wrap_pyfunction!(nice, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce, m)?)?;
    Ok(())
}
