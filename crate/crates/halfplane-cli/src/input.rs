//! Resolving names, files and small argument grammars.

use std::fs;
use std::path::Path;

use halfplane::io::{from_json, MatrixJson, MatroidJson, PolynomialJson, PresentationJson};
use halfplane::matroid::{catalog, catalog_presentation, Presentation};
use halfplane::repr::{ComplexMatrix, NonnegMatrix};
use halfplane::{subset, GeneralPolynomial, Matroid, MultiAffinePolynomial};

use crate::CliError;

fn is_file(arg: &str) -> bool {
    arg.ends_with(".json") || Path::new(arg).is_file()
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))
}

/// A polynomial read from JSON: multiaffine when possible.
pub enum AnyPoly {
    Multi(MultiAffinePolynomial),
    General(GeneralPolynomial),
}

impl AnyPoly {
    pub fn general(&self) -> GeneralPolynomial {
        match self {
            AnyPoly::Multi(p) => p.to_general(),
            AnyPoly::General(g) => g.clone(),
        }
    }
}

pub fn polynomial_file(path: &str) -> Result<AnyPoly, CliError> {
    let g = from_json::<PolynomialJson>(&read(path)?)?.to_general()?;
    Ok(match g.to_multiaffine() {
        Ok(p) => AnyPoly::Multi(p),
        Err(_) => AnyPoly::General(g),
    })
}

pub fn matroid(arg: &str) -> Result<Matroid, CliError> {
    if is_file(arg) {
        Ok(from_json::<MatroidJson>(&read(arg)?)?.to_matroid()?)
    } else {
        Ok(catalog(arg)?)
    }
}

pub fn presentation(arg: &str) -> Result<Presentation, CliError> {
    if is_file(arg) {
        Ok(from_json::<PresentationJson>(&read(arg)?)?.to_presentation()?)
    } else {
        Ok(catalog_presentation(arg)?)
    }
}

pub fn complex_matrix(path: &str) -> Result<ComplexMatrix, CliError> {
    Ok(from_json::<MatrixJson>(&read(path)?)?.to_complex()?)
}

pub fn nonneg_matrix(path: &str) -> Result<NonnegMatrix, CliError> {
    Ok(from_json::<MatrixJson>(&read(path)?)?.to_nonneg()?)
}

/// A catalog name or a matroid file gives its basis polynomial; any other
/// JSON file is read as a polynomial.
pub fn polynomial(arg: &str) -> Result<AnyPoly, CliError> {
    if !is_file(arg) {
        return Ok(AnyPoly::Multi(catalog(arg)?.basis_polynomial()));
    }
    let text = read(arg)?;
    if let Ok(m) = from_json::<MatroidJson>(&text) {
        return Ok(AnyPoly::Multi(m.to_matroid()?.basis_polynomial()));
    }
    polynomial_file(arg)
}

/// `all`, or comma-separated elements such as `0,1,2` (braces allowed).
pub fn element_set(arg: &str, n: usize) -> Result<u64, CliError> {
    let arg = arg.trim().trim_start_matches('{').trim_end_matches('}');
    if arg == "all" {
        return Ok(subset::full(n));
    }
    let elems: Vec<usize> = arg
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| CliError::Input(format!("bad element `{s}`"))))
        .collect::<Result<_, _>>()?;
    Ok(subset::from_elems(&elems, n)?)
}

pub fn element(arg: &str) -> Result<usize, CliError> {
    arg.parse().map_err(|_| CliError::Input(format!("bad element index `{arg}`")))
}

/// A decimal or a fraction `p/q`.
pub fn number(arg: &str) -> Result<f64, CliError> {
    let bad = || CliError::Input(format!("bad number `{arg}`"));
    match arg.split_once('/') {
        Some((p, q)) => {
            let (p, q): (f64, f64) = (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
            if q == 0.0 {
                return Err(bad());
            }
            Ok(p / q)
        }
        None => arg.trim().parse().map_err(|_| bad()),
    }
}

/// Weights for every element: `ones`, a single number for all, or a comma list.
pub fn weights(arg: &str, n: usize) -> Result<Vec<f64>, CliError> {
    if arg == "ones" {
        return Ok(vec![1.0; n]);
    }
    let parts: Vec<f64> = arg.split(',').map(number).collect::<Result<_, _>>()?;
    match parts.len() {
        1 => Ok(vec![parts[0]; n]),
        k if k == n => Ok(parts),
        k => Err(CliError::Input(format!("expected {n} weights, got {k}"))),
    }
}

/// Edge weights of a presentation: `ones`, or a JSON file holding one list
/// per set in ascending element order.
pub fn edge_weights(arg: &str, pres: &Presentation) -> Result<Vec<Vec<f64>>, CliError> {
    if arg == "ones" {
        return Ok(pres.sets().iter().map(|&s| vec![1.0; subset::size(s)]).collect());
    }
    serde_json::from_str(&read(arg)?).map_err(|e| CliError::Input(format!("bad weights file {arg}: {e}")))
}
