//! JSON interchange formats.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{Matroid, Presentation};
use crate::poly::{GeneralPolynomial, MultiAffinePolynomial};
use crate::repr::{ComplexMatrix, NonnegMatrix};
use crate::subset;

/// Serde helpers writing complex numbers as `{"re": .., "im": ..}`.
pub mod cser {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Cx {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(c: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        Cx { re: c.re, im: c.im }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let c = Cx::deserialize(d)?;
        Ok(Complex64::new(c.re, c.im))
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
            let w: Vec<Cx> = v.iter().map(|c| Cx { re: c.re, im: c.im }).collect();
            w.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
            let w = Vec::<Cx>::deserialize(d)?;
            Ok(w.into_iter().map(|c| Complex64::new(c.re, c.im)).collect())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<u32>>,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl PolynomialJson {
    pub fn from_multiaffine(p: &MultiAffinePolynomial) -> Self {
        let terms = p
            .terms()
            .map(|(s, c)| TermJson { subset: Some(subset::to_vec(s)), exponents: None, re: c.re, im: c.im })
            .collect();
        Self { n: p.n(), terms }
    }

    pub fn from_general(p: &GeneralPolynomial) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| TermJson { subset: None, exponents: Some(m.to_vec()), re: c.re, im: c.im })
            .collect();
        Self { n: p.n(), terms }
    }

    fn exponents_of(&self, t: &TermJson) -> Result<Vec<u32>> {
        match (&t.subset, &t.exponents) {
            (Some(s), None) => {
                let mask = subset::from_elems(s, self.n)?;
                Ok((0..self.n).map(|e| subset::contains(mask, e) as u32).collect())
            }
            (None, Some(m)) => {
                if m.len() != self.n {
                    return Err(Error::DimensionMismatch { expected: self.n, got: m.len() });
                }
                Ok(m.clone())
            }
            _ => Err(Error::Malformed("each term needs exactly one of `subset` or `exponents`".into())),
        }
    }

    pub fn to_general(&self) -> Result<GeneralPolynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push((self.exponents_of(t)?, Complex64::new(t.re, t.im)));
        }
        GeneralPolynomial::from_terms(self.n, terms)
    }

    pub fn to_multiaffine(&self) -> Result<MultiAffinePolynomial> {
        self.to_general()?.to_multiaffine()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    pub bases: Vec<Vec<usize>>,
}

impl MatroidJson {
    pub fn from_matroid(m: &Matroid) -> Self {
        Self { n: m.n(), bases: m.bases().map(subset::to_vec).collect() }
    }

    pub fn to_matroid(&self) -> Result<Matroid> {
        let mut masks = Vec::with_capacity(self.bases.len());
        for b in &self.bases {
            masks.push(subset::from_elems(b, self.n)?);
        }
        Matroid::from_bases(self.n, masks)
    }
}

/// Matrix entry: a bare real number or `{"re", "im"}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryJson {
    Real(f64),
    Complex { re: f64, im: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<EntryJson>>,
}

impl MatrixJson {
    pub fn from_complex(a: &ComplexMatrix) -> Self {
        let entries = (0..a.rows())
            .map(|i| (0..a.cols()).map(|j| EntryJson::Complex { re: a[(i, j)].re, im: a[(i, j)].im }).collect())
            .collect();
        Self { rows: a.rows(), cols: a.cols(), entries }
    }

    pub fn from_nonneg(a: &NonnegMatrix) -> Self {
        let entries = (0..a.rows()).map(|i| (0..a.cols()).map(|j| EntryJson::Real(a[(i, j)])).collect()).collect();
        Self { rows: a.rows(), cols: a.cols(), entries }
    }

    fn flat(&self) -> Result<Vec<Complex64>> {
        if self.entries.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: self.entries.len() });
        }
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for row in &self.entries {
            if row.len() != self.cols {
                return Err(Error::DimensionMismatch { expected: self.cols, got: row.len() });
            }
            out.extend(row.iter().map(|e| match *e {
                EntryJson::Real(x) => Complex64::new(x, 0.0),
                EntryJson::Complex { re, im } => Complex64::new(re, im),
            }));
        }
        Ok(out)
    }

    pub fn to_complex(&self) -> Result<ComplexMatrix> {
        ComplexMatrix::new(self.rows, self.cols, self.flat()?)
    }

    pub fn to_nonneg(&self) -> Result<NonnegMatrix> {
        let flat = self.flat()?;
        if flat.iter().any(|c| c.im != 0.0) {
            return Err(Error::Malformed("nonnegative matrix entries must be real".into()));
        }
        NonnegMatrix::new(self.rows, self.cols, flat.iter().map(|c| c.re).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

impl PresentationJson {
    pub fn from_presentation(p: &Presentation) -> Self {
        Self { n: p.n(), sets: p.sets().iter().map(|&s| subset::to_vec(s)).collect() }
    }

    pub fn to_presentation(&self) -> Result<Presentation> {
        Presentation::from_lists(self.n, &self.sets)
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable value")
}

pub fn to_json_pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable value")
}

pub fn from_json<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_round_trip() {
        let p = MultiAffinePolynomial::from_subsets(
            3,
            &[(&[0, 1], Complex64::new(0.1, -1.0 / 3.0)), (&[2], Complex64::new(1e-300, 7.5))],
        )
        .unwrap();
        let text = to_json(&PolynomialJson::from_multiaffine(&p));
        let back: PolynomialJson = from_json(&text).unwrap();
        assert_eq!(back.to_multiaffine().unwrap(), p);

        let g = p.to_general();
        let text = to_json(&PolynomialJson::from_general(&g));
        let back: PolynomialJson = from_json(&text).unwrap();
        assert_eq!(back.to_general().unwrap(), g);
    }

    #[test]
    fn rejects_ambiguous_terms() {
        let j: PolynomialJson = from_json(r#"{"n":2,"terms":[{"re":1.0,"im":0.0}]}"#).unwrap();
        assert!(j.to_general().is_err());
        let j: PolynomialJson = from_json(r#"{"n":2,"terms":[{"subset":[2],"re":1.0}]}"#).unwrap();
        assert!(j.to_general().is_err());
    }

    #[test]
    fn matrix_entries_accept_both_forms() {
        let j: MatrixJson =
            from_json(r#"{"rows":1,"cols":2,"entries":[[1.5,{"re":0.0,"im":2.0}]]}"#).unwrap();
        let a = j.to_complex().unwrap();
        assert_eq!(a[(0, 1)], Complex64::new(0.0, 2.0));
        assert!(j.to_nonneg().is_err());
    }
}
