use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::MultiAffinePolynomial;
use crate::subset;

/// Sparse polynomial `Σ a_m x^m` keyed by exponent vectors of length `n`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct GeneralPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, Complex64>,
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

impl GeneralPolynomial {
    pub fn zero(n: usize) -> Result<Self> {
        subset::check_ground(n)?;
        Ok(Self { n, terms: BTreeMap::new() })
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Complex64)>>(n: usize, terms: I) -> Result<Self> {
        let mut p = Self::zero(n)?;
        for (m, c) in terms {
            if m.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: m.len() });
            }
            if !(c.re.is_finite() && c.im.is_finite()) {
                return Err(Error::NonFinite);
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn from_terms_unchecked<I: IntoIterator<Item = (Vec<u32>, Complex64)>>(n: usize, terms: I) -> Self {
        let mut p = Self { n, terms: BTreeMap::new() };
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn constant(n: usize, c: Complex64) -> Result<Self> {
        Self::from_terms(n, [(vec![0; n], c)])
    }

    pub fn variable(n: usize, e: usize) -> Result<Self> {
        if e >= n {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        let mut m = vec![0; n];
        m[e] = 1;
        Self::from_terms(n, [(m, Complex64::new(1.0, 0.0))])
    }

    /// Single monomial `c·x^m`.
    pub fn monomial(m: Vec<u32>, c: Complex64) -> Result<Self> {
        let n = m.len();
        Self::from_terms(n, [(m, c)])
    }

    pub(crate) fn add_term(&mut self, m: Vec<u32>, c: Complex64) {
        if c == ZERO {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert(ZERO);
        *entry += c;
        if *entry == ZERO {
            self.terms.remove(&m);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], Complex64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m.as_slice(), c))
    }

    pub fn coeff(&self, m: &[u32]) -> Complex64 {
        self.terms.get(m).copied().unwrap_or(ZERO)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| total(m)).max()
    }

    /// Degree in the variable `x_e` (0 for the zero polynomial).
    pub fn degree_in(&self, e: usize) -> Result<usize> {
        self.check_element(e)?;
        Ok(self.terms.keys().map(|m| m[e] as usize).max().unwrap_or(0))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(|m| total(m));
        match d.next() {
            None => true,
            Some(first) => d.all(|k| k == first),
        }
    }

    pub fn is_multiaffine(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&k| k <= 1))
    }

    pub fn to_multiaffine(&self) -> Result<MultiAffinePolynomial> {
        if !self.is_multiaffine() {
            return Err(Error::NotMultiaffine);
        }
        MultiAffinePolynomial::from_terms(self.n, self.terms().map(|(m, c)| (mask_of(m), c)))
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.n {
            Err(Error::ElementOutOfRange { element: e, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_same_ground(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::GroundSetMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn evaluate(&self, x: &[Complex64]) -> Result<Complex64> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: x.len() });
        }
        let mut total = ZERO;
        for (m, &c) in &self.terms {
            let mut t = c;
            for (e, &k) in m.iter().enumerate() {
                if k > 0 {
                    t *= x[e].powu(k);
                }
            }
            total += t;
        }
        Ok(total)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_ground(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.to_vec(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::from_terms_unchecked(self.n, self.terms().map(|(m, c)| (m.to_vec(), c * k)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ground(other)?;
        let mut out = Self { n: self.n, terms: BTreeMap::new() };
        for (m, a) in self.terms() {
            for (k, b) in other.terms() {
                let sum: Vec<u32> = m.iter().zip(k).map(|(x, y)| x + y).collect();
                out.add_term(sum, a * b);
            }
        }
        Ok(out)
    }

    /// Terms of maximal total degree.
    pub fn leading_part(&self) -> Self {
        match self.degree() {
            None => self.clone(),
            Some(d) => Self::from_terms_unchecked(
                self.n,
                self.terms().filter(|(m, _)| total(m) == d).map(|(m, c)| (m.to_vec(), c)),
            ),
        }
    }

    /// Keep only terms whose exponent is at most 1 on every element of `a`.
    pub fn multiaffine_part(&self, a: u64) -> Result<Self> {
        self.check_mask(a)?;
        Ok(Self::from_terms_unchecked(
            self.n,
            self.terms()
                .filter(|(m, _)| subset::elems(a).all(|e| m[e] <= 1))
                .map(|(m, c)| (m.to_vec(), c)),
        ))
    }

    /// Reduce exponents modulo 2 on the elements of `a`, combining like terms.
    pub fn fold_mod2(&self, a: u64) -> Result<Self> {
        self.check_mask(a)?;
        Ok(Self::from_terms_unchecked(
            self.n,
            self.terms().map(|(m, c)| {
                let mut k = m.to_vec();
                for e in subset::elems(a) {
                    k[e] %= 2;
                }
                (k, c)
            }),
        ))
    }

    fn check_mask(&self, a: u64) -> Result<()> {
        match subset::elems(a).find(|&e| e >= self.n) {
            Some(e) => Err(Error::ElementOutOfRange { element: e, n: self.n }),
            None => Ok(()),
        }
    }

    /// `∂^k P / ∂x_e^k`.
    pub fn derivative(&self, e: usize, k: u32) -> Result<Self> {
        self.check_element(e)?;
        Ok(Self::from_terms_unchecked(
            self.n,
            self.terms().filter(|(m, _)| m[e] >= k).map(|(m, c)| {
                let mut d = m.to_vec();
                d[e] -= k;
                (d, c * falling(m[e], k))
            }),
        ))
    }

    /// Slices `P_0, …, P_M` with `P = Σ_k P_k(x_{≠e}) x_e^k`, each on `E∖e`.
    pub fn coefficient_slices(&self, e: usize) -> Result<Vec<Self>> {
        let deg = self.degree_in(e)?;
        let mut out: Vec<Self> = (0..=deg).map(|_| Self { n: self.n - 1, terms: BTreeMap::new() }).collect();
        for (m, c) in self.terms() {
            let mut rest = m.to_vec();
            let k = rest.remove(e) as usize;
            out[k].add_term(rest, c);
        }
        Ok(out)
    }

    /// Reassemble `Σ_k slices[k] x_e^k` with `x_e` inserted at position `e`.
    pub fn from_slices(slices: &[Self], e: usize) -> Result<Self> {
        let n_rest = slices.first().map(|s| s.n).unwrap_or(0);
        if e > n_rest {
            return Err(Error::ElementOutOfRange { element: e, n: n_rest + 1 });
        }
        let mut out = Self::zero(n_rest + 1)?;
        for (k, s) in slices.iter().enumerate() {
            if s.n != n_rest {
                return Err(Error::GroundSetMismatch(n_rest, s.n));
            }
            for (m, c) in s.terms() {
                let mut full = m.to_vec();
                full.insert(e, k as u32);
                out.add_term(full, c);
            }
        }
        Ok(out)
    }
}

pub(crate) fn total(m: &[u32]) -> usize {
    m.iter().map(|&k| k as usize).sum()
}

pub(crate) fn mask_of(m: &[u32]) -> u64 {
    m.iter().enumerate().filter(|(_, &k)| k > 0).fold(0, |acc, (e, _)| acc | 1 << e)
}

/// Falling factorial `m (m-1) … (m-k+1)` as a float.
pub(crate) fn falling(m: u32, k: u32) -> f64 {
    (0..k).map(|i| (m - i) as f64).product()
}
