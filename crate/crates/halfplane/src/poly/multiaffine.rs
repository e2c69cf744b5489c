use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::GeneralPolynomial;
use crate::subset;

/// Sparse multiaffine polynomial `Σ a_S x^S` over the ground set `0..n`.
///
/// Terms are keyed by subset bitmask; exact zeros are never stored.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct MultiAffinePolynomial {
    n: usize,
    terms: BTreeMap<u64, Complex64>,
}

fn check_finite(c: Complex64) -> Result<()> {
    if c.re.is_finite() && c.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

impl MultiAffinePolynomial {
    pub fn zero(n: usize) -> Result<Self> {
        subset::check_ground(n)?;
        Ok(Self { n, terms: BTreeMap::new() })
    }

    pub(crate) fn zero_unchecked(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    /// Build from `(mask, coefficient)` pairs; repeated masks are summed.
    pub fn from_terms<I: IntoIterator<Item = (u64, Complex64)>>(n: usize, terms: I) -> Result<Self> {
        let mut p = Self::zero(n)?;
        let full = subset::full(n);
        for (s, c) in terms {
            check_finite(c)?;
            if s & !full != 0 {
                let bad = subset::elems(s & !full).next().unwrap_or(n);
                return Err(Error::ElementOutOfRange { element: bad, n });
            }
            p.add_term(s, c);
        }
        Ok(p)
    }

    /// Build from explicit member lists.
    pub fn from_subsets(n: usize, terms: &[(&[usize], Complex64)]) -> Result<Self> {
        let mut v = Vec::with_capacity(terms.len());
        for (s, c) in terms {
            v.push((subset::from_elems(s, n)?, *c));
        }
        Self::from_terms(n, v)
    }

    /// Sum of `x^S` over the given masks, all with coefficient 1.
    pub fn from_support<I: IntoIterator<Item = u64>>(n: usize, masks: I) -> Result<Self> {
        Self::from_terms(n, masks.into_iter().map(|s| (s, Complex64::new(1.0, 0.0))))
    }

    pub fn constant(n: usize, c: Complex64) -> Result<Self> {
        Self::from_terms(n, [(0, c)])
    }

    pub fn variable(n: usize, e: usize) -> Result<Self> {
        if e >= n {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        Self::from_terms(n, [(1u64 << e, Complex64::new(1.0, 0.0))])
    }

    /// Elementary symmetric polynomial `E_{k,n}`.
    pub fn elementary_symmetric(k: usize, n: usize) -> Result<Self> {
        subset::check_ground(n)?;
        Self::from_support(n, subset::k_subsets(n, k))
    }

    pub(crate) fn add_term(&mut self, s: u64, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        let entry = self.terms.entry(s).or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
        if *entry == Complex64::new(0.0, 0.0) {
            self.terms.remove(&s);
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

    pub fn terms(&self) -> impl Iterator<Item = (u64, Complex64)> + '_ {
        self.terms.iter().map(|(&s, &c)| (s, c))
    }

    pub fn coeff(&self, s: u64) -> Complex64 {
        self.terms.get(&s).copied().unwrap_or_default()
    }

    pub fn support(&self) -> Vec<u64> {
        self.terms.keys().copied().collect()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|&s| subset::size(s)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(|&s| subset::size(s));
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|k| k == d),
        }
    }

    /// Sum of coefficient moduli.
    pub fn l1_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).sum()
    }

    pub fn evaluate(&self, x: &[Complex64]) -> Result<Complex64> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: x.len() });
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &[Complex64]) -> Complex64 {
        let mut total = Complex64::new(0.0, 0.0);
        for (&s, &c) in &self.terms {
            let mut t = c;
            for e in subset::elems(s) {
                t *= x[e];
            }
            total += t;
        }
        total
    }

    fn check_same_ground(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::GroundSetMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_ground(other)?;
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, k: Complex64) -> Self {
        let mut out = Self::zero_unchecked(self.n);
        for (s, c) in self.terms() {
            out.add_term(s, c * k);
        }
        out
    }

    /// Product, which must stay multiaffine: any pair of nonzero terms sharing
    /// an element is an error.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ground(other)?;
        let mut out = Self::zero_unchecked(self.n);
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                if s & t != 0 {
                    return Err(Error::NotMultiaffine);
                }
                out.add_term(s | t, a * b);
            }
        }
        Ok(out)
    }

    /// Multiply by the variable `x_e`; terms already containing `e` are an error.
    pub fn times_variable(&self, e: usize) -> Result<Self> {
        self.check_element(e)?;
        let mut out = Self::zero_unchecked(self.n);
        for (s, c) in self.terms() {
            if subset::contains(s, e) {
                return Err(Error::NotMultiaffine);
            }
            out.add_term(s | 1 << e, c);
        }
        Ok(out)
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.n {
            Err(Error::ElementOutOfRange { element: e, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Terms without `e` (`x_e = 0`), kept on the same ground set.
    pub fn without(&self, e: usize) -> Result<Self> {
        self.check_element(e)?;
        let mut out = Self::zero_unchecked(self.n);
        for (s, c) in self.terms() {
            if !subset::contains(s, e) {
                out.add_term(s, c);
            }
        }
        Ok(out)
    }

    /// `∂P/∂x_e`, kept on the same ground set.
    pub fn derivative(&self, e: usize) -> Result<Self> {
        self.check_element(e)?;
        let mut out = Self::zero_unchecked(self.n);
        for (s, c) in self.terms() {
            if subset::contains(s, e) {
                out.add_term(s & !(1 << e), c);
            }
        }
        Ok(out)
    }

    /// Remove an element that no term uses, re-indexing the ones above it.
    pub fn drop_element(&self, e: usize) -> Result<Self> {
        self.check_element(e)?;
        let mut out = Self::zero_unchecked(self.n - 1);
        for (s, c) in self.terms() {
            if subset::contains(s, e) {
                return Err(Error::Precondition(format!("element {e} still occurs in a term")));
            }
            out.add_term(subset::remove_index(s, e), c);
        }
        Ok(out)
    }

    /// Deletion `P\e`: set `x_e = 0`, result on `E∖e` (re-indexed).
    pub fn delete(&self, e: usize) -> Result<Self> {
        self.without(e)?.drop_element(e)
    }

    /// Contraction `P/e = ∂P/∂x_e`, result on `E∖e` (re-indexed).
    pub fn contract(&self, e: usize) -> Result<Self> {
        self.derivative(e)?.drop_element(e)
    }

    /// Dual `Σ a_S x^{E∖S}`.
    pub fn dual(&self) -> Self {
        let full = subset::full(self.n);
        let mut out = Self::zero_unchecked(self.n);
        for (s, c) in self.terms() {
            out.add_term(full & !s, c);
        }
        out
    }

    /// Re-embed into a ground set of size `n_new` with `map[old] = new`.
    pub fn relabel(&self, n_new: usize, map: &[usize]) -> Result<Self> {
        subset::check_ground(n_new)?;
        if map.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: map.len() });
        }
        if let Some(&bad) = map.iter().find(|&&m| m >= n_new) {
            return Err(Error::ElementOutOfRange { element: bad, n: n_new });
        }
        let mut out = Self::zero_unchecked(n_new);
        for (s, c) in self.terms() {
            out.add_term(subset::relabel(s, map), c);
        }
        Ok(out)
    }

    /// Append `k` unused elements at the end of the ground set.
    pub fn extend_ground(&self, k: usize) -> Result<Self> {
        subset::check_ground(self.n + k)?;
        Ok(Self { n: self.n + k, terms: self.terms.clone() })
    }

    /// Terms of maximal total degree.
    pub fn leading_part(&self) -> Self {
        let mut out = Self::zero_unchecked(self.n);
        if let Some(d) = self.degree() {
            for (s, c) in self.terms() {
                if subset::size(s) == d {
                    out.add_term(s, c);
                }
            }
        }
        out
    }

    /// Convolution `Σ a_S b_T x^{S△T}`.
    pub fn convolution(&self, other: &Self) -> Result<Self> {
        self.check_same_ground(other)?;
        let mut out = Self::zero_unchecked(self.n);
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                out.add_term(s ^ t, a * b);
            }
        }
        Ok(out)
    }

    pub fn to_general(&self) -> GeneralPolynomial {
        let terms = self.terms().map(|(s, c)| {
            let m: Vec<u32> = (0..self.n).map(|e| subset::contains(s, e) as u32).collect();
            (m, c)
        });
        GeneralPolynomial::from_terms_unchecked(self.n, terms)
    }

    /// Maximum coefficient-wise distance to another polynomial on the same ground set.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self.sub(other)?.terms.values().map(|c| c.norm()).fold(0.0, f64::max))
    }
}
