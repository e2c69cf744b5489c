//! Matroids given by an explicit list of bases.

mod catalog;
mod graphic;
mod jump;
mod transversal;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Glued, MultiAffinePolynomial};
use crate::subset;

pub use catalog::{
    catalog, catalog_entry, catalog_names, catalog_presentation, family_names, CatalogEntry, HppStatus, Niceness,
};
pub use graphic::{graphic_matroid, Graph};
pub use jump::{constant_sum_jump_check, exchangeable};
pub use transversal::{max_matching, transversal_matroid, Presentation};

/// Failure of the basis axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// No bases at all.
    Empty,
    /// Two bases of different sizes.
    SizeMismatch { first: Vec<usize>, second: Vec<usize> },
    /// No `y ∈ b2 ∖ b1` makes `b1 − x + y` a basis.
    Exchange { b1: Vec<usize>, b2: Vec<usize>, x: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "the basis family is empty"),
            Self::SizeMismatch { first, second } => write!(f, "bases {first:?} and {second:?} differ in size"),
            Self::Exchange { b1, b2, x } => {
                write!(f, "exchange fails for B1 = {b1:?}, B2 = {b2:?}, x = {x}")
            }
        }
    }
}

/// Check nonemptiness, equal sizes and basis exchange over all pairs.
pub fn verify_basis_axioms(n: usize, bases: &[u64]) -> Result<()> {
    subset::check_ground(n)?;
    let full = subset::full(n);
    if let Some(&b) = bases.iter().find(|&&b| b & !full != 0) {
        let element = (b & !full).trailing_zeros() as usize;
        return Err(Error::ElementOutOfRange { element, n });
    }
    match find_violation(bases) {
        None => Ok(()),
        Some(v) => Err(Error::NotAMatroid(v)),
    }
}

fn find_violation(bases: &[u64]) -> Option<AxiomViolation> {
    let Some(&first) = bases.first() else {
        return Some(AxiomViolation::Empty);
    };
    if let Some(&b) = bases.iter().find(|b| b.count_ones() != first.count_ones()) {
        return Some(AxiomViolation::SizeMismatch { first: subset::to_vec(first), second: subset::to_vec(b) });
    }
    let set: HashSet<u64> = bases.iter().copied().collect();
    let mut sorted: Vec<u64> = set.iter().copied().collect();
    sorted.sort_unstable();
    for &b1 in &sorted {
        for &b2 in &sorted {
            for x in subset::elems(b1 & !b2) {
                let base = b1 & !(1u64 << x);
                if !subset::elems(b2 & !b1).any(|y| set.contains(&(base | 1u64 << y))) {
                    return Some(AxiomViolation::Exchange {
                        b1: subset::to_vec(b1),
                        b2: subset::to_vec(b2),
                        x,
                    });
                }
            }
        }
    }
    None
}

/// A matroid on `0..n` stored as its set of bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    bases: BTreeSet<u64>,
}

impl Matroid {
    /// Build a matroid, checking the basis axioms.
    pub fn from_bases<I: IntoIterator<Item = u64>>(n: usize, bases: I) -> Result<Self> {
        let bases: BTreeSet<u64> = bases.into_iter().collect();
        let list: Vec<u64> = bases.iter().copied().collect();
        verify_basis_axioms(n, &list)?;
        Ok(Self { n, bases })
    }

    pub(crate) fn from_bases_unchecked(n: usize, bases: BTreeSet<u64>) -> Self {
        debug_assert!(find_violation(&bases.iter().copied().collect::<Vec<_>>()).is_none());
        Self { n, bases }
    }

    /// Bases given as element lists.
    pub fn from_lists(n: usize, bases: &[Vec<usize>]) -> Result<Self> {
        let masks = bases.iter().map(|b| subset::from_elems(b, n)).collect::<Result<Vec<_>>>()?;
        Self::from_bases(n, masks)
    }

    /// The uniform matroid `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        subset::check_ground(n)?;
        if r > n {
            return Err(Error::Precondition(format!("rank {r} exceeds ground set size {n}")));
        }
        Ok(Self { n, bases: subset::k_subsets(n, r).collect() })
    }

    /// Simple rank-3 matroid whose nontrivial lines are `lines`: bases are the
    /// 3-sets not contained in a line.
    pub fn rank3_from_lines(n: usize, lines: &[Vec<usize>]) -> Result<Self> {
        let masks = lines.iter().map(|l| subset::from_elems(l, n)).collect::<Result<Vec<_>>>()?;
        let bases = subset::k_subsets(n, 3).filter(|&t| masks.iter().all(|&l| t & l != t));
        Self::from_bases(n, bases)
    }

    /// All `r`-subsets except `non_bases`, where `r` is the size of the latter.
    pub fn from_non_bases(n: usize, r: usize, non_bases: &[Vec<usize>]) -> Result<Self> {
        let masks: HashSet<u64> = non_bases.iter().map(|b| subset::from_elems(b, n)).collect::<Result<_>>()?;
        Self::from_bases(n, subset::k_subsets(n, r).filter(|b| !masks.contains(b)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.bases.iter().next().map_or(0, |b| b.count_ones() as usize)
    }

    pub fn bases(&self) -> impl Iterator<Item = u64> + '_ {
        self.bases.iter().copied()
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, s: u64) -> bool {
        self.bases.contains(&s)
    }

    pub fn is_independent(&self, s: u64) -> bool {
        self.bases.iter().any(|&b| b & s == s)
    }

    /// Rank of a subset: the largest intersection with a basis.
    pub fn rank_of(&self, s: u64) -> usize {
        self.bases.iter().map(|&b| (b & s).count_ones() as usize).max().unwrap_or(0)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.bases.iter().all(|&b| !subset::contains(b, e))
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.bases.iter().all(|&b| subset::contains(b, e))
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.n {
            return Err(Error::ElementOutOfRange { element: e, n: self.n });
        }
        Ok(())
    }

    /// Complement every basis.
    pub fn dual(&self) -> Self {
        let full = subset::full(self.n);
        Self { n: self.n, bases: self.bases.iter().map(|&b| full & !b).collect() }
    }

    /// `M / contract ∖ delete`, re-indexing the remaining elements in order.
    ///
    /// A dependent `contract` set is handled by contracting a maximal
    /// independent subset of it and deleting the rest.
    pub fn minor(&self, delete: u64, contract: u64) -> Result<Self> {
        let full = subset::full(self.n);
        if (delete | contract) & !full != 0 {
            let element = ((delete | contract) & !full).trailing_zeros() as usize;
            return Err(Error::ElementOutOfRange { element, n: self.n });
        }
        if delete & contract != 0 {
            return Err(Error::Precondition("deleted and contracted sets overlap".into()));
        }
        let mut indep = 0u64;
        for e in subset::elems(contract) {
            if self.is_independent(indep | 1 << e) {
                indep |= 1 << e;
            }
        }
        let gone = delete | contract;
        let candidates: Vec<u64> = self.bases.iter().copied().filter(|&b| b & indep == indep).collect();
        let least = candidates.iter().map(|&b| (b & delete).count_ones()).min().unwrap_or(0);
        let bases = candidates
            .iter()
            .filter(|&&b| (b & delete).count_ones() == least)
            .map(|&b| subset::compress(b & !gone, gone))
            .collect();
        Ok(Self { n: self.n - gone.count_ones() as usize, bases })
    }

    pub fn delete(&self, e: usize) -> Result<Self> {
        self.check_element(e)?;
        self.minor(1 << e, 0)
    }

    pub fn contract(&self, e: usize) -> Result<Self> {
        self.check_element(e)?;
        self.minor(0, 1 << e)
    }

    /// Direct sum: `other`'s elements follow this matroid's.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        subset::check_ground(n)?;
        let mut bases = BTreeSet::new();
        for &a in &self.bases {
            for &b in &other.bases {
                bases.insert(a | b << self.n);
            }
        }
        Ok(Self { n, bases })
    }

    /// Add `h` as a basis (relaxing a circuit-hyperplane).
    pub fn relax(&self, h: u64) -> Result<Self> {
        if h & !subset::full(self.n) != 0 {
            return Err(Error::ElementOutOfRange { element: (h & !subset::full(self.n)).trailing_zeros() as usize, n: self.n });
        }
        if self.bases.contains(&h) {
            return Err(Error::Precondition(format!("{:?} is already a basis", subset::to_vec(h))));
        }
        if h.count_ones() as usize != self.rank() {
            return Err(Error::Precondition(format!("{:?} does not have the rank as size", subset::to_vec(h))));
        }
        let mut bases = self.bases.clone();
        bases.insert(h);
        Self::from_bases(self.n, bases)
    }

    /// Add a free element `n` (the free extension).
    pub fn free_extension(&self) -> Result<Self> {
        let n = self.n + 1;
        subset::check_ground(n)?;
        let truncated: BTreeSet<u64> =
            self.bases.iter().flat_map(|&b| subset::elems(b).map(move |f| b & !(1 << f))).collect();
        let mut bases = self.bases.clone();
        bases.extend(truncated.into_iter().map(|t| t | 1 << self.n));
        Ok(Self { n, bases })
    }

    /// Full-rank union: all `B1 ∪ B2` over disjoint pairs of bases.
    pub fn union_fullrank(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch(self.n, other.n));
        }
        let mut bases = BTreeSet::new();
        for &a in &self.bases {
            for &b in &other.bases {
                if a & b == 0 {
                    bases.insert(a | b);
                }
            }
        }
        if bases.is_empty() {
            return Err(Error::RankDeficientUnion);
        }
        Self::from_bases(self.n, bases)
    }

    /// `Σ_B x^B`.
    pub fn basis_polynomial(&self) -> MultiAffinePolynomial {
        MultiAffinePolynomial::from_support(self.n, self.bases.iter().copied()).expect("ground set already checked")
    }

    /// `Σ_I x^I` over independent sets.
    pub fn independent_set_polynomial(&self) -> MultiAffinePolynomial {
        let mut indep = BTreeSet::new();
        for &b in &self.bases {
            let mut s = b;
            loop {
                indep.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & b;
            }
        }
        MultiAffinePolynomial::from_support(self.n, indep).expect("ground set already checked")
    }

    /// A bijection `map` of the ground sets carrying the bases of `self` onto
    /// those of `other`, if one exists. Backtracking with elements matched
    /// by the number of bases containing them.
    pub fn isomorphism(&self, other: &Matroid) -> Option<Vec<usize>> {
        if self.n != other.n || self.bases.len() != other.bases.len() || self.rank() != other.rank() {
            return None;
        }
        let degree = |m: &Matroid| -> Vec<usize> {
            (0..m.n).map(|e| m.bases.iter().filter(|&&b| subset::contains(b, e)).count()).collect()
        };
        let (da, db) = (degree(self), degree(other));
        let mut map = vec![usize::MAX; self.n];
        let mut used = 0u64;
        fn extend(
            a: &Matroid,
            b: &Matroid,
            da: &[usize],
            db: &[usize],
            map: &mut Vec<usize>,
            used: &mut u64,
            i: usize,
        ) -> bool {
            if i == a.n {
                return a.bases.iter().all(|&x| b.bases.contains(&subset::relabel(x, map)));
            }
            for j in 0..a.n {
                if subset::contains(*used, j) || da[i] != db[j] {
                    continue;
                }
                map[i] = j;
                *used |= 1 << j;
                // bases inside the mapped prefix must stay bases
                let prefix = subset::full(i + 1);
                let ok = a.bases.iter().filter(|&&x| x & !prefix == 0).all(|&x| b.bases.contains(&subset::relabel(x, map)));
                if ok && extend(a, b, da, db, map, used, i + 1) {
                    return true;
                }
                *used &= !(1 << j);
            }
            map[i] = usize::MAX;
            false
        }
        extend(self, other, &da, &db, &mut map, &mut used, 0).then_some(map)
    }

    pub fn is_isomorphic(&self, other: &Matroid) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Connectivity through the fundamental-circuit graph of one basis.
    ///
    /// One element is connected; otherwise a loop, a coloop or rank 0 makes
    /// the matroid disconnected. The empty matroid counts as connected.
    pub fn connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let Some(&b) = self.bases.iter().next() else {
            return false;
        };
        // union-find over elements; i ∈ B and j ∉ B are adjacent when B − i + j is a basis
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let outside = subset::full(self.n) & !b;
        for i in subset::elems(b) {
            for j in subset::elems(outside) {
                if self.bases.contains(&(b & !(1 << i) | 1 << j)) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        let root = find(&mut parent, 0);
        (1..self.n).all(|e| find(&mut parent, e) == root)
    }

    /// Parallel connection along `e` (in `self`) and `e_other` (in `other`).
    ///
    /// Element numbering follows [`crate::poly::parallel_connection`].
    pub fn parallel_connection(&self, e: usize, other: &Self, e_other: usize) -> Result<Glued<Self>> {
        self.check_element(e)?;
        other.check_element(e_other)?;
        if self.is_loop(e) && other.is_loop(e_other) {
            return Err(Error::Precondition("shared element is a loop in both matroids".into()));
        }
        let q_map = subset::gluing_map(self.n, e, other.n, e_other)?;
        let n = self.n + other.n - 1;
        let bit = 1u64 << e;
        let mut bases = BTreeSet::new();
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                let b2 = subset::relabel(b2, &q_map);
                match (b1 & bit != 0, b2 & bit != 0) {
                    (false, true) | (true, false) => {
                        bases.insert((b1 | b2) & !bit);
                    }
                    (true, true) => {
                        bases.insert(b1 | b2);
                    }
                    (false, false) => {}
                }
            }
        }
        Ok(Glued { value: Self { n, bases }, q_map })
    }

    /// Series connection, computed as the dual of the parallel connection of duals.
    pub fn series_connection(&self, e: usize, other: &Self, e_other: usize) -> Result<Glued<Self>> {
        self.check_element(e)?;
        other.check_element(e_other)?;
        if self.is_coloop(e) && other.is_coloop(e_other) {
            return Err(Error::Precondition("shared element is a coloop in both matroids".into()));
        }
        let g = self.dual().parallel_connection(e, &other.dual(), e_other)?;
        Ok(Glued { value: g.value.dual(), q_map: g.q_map })
    }

    /// 2-sum: parallel connection with the shared element deleted. `q_map`
    /// follows [`crate::poly::two_sum`].
    pub fn two_sum(&self, e: usize, other: &Self, e_other: usize) -> Result<Glued<Self>> {
        self.check_element(e)?;
        other.check_element(e_other)?;
        for (m, x, which) in [(self, e, "first"), (other, e_other, "second")] {
            if m.is_loop(x) || m.is_coloop(x) {
                return Err(Error::Precondition(format!("shared element is a loop or coloop in the {which} matroid")));
            }
        }
        let g = self.parallel_connection(e, other, e_other)?;
        let value = g.value.delete(e)?;
        let q_map = g
            .q_map
            .iter()
            .map(|&i| match i.cmp(&e) {
                std::cmp::Ordering::Less => i,
                std::cmp::Ordering::Equal => usize::MAX,
                std::cmp::Ordering::Greater => i - 1,
            })
            .collect();
        Ok(Glued { value, q_map })
    }

    /// Bases of the principal truncation by `f`: `B ∖ x` for `x ∈ B ∩ f`.
    pub fn truncation_bases(&self, f: u64) -> BTreeSet<u64> {
        self.bases.iter().flat_map(|&b| subset::elems(b & f).map(move |x| b & !(1 << x))).collect()
    }

    /// Bases of the principal cotruncation by `d`: `B ∪ x` for `x ∈ d ∖ B`.
    pub fn cotruncation_bases(&self, d: u64) -> BTreeSet<u64> {
        self.bases.iter().flat_map(|&b| subset::elems(d & !b).map(move |x| b | 1 << x)).collect()
    }
}

/// The matroid whose bases are the support of a homogeneous multiaffine polynomial.
pub fn support_matroid(p: &MultiAffinePolynomial) -> Result<Matroid> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Matroid::from_bases(p.n(), p.support())
}

/// Coefficient-1 check used when comparing polynomials with basis families.
pub fn is_basis_polynomial_of(p: &MultiAffinePolynomial, m: &Matroid) -> bool {
    p.n() == m.n() && p.len() == m.num_bases() && m.bases().all(|b| p.coeff(b) == Complex64::new(1.0, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, bases: &[&[usize]]) -> Matroid {
        Matroid::from_lists(n, &bases.iter().map(|b| b.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn axiom_examples() {
        assert!(verify_basis_axioms(3, &[0b011, 0b101, 0b110]).is_ok());
        assert_eq!(
            verify_basis_axioms(4, &[0b0011, 0b1100]),
            Err(Error::NotAMatroid(AxiomViolation::Exchange { b1: vec![0, 1], b2: vec![2, 3], x: 0 }))
        );
        assert_eq!(verify_basis_axioms(3, &[]), Err(Error::NotAMatroid(AxiomViolation::Empty)));
        assert!(matches!(verify_basis_axioms(2, &[0b100]), Err(Error::ElementOutOfRange { .. })));
    }

    #[test]
    fn duals_minors_sums() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.dual(), Matroid::uniform(1, 3).unwrap());
        let u11 = Matroid::uniform(1, 1).unwrap();
        assert_eq!(u11.direct_sum(&u11).unwrap(), m(2, &[&[0, 1]]));
        // contracting a dependent set
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(u12.minor(0, 0b11).unwrap(), Matroid::uniform(0, 0).unwrap());
        assert_eq!(u23.delete(0).unwrap(), m(2, &[&[0, 1]]));
        assert_eq!(u23.contract(0).unwrap(), Matroid::uniform(1, 2).unwrap());
        assert!(u23.minor(1, 1).is_err());
    }

    #[test]
    fn connections() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(u12.parallel_connection(0, &u12, 0).unwrap().value, Matroid::uniform(1, 3).unwrap());
        assert_eq!(u12.series_connection(0, &u12, 0).unwrap().value, Matroid::uniform(2, 3).unwrap());
        let u23 = Matroid::uniform(2, 3).unwrap();
        let t = u23.two_sum(0, &u23, 0).unwrap().value;
        assert_eq!(t, Matroid::uniform(3, 4).unwrap());
        let coloop = Matroid::uniform(1, 1).unwrap();
        assert!(coloop.two_sum(0, &u23, 0).is_err());
    }

    #[test]
    fn relax_and_union() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert!(u23.relax(0b011).is_err());
        let u13 = Matroid::uniform(1, 3).unwrap();
        assert_eq!(u13.union_fullrank(&u13).unwrap(), u23);
        assert_eq!(u23.union_fullrank(&u23), Err(Error::RankDeficientUnion));
        let zero = Matroid::uniform(0, 3).unwrap();
        assert_eq!(u23.union_fullrank(&zero).unwrap(), u23);
    }

    #[test]
    fn polynomials() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        let want = MultiAffinePolynomial::from_support(2, [0, 1, 2]).unwrap();
        assert_eq!(u12.independent_set_polynomial(), want);
        let p = MultiAffinePolynomial::from_subsets(
            3,
            &[(&[0, 1], Complex64::new(2.0, 0.0)), (&[0, 2], Complex64::new(3.0, 0.0)), (&[1, 2], Complex64::new(5.0, 0.0))],
        )
        .unwrap();
        assert_eq!(support_matroid(&p).unwrap(), Matroid::uniform(2, 3).unwrap());
        let q = MultiAffinePolynomial::from_support(4, [0b0011, 0b1100]).unwrap();
        assert!(matches!(support_matroid(&q), Err(Error::NotAMatroid(_))));
    }

    #[test]
    fn connectivity() {
        assert!(Matroid::uniform(2, 3).unwrap().connected());
        let u11 = Matroid::uniform(1, 1).unwrap();
        assert!(u11.connected());
        assert!(!u11.direct_sum(&u11).unwrap().connected());
        assert!(!Matroid::uniform(0, 2).unwrap().connected());
        assert!(Matroid::uniform(0, 1).unwrap().connected());
    }

    #[test]
    fn free_extension_of_uniform() {
        assert_eq!(Matroid::uniform(2, 3).unwrap().free_extension().unwrap(), Matroid::uniform(2, 4).unwrap());
    }
}
