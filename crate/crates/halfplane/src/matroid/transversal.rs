//! Transversal matroids of set systems.

use std::collections::BTreeSet;

use super::Matroid;
use crate::error::{Error, Result};
use crate::subset;

/// A family of subsets `A_0, …, A_{k−1}` of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    n: usize,
    sets: Vec<u64>,
}

impl Presentation {
    pub fn new(n: usize, sets: Vec<u64>) -> Result<Self> {
        subset::check_ground(n)?;
        let full = subset::full(n);
        if let Some(&s) = sets.iter().find(|&&s| s & !full != 0) {
            return Err(Error::ElementOutOfRange { element: (s & !full).trailing_zeros() as usize, n });
        }
        Ok(Self { n, sets })
    }

    pub fn from_lists(n: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let masks = sets.iter().map(|s| subset::from_elems(s, n)).collect::<Result<Vec<_>>>()?;
        Self::new(n, masks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    /// Edges `(j, e)` with `e ∈ A_j`, ordered by `j` then `e`. Edge weights
    /// elsewhere in the crate follow this order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.sets.iter().enumerate().flat_map(|(j, &s)| subset::elems(s).map(move |e| (j, e))).collect()
    }

    /// Keep only the elements of `keep`, re-indexed in order.
    pub fn restrict(&self, keep: u64) -> Self {
        let gone = subset::full(self.n) & !keep;
        Self {
            n: self.n - gone.count_ones() as usize,
            sets: self.sets.iter().map(|&s| subset::compress(s & keep, gone)).collect(),
        }
    }
}

/// Maximum matching of the elements of `s` into the sets; returns its size.
pub fn max_matching(pres: &Presentation, s: u64) -> usize {
    let k = pres.sets.len();
    let mut owner: Vec<Option<usize>> = vec![None; k];
    fn augment(pres: &Presentation, e: usize, seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for j in 0..pres.sets.len() {
            if seen[j] || !subset::contains(pres.sets[j], e) {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|f| augment(pres, f, seen, owner)) {
                owner[j] = Some(e);
                return true;
            }
        }
        false
    }
    subset::elems(s)
        .filter(|&e| {
            let mut seen = vec![false; k];
            augment(pres, e, &mut seen, &mut owner)
        })
        .count()
}

/// Hall's condition restricted to the singletons and the whole set, a cheap
/// necessary filter before running the matching.
fn hall_prefilter(pres: &Presentation, s: u64) -> bool {
    let nbrs = |t: u64| pres.sets.iter().filter(|&&a| a & t != 0).count();
    subset::elems(s).all(|e| nbrs(1 << e) >= 1) && nbrs(s) >= s.count_ones() as usize
}

/// Bases are the maximum-size subsets that can be matched into distinct sets.
pub fn transversal_matroid(pres: &Presentation) -> Matroid {
    let r = max_matching(pres, subset::full(pres.n));
    let bases: BTreeSet<u64> = subset::k_subsets(pres.n, r)
        .filter(|&s| hall_prefilter(pres, s) && max_matching(pres, s) == r)
        .collect();
    Matroid::from_bases_unchecked(pres.n, bases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn obvious_presentation_is_uniform() {
        let full: Vec<usize> = (0..5).collect();
        let pres = Presentation::from_lists(5, &[full.clone(), full.clone(), full]).unwrap();
        assert_eq!(transversal_matroid(&pres), Matroid::uniform(3, 5).unwrap());
    }

    #[test]
    fn bipartite_graph_example_is_u24() {
        let pres = Presentation::from_lists(4, &[vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(transversal_matroid(&pres), Matroid::uniform(2, 4).unwrap());
    }

    #[test]
    fn whirl_presentation() {
        let pres = Presentation::from_lists(6, &[vec![3, 4, 5], vec![0, 1, 5], vec![1, 2, 3]]).unwrap();
        let w3 = Matroid::rank3_from_lines(6, &[vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]]).unwrap();
        assert_eq!(transversal_matroid(&pres), w3);
    }

    #[test]
    fn empty_sets_give_loops() {
        let pres = Presentation::from_lists(2, &[vec![0]]).unwrap();
        let m = transversal_matroid(&pres);
        assert!(m.is_loop(1) && m.is_coloop(0));
        let none = Presentation::from_lists(2, &[]).unwrap();
        assert_eq!(transversal_matroid(&none), Matroid::uniform(0, 2).unwrap());
    }

    #[test]
    fn restriction_matches_deletion() {
        let pres = Presentation::from_lists(6, &[vec![3, 4, 5], vec![0, 1, 5], vec![1, 2, 3]]).unwrap();
        let keep = 0b101101;
        let gone = subset::full(6) & !keep;
        assert_eq!(transversal_matroid(&pres.restrict(keep)), transversal_matroid(&pres).minor(gone, 0).unwrap());
    }
}
