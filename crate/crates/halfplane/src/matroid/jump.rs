//! Exchange conditions on supports of general (not multiaffine) polynomials.

use std::collections::HashSet;

use crate::error::{Error, Result};

fn check_member(s: &HashSet<Vec<u32>>, m: &[u32]) -> Result<()> {
    if s.contains(m) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{m:?} is not in the set")))
    }
}

fn exchangeable_in(s: &HashSet<Vec<u32>>, m: &[u32], target: &[u32]) -> bool {
    let mut probe = m.to_vec();
    (0..m.len()).filter(|&e| m[e] > target[e]).all(|e| {
        (0..m.len()).filter(|&f| m[f] < target[f]).any(|f| {
            probe[e] -= 1;
            probe[f] += 1;
            let hit = s.contains(&probe);
            probe[e] += 1;
            probe[f] -= 1;
            hit
        })
    })
}

/// Whether `m` is exchangeable towards `target` in `s`: every `e` with
/// `m(e) > target(e)` admits `f` with `m(f) < target(f)` and `m − δ_e + δ_f ∈ s`.
pub fn exchangeable(s: &[Vec<u32>], m: &[u32], target: &[u32]) -> Result<bool> {
    let set: HashSet<Vec<u32>> = s.iter().cloned().collect();
    check_member(&set, m)?;
    check_member(&set, target)?;
    if m.len() != target.len() {
        return Err(Error::DimensionMismatch { expected: m.len(), got: target.len() });
    }
    Ok(exchangeable_in(&set, m, target))
}

/// Constant-sum jump-system test: every ordered pair is exchangeable in `s`
/// and, after reflecting through the degree cap `cap` (`m ↦ cap − m`), in the
/// reflected set as well.
pub fn constant_sum_jump_check(s: &[Vec<u32>], cap: &[u32]) -> Result<bool> {
    let Some(first) = s.first() else {
        return Ok(true);
    };
    let n = cap.len();
    let total: u32 = first.iter().sum();
    for m in s {
        if m.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: m.len() });
        }
        if m.iter().sum::<u32>() != total {
            return Err(Error::Precondition("members do not have a constant sum".into()));
        }
        if m.iter().zip(cap).any(|(a, c)| a > c) {
            return Err(Error::Precondition(format!("{m:?} exceeds the degree cap {cap:?}")));
        }
    }
    let set: HashSet<Vec<u32>> = s.iter().cloned().collect();
    let reflect = |m: &[u32]| -> Vec<u32> { m.iter().zip(cap).map(|(a, c)| c - a).collect() };
    let mirrored: HashSet<Vec<u32>> = set.iter().map(|m| reflect(m)).collect();
    let list: Vec<&Vec<u32>> = set.iter().collect();
    for &a in &list {
        for &b in &list {
            if !exchangeable_in(&set, a, b) || !exchangeable_in(&mirrored, &reflect(a), &reflect(b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
