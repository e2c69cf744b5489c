//! Subsets of a ground set `0..n` stored as `u64` bitmasks.

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 63;

pub fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        Err(Error::GroundSetTooLarge(n))
    } else {
        Ok(())
    }
}

/// Mask of the whole ground set.
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn from_elems(elems: &[usize], n: usize) -> Result<u64> {
    let mut m = 0u64;
    for &e in elems {
        if e >= n {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        m |= 1 << e;
    }
    Ok(m)
}

pub fn contains(mask: u64, e: usize) -> bool {
    mask >> e & 1 == 1
}

pub fn size(mask: u64) -> usize {
    mask.count_ones() as usize
}

/// Members in increasing order.
pub fn elems(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(e)
        }
    })
}

pub fn to_vec(mask: u64) -> Vec<usize> {
    elems(mask).collect()
}

/// Drop element `e` (assumed absent or ignored) and shift higher elements down.
pub fn remove_index(mask: u64, e: usize) -> u64 {
    let low = mask & ((1u64 << e) - 1);
    let high = (mask >> (e + 1)) << e;
    low | high
}

/// Open a gap at position `e`, shifting elements `>= e` up by one.
pub fn insert_index(mask: u64, e: usize) -> u64 {
    let low = mask & ((1u64 << e) - 1);
    let high = (mask >> e) << (e + 1);
    low | high
}

/// Apply an element map `map[old] = new`.
pub fn relabel(mask: u64, map: &[usize]) -> u64 {
    elems(mask).fold(0, |acc, e| acc | 1 << map[e])
}

/// Remove all elements of `gone` and compact the rest, preserving order.
pub fn compress(mask: u64, gone: u64) -> u64 {
    let mut out = 0u64;
    let mut j = 0;
    for e in 0..64 {
        if contains(gone, e) {
            continue;
        }
        if contains(mask, e) {
            out |= 1 << j;
        }
        j += 1;
    }
    out
}

/// All `k`-subsets of `0..n` in increasing numeric order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = full(n);
    let mut cur = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some(full(k))
    };
    std::iter::from_fn(move || {
        let v = cur?;
        cur = if v == 0 {
            None
        } else {
            let c = v & v.wrapping_neg();
            let r = v + c;
            let next = (((r ^ v) >> 2) / c) | r;
            if next > limit || next < v {
                None
            } else {
                Some(next)
            }
        };
        Some(v)
    })
}

/// Index map for gluing a second structure onto a first along one shared element.
///
/// The shared element keeps index `e_first`; the other elements of the second
/// structure follow the first's `n_first` elements in ascending order.
pub fn gluing_map(n_first: usize, e_first: usize, n_second: usize, e_second: usize) -> Result<Vec<usize>> {
    if e_first >= n_first {
        return Err(Error::ElementOutOfRange { element: e_first, n: n_first });
    }
    if e_second >= n_second {
        return Err(Error::ElementOutOfRange { element: e_second, n: n_second });
    }
    check_ground(n_first + n_second - 1)?;
    let mut next = n_first;
    Ok((0..n_second)
        .map(|j| {
            if j == e_second {
                e_first
            } else {
                next += 1;
                next - 1
            }
        })
        .collect())
}
