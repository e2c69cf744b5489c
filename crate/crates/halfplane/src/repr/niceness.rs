//! Exact solution of the linear systems that make principal truncations
//! and cotruncations nice.

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NicenessStatus {
    /// A nonnegative solution exists.
    Nice,
    /// Solutions exist, none nonnegative.
    InfeasibleNonneg,
    Inconsistent,
}

fn ser_rationals<S: Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

/// Outcome of a niceness solve.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NicenessSolution {
    pub status: NicenessStatus,
    /// One weight per ground-set element, zero outside the chosen set. For
    /// `Nice` a nonnegative solution; for `InfeasibleNonneg` the solution with
    /// free variables set to zero; empty for `Inconsistent`.
    #[serde(serialize_with = "ser_rationals")]
    pub weights: Vec<BigRational>,
    pub weights_f64: Vec<f64>,
    pub equations: usize,
    /// Dimension of the affine solution set.
    pub kernel_dim: usize,
    /// Set when the kernel was too large for vertex enumeration and the
    /// nonnegative point came from a floating-point search.
    pub heuristic: bool,
}

/// Reduced row echelon form of `[a | b]`; returns pivot columns, or `None`
/// if inconsistent.
fn rref(a: &mut [Vec<BigRational>], b: &mut [BigRational]) -> Option<Vec<usize>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        b[r] *= &inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &a[r][j] * &f;
                    a[i][j] -= t;
                }
                let t = &b[r] * &f;
                b[i] -= t;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(pivots)
}

/// Affine solution set `x0 + span(kernel)` of `a·x = b`.
struct Affine {
    x0: Vec<BigRational>,
    kernel: Vec<Vec<BigRational>>,
}

fn solve_affine(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>, cols: usize) -> Option<Affine> {
    let pivots = rref(&mut a, &mut b)?;
    let mut x0 = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x0[c] = b[i].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -a[i][f].clone();
            }
            v
        })
        .collect();
    Some(Affine { x0, kernel })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    subset::k_subsets(n, k).map(subset::to_vec).collect()
}

/// The point of the affine set closest to the origin, computed exactly.
fn min_norm(aff: &Affine) -> Vec<BigRational> {
    let d = aff.kernel.len();
    let dot = |u: &[BigRational], v: &[BigRational]| -> BigRational { u.iter().zip(v).map(|(a, b)| a * b).sum() };
    let gram: Vec<Vec<BigRational>> =
        (0..d).map(|s| (0..d).map(|t| dot(&aff.kernel[s], &aff.kernel[t])).collect()).collect();
    let rhs: Vec<BigRational> = aff.kernel.iter().map(|k| dot(k, &aff.x0)).collect();
    let mut x = aff.x0.clone();
    if let Some(c) = solve_affine(gram, rhs, d) {
        for (t, coef) in c.x0.iter().enumerate() {
            for (xi, ki) in x.iter_mut().zip(&aff.kernel[t]) {
                *xi -= coef * ki;
            }
        }
    }
    x
}

/// A nonnegative point of the affine set: the minimum-norm point when it is
/// nonnegative, otherwise a search over the vertices of its
/// intersection with the orthant: each vertex zeroes `kernel_dim`
/// coordinates.
fn nonneg_vertex(aff: &Affine) -> Option<Vec<BigRational>> {
    let d = aff.kernel.len();
    let m = aff.x0.len();
    let closest = min_norm(aff);
    if closest.iter().all(|v| !v.is_negative()) {
        return Some(closest);
    }
    for zeros in combinations(m, d) {
        // solve x0[z] + Σ_t kernel[t][z]·c_t = 0 for the d coefficients
        let a: Vec<Vec<BigRational>> = zeros.iter().map(|&z| aff.kernel.iter().map(|k| k[z].clone()).collect()).collect();
        let b: Vec<BigRational> = zeros.iter().map(|&z| -aff.x0[z].clone()).collect();
        let Some(sol) = solve_affine(a, b, d) else {
            continue;
        };
        if !sol.kernel.is_empty() {
            continue;
        }
        let mut x = aff.x0.clone();
        for (t, coef) in sol.x0.iter().enumerate() {
            for (xi, ki) in x.iter_mut().zip(&aff.kernel[t]) {
                *xi += coef * ki;
            }
        }
        if x.iter().all(|v| !v.is_negative()) {
            return Some(x);
        }
    }
    None
}

/// Projected-gradient nonnegative least squares on `a·x = 1`; returns a point
/// with residual below `1e-10`, if found.
fn nonneg_least_squares(a: &[Vec<f64>]) -> Option<Vec<f64>> {
    let cols = a.first().map_or(0, Vec::len);
    let lip: f64 = a.iter().map(|r| r.iter().map(|v| v * v).sum::<f64>()).sum::<f64>().max(1.0);
    let mut x = vec![0.0; cols];
    for _ in 0..200_000 {
        let res: Vec<f64> = a.iter().map(|r| r.iter().zip(&x).map(|(u, v)| u * v).sum::<f64>() - 1.0).collect();
        if res.iter().map(|v| v * v).sum::<f64>().sqrt() < 1e-10 {
            return Some(x);
        }
        for (j, xj) in x.iter_mut().enumerate() {
            let g: f64 = a.iter().zip(&res).map(|(r, e)| r[j] * e).sum();
            *xj = (*xj - g / lip).max(0.0);
        }
    }
    None
}

fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Solve `Σ_{f ∈ vars, row[f]} λ_f = 1` for each incidence row.
fn solve_system(n: usize, vars: u64, rows: Vec<u64>) -> Result<NicenessSolution> {
    if vars == 0 {
        return Err(Error::Precondition("the weighted set must be nonempty".into()));
    }
    let var_list = subset::to_vec(vars);
    let m = var_list.len();
    let equations = rows.len();
    let a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|&r| var_list.iter().map(|&f| if subset::contains(r, f) { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    let b = vec![BigRational::one(); equations];
    let expand = |x: &[BigRational]| -> Vec<BigRational> {
        let mut w = vec![BigRational::zero(); n];
        for (i, &f) in var_list.iter().enumerate() {
            w[f] = x[i].clone();
        }
        w
    };
    let float_rows: Vec<Vec<f64>> = a.iter().map(|r| r.iter().map(to_f64).collect()).collect();
    let Some(aff) = solve_affine(a, b, m) else {
        return Ok(NicenessSolution {
            status: NicenessStatus::Inconsistent,
            weights: Vec::new(),
            weights_f64: Vec::new(),
            equations,
            kernel_dim: 0,
            heuristic: false,
        });
    };
    let kernel_dim = aff.kernel.len();
    let (status, x, heuristic) = if kernel_dim <= 6 {
        match nonneg_vertex(&aff) {
            Some(x) => (NicenessStatus::Nice, x, false),
            None => (NicenessStatus::InfeasibleNonneg, aff.x0.clone(), false),
        }
    } else {
        match nonneg_least_squares(&float_rows) {
            Some(x) => {
                let q = x.iter().map(|&v| BigRational::from_float(v).unwrap_or_else(BigRational::zero)).collect();
                (NicenessStatus::Nice, q, true)
            }
            None => (NicenessStatus::InfeasibleNonneg, aff.x0.clone(), true),
        }
    };
    let weights = expand(&x);
    let weights_f64 = weights.iter().map(to_f64).collect();
    Ok(NicenessSolution { status, weights, weights_f64, equations, kernel_dim, heuristic })
}

/// Weights `λ_f` (`f ∈ flat`) with `Σ_{f: B ∪ f ∈ B(M)} λ_f = 1` for every
/// basis `B` of the principal truncation by `flat`.
pub fn nice_principal_solve(m: &Matroid, flat: u64) -> Result<NicenessSolution> {
    check_subset(m, flat)?;
    let rows: Vec<u64> = m
        .truncation_bases(flat)
        .into_iter()
        .map(|b| subset::elems(flat & !b).filter(|&f| m.is_basis(b | 1 << f)).fold(0u64, |acc, f| acc | 1 << f))
        .collect();
    solve_system(m.n(), flat, rows)
}

/// Weights `λ_d` (`d ∈ set`) with `Σ_{d: B ∖ d ∈ B(M)} λ_d = 1` for every
/// basis `B` of the principal cotruncation by `set`.
pub fn nice_cotruncation_solve(m: &Matroid, set: u64) -> Result<NicenessSolution> {
    check_subset(m, set)?;
    let rows: Vec<u64> = m
        .cotruncation_bases(set)
        .into_iter()
        .map(|b| subset::elems(set & b).filter(|&d| m.is_basis(b & !(1 << d))).fold(0u64, |acc, d| acc | 1 << d))
        .collect();
    solve_system(m.n(), set, rows)
}

fn check_subset(m: &Matroid, s: u64) -> Result<()> {
    let extra = s & !subset::full(m.n());
    if extra != 0 {
        return Err(Error::ElementOutOfRange { element: extra.trailing_zeros() as usize, n: m.n() });
    }
    Ok(())
}

/// `p/q` as an exact rational.
#[cfg(test)]
fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}
