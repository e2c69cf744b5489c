use thiserror::Error;

use crate::matroid::AxiomViolation;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ground set of size {0} exceeds the 63-element limit")]
    GroundSetTooLarge(usize),
    #[error("element {element} out of range for ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ground sets differ: {0} vs {1}")]
    GroundSetMismatch(usize, usize),
    #[error("negative or non-finite weight {value} at index {index}")]
    NegativeWeight { index: usize, value: f64 },
    #[error("coefficient is not finite")]
    NonFinite,
    #[error("polynomial is not multiaffine")]
    NotMultiaffine,
    #[error("polynomial is not affine in element {0}")]
    NotAffineIn(usize),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("polarization degree {given} for element {element} is below its degree {needed}")]
    DegreeTooSmall { element: usize, given: usize, needed: usize },
    #[error("polynomial is not symmetric under permutations of its variables")]
    NotSymmetric,
    #[error("point {0} lies outside the region")]
    PointOutsideRegion(usize),
    #[error("no root of the diagonal equation lies in the region (closest distance {0:e})")]
    NoRootInRegion(f64),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("root iteration did not converge after {iterations} iterations (residual {residual:e})")]
    RootsNotConverged { iterations: usize, residual: f64 },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("not a matroid: {0}")]
    NotAMatroid(AxiomViolation),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("matroid union is rank deficient: no pair of disjoint bases")]
    RankDeficientUnion,
    #[error("coefficients are not nonnegative reals after phase normalization")]
    NotNonnegative,
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
