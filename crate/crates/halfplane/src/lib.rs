//! Multiaffine polynomials, matroids and the half-plane property.
//!
//! A polynomial has the half-plane property (HPP) when it does not vanish
//! with every variable in the open right half-plane. The crate provides the
//! polynomial algebra, a matroid engine with a catalog of small matroids,
//! randomized and exact HPP tests, determinantal and transversal
//! representations, and a reproduction harness for the worked examples.

pub mod error;
pub mod hpp;
pub mod io;
pub mod matroid;
pub mod poly;
pub mod repr;
pub mod repro;
pub mod subset;

pub use error::{Error, Result};
pub use hpp::{HppReport, Method, ToleranceConfig, Verdict};
pub use matroid::Matroid;
pub use poly::{GeneralPolynomial, MultiAffinePolynomial};
