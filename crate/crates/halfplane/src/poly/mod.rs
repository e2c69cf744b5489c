//! Sparse polynomial algebra over a finite ground set.

mod analysis;
mod construct;
mod general;
mod multiaffine;

pub use analysis::{
    apply_diff_operator, fettweis_transform, gws_witness, polarize, same_phase, PhaseCheck, Polarization, Region,
};
pub use construct::{
    parallel_connection, principal_coextension, principal_cotruncation, principal_extension, principal_truncation,
    series_connection, two_sum, Glued,
};
pub use general::GeneralPolynomial;
pub use multiaffine::MultiAffinePolynomial;
