//! Normalized bar-complex group cohomology `Hⁿ(G; ℚ/ℤ)` for `n ≤ 5`,
//! with explicit cocycle representatives and the standard maps:
//! restriction, inflation, trivialization and class coordinates.
//!
//! Coefficients live in ℚ/ℤ with trivial action, the exact stand-in for
//! `k^×` over an algebraically closed field of characteristic zero: every
//! torsion class is realized and all arithmetic is exact.

mod basis;
mod cochain;
mod maps;

use thiserror::Error;

pub use basis::{cohomology_group, CohomologyGroup};
pub use cochain::{coboundary_matrix, Cochain};
pub use maps::{inflate, inflation_preimage, pullback, restrict, trivialize};

pub(crate) use cochain::normalized_dim;

/// Decodes a normalized-tuple index into element indices (for report and
/// file writers).
pub(crate) fn decode_tuple_pub(order: usize, idx: usize, buf: &mut [usize]) {
    cochain::index_tuple(order, idx, buf);
}

use crate::zlinalg::ZlinError;

/// Highest degree for which a cohomology basis may be requested; the
/// cocycle check at degree 5 already needs the dimension-6 bar layer.
pub const MAX_DEGREE: usize = 5;

/// Default cap on normalized bar-complex cells, overridable through the
/// `ETALE_ATLAS_BUDGET` environment variable.
const DEFAULT_BUDGET: usize = 1 << 25;

pub(crate) fn budget_limit() -> usize {
    std::env::var("ETALE_ATLAS_BUDGET")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohError {
    #[error("{what} too large: {got} exceeds budget {limit}")]
    TooLarge { what: &'static str, limit: usize, got: usize },
    #[error("cochain belongs to a different group: {context}")]
    WrongParent { context: &'static str },
    #[error("expected a cocycle (d gave a nonzero result)")]
    NotACocycle,
    #[error("degree {degree} out of supported range {min}..={max}")]
    DegreeOutOfRange { degree: usize, min: usize, max: usize },
    #[error("expected {expected} cochain values, got {got}")]
    ValueCount { expected: usize, got: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Zlin(#[from] ZlinError),
}
