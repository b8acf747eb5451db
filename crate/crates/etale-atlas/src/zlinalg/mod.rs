//! Exact integer linear algebra: sparse matrices over ℤ, Smith normal
//! form with transform logs, and linear solving over ℚ/ℤ.

mod matrix;
mod qz;
mod snf;
mod solve;

pub use matrix::IntMatrix;
pub use qz::{dot_qz, qz_vec_is_zero, Qz};
pub use snf::{smith_normal_form, smith_normal_form_with, ElemOp, SnfOptions, SnfResult};
pub use solve::{cokernel_invariants, solve_qz, ZlinError};
