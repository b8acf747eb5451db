use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use super::matrix::IntMatrix;
use super::qz::Qz;
use super::snf::{smith_normal_form, smith_normal_form_with, SnfOptions};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZlinError {
    #[error("dimension mismatch: {what} expected {expected}, got {got}")]
    DimensionMismatch { what: &'static str, expected: usize, got: usize },
}

/// Solves `M · x ≡ target (mod 1)` over ℚ/ℤ, if a solution exists.
///
/// Via the Smith normal form `U M V = S`: setting `x = V y` turns the
/// system into `S y ≡ U·target`, which is solvable exactly when the
/// transformed target vanishes beyond the rank; the pinned coordinates are
/// `y_i = (U·target)_i / s_i`.
pub fn solve_qz(m: &IntMatrix, target: &[Qz]) -> Result<Option<Vec<Qz>>, ZlinError> {
    if target.len() != m.rows() {
        return Err(ZlinError::DimensionMismatch {
            what: "target length",
            expected: m.rows(),
            got: target.len(),
        });
    }
    let snf = smith_normal_form(m);
    let t = snf.apply_u_qz(target);
    for entry in t.iter().skip(snf.rank()) {
        if !entry.is_zero() {
            return Ok(None);
        }
    }
    let mut y = vec![Qz::ZERO; m.cols()];
    for i in 0..snf.rank().min(m.cols()) {
        let s = snf.diag()[i].to_u64().expect("invariant factor fits u64");
        y[i] = t[i].div_int(s);
    }
    let x = snf.apply_v_qz(&y);
    debug_assert_eq!(m.mul_qz(&x), target.iter().map(|q| q.add(&Qz::ZERO)).collect::<Vec<_>>());
    Ok(Some(x))
}

/// Invariant factors of `ℤ^ambient / column-span(M)`: the entries `> 1` of
/// the Smith diagonal, followed by one `0` per free rank. Cohomology use
/// requires the free part to be empty; that check lives with the caller.
pub fn cokernel_invariants(m: &IntMatrix, ambient_rank: usize) -> Result<Vec<BigInt>, ZlinError> {
    if m.rows() != ambient_rank {
        return Err(ZlinError::DimensionMismatch {
            what: "ambient rank",
            expected: m.rows(),
            got: ambient_rank,
        });
    }
    let snf = smith_normal_form_with(m, SnfOptions { track_row_ops: false, track_col_ops: false });
    let mut factors: Vec<BigInt> =
        snf.diag().iter().filter(|d| !d.is_one()).cloned().collect();
    let free = ambient_rank - snf.rank();
    factors.extend(std::iter::repeat(BigInt::zero()).take(free));
    Ok(factors)
}
