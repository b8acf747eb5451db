//! Exact classification of connected étale and Lagrangian algebras in the
//! Drinfeld centers of finite (twisted) gauge theories.
//!
//! The crate is organised in layers:
//!
//! * [`zlinalg`] — exact integer linear algebra: sparse matrices, Smith
//!   normal form, and linear solving over ℚ/ℤ.
//! * [`group`] — finite groups as Cayley tables, with subgroup lattices,
//!   conjugacy, centralizers, quotients and homomorphism enumeration.
//! * [`cohomology`] — normalized bar-complex cohomology `Hⁿ(G; ℚ/ℤ)` with
//!   explicit cocycle representatives, restriction, inflation and
//!   trivialization.
//! * [`transgression`] — the maps `τ_g : Hⁿ(G) → Hⁿ⁻¹(Z(g))` that twist the
//!   conjugacy-class sectors of a Drinfeld center.
//! * [`metric`] — finite abelian groups with quadratic forms, the pointed
//!   stand-in for non-degenerate braided fusion categories.
//! * [`classify`] — the enumeration routines producing classification
//!   records and counts.
//! * [`report`] — the deterministic text report format.
//! * [`files`] — parsers and writers for the group / cocycle / metric file
//!   formats.
//!
//! Everything is exact: values in ℚ/ℤ are reduced fractions, matrices carry
//! arbitrary-precision integers, and no floating point appears anywhere.

pub mod classify;
pub mod cli;
pub mod cohomology;
pub mod files;
pub mod group;
pub mod metric;
pub mod report;
pub mod transgression;
pub mod zlinalg;

pub use group::FiniteGroup;


pub use zlinalg::{IntMatrix, Qz};
