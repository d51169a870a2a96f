//! Exact algebra for Maurer-Cartan formal groups on Hochschild complexes,
//! tree-indexed mod-p power operations, parameter-space combinatorics and
//! the arithmetic checks used to cross-validate mod-p quantum operations.
//!
//! Everything is exact: big integers, big rationals, prime fields and
//! nilpotent truncated polynomial rings. There is no floating point.

pub mod ainfty;
pub mod arith;
pub mod coeff;
pub mod equivariant;
pub mod fgl;
pub mod operads;
pub mod quantum;
pub mod report;

pub use coeff::{CoeffError, CoeffRing, Scalar};
