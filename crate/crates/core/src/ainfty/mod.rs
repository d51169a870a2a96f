//! A∞-algebras with a finite basis, their Hochschild complexes, Maurer-Cartan
//! elements with the composition law, and the tree-sum power operation.
//!
//! Conventions: `‖a‖ = |a| - 1`, `✠_i = ‖a_1‖ + .. + ‖a_i‖`, the product is
//! `a·b = (-1)^{|a|} μ^2(a, b)` and the differential is `d = -μ^1`. A Hochschild
//! cochain of degree `D` has components with `|c^j(a_1..a_j)| = D + Σ|a_i| - j`.

pub mod algebra;
pub mod cochain;
pub mod hochschild;
pub mod mc;
pub mod random;
pub mod sign;
pub mod suite;
pub mod vector;
pub mod xi;

pub use algebra::{registered, AInftyAlgebra, RelationReport};
pub use cochain::{brace, Cochain};
pub use hochschild::{differential, hochschild_structure, mu1};
pub use mc::{
    compose, compose_mc, element_mc_check, mc_check, mc_curvature, mc_equivalent, mc_equivalent_unital, mc_inverse,
    mc_inverse_mc, mc_pushforward, power, McElement, Morphism,
};
pub use vector::Vector;
pub use xi::xi_p;

use thiserror::Error;

use crate::coeff::CoeffError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AInftyError {
    #[error("degree inconsistency: {0}")]
    Degree(String),
    #[error("length bound: {0}")]
    LengthBound(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("not nilpotent: {0}")]
    NotNilpotent(String),
    #[error("wrong characteristic: {0}")]
    Characteristic(String),
    #[error("parity: {0}")]
    Parity(String),
    #[error("arity shortfall: {0}")]
    Arity(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a Maurer-Cartan element:\n{0}")]
    NotMaurerCartan(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
