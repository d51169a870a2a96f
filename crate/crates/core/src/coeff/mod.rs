//! Exact coefficient arithmetic: ring descriptors, truncated power series
//! in one or several variables, and sparse Laurent polynomials.

pub mod linalg;
mod laurent;
mod multiseries;
mod ring;
mod series;

pub use laurent::{laurent_power_constant_term, LaurentPoly};
pub use multiseries::MvSeries;
pub use ring::{adic_reduce, factorial, is_prime, mod_inverse, pow_mod, AdicSpec, CoeffRing, Scalar};
pub use series::{series_arith, SeriesOp, TruncSeries};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {0}")]
    Mismatch(String),
    #[error("{0} is not an integer")]
    NotIntegral(String),
    #[error("denominator of {value} is not invertible modulo {modulus}")]
    DenominatorNotInvertible { value: String, modulus: u64 },
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("exponential undefined: {0}")]
    ExpUndefined(String),
}
