//! Point counts over prime fields and η-product expansions.

mod eta;
mod points;

use thiserror::Error;

pub use eta::{eta_product_coeffs, euler_product_coeffs, EtaProduct, LEVEL_FIFTEEN};
pub use points::{random_invertible_matrix, two_quadrics, ProjectiveSystem};

use crate::coeff::{is_prime, CoeffError};
use crate::report::{Row, SuiteReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("polynomial {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("polynomial {index} has negative exponents")]
    NegativeExponent { index: usize },
    #[error("polynomial {index} has {found} variables, expected {expected}")]
    WrongArity { index: usize, found: usize, expected: usize },
    #[error("weight of the η-product is not integral: levels sum to {0}")]
    FractionalShift(u64),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Least-absolute coefficients of the `q^{p-1}` power operation on the
/// degree-3 cohomology of the blowup threefold, by prime.
pub const FANO_TABLE: [(u64, i64); 13] = [
    (2, -1),
    (3, -1),
    (5, 1),
    (7, 0),
    (11, -4),
    (13, -2),
    (17, 2),
    (19, 4),
    (23, 0),
    (29, -2),
    (31, 0),
    (37, -10),
    (41, 10),
];

/// Primes of bad reduction of the curve of two quadrics.
pub const BAD_PRIMES: [u64; 2] = [3, 5];

/// `η(q)η(q³)η(q⁵)η(q¹⁵)` coefficients at `q^p` against the table.
pub fn eta_suite(order: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("eta");
    let coeffs = eta_product_coeffs(&EtaProduct::new(LEVEL_FIFTEEN.to_vec(), order).expect("integral weight"));
    for &(p, entry) in FANO_TABLE.iter() {
        let got = coeffs.get(p as usize - 1).map_or("beyond order".to_string(), i64::to_string);
        rep.push(Row::check("eta-coefficient", format!("p={p}"), entry, got));
    }
    rep
}

/// `1 - #C(F_p) ≡ entry (mod p)` for the intersection of two quadrics.
pub fn point_count_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("point-count");
    for &(p, entry) in FANO_TABLE.iter() {
        if BAD_PRIMES.contains(&p) {
            rep.push(Row::skip("point-count", format!("p={p}"), "excluded: bad reduction"));
            continue;
        }
        let n = two_quadrics(p).count_points() as i64;
        rep.push(Row::check(
            "point-count",
            format!("p={p}, #C={n}"),
            entry.rem_euclid(p as i64),
            (1 - n).rem_euclid(p as i64),
        ));
    }
    rep
}

/// Primes up to `bound`.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}
