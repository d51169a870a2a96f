//! `ℤ/p`-equivariant cohomology of finite complexes, the constants relating
//! the equivariant `p`-th power to classical Steenrod operations, and
//! equivariant Euler classes.

mod complex;
mod steenrod;

use std::collections::BTreeMap;

use thiserror::Error;

pub use complex::{default_truncation, EquivariantComplex, TotalComplex};
pub use steenrod::{
    cyclic_euler, cyclic_euler_expected, degree_three_coefficient, equivariant_euler, half_factorial,
    half_factorial_square, EulerClass, SteenrodComponent, SteenrodConstants,
};

use crate::coeff::is_prime;
use crate::report::{Row, SuiteReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivariantError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid complex: {0}")]
    Invalid(String),
}

/// Equivariant cohomology dimensions over the range unaffected by truncation.
pub fn zp_cohomology(e: &EquivariantComplex) -> BTreeMap<i64, usize> {
    e.cochain_model().dimensions()
}

/// Equivariant homology dimensions over the range unaffected by truncation.
pub fn zp_homology(e: &EquivariantComplex) -> BTreeMap<i64, usize> {
    e.chain_model().dimensions()
}

/// Multiplication by `t` is an isomorphism above the top degree of `C`;
/// checked on dimensions.
pub fn t_periodic(e: &EquivariantComplex) -> bool {
    let dims = zp_cohomology(e);
    let top = e.degrees().iter().copied().max().unwrap_or(0);
    dims.iter().filter(|(&k, _)| k > top).all(|(k, d)| dims.get(&(k + 2)).map_or(true, |d2| d2 == d))
}

/// In the model with integer lifts, `d(θ) = N·1 = p·t` for trivial
/// coefficients, so the Bockstein sends `θ` to this multiple of `t`.
pub fn bockstein_of_theta(p: u64) -> u64 {
    let norm_over_z: u64 = (0..p).map(|_| 1).sum();
    (norm_over_z / p) % p
}

/// Primes `≤ bound`.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

/// Equivariant cohomology of trivial and free coefficients, the factorial
/// identity for all odd `p ≤ 97`, the cyclic Euler class, and the
/// normalization of the leading Steenrod component by two routes.
pub fn equivariant_suite(primes: &[u64]) -> SuiteReport {
    let mut rep = SuiteReport::new("equivariant");
    for &p in primes {
        let e = EquivariantComplex::trivial(p, default_truncation(&[0])).expect("valid");
        let model = e.cochain_model();
        let dims = model.dimensions();
        rep.push(Row::check(
            "trivial-coefficients",
            format!("p={p}, degrees {:?}", model.reliable_range()),
            format!("all 1 over {} degrees", dims.len()),
            format!("{} over {} degrees", if dims.values().all(|&d| d == 1) { "all 1" } else { "not all 1" }, dims.len()),
        ));
        let e = EquivariantComplex::free_cyclic(p, default_truncation(&[0])).expect("valid");
        let dims = zp_cohomology(&e);
        let nonzero: Vec<(i64, usize)> = dims.into_iter().filter(|&(_, d)| d != 0).collect();
        rep.push(Row::check("free-module", format!("p={p}"), "[(0, 1)]", format!("{nonzero:?}")));
        rep.push(Row::check("bockstein-theta", format!("p={p}"), 1, bockstein_of_theta(p)));
    }
    let bad: Vec<u64> =
        primes_up_to(97).into_iter().filter(|&p| p > 2).filter(|&p| half_factorial_square(p).0 != half_factorial_square(p).1).collect();
    rep.push(Row::check("factorial-identity", "odd p <= 97", "[]", format!("{bad:?}")));
    for &p in primes.iter().filter(|&&p| p > 2) {
        let e = cyclic_euler(p);
        rep.push(Row::check(
            "cyclic-euler",
            format!("p={p}"),
            format!("{} t^{}", cyclic_euler_expected(p), (p - 1) / 2),
            format!("{} t^{}", e.coefficient, e.degree),
        ));
        let mismatched: Vec<u64> = (0..=8)
            .filter(|&n| {
                let s = SteenrodConstants::new(p, n);
                s.leading() != s.leading_from_euler()
            })
            .collect();
        rep.push(Row::check("leading-normalization", format!("p={p}, |x| <= 8"), "[]", format!("{mismatched:?}")));
    }
    rep
}
