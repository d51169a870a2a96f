//! The tree-sum power operation on Hochschild cochains in characteristic p.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::algebra::AInftyAlgebra;
use super::cochain::{brace, Cochain};
use super::AInftyError;
use crate::coeff::is_prime;
use crate::operads::{planar_trees, PlanarTree};

/// `Ξ_p(c) = Σ_T (causal orderings of T)·T(c)` over planar trees with `p`
/// vertices, where `T(c) = c{T_1(c), .., T_k(c)}` for the root's subtrees.
///
/// Emits components up to length `len`; a truncated `c` must be known up to
/// `len + p - 1`.
pub fn xi_p(alg: &AInftyAlgebra, c: &Cochain, p: u64, len: usize) -> Result<Cochain, AInftyError> {
    if !is_prime(p) {
        return Err(AInftyError::Characteristic(format!("{p} is not prime")));
    }
    if c.ring().characteristic() != p {
        return Err(AInftyError::Characteristic(format!("{} does not have characteristic {p}", c.ring())));
    }
    if p > 2 && c.degree().rem_euclid(2) == 0 {
        return Err(AInftyError::Parity(format!("degree {} is even and p = {p} is odd", c.degree())));
    }
    let need = len + p as usize - 1;
    if let Some(b) = c.bound() {
        if b < need {
            return Err(AInftyError::LengthBound(format!("input known up to length {b}, need {need}")));
        }
    }
    let out_degree = p as i64 * c.degree() - (p as i64 - 1);
    let ring = c.ring();
    let mut memo: HashMap<PlanarTree, Cochain> = HashMap::new();
    let mut total = Cochain::zero(ring, out_degree).with_bound(Some(len));
    for t in planar_trees(p as usize) {
        let w = (t.causal_orderings() % BigInt::from(p)).to_i64().expect("small residue");
        if w == 0 {
            continue;
        }
        let v = evaluate_tree(alg, c, &t, len, &mut memo)?;
        total = total.add(&v.scale(&ring.from_i64(w)))?;
    }
    Ok(total.truncate(len))
}

/// `T(c)`, memoized by subtree shape, each subtree capped at `len`.
pub fn evaluate_tree(
    alg: &AInftyAlgebra,
    c: &Cochain,
    t: &PlanarTree,
    len: usize,
    memo: &mut HashMap<PlanarTree, Cochain>,
) -> Result<Cochain, AInftyError> {
    if let Some(v) = memo.get(t) {
        return Ok(v.clone());
    }
    let kids = t
        .children
        .iter()
        .map(|k| evaluate_tree(alg, c, k, len, memo))
        .collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&Cochain> = kids.iter().collect();
    let v = brace(alg, c, &refs, Some(len))?;
    memo.insert(t.clone(), v.clone());
    Ok(v)
}
