//! The A∞-structure on Hochschild cochains: `μ^1 = -d_C`, `μ^k = μ_A{c_1..c_k}`.

use super::algebra::AInftyAlgebra;
use super::cochain::{brace, Cochain};
use super::sign::{parity_sign, reduced};
use super::AInftyError;

/// `μ^1_C(c) = μ_A{c} - (-1)^{‖c‖} c{μ_A}`.
pub fn mu1(alg: &AInftyAlgebra, c: &Cochain, cap: Option<usize>) -> Result<Cochain, AInftyError> {
    let mu = Cochain::structure(alg, c.ring());
    let left = brace(alg, &mu, &[c], cap)?;
    let right = brace(alg, c, &[&mu], cap)?;
    let s = c.ring().from_i64(-parity_sign(reduced(c.degree())));
    let mut out = left.add(&right.scale(&s))?;
    if out.is_zero() {
        out = Cochain::zero(c.ring(), c.degree() + 1).with_bound(out.bound());
    }
    Ok(out)
}

/// The Hochschild differential `d_C = -μ^1_C`.
pub fn differential(alg: &AInftyAlgebra, c: &Cochain, cap: Option<usize>) -> Result<Cochain, AInftyError> {
    Ok(mu1(alg, c, cap)?.neg())
}

/// `μ^k_C(c_1, .., c_k)` for `k = inputs.len() ≥ 1`.
pub fn hochschild_structure(alg: &AInftyAlgebra, inputs: &[&Cochain], cap: Option<usize>) -> Result<Cochain, AInftyError> {
    match inputs.len() {
        0 => Err(AInftyError::Arity("the Hochschild structure has no arity-0 operation".into())),
        1 => mu1(alg, inputs[0], cap),
        _ => {
            let mu = Cochain::structure(alg, inputs[0].ring());
            let out = brace(alg, &mu, inputs, cap)?;
            Ok(out)
        }
    }
}

/// Left-hand side of the A∞-relation of arity `cs.len()` for the Hochschild
/// structure, evaluated on the given cochains.
pub fn relation_lhs(alg: &AInftyAlgebra, cs: &[&Cochain], cap: Option<usize>) -> Result<Cochain, AInftyError> {
    let d = cs.len();
    let ring = cs[0].ring().clone();
    let deg = cs.iter().map(|c| c.degree()).sum::<i64>() + 2 - d as i64 + 1;
    let mut total = Cochain::zero(&ring, deg);
    let mut mal = 0;
    for i in 0..d {
        for j in 1..=d - i {
            let inner = hochschild_structure(alg, &cs[i..i + j], cap)?;
            let mut args: Vec<&Cochain> = cs[..i].to_vec();
            args.push(&inner);
            args.extend_from_slice(&cs[i + j..]);
            let outer = hochschild_structure(alg, &args, cap)?;
            total = total.add(&outer.scale(&ring.from_i64(parity_sign(mal))))?;
        }
        mal += reduced(cs[i].degree());
    }
    Ok(total)
}
