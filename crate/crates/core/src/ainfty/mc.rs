//! Maurer-Cartan elements of the Hochschild complex and of the algebra itself:
//! the composition law, inverses, pushforwards and equivalences.

use std::collections::BTreeMap;

use super::algebra::AInftyAlgebra;
use super::cochain::{brace, Cochain};
use super::vector::Vector;
use super::AInftyError;
use crate::coeff::{linalg, CoeffRing, Scalar};

/// A Hochschild cochain of degree 1 over a nilpotent ring satisfying the
/// Maurer-Cartan equation (checked on construction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McElement {
    cochain: Cochain,
}

impl McElement {
    pub fn new(alg: &AInftyAlgebra, cochain: Cochain) -> Result<Self, AInftyError> {
        if !mc_check(alg, &cochain)? {
            return Err(AInftyError::NotMaurerCartan(cochain.format(alg)));
        }
        Ok(McElement { cochain })
    }

    pub fn zero(ring: &CoeffRing) -> Self {
        McElement { cochain: Cochain::zero(ring, 1) }
    }

    pub fn cochain(&self) -> &Cochain {
        &self.cochain
    }

    pub fn into_cochain(self) -> Cochain {
        self.cochain
    }
}

fn nilpotency(ring: &CoeffRing) -> Result<usize, AInftyError> {
    ring.nilpotency()
        .ok_or_else(|| AInftyError::NotNilpotent(format!("{ring} is not a nilpotent adic truncation")))
}

fn require_ideal_degree_one(c: &Cochain) -> Result<usize, AInftyError> {
    let nil = nilpotency(c.ring())?;
    if c.degree() != 1 && !c.is_zero() {
        return Err(AInftyError::Degree(format!("expected degree 1, got {}", c.degree())));
    }
    if !c.in_ideal() {
        return Err(AInftyError::NotNilpotent("coefficients must lie in the augmentation ideal".into()));
    }
    Ok(nil)
}

/// `Σ_{k≥1} μ^k_C(γ, .., γ) = Σ_k μ_A{γ^k} - γ{μ_A}`.
pub fn mc_curvature(alg: &AInftyAlgebra, gamma: &Cochain, cap: Option<usize>) -> Result<Cochain, AInftyError> {
    let nil = require_ideal_degree_one(gamma)?;
    let ring = gamma.ring();
    let mu = Cochain::structure(alg, ring);
    let mut total = brace(alg, gamma, &[&mu], cap)?.neg();
    let kmax = alg.max_arity().min(nil);
    for k in 1..=kmax {
        let ys = vec![gamma; k];
        total = total.add(&brace(alg, &mu, &ys, cap)?)?;
    }
    Ok(total)
}

/// True iff the Maurer-Cartan equation holds exactly (up to the cochain's bound).
pub fn mc_check(alg: &AInftyAlgebra, gamma: &Cochain) -> Result<bool, AInftyError> {
    Ok(mc_curvature(alg, gamma, None)?.is_zero())
}

/// `γ_1 • γ_2 = γ_2 + Σ_{m≥0} γ_1{γ_2, .., γ_2}` on degree-1 cochains with
/// coefficients in the ideal.
pub fn compose(alg: &AInftyAlgebra, g1: &Cochain, g2: &Cochain, cap: Option<usize>) -> Result<Cochain, AInftyError> {
    let nil = require_ideal_degree_one(g1)?;
    require_ideal_degree_one(g2)?;
    if g1.ring() != g2.ring() {
        return Err(AInftyError::RingMismatch(format!("{} vs {}", g1.ring(), g2.ring())));
    }
    let mut total = match cap {
        Some(l) => g2.truncate(l),
        None => g2.clone(),
    };
    let (Some(v1), v2) = (g1.valuation(), g2.valuation()) else {
        return Ok(total);
    };
    let mmax = match v2 {
        None => 0,
        Some(v2) => {
            let by_val = (nil.saturating_sub(v1)) / v2;
            match (g1.bound(), g1.max_arity()) {
                (None, Some(a)) => by_val.min(a),
                _ => by_val,
            }
        }
    };
    for m in 0..=mmax {
        let ys = vec![g2; m];
        total = total.add(&brace(alg, g1, &ys, cap)?)?;
    }
    Ok(total)
}

/// Verified composition of Maurer-Cartan elements.
pub fn compose_mc(alg: &AInftyAlgebra, g1: &McElement, g2: &McElement) -> Result<McElement, AInftyError> {
    McElement::new(alg, compose(alg, &g1.cochain, &g2.cochain, None)?)
}

/// `γ • (γ • (.. • γ))` with `n` factors; inner products are capped at `cap`.
pub fn power(alg: &AInftyAlgebra, gamma: &Cochain, n: usize, cap: Option<usize>) -> Result<Cochain, AInftyError> {
    if n == 0 {
        return Ok(Cochain::zero(gamma.ring(), 1));
    }
    let mut acc = match cap {
        Some(l) => gamma.truncate(l),
        None => gamma.clone(),
    };
    for _ in 1..n {
        acc = compose(alg, gamma, &acc, cap)?;
    }
    Ok(acc)
}

/// Solves `γ • δ = 0` by the fixed point `δ = -Σ_m γ{δ^m}`; every step gains
/// one power of the ideal, so `nilpotency` steps reach the exact answer.
pub fn mc_inverse(alg: &AInftyAlgebra, gamma: &Cochain, cap: Option<usize>) -> Result<Cochain, AInftyError> {
    let nil = require_ideal_degree_one(gamma)?;
    let zero = Cochain::zero(gamma.ring(), 1);
    let mut delta = zero.clone();
    for _ in 0..nil {
        let next = compose(alg, gamma, &delta, cap)?.sub(&delta)?.neg();
        if next == delta {
            break;
        }
        delta = next;
    }
    Ok(delta)
}

/// Inverse of a verified element; both one-sided identities are checked.
pub fn mc_inverse_mc(alg: &AInftyAlgebra, gamma: &McElement) -> Result<McElement, AInftyError> {
    let inv = mc_inverse(alg, &gamma.cochain, None)?;
    let right = compose(alg, &gamma.cochain, &inv, None)?;
    let left = compose(alg, &inv, &gamma.cochain, None)?;
    if !right.is_zero() || !left.is_zero() {
        return Err(AInftyError::Internal("inverse failed to cancel".into()));
    }
    McElement::new(alg, inv)
}

/// A (possibly curved) A∞-morphism given by components `F^d`, coefficients in
/// `ring` (constant terms allowed). `bound` caps the known arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    ring: CoeffRing,
    components: BTreeMap<Vec<usize>, Vector>,
    bound: Option<usize>,
}

impl Morphism {
    pub fn new(ring: &CoeffRing, bound: Option<usize>) -> Self {
        Morphism { ring: ring.clone(), components: BTreeMap::new(), bound }
    }

    pub fn identity(dim: usize, ring: &CoeffRing) -> Self {
        let mut f = Morphism::new(ring, None);
        for i in 0..dim {
            f.add_term(&[i], i, &ring.one());
        }
        f
    }

    /// `φ = id + γ` associated with a Hochschild cochain.
    pub fn from_cochain(dim: usize, gamma: &Cochain) -> Self {
        let mut f = Morphism::identity(dim, gamma.ring());
        f.bound = gamma.bound();
        for (k, v) in gamma.entries() {
            for (o, c) in v.iter() {
                f.add_term(k, o, c);
            }
        }
        f
    }

    pub fn add_term(&mut self, inputs: &[usize], out: usize, c: &Scalar) {
        let v = self.components.entry(inputs.to_vec()).or_default();
        v.add_term(&self.ring, out, c);
        if v.is_zero() {
            self.components.remove(inputs);
        }
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn components(&self) -> &BTreeMap<Vec<usize>, Vector> {
        &self.components
    }

    pub fn max_arity(&self) -> usize {
        self.components.keys().map(|k| k.len()).max().unwrap_or(0)
    }

    /// `F^d` applied multilinearly to vectors.
    pub fn apply(&self, args: &[&Vector]) -> Vector {
        let mut out = Vector::new();
        let mut idx = Vec::new();
        self.apply_rec(args, &mut idx, self.ring.one(), &mut out);
        out
    }

    fn apply_rec(&self, args: &[&Vector], idx: &mut Vec<usize>, coeff: Scalar, out: &mut Vector) {
        if idx.len() == args.len() {
            if let Some(v) = self.components.get(idx.as_slice()) {
                for (o, c) in v.iter() {
                    out.add_term(&self.ring, o, &self.ring.mul(c, &coeff));
                }
            }
            return;
        }
        for (b, c) in args[idx.len()].iter() {
            let next = self.ring.mul(&coeff, c);
            if self.ring.is_zero(&next) {
                continue;
            }
            idx.push(b);
            self.apply_rec(args, idx, next, out);
            idx.pop();
        }
    }
}

/// `γ ↦ Σ_d F^d(γ, .., γ)` for an element of the algebra over the ideal.
pub fn mc_pushforward(f: &Morphism, gamma: &Vector) -> Result<Vector, AInftyError> {
    let ring = f.ring();
    let nil = nilpotency(ring)?;
    let Some(v) = gamma.valuation(ring) else {
        return Ok(f.apply(&[]));
    };
    let needed = nil / v;
    if let Some(b) = f.bound {
        if b < needed {
            return Err(AInftyError::Arity(format!("morphism known up to arity {b}, need {needed}")));
        }
    }
    let mut out = Vector::new();
    for d in 0..=needed.min(f.max_arity()) {
        let args = vec![gamma; d];
        out = out.add(&f.apply(&args), ring);
    }
    Ok(out)
}

/// `Σ_d μ^d(x, .., x)` evaluated directly on the structure table.
pub fn element_curvature(alg: &AInftyAlgebra, ring: &CoeffRing, x: &Vector) -> Result<Vector, AInftyError> {
    let nil = nilpotency(ring)?;
    let mut out = Vector::new();
    for d in 1..=alg.max_arity().min(nil) {
        out = out.add(&alg.mu_vectors(&vec![x; d], ring), ring);
    }
    Ok(out)
}

/// Maurer-Cartan equation for an element of `A^1 ⊗ N`.
pub fn element_mc_check(alg: &AInftyAlgebra, ring: &CoeffRing, x: &Vector) -> Result<bool, AInftyError> {
    check_element(alg, ring, x, 1, true)?;
    Ok(element_curvature(alg, ring, x)?.is_zero())
}

fn check_element(alg: &AInftyAlgebra, ring: &CoeffRing, x: &Vector, deg: i64, ideal: bool) -> Result<(), AInftyError> {
    for (i, c) in x.iter() {
        if alg.degree(i) != deg {
            return Err(AInftyError::Degree(format!("{} has degree {}, expected {deg}", alg.basis_name(i), alg.degree(i))));
        }
        if ideal && !ring.in_ideal(c) {
            return Err(AInftyError::NotNilpotent(format!("coefficient of {} is not in the ideal", alg.basis_name(i))));
        }
    }
    Ok(())
}

/// `Σ_{p,q} μ^{p+q+1}(γ^p, h, γ̃^q)`.
pub fn twisted_differential(
    alg: &AInftyAlgebra,
    ring: &CoeffRing,
    gamma: &Vector,
    h: &Vector,
    gamma_t: &Vector,
) -> Vector {
    let mut out = Vector::new();
    let dmax = alg.max_arity();
    for d in 1..=dmax {
        for p in 0..d {
            let mut args: Vec<&Vector> = vec![gamma; p];
            args.push(h);
            args.extend(std::iter::repeat(gamma_t).take(d - 1 - p));
            out = out.add(&alg.mu_vectors(&args, ring), ring);
        }
    }
    out
}

/// Equivalence through a homotopy `h ∈ A^0 ⊗ N`:
/// `Σ μ^{p+q+1}(γ^p, h, γ̃^q) = γ - γ̃`.
pub fn mc_equivalent(
    alg: &AInftyAlgebra,
    ring: &CoeffRing,
    gamma: &Vector,
    gamma_t: &Vector,
    h: &Vector,
) -> Result<bool, AInftyError> {
    nilpotency(ring)?;
    check_element(alg, ring, gamma, 1, true)?;
    check_element(alg, ring, gamma_t, 1, true)?;
    check_element(alg, ring, h, 0, true)?;
    let lhs = twisted_differential(alg, ring, gamma, h, gamma_t);
    Ok(lhs == gamma.sub(gamma_t, ring))
}

/// Unital criterion: `g ∈ A^0 ⊗ (Z1 ⊕ N)` reducing mod the ideal to a cocycle
/// cohomologous to the unit, with `Σ μ^{p+q+1}(γ^p, g, γ̃^q) = 0`.
///
/// The cohomology condition is decided over a prime-field base, or directly when
/// `A^{-1} = 0`.
pub fn mc_equivalent_unital(
    alg: &AInftyAlgebra,
    ring: &CoeffRing,
    gamma: &Vector,
    gamma_t: &Vector,
    g: &Vector,
) -> Result<bool, AInftyError> {
    nilpotency(ring)?;
    check_element(alg, ring, gamma, 1, true)?;
    check_element(alg, ring, gamma_t, 1, true)?;
    check_element(alg, ring, g, 0, false)?;
    let base = ring.adic_spec().expect("nilpotent ring is adic").base.clone();
    let e = alg
        .unit_vector(&base)
        .ok_or_else(|| AInftyError::Parse(format!("{} has no unit", alg.name())))?;
    let mut g0 = Vector::new();
    for (i, c) in g.iter() {
        g0.add_term(&base, i, &ring.coefficient(c, 0));
    }
    if !alg.mu_vectors(&[&g0], &base).is_zero() {
        return Ok(false);
    }
    if !is_exact(alg, &base, &g0.sub(&e, &base))? {
        return Ok(false);
    }
    Ok(twisted_differential(alg, ring, gamma, g, gamma_t).is_zero())
}

/// Whether a degree-0 vector lies in `μ^1(A^{-1})`.
fn is_exact(alg: &AInftyAlgebra, base: &CoeffRing, x: &Vector) -> Result<bool, AInftyError> {
    if x.is_zero() {
        return Ok(true);
    }
    let sources = alg.basis_of_degree(-1);
    if sources.is_empty() {
        return Ok(false);
    }
    let CoeffRing::PrimeField { p } = base else {
        return Err(AInftyError::Unsupported(format!("cohomology test over {base}")));
    };
    let targets = alg.basis_of_degree(0);
    let col = |s: usize| alg.mu_vectors(&[&Vector::single(base, s, base.one())], base);
    let images: Vec<Vector> = sources.iter().map(|&s| col(s)).collect();
    let as_u64 = |c: Option<&Scalar>| match c {
        Some(Scalar::Mod(v)) => *v,
        _ => 0,
    };
    let a: Vec<Vec<u64>> = targets.iter().map(|&t| images.iter().map(|im| as_u64(im.get(t))).collect()).collect();
    let b: Vec<u64> = targets.iter().map(|&t| as_u64(x.get(t))).collect();
    Ok(linalg::solve_mod_p(&a, &b, *p).is_some())
}

#[cfg(test)]
mod tests {
    use super::super::algebra::{exterior_ab, interval};
    use super::*;

    fn ring() -> CoeffRing {
        CoeffRing::truncated_fp(3, 3).unwrap()
    }

    #[test]
    fn zero_is_mc_and_unit() {
        let alg = exterior_ab();
        let r = ring();
        let z = Cochain::zero(&r, 1);
        assert!(mc_check(&alg, &z).unwrap());
        assert!(mc_inverse(&alg, &z, None).unwrap().is_zero());
    }

    #[test]
    fn curvature_in_odd_generators() {
        let alg = exterior_ab();
        let r = CoeffRing::truncated_fp(2, 2).unwrap();
        let q = r.var().unwrap();
        let g = Cochain::constant(&r, 1, &Vector::single(&r, 1, q));
        assert!(mc_check(&alg, &g).unwrap());
    }

    #[test]
    fn non_nilpotent_ring_rejected() {
        let alg = exterior_ab();
        let r = CoeffRing::prime_field(3).unwrap();
        assert!(mc_check(&alg, &Cochain::zero(&r, 1)).is_err());
    }

    #[test]
    fn homotopy_zero_means_equal() {
        let alg = interval();
        let r = CoeffRing::truncated_fp(2, 2).unwrap();
        let q = r.var().unwrap();
        let g = Vector::single(&r, 2, q.clone());
        assert!(mc_equivalent(&alg, &r, &g, &g, &Vector::new()).unwrap());
        assert!(!mc_equivalent(&alg, &r, &g, &Vector::new(), &Vector::new()).unwrap());
    }
}
