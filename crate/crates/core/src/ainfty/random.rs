//! Random cochains and random Maurer-Cartan elements built from explicit families.

use rand::Rng;

use super::algebra::{tuples, AInftyAlgebra};
use super::cochain::Cochain;
use super::hochschild::differential;
use super::mc::{compose, mc_check};
use super::vector::Vector;
use super::AInftyError;
use crate::coeff::{CoeffRing, Scalar};

/// A degree-consistent cochain with components of length `0..=max_len`,
/// about half the admissible coefficients nonzero.
pub fn random_cochain<R: Rng + ?Sized>(
    alg: &AInftyAlgebra,
    ring: &CoeffRing,
    degree: i64,
    max_len: usize,
    ideal: bool,
    rng: &mut R,
) -> Cochain {
    let mut c = Cochain::zero(ring, degree);
    for len in 0..=max_len {
        for t in tuples(alg.dim(), len) {
            let target = degree + t.iter().map(|&i| alg.degree(i)).sum::<i64>() - len as i64;
            for o in alg.basis_of_degree(target) {
                if rng.gen_bool(0.5) {
                    c.add_term(&t, o, &ring.random(rng, ideal, 3));
                }
            }
        }
    }
    c
}

/// A random element of the algebra of the given degree.
pub fn random_vector<R: Rng + ?Sized>(alg: &AInftyAlgebra, ring: &CoeffRing, degree: i64, ideal: bool, rng: &mut R) -> Vector {
    let mut v = Vector::new();
    for i in alg.basis_of_degree(degree) {
        v.add_term(ring, i, &ring.random(rng, ideal, 3));
    }
    v
}

fn nilpotency(ring: &CoeffRing) -> Result<usize, AInftyError> {
    ring.nilpotency()
        .ok_or_else(|| AInftyError::NotNilpotent(format!("{ring} is not a nilpotent adic truncation")))
}

/// `q^s · d_C(f)` with `2s > nilpotency`, so every quadratic term vanishes.
pub fn coboundary_mc<R: Rng + ?Sized>(alg: &AInftyAlgebra, ring: &CoeffRing, rng: &mut R) -> Result<Cochain, AInftyError> {
    let nil = nilpotency(ring)?;
    let s = nil / 2 + 1;
    let base = ring.adic_spec().expect("adic").base.clone();
    let f = random_cochain(alg, &base, 0, 1, false, rng);
    differential(alg, &f, None)?.embed_scaled(ring, s)
}

/// A curvature term `γ^0 = x`, `x ∈ A^1 ⊗ N` (only Maurer-Cartan when `x` is
/// central enough, e.g. on exterior algebras).
pub fn curvature_candidate<R: Rng + ?Sized>(alg: &AInftyAlgebra, ring: &CoeffRing, rng: &mut R) -> Cochain {
    Cochain::constant(ring, 1, &random_vector(alg, ring, 1, true, rng))
}

/// Rescaling `x ↦ λ^{|x|} x` with `λ ∈ 1 + N`; an automorphism when `μ^1 = 0`
/// and only `μ^2` is present.
pub fn grading_scaling<R: Rng + ?Sized>(alg: &AInftyAlgebra, ring: &CoeffRing, rng: &mut R) -> Cochain {
    let lambda = ring.add(&ring.one(), &ring.random(rng, true, 3));
    let lambda_inv = ring.inv(&lambda).expect("1 + N is invertible");
    let map: Vec<(usize, usize, Scalar)> = (0..alg.dim())
        .map(|i| {
            let d = alg.degree(i);
            let f = if d >= 0 { ring.pow(&lambda, d as u64) } else { ring.pow(&lambda_inv, (-d) as u64) };
            (i, i, ring.sub(&f, &ring.one()))
        })
        .collect();
    Cochain::linear(ring, 1, &map)
}

/// For the exterior algebra on `a, b`: the automorphism induced by a matrix
/// `M ≡ I` modulo the ideal, acting on `ab` by `det M`.
pub fn exterior_automorphism<R: Rng + ?Sized>(alg: &AInftyAlgebra, ring: &CoeffRing, rng: &mut R) -> Result<Cochain, AInftyError> {
    let (a, b, ab) = (alg.index_of("a")?, alg.index_of("b")?, alg.index_of("ab")?);
    let m: Vec<Scalar> = (0..4).map(|_| ring.random(rng, true, 3)).collect();
    // M - I entries
    let det = {
        let m00 = ring.add(&ring.one(), &m[0]);
        let m11 = ring.add(&ring.one(), &m[3]);
        ring.sub(&ring.mul(&m00, &m11), &ring.mul(&m[1], &m[2]))
    };
    let map = vec![
        (a, a, m[0].clone()),
        (a, b, m[2].clone()),
        (b, a, m[1].clone()),
        (b, b, m[3].clone()),
        (ab, ab, ring.sub(&det, &ring.one())),
    ];
    Ok(Cochain::linear(ring, 1, &map))
}

/// Conjugation by `g = 1 + e`, `e ∈ A^0 ⊗ N`, on a strictly unital dg algebra:
/// `γ^0 = -dg·g^{-1}`, `γ^1(x) = g x g^{-1} - x`.
pub fn conjugation_mc(alg: &AInftyAlgebra, ring: &CoeffRing, e: &Vector) -> Result<Cochain, AInftyError> {
    let nil = nilpotency(ring)?;
    let one = alg
        .unit_vector(ring)
        .ok_or_else(|| AInftyError::Parse(format!("{} has no unit", alg.name())))?;
    let g = one.add(e, ring);
    let mut g_inv = one.clone();
    let mut term = one;
    for _ in 0..nil {
        term = alg.product(&term, &e.neg(ring), ring);
        g_inv = g_inv.add(&term, ring);
    }
    let mut c = Cochain::constant(ring, 1, &alg.product(&alg.differential(&g, ring), &g_inv, ring).neg(ring));
    for x in 0..alg.dim() {
        let xv = Vector::single(ring, x, ring.one());
        let conj = alg.product(&alg.product(&g, &xv, ring), &g_inv, ring).sub(&xv, ring);
        c.add_vector(&[x], &conj);
    }
    Ok(c)
}

/// One basic Maurer-Cartan element from a family suited to the algebra.
pub fn basic_mc<R: Rng + ?Sized>(alg: &AInftyAlgebra, ring: &CoeffRing, rng: &mut R) -> Result<Cochain, AInftyError> {
    let zero_differential = alg.mu_table().keys().all(|k| k.len() != 1);
    let exterior = alg.index_of("ab").is_ok();
    let unital = alg.unit().is_some() && alg.is_dg();
    loop {
        let c = match rng.gen_range(0..4) {
            0 => coboundary_mc(alg, ring, rng)?,
            1 if exterior => curvature_candidate(alg, ring, rng),
            2 if exterior => exterior_automorphism(alg, ring, rng)?,
            2 if zero_differential && alg.is_dg() => grading_scaling(alg, ring, rng),
            3 if unital => conjugation_mc(alg, ring, &random_vector(alg, ring, 0, true, rng))?,
            _ => continue,
        };
        if mc_check(alg, &c)? {
            return Ok(c);
        }
        return Err(AInftyError::Internal(format!("generator produced a non-solution:\n{}", c.format(alg))));
    }
}

/// A product of 2 to 4 basic elements under the composition law.
pub fn random_mc<R: Rng + ?Sized>(alg: &AInftyAlgebra, ring: &CoeffRing, rng: &mut R) -> Result<Cochain, AInftyError> {
    let n = rng.gen_range(2..=4);
    let mut acc = basic_mc(alg, ring, rng)?;
    for _ in 1..n {
        let next = basic_mc(alg, ring, rng)?;
        acc = compose(alg, &acc, &next, None)?;
    }
    Ok(acc)
}
