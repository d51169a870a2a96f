//! Verification suites for the power lemma and the group axioms.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::algebra::{exterior_ab, interval, truncated_polynomial, AInftyAlgebra};
use super::cochain::Cochain;
use super::mc::{compose, mc_check, mc_inverse, power};
use super::random::{random_cochain, random_mc};
use super::xi::xi_p;
use super::AInftyError;
use crate::coeff::CoeffRing;
use crate::report::{Row, SuiteReport};

/// Compares the `p`-fold composite of `γ` over `q F_p[q]/q^{p+1}` with
/// `Ξ_p(c) q^p`, where `c` is the `q`-linear part of `γ`, up to length `len`.
pub fn power_lemma_holds(alg: &AInftyAlgebra, gamma: &Cochain, p: u64, len: usize) -> Result<bool, AInftyError> {
    let ring = gamma.ring();
    let c = gamma.q_coefficient(1)?;
    let lhs = power(alg, gamma, p as usize, Some(len))?;
    let rhs = xi_p(alg, &c, p, len)?.embed_scaled(ring, p as usize)?;
    lhs.agrees_up_to(&rhs, len)
}

/// Power-lemma checks on the exterior algebra and `F_p[a]/(a^3)` for each `p`:
/// `samples` random degree-1 cochains (with higher-order terms) and
/// `samples` random Maurer-Cartan elements each.
pub fn power_lemma_suite(primes: &[u64], len: usize, samples: usize, seed: u64) -> Result<SuiteReport, AInftyError> {
    let mut report = SuiteReport::new("power-lemma");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &p in primes {
        let ring = CoeffRing::truncated_fp(p, p as usize)?;
        let base = CoeffRing::prime_field(p)?;
        for alg in [exterior_ab(), truncated_polynomial(p, 3)?] {
            let mut ok_random = true;
            let mut ok_mc = true;
            for _ in 0..samples {
                let c1 = random_cochain(&alg, &base, 1, 2, false, &mut rng).embed_scaled(&ring, 1)?;
                let c2 = random_cochain(&alg, &base, 1, 1, false, &mut rng).embed_scaled(&ring, 2)?;
                ok_random &= power_lemma_holds(&alg, &c1.add(&c2)?, p, len)?;
                let g = random_mc(&alg, &ring, &mut rng)?;
                ok_mc &= power_lemma_holds(&alg, &g, p, len)?;
            }
            let inputs = format!("{} over {ring}, L={len}, {samples} samples", alg.name());
            report.push(Row::flag(format!("power-lemma/random/p={p}"), inputs.clone(), ok_random, "mismatch"));
            report.push(Row::flag(format!("power-lemma/mc/p={p}"), inputs, ok_mc, "mismatch"));
        }
    }
    Ok(report)
}

/// Algebras used for the group-axiom suite.
pub fn group_test_algebras() -> Result<Vec<AInftyAlgebra>, AInftyError> {
    Ok(vec![exterior_ab(), truncated_polynomial(3, 4)?, interval()])
}

/// Associativity, two-sided unit and two-sided inverse on `n` random
/// Maurer-Cartan elements per algebra over `q F_3[q]/q^4`.
pub fn group_axioms_suite(n: usize, seed: u64) -> Result<SuiteReport, AInftyError> {
    let mut report = SuiteReport::new("group-axioms");
    let ring = CoeffRing::truncated_fp(3, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for alg in group_test_algebras()? {
        let elems = (0..n).map(|_| random_mc(&alg, &ring, &mut rng)).collect::<Result<Vec<_>, _>>()?;
        let zero = Cochain::zero(&ring, 1);
        let (mut mc, mut assoc, mut unit, mut inverse, mut closed) = (true, true, true, true, true);
        for (i, g) in elems.iter().enumerate() {
            mc &= mc_check(&alg, g)?;
            let h = &elems[(i + 1) % n];
            let k = &elems[(i + 2) % n];
            let gh = compose(&alg, g, h, None)?;
            closed &= mc_check(&alg, &gh)?;
            let left = compose(&alg, &gh, k, None)?;
            let right = compose(&alg, g, &compose(&alg, h, k, None)?, None)?;
            assoc &= left == right;
            unit &= compose(&alg, g, &zero, None)? == *g && compose(&alg, &zero, g, None)? == *g;
            let inv = mc_inverse(&alg, g, None)?;
            inverse &= mc_check(&alg, &inv)?
                && compose(&alg, g, &inv, None)?.is_zero()
                && compose(&alg, &inv, g, None)?.is_zero();
        }
        let inputs = format!("{} over {ring}, {n} elements", alg.name());
        report.push(Row::flag(format!("group/{}/mc", alg.name()), inputs.clone(), mc, "generator output not MC"));
        report.push(Row::flag(format!("group/{}/closure", alg.name()), inputs.clone(), closed, "product not MC"));
        report.push(Row::flag(format!("group/{}/associativity", alg.name()), inputs.clone(), assoc, "mismatch"));
        report.push(Row::flag(format!("group/{}/unit", alg.name()), inputs.clone(), unit, "mismatch"));
        report.push(Row::flag(format!("group/{}/inverse", alg.name()), inputs, inverse, "mismatch"));
    }
    Ok(report)
}
