use formal_mc::coeff::{laurent_power_constant_term, CoeffRing, LaurentPoly, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rings() -> Vec<CoeffRing> {
    vec![
        CoeffRing::integers(),
        CoeffRing::rationals(),
        CoeffRing::prime_field(7).unwrap(),
        CoeffRing::prime_power(3, 3).unwrap(),
        CoeffRing::truncated_fp(3, 3).unwrap(),
        CoeffRing::adic(CoeffRing::rationals(), "q", 4).unwrap(),
        CoeffRing::adic(CoeffRing::prime_power(2, 3).unwrap(), "q", 2).unwrap(),
    ]
}

proptest! {
    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for r in rings() {
            let (a, b, c) = (r.random(&mut rng, false, 9), r.random(&mut rng, false, 9), r.random(&mut rng, false, 9));
            prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
            prop_assert_eq!(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c)));
            prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
            prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
            prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
            prop_assert_eq!(r.mul(&a, &r.one()), a.clone());
            prop_assert!(r.is_zero(&r.sub(&a, &a)));
            prop_assert_eq!(r.reduce(&a).unwrap(), a.clone());
        }
    }

    #[test]
    fn ideal_is_nilpotent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for r in rings() {
            let Some(m) = r.nilpotency() else { continue };
            let mut prod = r.one();
            for _ in 0..=m {
                let x = r.random(&mut rng, true, 9);
                prop_assert!(r.in_ideal(&x));
                prod = r.mul(&prod, &x);
            }
            prop_assert!(r.is_zero(&prod));
        }
    }

    #[test]
    fn constant_term_is_multiplicative_in_powers(m1 in 0u32..4, m2 in 0u32..4, coeffs in proptest::collection::vec(-3i64..4, 4)) {
        let z = CoeffRing::integers();
        let exps = [vec![1, 0], vec![-1, 1], vec![0, -1], vec![0, 0]];
        let terms: Vec<(i64, Vec<i64>)> = coeffs.iter().cloned().zip(exps.iter().cloned()).collect();
        let w = LaurentPoly::from_terms(&z, &["x", "y"], &terms);
        let direct = laurent_power_constant_term(&w, m1 + m2).unwrap();
        let product = w.pow(m1).mul(&w.pow(m2)).constant_term();
        prop_assert_eq!(Scalar::Int(direct.to_integer()), product);
    }
}
