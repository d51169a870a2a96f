use formal_mc::coeff::{CoeffRing, Scalar};
use formal_mc::fgl::{
    ec_formal_group, fgl_suite, hasse_invariant, honda_suite, is_series_in_z_to_the, validate_model, FormalGroupLaw,
    WeierstrassCurve, MODEL_CURVE,
};
use proptest::prelude::*;

#[test]
fn standard_power_maps() {
    let r = fgl_suite();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn model_curve_route() {
    assert!(validate_model(&MODEL_CURVE).passed());
    let r = honda_suite(&MODEL_CURVE);
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert_eq!(hasse_invariant(&MODEL_CURVE, 7).unwrap(), 0);
    assert_eq!(hasse_invariant(&MODEL_CURVE, 13).unwrap(), 11);
}

#[test]
fn point_count_of_model() {
    // Brute force over the projective closure: x, y in F_p plus infinity.
    assert_eq!(MODEL_CURVE.count_points(7), 8);
    assert_eq!(MODEL_CURVE.count_points(2), 4);
}

#[test]
fn elliptic_powers_are_frobenius_divisible() {
    let f = ec_formal_group(&MODEL_CURVE, 12).unwrap();
    for p in [2u64, 3] {
        let law = f.map_ring(&CoeffRing::prime_field(p).unwrap()).unwrap();
        assert!(is_series_in_z_to_the(&law.multiplication(p), p), "p={p}");
    }
}

#[test]
fn torus_sign_on_field_points() {
    // [p] acts on F_p-points as multiplication by (-1)^{(p-1)/2}.
    for p in [3u64, 5, 7, 11, 13] {
        let law = FormalGroupLaw::torus(&CoeffRing::integers(), p as usize + 1);
        let s = law.p_power_series(p, true).unwrap();
        let expected = if p % 4 == 1 { 1 } else { p - 1 };
        assert_eq!(s.coeff(p as usize), Scalar::Mod(expected));
    }
}

fn curve() -> impl Strategy<Value = WeierstrassCurve> {
    (-3i64..4, -3i64..4, -3i64..4, -3i64..4, -3i64..4).prop_map(|(a, b, c, d, e)| WeierstrassCurve::new(a, b, c, d, e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn honda_matches_point_count(e in curve(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        prop_assume!(e.discriminant() != 0.into() && e.has_good_reduction(p));
        let h = hasse_invariant(&e, p).unwrap();
        prop_assert_eq!(h as i64, e.trace_of_frobenius(p).rem_euclid(p as i64));
    }

    #[test]
    fn elliptic_law_axioms(e in curve()) {
        prop_assume!(e.discriminant() != 0.into());
        let f = ec_formal_group(&e, 6).unwrap();
        prop_assert!(f.verify());
        prop_assert!(f.multiplication_is_endomorphism(3));
    }
}
