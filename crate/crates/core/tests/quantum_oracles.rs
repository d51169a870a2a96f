use std::path::PathBuf;

use formal_mc::arith::FANO_TABLE;
use formal_mc::coeff::{factorial, CoeffRing, Scalar};
use formal_mc::quantum::{
    closed_forms_suite, constant, fano_table_suite, fixture_suite, fixtures_dir_suite, identity, least_abs,
    quantum_period, qxi_threefold, reduce_mod_p, FanoModel, GwTable, LowDegreeMode, QuantumConnection,
    QuantumError,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/gw")
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `Σ 1/(d1!² d2!⁴)` over `d1 + 2 d2 = m`, i.e. `[q^m] e^{q}Π / m!`.
fn blowup_weight(m: usize) -> BigRational {
    let f = |n: usize| BigRational::from_integer(factorial(n as u64));
    (0..=m / 2).map(|d2| BigRational::from_integer(1.into()) / (f(m - 2 * d2).pow(2) * f(d2).pow(4))).sum()
}

#[test]
fn blowup_scalar_is_a_weighted_sum() {
    // Over F_p, (p-1)! = -1, so -[q^{p-1}] e^{q}Π ≡ Σ 1/(d1!² d2!⁴).
    assert_eq!(blowup_weight(4), rat(181, 576));
    for &(p, entry) in FANO_TABLE.iter().skip(1) {
        let w = reduce_mod_p(&blowup_weight(p as usize - 1), p).unwrap();
        assert_eq!(least_abs(w, p).rem_euclid(p as i64), entry.rem_euclid(p as i64), "p={p}");
        assert_eq!(qxi_threefold(FanoModel::Blowup12, p).unwrap().value, w, "p={p}");
    }
}

#[test]
fn table_and_closed_forms() {
    let r = fano_table_suite(&[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41]);
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    let r = closed_forms_suite(&[3, 5, 7, 11, 13]);
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn two_quadrics_is_a_central_binomial_sign() {
    for p in [3u64, 5, 7, 11, 13, 17, 19] {
        let v = qxi_threefold(FanoModel::TwoQuadrics, p).unwrap();
        let want = if (p - 1) / 2 % 2 == 0 { 1 } else { -1 };
        assert_eq!(v.least_abs, want, "p={p}");
    }
}

#[test]
fn blowup_at_two_agrees_mod_two_only() {
    let v = qxi_threefold(FanoModel::Blowup12, 2).unwrap();
    assert_eq!(v.value, 1);
    assert_ne!(v.explicit_sum, v.period_coefficient);
}

#[test]
fn quartic_period_low_terms() {
    // [q²] of e^{-24q} Σ (4d)!/(d!)⁵ q^d is 1260 - 24·24 + 24²/2.
    let pi = quantum_period(FanoModel::Quartic, 4).unwrap();
    assert_eq!(pi.coeff(1), Scalar::Rat(rat(0, 1)));
    assert_eq!(pi.coeff(2), Scalar::Rat(rat(972, 1)));
}

#[test]
fn fixtures_reproduce_the_worked_values() {
    let r = fixtures_dir_suite(&fixtures());
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert_eq!(r.rows.iter().filter(|row| row.id == "fixture").count(), 6);
    assert_eq!(r.rows.iter().filter(|row| row.id == "degree-one").count(), 4);
}

#[test]
fn full_formula_needs_more_data_on_the_quadric() {
    let t = GwTable::load(&fixtures().join("torus_quadric_p3.json")).unwrap();
    let st = t.steenrod_terms(&t.checks()[0].steenrod).unwrap();
    let (_, y) = t.algebra().parse("b*h2").unwrap().unwrap();
    let r = t.qst_low_degree(&st, y, LowDegreeMode::Full, None);
    assert!(matches!(r, Err(QuantumError::MissingEntry(_)) | Err(QuantumError::NegativePowers(_))), "{r:?}");
    let ok = t.qst_low_degree(&st, y, LowDegreeMode::Indecomposable, None).unwrap();
    // The classical pairing sits at t³, the curve terms at t¹.
    assert!(ok.keys().all(|&e| e == 2 || e == 6), "{ok:?}");
}

#[test]
fn wrong_fixture_value_is_detected() {
    let text = std::fs::read_to_string(fixtures().join("torus_quadric_p3.json")).unwrap();
    let broken = text.replacen("\"value\": \"1\"\n", "\"value\": \"2\"\n", 1);
    assert_ne!(broken, text);
    let r = fixture_suite(&GwTable::from_json(&broken).unwrap());
    assert!(!r.passed());
}

fn solve_by_series(conn_terms: &[Vec<Vec<i64>>], phi0: &[Vec<i64>], m: usize, p: u64) -> bool {
    let f = CoeffRing::prime_field(p).unwrap();
    let sc = |v: &Vec<Vec<i64>>| -> Vec<Vec<Scalar>> { v.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect() };
    let terms: Vec<_> = conn_terms.iter().map(sc).collect();
    let conn = QuantumConnection::new(&f, &terms).unwrap();
    let start = constant(&f, &sc(&phi0.to_vec()));
    let a = conn.flat_endomorphism_solve(&start, m).unwrap();
    let b = conn.flat_endomorphism_iterate(&start, m).unwrap();
    a == b && conn.flat_residual_vanishes(&a)
}

/// Strictly upper triangular matrices are nilpotent; polynomials in one
/// of them commute with it.
fn upper(n: usize, seed: &[i64]) -> Vec<Vec<i64>> {
    let mut it = seed.iter().cycle();
    (0..n).map(|i| (0..n).map(|j| if j > i { *it.next().unwrap() } else { 0 }).collect()).collect()
}

#[test]
fn rank_one_section_matches_exponential() {
    let q = CoeffRing::rationals();
    let l = Scalar::Rat(rat(-24, 1));
    let conn = QuantumConnection::new(&q, &[vec![vec![Scalar::Rat(rat(0, 1))]], vec![vec![l]]]).unwrap();
    let s = conn.flat_section_solve(5).unwrap();
    for (k, sk) in s.iter().enumerate() {
        let want = rat(24i64.pow(k as u32), 1) / BigRational::from_integer(factorial(k as u64));
        assert_eq!(sk[0][0].coeff(&[-(k as i64)]), Scalar::Rat(want));
    }
    let phi = conn.flat_endomorphism_solve(&identity(&q, 1), 5).unwrap();
    assert!(phi[1..].iter().all(|m| m[0][0].is_empty()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn flat_routes_agree(n in 1usize..4, seeds in prop::collection::vec(prop::collection::vec(-3i64..4, 6), 3), a in -2i64..3, b in -2i64..3) {
        let p = 7;
        let m0 = upper(n, &seeds[0]);
        let dense: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| seeds[1][(i + 2 * j) % 6]).collect()).collect();
        let terms = vec![m0.clone(), dense, upper(n, &seeds[2])];
        let mut phi0: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if i == j { a } else { 0 }).collect()).collect();
        for (i, row) in m0.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                phi0[i][j] += b * v;
            }
        }
        prop_assert!(solve_by_series(&terms, &phi0, 5, p));
    }
}
