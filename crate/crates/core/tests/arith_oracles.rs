use formal_mc::arith::{
    eta_product_coeffs, eta_suite, euler_product_coeffs, point_count_suite, random_invertible_matrix, two_quadrics,
    EtaProduct, FANO_TABLE, LEVEL_FIFTEEN,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Multiplies out `∏ (1 - q^n)` factor by factor.
fn naive_euler(bound: usize) -> Vec<i64> {
    let mut acc = vec![0i64; bound + 1];
    acc[0] = 1;
    for n in 1..=bound {
        for i in (n..=bound).rev() {
            acc[i] -= acc[i - n];
        }
    }
    acc
}

fn naive_eta(levels: &[u64], order: usize) -> Vec<i64> {
    let shift = (levels.iter().sum::<u64>() / 24) as usize;
    let bound = order - shift;
    let mut acc = vec![0i64; bound + 1];
    acc[0] = 1;
    for &k in levels {
        let f = naive_euler(bound / k as usize);
        let mut next = vec![0i64; bound + 1];
        for (i, &a) in acc.iter().enumerate() {
            for (j, &b) in f.iter().enumerate() {
                if i + j * k as usize <= bound {
                    next[i + j * k as usize] += a * b;
                }
            }
        }
        acc = next;
    }
    (1..=order).map(|m| if m < shift { 0 } else { acc[m - shift] }).collect()
}

#[test]
fn pentagonal_matches_naive_product() {
    assert_eq!(euler_product_coeffs(20), naive_euler(20));
    assert_eq!(euler_product_coeffs(300), naive_euler(300));
}

#[test]
fn eta_matches_naive_and_table() {
    let fast = eta_product_coeffs(&EtaProduct::new(LEVEL_FIFTEEN.to_vec(), 50).unwrap());
    assert_eq!(fast, naive_eta(&LEVEL_FIFTEEN, 50));
    assert!(eta_suite(50).passed());
    let at_primes: Vec<i64> = FANO_TABLE.iter().map(|&(p, _)| fast[p as usize - 1]).collect();
    assert_eq!(at_primes, vec![-1, -1, 1, 0, -4, -2, 2, 4, 0, -2, 0, -10, 10]);
}

#[test]
fn eta_is_multiplicative_at_coprime_indices() {
    // Hecke eigenform of level 15: a(mn) = a(m)a(n) for coprime m, n.
    let a = eta_product_coeffs(&EtaProduct::new(LEVEL_FIFTEEN.to_vec(), 400).unwrap());
    let at = |n: usize| a[n - 1];
    for (m, n) in [(2, 7), (7, 11), (4, 13), (11, 17), (8, 19)] {
        assert_eq!(at(m * n), at(m) * at(n), "m={m} n={n}");
    }
}

#[test]
fn large_order_is_fast_and_consistent() {
    let big = eta_product_coeffs(&EtaProduct::new(LEVEL_FIFTEEN.to_vec(), 10_000).unwrap());
    let small = eta_product_coeffs(&EtaProduct::new(LEVEL_FIFTEEN.to_vec(), 200).unwrap());
    assert_eq!(&big[..200], &small[..]);
}

#[test]
fn point_count_congruences() {
    let r = point_count_suite();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn point_count_is_linear_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in [2u64, 3, 7, 11] {
        let c = two_quadrics(p);
        let n = c.count_points();
        for _ in 0..3 {
            let a = random_invertible_matrix(&mut rng, 4, p);
            assert_eq!(c.linear_change(&a).unwrap().count_points(), n, "p={p}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn eta_products_match_naive(levels in prop::sample::select(vec![vec![1u64, 23], vec![2, 22], vec![1, 3, 5, 15], vec![4, 4, 4, 4, 4, 4], vec![1, 1, 11, 11]]), order in 5usize..60) {
        let fast = eta_product_coeffs(&EtaProduct::new(levels.clone(), order).unwrap());
        prop_assert_eq!(fast, naive_eta(&levels, order));
    }
}
