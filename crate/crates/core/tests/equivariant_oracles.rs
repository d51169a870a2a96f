use formal_mc::coeff::linalg::rank_mod_p;
use formal_mc::equivariant::{
    equivariant_euler, equivariant_suite, t_periodic, zp_cohomology, zp_homology, EquivariantComplex,
    SteenrodConstants,
};
use proptest::prelude::*;

/// A permutation module built from `fixed` trivial orbits and `free` free
/// orbits, concentrated in degree 0 with zero differential.
fn permutation_module(p: u64, fixed: usize, free: usize, truncation: usize) -> EquivariantComplex {
    let t = action_of(p, fixed, free);
    let n = t.len();
    let names = (0..n).map(|k| format!("e{k}")).collect();
    EquivariantComplex::new(p, names, vec![0; n], vec![vec![0; n]; n], t, truncation).unwrap()
}

/// Group cohomology of a module in degree 0 from the periodic resolution:
/// `H^0 = ker(T-1)`, `H^odd = ker N / im(T-1)`, `H^even>0 = ker(T-1) / im N`.
fn periodic_oracle(p: u64, t: &[Vec<u64>], degree: i64) -> usize {
    let n = t.len();
    let mut diff: Vec<Vec<u64>> = t.to_vec();
    for (i, row) in diff.iter_mut().enumerate() {
        row[i] = (row[i] + p - 1) % p;
    }
    let mut norm = vec![vec![0u64; n]; n];
    let mut power: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    for _ in 0..p {
        for i in 0..n {
            for j in 0..n {
                norm[i][j] = (norm[i][j] + power[i][j]) % p;
            }
        }
        power = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| t[i][k] * power[k][j]).sum::<u64>() % p).collect()).collect();
    }
    let r_diff = rank_mod_p(&mut diff.clone(), p);
    let r_norm = rank_mod_p(&mut norm.clone(), p);
    // ker N / im(T-1) and ker(T-1) / im N have the same dimension.
    if degree == 0 {
        n - r_diff
    } else {
        n - r_diff - r_norm
    }
}

fn action_of(p: u64, fixed: usize, free: usize) -> Vec<Vec<u64>> {
    let n = fixed + free * p as usize;
    let mut t = vec![vec![0u64; n]; n];
    for i in 0..fixed {
        t[i][i] = 1;
    }
    for o in 0..free {
        let base = fixed + o * p as usize;
        for j in 0..p as usize {
            t[base + (j + 1) % p as usize][base + j] = 1;
        }
    }
    t
}

#[test]
fn suite_passes_for_small_primes() {
    let r = equivariant_suite(&[2, 3, 5, 7, 11]);
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn free_module_matches_periodic_oracle() {
    for p in [2, 3, 5, 7] {
        let e = permutation_module(p, 0, 1, 6);
        let t = action_of(p, 0, 1);
        for (deg, dim) in zp_cohomology(&e) {
            assert_eq!(dim, periodic_oracle(p, &t, deg), "p={p} degree {deg}");
        }
    }
}

#[test]
fn zero_differential_factorizes() {
    let e = EquivariantComplex::with_trivial_action(3, &[0, 2, 2, 5], 10).unwrap();
    let dims = zp_cohomology(&e);
    // H(C) ⊗ F_p[t, θ]: one class per basis element in every degree above it.
    for (deg, dim) in dims {
        let expected = e.degrees().iter().filter(|&&c| c <= deg).count();
        assert_eq!(dim, expected, "degree {deg}");
    }
}

#[test]
fn trivial_homology_is_one_dimensional_downwards() {
    let e = EquivariantComplex::trivial(5, 6).unwrap();
    let h = zp_homology(&e);
    assert_eq!(h.keys().next(), Some(&-12));
    assert!(h.values().all(|&d| d == 1));
}

#[test]
fn invalid_action_is_rejected_before_computation() {
    // T of order 2 is not an action of Z/3.
    let t = vec![vec![0, 1], vec![1, 0]];
    let r = EquivariantComplex::new(3, vec!["a".into(), "b".into()], vec![0, 0], vec![vec![0; 2]; 2], t, 4);
    assert!(r.is_err());
    // T not commuting with d.
    let d = vec![vec![0, 0], vec![1, 0]];
    let t = vec![vec![1, 0], vec![0, 2]];
    assert!(EquivariantComplex::new(2, vec!["a".into(), "b".into()], vec![0, 1], d, t, 4).is_err());
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn permutation_modules_match_oracle(p in prime(), fixed in 0usize..3, free in 0usize..3, k in 2usize..6) {
        prop_assume!(fixed + free > 0);
        let e = permutation_module(p, fixed, free, k);
        let model = e.cochain_model();
        prop_assert!(model.squares_to_zero());
        prop_assert!(e.chain_model().squares_to_zero());
        let t = action_of(p, fixed, free);
        for (deg, dim) in model.dimensions() {
            prop_assert_eq!(dim, periodic_oracle(p, &t, deg));
        }
        prop_assert!(t_periodic(&e));
    }

    #[test]
    fn acyclic_shift_complexes(p in prime(), k in 2usize..6) {
        // C = F_p[Z/p] --id--> F_p[Z/p], acyclic, so the equivariant cohomology vanishes.
        let n = p as usize;
        let mut d = vec![vec![0u64; 2 * n]; 2 * n];
        let mut t = vec![vec![0u64; 2 * n]; 2 * n];
        for j in 0..n {
            d[n + j][j] = 1;
            t[(j + 1) % n][j] = 1;
            t[n + (j + 1) % n][n + j] = 1;
        }
        let mut degrees = vec![0; n];
        degrees.extend(vec![1; n]);
        let names = (0..2 * n).map(|i| format!("e{i}")).collect();
        let e = EquivariantComplex::new(p, names, degrees, d, t, k).unwrap();
        prop_assert!(e.cochain_model().squares_to_zero());
        prop_assert!(zp_cohomology(&e).values().all(|&d| d == 0));
    }

    #[test]
    fn euler_multiplicative(a in prop::collection::vec(-20i64..20, 0..6), b in prop::collection::vec(-20i64..20, 0..6)) {
        let mut ab = a.clone();
        ab.extend(&b);
        prop_assert_eq!(equivariant_euler(&ab), equivariant_euler(&a).mul(&equivariant_euler(&b)));
    }

    #[test]
    fn leading_component_two_routes(p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 19, 23]), n in 0u64..16) {
        let s = SteenrodConstants::new(p, n);
        prop_assert_eq!(s.leading(), s.leading_from_euler());
    }
}
