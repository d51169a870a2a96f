//! Verification suites for the parameter-space combinatorics.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{
    boundary_squared, causal_orderings_brute_force, monoid_check, mww_counts, mww_strata, planar_trees,
    random_decorated_tree, DecoratedTree, GluingMonoid, SearchBounds,
};
use crate::report::{Row, SuiteReport};

/// Codimension-one stratum with one small-mid vertex; edges labeled 1..3.
pub const CODIM_ONE_TREE: &str = "(L (M*#1) (M#3 (SM#2 1 1)))";

/// Seven-edge stratum whose gluing parameters satisfy `λ₂λ₃ = λ₅λ₆`.
pub const CORNER_TREE: &str = "(L (L#3 (M*#1 1) (M#2 1)) (M#7 (SL#6 (SM#4 2 2) (SM#5 2 2))))";

/// Boundary squares, face counts of colored multiplihedra, and causal orderings.
pub fn combinatorics_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("operads");
    for d in 2..=7 {
        let sq = boundary_squared(d);
        rep.push(Row::check("boundary-squared", format!("d={d}"), 0, sq.len()));
    }
    let c = mww_counts(&[1, 1, 1], 1);
    let large3 = mww_strata(&[1, 1, 1], 1).iter().filter(|s| s.mid_sizes() == vec![1, 1, 1]).count();
    rep.push(Row::check("mww-faces", "colors=1,1,1", "12 (6 three-screen)", format!("{} ({} three-screen)", c.total, large3)));
    let c = mww_counts(&[2, 1], 1);
    rep.push(Row::check("mww-faces", "colors=2,1", "8 (1 small)", format!("{} ({} small)", c.total, c.with_small)));
    for r in 1..=5usize {
        let expected: usize = (r..=2 * r - 2).product::<usize>().max(1);
        rep.push(Row::check("mww-vertices", format!("r={r}"), expected, mww_strata(&vec![1; r], r - 1).len()));
    }
    for n in 1..=6 {
        let trees = planar_trees(n);
        let bad = trees.iter().filter(|t| t.causal_orderings() != BigInt::from(causal_orderings_brute_force(t))).count();
        rep.push(Row::check("causal-orderings", format!("vertices={n}, trees={}", trees.len()), 0, bad));
    }
    rep
}

/// The two worked strata plus rank checks on random decorated trees.
pub fn monoid_suite(random_trees: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("monoid");
    let bounds = SearchBounds::default();
    let t = DecoratedTree::parse(CODIM_ONE_TREE).expect("valid fixture");
    let r = monoid_check(&t, bounds);
    rep.push(Row::check(
        "monoid/codim-one",
        CODIM_ONE_TREE,
        "rank=1 free=true saturated=true sharp=true",
        format!("rank={} free={} saturated={} sharp={}", r.rank, r.group_free && r.monoid_free, r.saturated == Some(true), r.sharp),
    ));
    let t = DecoratedTree::parse(CORNER_TREE).expect("valid fixture");
    let gm = GluingMonoid::new(&t);
    let relation = gm.evaluate(&[("2", 1), ("3", 1), ("5", -1), ("6", -1)]).expect("labels exist");
    let r = monoid_check(&t, bounds);
    rep.push(Row::check(
        "monoid/corner",
        CORNER_TREE,
        "group_free=true relation=true saturated=true sharp=true monoid_free=false",
        format!(
            "group_free={} relation={} saturated={} sharp={} monoid_free={}",
            r.group_free,
            relation.iter().all(|&x| x == 0),
            r.saturated == Some(true),
            r.sharp,
            r.monoid_free
        ),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    for _ in 0..random_trees {
        let t = random_decorated_tree(&mut rng, 10);
        let r = monoid_check(&t, bounds);
        if r.rank != r.expected_rank || !r.group_free || !r.sharp || r.saturated != Some(true) {
            mismatches.push(t.to_string());
        }
    }
    rep.push(Row::flag(
        "monoid/random-rank",
        format!("trees={random_trees} seed={seed}"),
        mismatches.is_empty(),
        mismatches.join("; "),
    ));
    rep
}
