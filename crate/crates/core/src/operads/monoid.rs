//! Gluing-parameter monoids of decorated trees: the abelian group generated
//! by the finite edges modulo the mid-scale and turning-point relations, and
//! the submonoid generated by the edges.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::decorated::{DecoratedTree, Scale};
use crate::coeff::linalg::{cokernel, Cokernel};

/// Limits of the saturation and sharpness searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    /// Largest multiplier `m` tried in `m·g ∈ M`.
    pub max_multiplier: usize,
    /// Largest number of generators summed when no positive functional is
    /// available (membership and the search for a vanishing sum).
    pub max_terms: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_multiplier: 6, max_terms: 12 }
    }
}

/// Outcome of [`monoid_check`]. Saturation is verified for multipliers up to
/// `bounds.max_multiplier`;
/// sharpness is certified by a strictly positive functional when one is found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonoidReport {
    pub edges: usize,
    pub relations: usize,
    pub rank: usize,
    /// Vertices that are neither mid-scale nor small-mid scale.
    pub expected_rank: usize,
    pub group_free: bool,
    /// `None` when the tree exceeds [`MAX_SATURATION_EDGES`].
    pub saturated: Option<bool>,
    pub sharp: bool,
    /// Positive functional on the generators, certifying sharpness.
    pub sharp_certificate: Option<Vec<i64>>,
    /// Number of irreducible generators; the monoid is free iff this equals the rank.
    pub irreducible: usize,
    pub monoid_free: bool,
    pub saturation_counterexample: Option<Vec<i64>>,
    pub bounds: SearchBounds,
}

/// Largest tree (in finite edges) on which the saturation search runs.
pub const MAX_SATURATION_EDGES: usize = 12;

/// Presentation of the gluing group of a decorated tree.
#[derive(Clone, Debug)]
pub struct GluingMonoid {
    tree: DecoratedTree,
    relations: Vec<Vec<i64>>,
    cokernel: Cokernel,
    images: Vec<Vec<i64>>,
}

impl GluingMonoid {
    pub fn new(tree: &DecoratedTree) -> Self {
        let n = tree.vertex_count();
        let mut relations = Vec::new();
        for v in 0..n {
            match tree.vertices()[v].scale {
                Scale::Mid if v != tree.distinguished() => relations.push(tree.path_vector(v)[1..].to_vec()),
                Scale::SmallMid => {
                    let plus = tree.path_vector(tree.turning_point(v));
                    let minus = tree.path_vector(v);
                    relations.push(plus.iter().zip(&minus).skip(1).map(|(a, b)| a + b).collect());
                }
                _ => {}
            }
        }
        let matrix: Vec<Vec<BigInt>> = relations.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let cokernel = cokernel(&matrix, n - 1);
        let images = (0..n - 1)
            .map(|e| {
                let mut unit = vec![BigInt::from(0); n - 1];
                unit[e] = BigInt::from(1);
                to_i64(&cokernel.project(&unit))
            })
            .collect();
        GluingMonoid { tree: tree.clone(), relations, cokernel, images }
    }

    pub fn tree(&self) -> &DecoratedTree {
        &self.tree
    }

    /// Relation vectors over the finite edges (edge `k` leaves vertex `k + 1`).
    pub fn relations(&self) -> &[Vec<i64>] {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.cokernel.rank()
    }

    /// Image of the edge leaving vertex `v` in free coordinates.
    pub fn edge_image(&self, v: usize) -> &[i64] {
        &self.images[v - 1]
    }

    /// Evaluates a combination of named edges in the group. The combination
    /// vanishes in the group iff the corresponding multiplicative relation
    /// between gluing parameters holds.
    pub fn evaluate(&self, terms: &[(&str, i64)]) -> Option<Vec<i64>> {
        let mut out = vec![0i64; self.rank()];
        for &(name, c) in terms {
            let v = self.tree.edge_by_name(name)?;
            for (o, x) in out.iter_mut().zip(self.edge_image(v)) {
                *o += c * x;
            }
        }
        Some(out)
    }

    /// Distinct nonzero generator images.
    fn generators(&self) -> Vec<Vec<i64>> {
        let mut seen = HashSet::new();
        self.images.iter().filter(|g| g.iter().any(|&x| x != 0) && seen.insert((*g).clone())).cloned().collect()
    }
}

fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("small coordinates")).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Perceptron search for `ℓ` with `ℓ(g) > 0` on every generator; it
/// terminates whenever such a functional exists.
fn positive_functional(gens: &[Vec<i64>], rank: usize) -> Option<Vec<i64>> {
    let mut l = vec![0i64; rank];
    for _ in 0..20_000 {
        match gens.iter().find(|g| dot(&l, g) <= 0) {
            None => return Some(l),
            Some(g) => l.iter_mut().zip(g).for_each(|(a, b)| *a += b),
        }
    }
    None
}

struct Membership<'a> {
    gens: &'a [Vec<i64>],
    functional: Option<&'a [i64]>,
    max_terms: usize,
    failed: HashSet<(usize, Vec<i64>, usize)>,
}

impl Membership<'_> {
    fn contains(&mut self, g: &[i64]) -> bool {
        let budget = match self.functional {
            Some(l) => {
                let h = dot(l, g);
                if h < 0 {
                    return false;
                }
                h as usize
            }
            None => self.max_terms,
        };
        self.search(0, g.to_vec(), budget)
    }

    /// With a functional the budget is the remaining height; otherwise it
    /// counts the generators still allowed.
    fn search(&mut self, idx: usize, rem: Vec<i64>, budget: usize) -> bool {
        if rem.iter().all(|&x| x == 0) {
            return true;
        }
        if idx == self.gens.len() {
            return false;
        }
        let key = (idx, rem.clone(), budget);
        if self.failed.contains(&key) {
            return false;
        }
        let g = &self.gens[idx];
        let cost = self.functional.map_or(1, |l| dot(l, g) as usize);
        let mut cur = rem.clone();
        let mut spent = 0;
        loop {
            if self.search(idx + 1, cur.clone(), budget - spent) {
                return true;
            }
            if spent + cost > budget {
                break;
            }
            spent += cost;
            cur.iter_mut().zip(g).for_each(|(a, b)| *a -= b);
        }
        self.failed.insert(key);
        false
    }
}

/// Sums `Σ r_g·g` over the generators with residues `0 ≤ r_g < m`.
fn residue_sums(gens: &[Vec<i64>], rank: usize, m: i64) -> HashSet<Vec<i64>> {
    let mut all: HashSet<Vec<i64>> = HashSet::from([vec![0; rank]]);
    for g in gens {
        let mut next = HashSet::with_capacity(all.len() * m as usize);
        for h in &all {
            let mut cur = h.clone();
            for _ in 0..m {
                next.insert(cur.clone());
                cur.iter_mut().zip(g).for_each(|(a, b)| *a += b);
            }
        }
        all = next;
    }
    all
}

fn is_prime(m: usize) -> bool {
    m >= 2 && (2..m).take_while(|d| d * d <= m).all(|d| m % d != 0)
}

/// Rank, freeness, saturation and sharpness of the gluing monoid.
pub fn monoid_check(tree: &DecoratedTree, bounds: SearchBounds) -> MonoidReport {
    let gm = GluingMonoid::new(tree);
    let rank = gm.rank();
    let gens = gm.generators();
    let functional = positive_functional(&gens, rank);

    let sharp = match &functional {
        Some(_) => true,
        // A nontrivial sum of generators equal to zero exhibits a unit pair.
        None => {
            let mut reach: HashMap<Vec<i64>, usize> = HashMap::new();
            let mut layer = vec![vec![0i64; rank]];
            let mut found = false;
            'outer: for t in 1..=bounds.max_terms {
                let mut next = Vec::new();
                for h in &layer {
                    for g in &gens {
                        let s: Vec<i64> = h.iter().zip(g).map(|(a, b)| a + b).collect();
                        if s.iter().all(|&x| x == 0) {
                            found = true;
                            break 'outer;
                        }
                        if !reach.contains_key(&s) {
                            reach.insert(s.clone(), t);
                            next.push(s);
                        }
                    }
                }
                layer = next;
            }
            !found
        }
    };

    let mut member = Membership { gens: &gens, functional: functional.as_deref(), max_terms: bounds.max_terms, failed: HashSet::new() };

    // If m·g = Σ n_g·g, writing n_g = m·q_g + r_g shows that g lies in M as
    // soon as (Σ r_g·g)/m does; so residues below m are enough, and composite
    // multipliers reduce to their prime factors.
    let mut counterexample = None;
    let searched = tree.vertex_count() <= MAX_SATURATION_EDGES + 1;
    'search: for m in (2..=bounds.max_multiplier).filter(|&m| searched && is_prime(m)) {
        let m = m as i64;
        let mut candidates: Vec<Vec<i64>> =
            residue_sums(&gens, rank, m).into_iter().filter(|h| h.iter().all(|x| x % m == 0)).collect();
        candidates.sort();
        for h in candidates {
            let g: Vec<i64> = h.iter().map(|x| x / m).collect();
            if !member.contains(&g) {
                counterexample = Some(g);
                break 'search;
            }
        }
    }

    let irreducible = gens
        .iter()
        .filter(|g| {
            !gens.iter().any(|h| {
                h != *g && {
                    let d: Vec<i64> = g.iter().zip(h).map(|(a, b)| a - b).collect();
                    member.contains(&d)
                }
            })
        })
        .count();

    MonoidReport {
        edges: tree.vertex_count() - 1,
        relations: gm.relations().len(),
        rank,
        expected_rank: tree.free_vertex_count(),
        group_free: gm.cokernel.torsion_free(),
        saturated: searched.then_some(counterexample.is_none()),
        sharp,
        sharp_certificate: functional,
        irreducible,
        monoid_free: sharp && irreducible == rank,
        saturation_counterexample: counterexample,
        bounds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let t = DecoratedTree::parse("(L (M* 1) (M 1))").unwrap();
        let r = monoid_check(&t, SearchBounds::default());
        // Two edges, one mid relation.
        assert_eq!((r.edges, r.relations, r.rank, r.expected_rank), (2, 1, 1, 1));
        assert!(r.group_free && r.saturated == Some(true) && r.sharp && r.monoid_free);
        let t = DecoratedTree::parse("(M* (S 1 1) 2)").unwrap();
        let r = monoid_check(&t, SearchBounds::default());
        assert_eq!((r.edges, r.relations, r.rank), (1, 0, 1));
        assert!(r.group_free && r.saturated == Some(true) && r.sharp && r.monoid_free);
    }

    #[test]
    fn codim_one_small_mid() {
        let t = DecoratedTree::parse("(L (M*#1) (M#3 (SM#2 1 1)))").unwrap();
        let gm = GluingMonoid::new(&t);
        assert_eq!(gm.rank(), 1);
        assert_eq!(gm.evaluate(&[("1", -1), ("3", 1)]), Some(vec![0]));
        assert_eq!(gm.evaluate(&[("1", 2), ("2", -1), ("3", -1)]), Some(vec![0]));
        let g1 = gm.evaluate(&[("1", 1)]).unwrap();
        assert_eq!(gm.evaluate(&[("2", 1)]).unwrap(), g1);
    }

    #[test]
    fn detects_non_saturated_monoid() {
        // Generators 2 and 3 in ℤ: the element 1 has 2·1 in the monoid but is not in it.
        let gens = vec![vec![2], vec![3]];
        let l = positive_functional(&gens, 1).unwrap();
        let mut m = Membership { gens: &gens, functional: Some(&l), max_terms: 12, failed: HashSet::new() };
        assert!(!m.contains(&[1]));
        assert!(m.contains(&[5]));
        assert!(m.contains(&[2]));
    }

    #[test]
    fn non_sharp_cone_has_no_functional() {
        assert!(positive_functional(&[vec![1], vec![-1]], 1).is_none());
    }
}
