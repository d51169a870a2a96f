//! Rooted planar trees described by their vertices, and causal orderings.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::coeff::factorial;

/// A vertex together with its ordered subtrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarTree {
    pub children: Vec<PlanarTree>,
}

impl PlanarTree {
    pub fn vertex() -> Self {
        PlanarTree { children: Vec::new() }
    }

    pub fn node(children: Vec<PlanarTree>) -> Self {
        PlanarTree { children }
    }

    /// A path with `n` vertices.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1);
        (1..n).fold(Self::vertex(), |t, _| Self::node(vec![t]))
    }

    /// A root with `k` childless children.
    pub fn star(k: usize) -> Self {
        Self::node(vec![Self::vertex(); k])
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }

    /// Number of labelings of the vertices by `1..=n`, increasing towards the root.
    ///
    /// Computed by the hook-length formula `n! / Π_v |subtree(v)|`.
    pub fn causal_orderings(&self) -> BigInt {
        let mut hooks = BigInt::one();
        self.hook_product(&mut hooks);
        factorial(self.size() as u64) / hooks
    }

    fn hook_product(&self, acc: &mut BigInt) {
        *acc *= BigInt::from(self.size());
        for c in &self.children {
            c.hook_product(acc);
        }
    }

    /// Vertices in preorder as parent indices (root has `None`).
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut out = Vec::new();
        self.collect_parents(None, &mut out);
        out
    }

    fn collect_parents(&self, parent: Option<usize>, out: &mut Vec<Option<usize>>) {
        let me = out.len();
        out.push(parent);
        for c in &self.children {
            c.collect_parents(Some(me), out);
        }
    }

    /// Parses the bracket notation used by [`fmt::Display`], e.g. `(()(()))`.
    pub fn parse(s: &str) -> Option<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (t, used) = Self::parse_at(&chars, 0)?;
        (used == chars.len()).then_some(t)
    }

    fn parse_at(chars: &[char], mut i: usize) -> Option<(Self, usize)> {
        if chars.get(i) != Some(&'(') {
            return None;
        }
        i += 1;
        let mut children = Vec::new();
        while chars.get(i) == Some(&'(') {
            let (c, j) = Self::parse_at(chars, i)?;
            children.push(c);
            i = j;
        }
        (chars.get(i) == Some(&')')).then(|| (Self::node(children), i + 1))
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// All rooted planar trees with exactly `n` vertices (Catalan many).
pub fn planar_trees(n: usize) -> Vec<PlanarTree> {
    if n == 0 {
        return Vec::new();
    }
    forests(n - 1).into_iter().map(PlanarTree::node).collect()
}

/// All ordered forests with `n` vertices in total.
fn forests(n: usize) -> Vec<Vec<PlanarTree>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for t in planar_trees(first) {
            for mut rest in forests(n - first) {
                rest.insert(0, t.clone());
                out.push(rest);
            }
        }
    }
    out
}

/// Causal orderings by exhaustive enumeration of labelings (test oracle).
pub fn causal_orderings_brute_force(t: &PlanarTree) -> u64 {
    let parents = t.parents();
    let n = parents.len();
    let mut labels: Vec<usize> = (1..=n).collect();
    let mut count = 0;
    permute(&mut labels, 0, &mut |l| {
        if parents.iter().enumerate().all(|(v, p)| p.map_or(true, |p| l[v] < l[p])) {
            count += 1;
        }
    });
    count
}

fn permute(xs: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, f);
        xs.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| planar_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn examples() {
        assert_eq!(PlanarTree::chain(5).causal_orderings(), BigInt::from(1));
        assert_eq!(PlanarTree::star(2).causal_orderings(), BigInt::from(2));
        assert_eq!(PlanarTree::star(4).causal_orderings(), BigInt::from(24));
    }

    #[test]
    fn hook_formula_matches_enumeration() {
        for n in 1..=6 {
            for t in planar_trees(n) {
                assert_eq!(t.causal_orderings(), BigInt::from(causal_orderings_brute_force(&t)), "{t}");
            }
        }
    }

    #[test]
    fn parse_roundtrip() {
        for t in planar_trees(5) {
            assert_eq!(PlanarTree::parse(&t.to_string()), Some(t));
        }
    }
}
