//! Boundary strata of colored multiplihedra: configurations of colored
//! points on a line, compactified by large-, mid- and small-scale screens.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

/// Planar tree shape in which every internal vertex has at least two
/// children. Used both for the large-scale part and for small-scale bubbles.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Leaf,
    Node(Vec<Shape>),
}

impl Shape {
    pub fn leaves(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Node(c) => c.iter().map(Shape::leaves).sum(),
        }
    }

    pub fn vertices(&self) -> usize {
        match self {
            Shape::Leaf => 0,
            Shape::Node(c) => 1 + c.iter().map(Shape::vertices).sum::<usize>(),
        }
    }

    /// All shapes with `n` leaves (Schröder trees), including the bare leaf for `n = 1`.
    pub fn all(n: usize) -> Vec<Shape> {
        if n == 0 {
            return Vec::new();
        }
        let mut out = if n == 1 { vec![Shape::Leaf] } else { Vec::new() };
        for parts in compositions(n, 2) {
            for children in product(&parts.iter().map(|&k| Shape::all(k)).collect::<Vec<_>>()) {
                out.push(Shape::Node(children));
            }
        }
        out
    }

    fn render(&self, f: &mut fmt::Formatter<'_>, tag: &str, leaf: &mut dyn FnMut(&mut fmt::Formatter<'_>) -> fmt::Result) -> fmt::Result {
        match self {
            Shape::Leaf => leaf(f),
            Shape::Node(c) => {
                write!(f, "{tag}(")?;
                for (k, s) in c.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    s.render(f, tag, leaf)?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Ordered compositions of `n` into at least `min_parts` positive parts.
fn compositions(n: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, min_parts: usize) {
        if n == 0 {
            if acc.len() >= min_parts {
                out.push(acc.clone());
            }
            return;
        }
        for k in 1..=n {
            acc.push(k);
            rec(n - k, acc, out, min_parts);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out, min_parts);
    out
}

/// Weak compositions of `n` into exactly `parts` nonnegative parts.
fn weak_compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in weak_compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn product<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        let mut next = Vec::new();
        for prefix in &out {
            for x in l {
                let mut p = prefix.clone();
                p.push(x.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Sequences of small-scale bubbles absorbing `n` ordered points of one color.
fn forests(n: usize) -> Vec<Vec<Shape>> {
    let mut out = Vec::new();
    for parts in compositions(n, 0) {
        out.extend(product(&parts.iter().map(|&k| Shape::all(k)).collect::<Vec<_>>()));
    }
    out
}

/// A boundary stratum. The large-scale shape has one leaf per mid-scale
/// screen; `mids[a][k]` lists the incoming edges of color `k` of the `a`-th
/// mid-scale screen, each either a single point or a small-scale bubble tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MwwStratum {
    pub large: Shape,
    pub mids: Vec<Vec<Vec<Shape>>>,
}

impl MwwStratum {
    pub fn large_vertices(&self) -> usize {
        self.large.vertices()
    }

    pub fn small_vertices(&self) -> usize {
        self.mids.iter().flatten().flatten().map(Shape::vertices).sum()
    }

    /// Codimension: the number of large- and small-scale vertices.
    pub fn codim(&self) -> usize {
        self.large_vertices() + self.small_vertices()
    }

    /// Number of incoming edges of each mid-scale screen.
    pub fn mid_sizes(&self) -> Vec<usize> {
        self.mids.iter().map(|m| m.iter().map(Vec::len).sum()).collect()
    }
}

impl fmt::Display for MwwStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut next = 0;
        let mids = &self.mids;
        self.large.render(f, "L", &mut |f| {
            let mid = &mids[next];
            next += 1;
            write!(f, "M[")?;
            for (k, edges) in mid.iter().enumerate() {
                if k > 0 {
                    write!(f, "|")?;
                }
                for e in edges {
                    e.render(f, "S", &mut |f| write!(f, "."))?;
                }
            }
            write!(f, "]")
        })
    }
}

/// Summary of an enumeration, as printed by the command-line front end.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MwwCounts {
    pub colors: Vec<usize>,
    pub codim: usize,
    pub total: usize,
    pub with_large: usize,
    pub with_small: usize,
}

/// All strata of the given codimension in the space with `ds[k]` points of
/// color `k`. Colors with no points contribute nothing, which realizes the
/// identification with the space where that color is dropped.
pub fn mww_strata(ds: &[usize], codim: usize) -> Vec<MwwStratum> {
    let d: usize = ds.iter().sum();
    assert!(d > 0, "at least one point is required");
    let per_color: Vec<Vec<Vec<Shape>>> =
        ds.iter().map(|&n| forests(n).into_iter().filter(|f| small_count(f) <= codim).collect()).collect();
    let mut out = BTreeSet::new();
    for choice in product(&per_color) {
        let small: usize = choice.iter().map(|f| small_count(f)).sum();
        if small > codim {
            continue;
        }
        let edges: Vec<usize> = choice.iter().map(Vec::len).collect();
        let total_edges: usize = edges.iter().sum();
        for m in 1..=total_edges {
            let larges: Vec<Shape> = if m == 1 {
                vec![Shape::Leaf]
            } else {
                Shape::all(m).into_iter().filter(|s| s.vertices() + small == codim).collect()
            };
            if larges.is_empty() || (m == 1 && small != codim) {
                continue;
            }
            let splits: Vec<Vec<Vec<usize>>> = edges.iter().map(|&e| weak_compositions(e, m)).collect();
            for split in product(&splits) {
                if (0..m).any(|a| split.iter().all(|s| s[a] == 0)) {
                    continue;
                }
                let mut mids = vec![vec![Vec::new(); ds.len()]; m];
                for (k, s) in split.iter().enumerate() {
                    let mut it = choice[k].iter().cloned();
                    for (a, &cnt) in s.iter().enumerate() {
                        mids[a][k] = it.by_ref().take(cnt).collect();
                    }
                }
                for large in &larges {
                    out.insert(MwwStratum { large: large.clone(), mids: mids.clone() });
                }
            }
        }
    }
    out.into_iter().collect()
}

fn small_count(forest: &[Shape]) -> usize {
    forest.iter().map(Shape::vertices).sum()
}

pub fn mww_counts(ds: &[usize], codim: usize) -> MwwCounts {
    let strata = mww_strata(ds, codim);
    MwwCounts {
        colors: ds.to_vec(),
        codim,
        total: strata.len(),
        with_large: strata.iter().filter(|s| s.large_vertices() > 0).count(),
        with_small: strata.iter().filter(|s| s.small_vertices() > 0).count(),
    }
}

/// Dimension of the space: one less than the number of points.
pub fn mww_dimension(ds: &[usize]) -> usize {
    ds.iter().sum::<usize>() - 1
}

fn parity(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The codimension-one faces with their boundary signs, built directly
/// from the two face families rather than by enumeration: `j` consecutive
/// points of one color bubbling off, and the points splitting into `j ≥ 2`
/// mid-scale screens under a single large-scale vertex.
pub fn mww_boundary(ds: &[usize]) -> Vec<(MwwStratum, i64)> {
    let r = ds.len();
    let mut out = Vec::new();
    for k in 0..r {
        let dk = ds[k];
        let after: usize = ds[k + 1..].iter().sum();
        let before: usize = ds[..k].iter().sum();
        for j in 2..=dk {
            for i in 0..=(dk - j) {
                let sign = parity((dk - i - j + after) * j + before + i + 1);
                let mut mid: Vec<Vec<Shape>> = ds.iter().map(|&n| vec![Shape::Leaf; n]).collect();
                let mut edges = vec![Shape::Leaf; i];
                edges.push(Shape::Node(vec![Shape::Leaf; j]));
                edges.extend(vec![Shape::Leaf; dk - i - j]);
                mid[k] = edges;
                out.push((MwwStratum { large: Shape::Leaf, mids: vec![mid] }, sign));
            }
        }
    }
    let d: usize = ds.iter().sum();
    for j in 2..=d {
        let splits: Vec<Vec<Vec<usize>>> = ds.iter().map(|&n| weak_compositions(n, j)).collect();
        for split in product(&splits) {
            // split[k][a] = number of color-k points in screen a.
            let sizes: Vec<usize> = (0..j).map(|a| split.iter().map(|s| s[a]).sum()).collect();
            if sizes.iter().any(|&s| s == 0) {
                continue;
            }
            let mut diamond = 0;
            for i1 in 0..j {
                for i2 in i1 + 1..j {
                    for k1 in 0..r {
                        for k2 in 0..k1 {
                            diamond += split[k1][i1] * split[k2][i2];
                        }
                    }
                }
            }
            for (a, &s) in sizes.iter().enumerate() {
                diamond += (j - 1 - a) * (s - 1);
            }
            let mids = (0..j).map(|a| split.iter().map(|s| vec![Shape::Leaf; s[a]]).collect()).collect();
            out.push((MwwStratum { large: Shape::Node(vec![Shape::Leaf; j]), mids }, parity(diamond)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schroeder_numbers() {
        let counts: Vec<usize> = (1..=6).map(|n| Shape::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 11, 45, 197]);
    }

    #[test]
    fn twelve_gon() {
        let faces = mww_strata(&[1, 1, 1], 1);
        assert_eq!(faces.len(), 12);
        let three_screens = faces.iter().filter(|f| f.mid_sizes() == vec![1, 1, 1]).count();
        let two_point_screen = faces.iter().filter(|f| f.mid_sizes().contains(&2)).count();
        assert_eq!((three_screens, two_point_screen), (6, 6));
    }

    #[test]
    fn octagon() {
        let c = mww_counts(&[2, 1], 1);
        assert_eq!((c.total, c.with_small), (8, 1));
    }

    #[test]
    fn interval() {
        // One color, two points: the classical multiplihedron J_2 is an interval.
        assert_eq!(mww_strata(&[2], 1).len(), 2);
        assert_eq!(mww_strata(&[2], 0).len(), 1);
    }

    #[test]
    fn display() {
        let faces = mww_strata(&[2, 1], 1);
        let small = faces.iter().find(|f| f.small_vertices() == 1).unwrap();
        assert_eq!(small.to_string(), "M[S(.,.)|.]");
    }
}
