//! Formal chains on associahedra built from fundamental chains glued along
//! planar trees, with the codimension-one boundary and its square.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// A planar tree whose vertices carry the fundamental chain of an
/// associahedron of their arity. `None` children are leaves.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GluedTree {
    pub children: Vec<Option<GluedTree>>,
}

impl GluedTree {
    /// The single-vertex tree standing for `[S_d]`.
    pub fn corolla(d: usize) -> Self {
        GluedTree { children: vec![None; d] }
    }

    pub fn arity(&self) -> usize {
        self.children.len()
    }

    /// Number of leaves.
    pub fn leaves(&self) -> usize {
        self.children.iter().map(|c| c.as_ref().map_or(1, |t| t.leaves())).sum()
    }

    /// Total chain degree: the sum of `arity - 2` over all vertices.
    pub fn degree(&self) -> i64 {
        self.arity() as i64 - 2
            + self.children.iter().flatten().map(GluedTree::degree).sum::<i64>()
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().flatten().map(GluedTree::vertex_count).sum::<usize>()
    }

    /// Preorder list of vertex arities.
    pub fn preorder_arities(&self) -> Vec<usize> {
        let mut out = vec![self.arity()];
        for c in self.children.iter().flatten() {
            out.extend(c.preorder_arities());
        }
        out
    }
}

impl fmt::Display for GluedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.arity())?;
        for (k, c) in self.children.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            match c {
                None => write!(f, ".")?,
                Some(t) => write!(f, "{t}")?,
            }
        }
        write!(f, ")")
    }
}

/// Integer linear combination of glued trees. Factors of each product are
/// kept in preorder, so every stratum has a unique key.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalChain {
    terms: BTreeMap<GluedTree, i64>,
}

#[derive(Serialize)]
struct ChainTerm {
    stratum: String,
    coefficient: i64,
}

impl FormalChain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(t: GluedTree) -> Self {
        let mut c = Self::new();
        c.add_term(t, 1);
        c
    }

    pub fn add_term(&mut self, t: GluedTree, coeff: i64) {
        match self.terms.entry(t) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if coeff != 0 {
                    v.insert(coeff);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GluedTree, i64)> {
        self.terms.iter().map(|(k, v)| (k, *v))
    }

    pub fn coefficient(&self, t: &GluedTree) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    /// JSON dump: a list of `{stratum, coefficient}` objects.
    pub fn to_json(&self) -> serde_json::Value {
        let v: Vec<ChainTerm> =
            self.terms.iter().map(|(k, c)| ChainTerm { stratum: k.to_string(), coefficient: *c }).collect();
        serde_json::to_value(v).expect("chain terms serialize")
    }

    /// Boundary, extended from the corolla formula by the Leibniz rule for
    /// the shuffle product and the operadic gluing maps.
    pub fn boundary(&self) -> FormalChain {
        self.boundary_with(face_sign)
    }

    /// Boundary with an arbitrary face sign `sign(d, i, j)`.
    pub fn boundary_with(&self, sign: fn(usize, usize, usize) -> i64) -> FormalChain {
        let mut out = FormalChain::new();
        for (t, c) in &self.terms {
            let mut prefix = 0i64;
            boundary_tree(t, sign, &mut prefix, &mut |tree, s| out.add_term(tree, c * s), &mut |t| t.clone());
        }
        out
    }
}

/// Sign of the face `T_ij` in the boundary of `[S_d]`: the inner vertex has
/// arity `j` and is attached at the `(i+1)`-st input of the outer vertex.
pub fn face_sign(d: usize, i: usize, j: usize) -> i64 {
    let e = (d - i - j) * j + i;
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The codimension-one faces of a corolla of arity `d`, as `(i, j, sign)`.
pub fn corolla_faces(d: usize) -> Vec<(usize, usize, i64)> {
    let mut out = Vec::new();
    for j in 2..d {
        for i in 0..(d - j + 1) {
            out.push((i, j, face_sign(d, i, j)));
        }
    }
    out
}

/// `∂[S_d]` as a formal chain of two-vertex trees.
pub fn associahedron_boundary(d: usize) -> FormalChain {
    FormalChain::single(GluedTree::corolla(d)).boundary()
}

/// `∂∂[S_d]`; zero when the face signs are consistent.
pub fn boundary_squared(d: usize) -> FormalChain {
    associahedron_boundary(d).boundary()
}

/// Walks the vertices of `t` in preorder. `prefix` accumulates the degrees of
/// the vertices already passed (Leibniz sign); `rebuild` reinserts the
/// modified subtree into its ancestors.
fn boundary_tree(
    t: &GluedTree,
    face: fn(usize, usize, usize) -> i64,
    prefix: &mut i64,
    emit: &mut dyn FnMut(GluedTree, i64),
    rebuild: &mut dyn FnMut(&GluedTree) -> GluedTree,
) {
    let d = t.arity();
    let leibniz = if *prefix % 2 == 0 { 1 } else { -1 };
    for (i, j, _) in corolla_faces(d) {
        let sign = face(d, i, j);
        let inner = GluedTree { children: t.children[i..i + j].to_vec() };
        let mut outer_children: Vec<Option<GluedTree>> = t.children[..i].to_vec();
        // Moving the inner factor past the subtrees grafted before it.
        let passed: i64 = t.children[..i].iter().flatten().map(GluedTree::degree).sum();
        let inner_degree = j as i64 - 2;
        let koszul = if (passed * inner_degree) % 2 == 0 { 1 } else { -1 };
        outer_children.push(Some(inner));
        outer_children.extend_from_slice(&t.children[i + j..]);
        let replaced = GluedTree { children: outer_children };
        emit(rebuild(&replaced), leibniz * sign * koszul);
    }
    *prefix += d as i64 - 2;
    for k in 0..t.children.len() {
        if let Some(child) = &t.children[k] {
            let mut wrap = |sub: &GluedTree| {
                let mut copy = t.clone();
                copy.children[k] = Some(sub.clone());
                rebuild(&copy)
            };
            boundary_tree(child, face, prefix, emit, &mut wrap);
        }
    }
}
