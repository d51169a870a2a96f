//! Sparse vectors over a coefficient ring, indexed by basis position.

use std::collections::BTreeMap;

use super::algebra::AInftyAlgebra;
use crate::coeff::{CoeffRing, Scalar};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vector(BTreeMap<usize, Scalar>);

impl Vector {
    pub fn new() -> Self {
        Vector(BTreeMap::new())
    }

    pub fn single(ring: &CoeffRing, i: usize, c: Scalar) -> Self {
        let mut v = Vector::new();
        v.add_term(ring, i, &c);
        v
    }

    pub fn from_terms(ring: &CoeffRing, terms: &[(usize, Scalar)]) -> Self {
        let mut v = Vector::new();
        for (i, c) in terms {
            v.add_term(ring, *i, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.0.get(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn add_term(&mut self, ring: &CoeffRing, i: usize, c: &Scalar) {
        if ring.is_zero(c) {
            return;
        }
        let next = match self.0.get(&i) {
            Some(old) => ring.add(old, c),
            None => c.clone(),
        };
        if ring.is_zero(&next) {
            self.0.remove(&i);
        } else {
            self.0.insert(i, next);
        }
    }

    pub fn add(&self, other: &Vector, ring: &CoeffRing) -> Vector {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_term(ring, i, c);
        }
        out
    }

    pub fn neg(&self, ring: &CoeffRing) -> Vector {
        Vector(self.0.iter().map(|(i, c)| (*i, ring.neg(c))).collect())
    }

    pub fn sub(&self, other: &Vector, ring: &CoeffRing) -> Vector {
        self.add(&other.neg(ring), ring)
    }

    pub fn scale(&self, ring: &CoeffRing, s: &Scalar) -> Vector {
        let mut out = Vector::new();
        for (i, c) in self.iter() {
            out.add_term(ring, i, &ring.mul(c, s));
        }
        out
    }

    /// Minimal q-adic valuation of the coefficients (`None` for zero).
    pub fn valuation(&self, ring: &CoeffRing) -> Option<usize> {
        self.0.values().filter_map(|c| ring.valuation(c)).min()
    }

    pub fn format(&self, ring: &CoeffRing, alg: &AInftyAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.iter()
            .map(|(i, c)| format!("({})*{}", ring.format(c), alg.basis_name(i)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
