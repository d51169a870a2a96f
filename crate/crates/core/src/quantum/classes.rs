//! Cohomology rings of products of tori and projective spaces: an exterior
//! algebra on degree-1 generators tensored with truncated polynomial
//! algebras on degree-2 generators, with Koszul signs.

use serde::Deserialize;

use super::QuantumError;
use crate::coeff::linalg::solve_mod_p;

/// Even generator `name` of degree 2 with `name^{top+1} = 0`.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct EvenGenerator {
    pub name: String,
    pub top: u32,
}

/// Input form: degree-1 generators in orientation order, then even generators.
#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
pub struct AlgebraSpec {
    #[serde(default)]
    pub odd: Vec<String>,
    #[serde(default)]
    pub even: Vec<EvenGenerator>,
}

/// Basis monomial: a set of odd generators (bitmask, written in increasing
/// order) times powers of the even generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub odd: u64,
    pub even: Vec<u32>,
}

/// Graded-commutative algebra with the monomial basis; the fundamental
/// class is the product of all odd generators in order times the top
/// powers of the even ones, and integrates to 1.
#[derive(Clone, Debug)]
pub struct ClassAlgebra {
    odd: Vec<String>,
    even: Vec<EvenGenerator>,
    basis: Vec<Monomial>,
}

impl ClassAlgebra {
    pub fn new(spec: &AlgebraSpec) -> Result<Self, QuantumError> {
        if spec.odd.len() > 16 {
            return Err(QuantumError::Table("at most 16 odd generators".into()));
        }
        let mut names: Vec<&str> = spec.odd.iter().map(String::as_str).collect();
        names.extend(spec.even.iter().map(|g| g.name.as_str()));
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains(['*', '^', ' ']) || *n == "1" || names[..i].contains(n) {
                return Err(QuantumError::Table(format!("bad generator name {n:?}")));
            }
        }
        let mut basis = Vec::new();
        let mut evens = vec![vec![]];
        for g in &spec.even {
            evens = evens
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    (0..=g.top).map(move |k| {
                        let mut w = v.clone();
                        w.push(k);
                        w
                    })
                })
                .collect();
        }
        for mask in 0..(1u64 << spec.odd.len()) {
            for e in &evens {
                basis.push(Monomial { odd: mask, even: e.clone() });
            }
        }
        basis.sort_by_key(|m| (Self::degree_of(m), m.clone()));
        Ok(ClassAlgebra { odd: spec.odd.clone(), even: spec.even.clone(), basis })
    }

    fn degree_of(m: &Monomial) -> u32 {
        m.odd.count_ones() + 2 * m.even.iter().sum::<u32>()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, i: usize) -> u32 {
        Self::degree_of(&self.basis[i])
    }

    /// Real dimension of the underlying manifold.
    pub fn top_degree(&self) -> u32 {
        self.odd.len() as u32 + 2 * self.even.iter().map(|g| g.top).sum::<u32>()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.basis.iter().position(|b| b == m)
    }

    pub fn name(&self, i: usize) -> String {
        let m = &self.basis[i];
        let mut parts: Vec<String> =
            (0..self.odd.len()).filter(|k| m.odd >> k & 1 == 1).map(|k| self.odd[k].clone()).collect();
        for (g, &e) in self.even.iter().zip(&m.even) {
            match e {
                0 => {}
                1 => parts.push(g.name.clone()),
                e => parts.push(format!("{}^{e}", g.name)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// `a · b = sign · c`, or `None` when the product vanishes.
    pub fn mul(&self, a: usize, b: usize) -> Option<(i64, usize)> {
        let (x, y) = (&self.basis[a], &self.basis[b]);
        if x.odd & y.odd != 0 {
            return None;
        }
        let mut swaps = 0;
        for i in 0..self.odd.len() {
            if x.odd >> i & 1 == 1 {
                swaps += (y.odd & ((1u64 << i) - 1)).count_ones();
            }
        }
        let even: Vec<u32> = x.even.iter().zip(&y.even).map(|(p, q)| p + q).collect();
        if even.iter().zip(&self.even).any(|(e, g)| *e > g.top) {
            return None;
        }
        let m = Monomial { odd: x.odd | y.odd, even };
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        Some((sign, self.index_of(&m).expect("closed under products")))
    }

    /// `∫ b_i` in `{-1, 0, 1}`.
    pub fn integral(&self, i: usize) -> i64 {
        let m = &self.basis[i];
        let full = (1u64 << self.odd.len()) - 1;
        i64::from(m.odd == full && m.even.iter().zip(&self.even).all(|(e, g)| *e == g.top))
    }

    /// `∫ b_i b_j`.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.mul(i, j).map_or(0, |(s, k)| s * self.integral(k))
    }

    /// Parses `g1*g2^k*...` (or `1`) into `sign · basis element`; `None`
    /// for a product that vanishes.
    pub fn parse(&self, s: &str) -> Result<Option<(i64, usize)>, QuantumError> {
        let s = s.trim();
        let mut acc = Some((1i64, self.index_of(&Monomial { odd: 0, even: vec![0; self.even.len()] }).unwrap()));
        if s == "1" {
            return Ok(acc);
        }
        for factor in s.split('*').map(str::trim) {
            let (name, power) = match factor.split_once('^') {
                Some((n, k)) => {
                    let k: u32 = k.trim().parse().map_err(|_| QuantumError::Table(format!("bad power in {s:?}")))?;
                    (n.trim(), k)
                }
                None => (factor, 1),
            };
            let mono = if let Some(k) = self.odd.iter().position(|g| g == name) {
                if power > 1 {
                    return Ok(None);
                }
                Monomial { odd: (power as u64) << k, even: vec![0; self.even.len()] }
            } else if let Some(k) = self.even.iter().position(|g| g.name == name) {
                if power > self.even[k].top {
                    return Ok(None);
                }
                let mut even = vec![0; self.even.len()];
                even[k] = power;
                Monomial { odd: 0, even }
            } else {
                return Err(QuantumError::Table(format!("unknown generator {name:?} in {s:?}")));
            };
            let idx = self.index_of(&mono).expect("generator power in basis");
            acc = match acc {
                Some((sign, cur)) => self.mul(cur, idx).map(|(t, k)| (sign * t, k)),
                None => None,
            };
        }
        Ok(acc)
    }

    /// `e_k^∨` with `∫ b_i e_k^∨ = δ_ik`, as coefficient vectors mod `p`.
    pub fn dual_basis(&self, p: u64) -> Result<Vec<Vec<u64>>, QuantumError> {
        let n = self.dim();
        let g: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| self.pairing(i, j).rem_euclid(p as i64) as u64).collect())
            .collect();
        (0..n)
            .map(|k| {
                let mut e = vec![0; n];
                e[k] = 1;
                solve_mod_p(&g, &e, p).ok_or_else(|| QuantumError::Table("degenerate pairing".into()))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus_times_plane() -> ClassAlgebra {
        ClassAlgebra::new(&AlgebraSpec {
            odd: vec!["a".into(), "b".into()],
            even: vec![EvenGenerator { name: "l".into(), top: 2 }],
        })
        .unwrap()
    }

    #[test]
    fn koszul_signs_and_integral() {
        let alg = torus_times_plane();
        assert_eq!(alg.dim(), 12);
        assert_eq!(alg.top_degree(), 6);
        let (s, ab) = alg.parse("b*a").unwrap().unwrap();
        assert_eq!((s, alg.name(ab).as_str()), (-1, "a*b"));
        let (_, top) = alg.parse("a*b*l^2").unwrap().unwrap();
        assert_eq!(alg.integral(top), 1);
        assert_eq!(alg.parse("a*a").unwrap(), None);
        assert_eq!(alg.parse("l^3").unwrap(), None);
        assert!(alg.parse("m").is_err());
    }

    #[test]
    fn dual_basis_pairs_to_identity() {
        let alg = torus_times_plane();
        let p = 5;
        let dual = alg.dual_basis(p).unwrap();
        for i in 0..alg.dim() {
            for (k, d) in dual.iter().enumerate() {
                let v: i64 = d.iter().enumerate().map(|(j, &c)| c as i64 * alg.pairing(i, j)).sum();
                assert_eq!(v.rem_euclid(p as i64), i64::from(i == k));
            }
        }
    }
}
