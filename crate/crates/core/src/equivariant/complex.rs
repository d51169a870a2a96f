//! Finite cochain complexes over `F_p` with a `ℤ/p`-action, and the small
//! complexes computing their equivariant cohomology and homology.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::EquivariantError;
use crate::coeff::is_prime;
use crate::coeff::linalg::rank_mod_p;

type Matrix = Vec<Vec<u64>>;

/// A cochain complex `C` over `F_p` (differential of degree `+1`) with a
/// degree-preserving chain automorphism `T` of order dividing `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantComplex {
    p: u64,
    names: Vec<String>,
    degrees: Vec<i64>,
    /// `d[i][j]`: coefficient of basis element `i` in `d(e_j)`.
    d: Matrix,
    /// `action[i][j]`: coefficient of basis element `i` in `T(e_j)`.
    action: Matrix,
    truncation: usize,
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix, p: u64) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    (0..n).map(|i| (0..m).map(|j| (0..inner).map(|k| a[i][k] * b[k][j] % p).sum::<u64>() % p).collect()).collect()
}

fn is_zero(a: &Matrix) -> bool {
    a.iter().flatten().all(|&x| x == 0)
}

impl EquivariantComplex {
    /// Validates `d² = 0`, `dT = Td`, `T^p = 1` and the degrees of `d` and `T`.
    pub fn new(
        p: u64,
        names: Vec<String>,
        degrees: Vec<i64>,
        d: Matrix,
        action: Matrix,
        truncation: usize,
    ) -> Result<Self, EquivariantError> {
        if !is_prime(p) {
            return Err(EquivariantError::Invalid(format!("{p} is not prime")));
        }
        let n = degrees.len();
        let square = |m: &Matrix| m.len() == n && m.iter().all(|r| r.len() == n);
        if names.len() != n || !square(&d) || !square(&action) {
            return Err(EquivariantError::Invalid("matrix sizes do not match the basis".into()));
        }
        let d: Matrix = d.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
        let action: Matrix = action.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                if d[i][j] != 0 && degrees[i] != degrees[j] + 1 {
                    return Err(EquivariantError::Invalid(format!("d({}) has a term outside degree +1", names[j])));
                }
                if action[i][j] != 0 && degrees[i] != degrees[j] {
                    return Err(EquivariantError::Invalid(format!("T({}) changes degree", names[j])));
                }
            }
        }
        if !is_zero(&mat_mul(&d, &d, p)) {
            return Err(EquivariantError::Invalid("d² ≠ 0".into()));
        }
        if mat_mul(&d, &action, p) != mat_mul(&action, &d, p) {
            return Err(EquivariantError::Invalid("T does not commute with d".into()));
        }
        let mut power = identity(n);
        for _ in 0..p {
            power = mat_mul(&action, &power, p);
        }
        if power != identity(n) {
            return Err(EquivariantError::Invalid("T^p ≠ 1".into()));
        }
        Ok(EquivariantComplex { p, names, degrees, d, action, truncation })
    }

    /// `F_p` in degree 0 with trivial action.
    pub fn trivial(p: u64, truncation: usize) -> Result<Self, EquivariantError> {
        Self::new(p, vec!["1".into()], vec![0], vec![vec![0]], vec![vec![1]], truncation)
    }

    /// The group ring `F_p[ℤ/p]` in degree 0, with `T` the cyclic shift.
    pub fn free_cyclic(p: u64, truncation: usize) -> Result<Self, EquivariantError> {
        let n = p as usize;
        let shift = (0..n).map(|i| (0..n).map(|j| u64::from(i == (j + 1) % n)).collect()).collect();
        let names = (0..n).map(|k| format!("g{k}")).collect();
        Self::new(p, names, vec![0; n], vec![vec![0; n]; n], shift, truncation)
    }

    /// Zero differential and trivial action on a graded basis.
    pub fn with_trivial_action(p: u64, degrees: &[i64], truncation: usize) -> Result<Self, EquivariantError> {
        let n = degrees.len();
        let names = (0..n).map(|k| format!("c{k}")).collect();
        Self::new(p, names, degrees.to_vec(), vec![vec![0; n]; n], identity(n), truncation)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    fn min_degree(&self) -> i64 {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    fn max_degree(&self) -> i64 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// `T - 1` and the norm `1 + T + ... + T^{p-1}`.
    fn difference_and_norm(&self) -> (Matrix, Matrix) {
        let n = self.dim();
        let p = self.p;
        let mut diff = self.action.clone();
        for (i, row) in diff.iter_mut().enumerate() {
            row[i] = (row[i] + p - 1) % p;
        }
        let mut norm = vec![vec![0; n]; n];
        let mut power = identity(n);
        for _ in 0..p {
            for i in 0..n {
                for j in 0..n {
                    norm[i][j] = (norm[i][j] + power[i][j]) % p;
                }
            }
            power = mat_mul(&self.action, &power, p);
        }
        (diff, norm)
    }

    /// Cochains `C[[t]] ⊕ θC[[t]]` modulo `t^{K+1}`.
    pub fn cochain_model(&self) -> TotalComplex {
        let (n, p, k_max) = (self.dim(), self.p, self.truncation);
        let (diff, norm) = self.difference_and_norm();
        // Generator index: (theta, k, i) -> ((theta * (K+1)) + k) * n + i.
        let idx = |theta: usize, k: usize, i: usize| ((theta * (k_max + 1)) + k) * n + i;
        let size = 2 * (k_max + 1) * n;
        let mut degrees = vec![0; size];
        let mut m = vec![vec![0u64; size]; size];
        for k in 0..=k_max {
            for j in 0..n {
                degrees[idx(0, k, j)] = self.degrees[j] + 2 * k as i64;
                degrees[idx(1, k, j)] = self.degrees[j] + 2 * k as i64 + 1;
                for i in 0..n {
                    // d(t^k c) = t^k dc + θ t^k (Tc - c)
                    m[idx(0, k, i)][idx(0, k, j)] = self.d[i][j];
                    m[idx(1, k, i)][idx(0, k, j)] = diff[i][j];
                    // d(θ t^k c) = -θ t^k dc + t^{k+1} N c
                    m[idx(1, k, i)][idx(1, k, j)] = (p - self.d[i][j]) % p;
                    if k < k_max {
                        m[idx(0, k + 1, i)][idx(1, k, j)] = norm[i][j];
                    }
                }
            }
        }
        let lo = self.min_degree();
        TotalComplex { p, degrees, matrix: m, reliable: (lo, lo + 2 * k_max as i64) }
    }

    /// Chains `C[s] ⊕ σC[s]` with `s`-powers at most `K`.
    pub fn chain_model(&self) -> TotalComplex {
        let (n, p, k_max) = (self.dim(), self.p, self.truncation);
        let (diff, norm) = self.difference_and_norm();
        let idx = |sigma: usize, k: usize, i: usize| ((sigma * (k_max + 1)) + k) * n + i;
        let size = 2 * (k_max + 1) * n;
        let mut degrees = vec![0; size];
        let mut m = vec![vec![0u64; size]; size];
        for k in 0..=k_max {
            for j in 0..n {
                degrees[idx(0, k, j)] = self.degrees[j] - 2 * k as i64;
                degrees[idx(1, k, j)] = self.degrees[j] - 2 * k as i64 - 1;
                for i in 0..n {
                    // d(s^k c) = s^k dc - σ s^{k-1} N c
                    m[idx(0, k, i)][idx(0, k, j)] = self.d[i][j];
                    // d(σ s^k c) = -σ s^k dc - s^k (Tc - c); the power of s is
                    // the one that keeps d of degree +1.
                    m[idx(1, k, i)][idx(1, k, j)] = (p - self.d[i][j]) % p;
                    m[idx(0, k, i)][idx(1, k, j)] = (p - diff[i][j]) % p;
                    if k > 0 {
                        m[idx(1, k - 1, i)][idx(0, k, j)] = (p - norm[i][j]) % p;
                    }
                }
            }
        }
        let hi = self.max_degree();
        TotalComplex { p, degrees, matrix: m, reliable: (hi - 2 * k_max as i64, hi) }
    }
}

/// A finite graded complex over `F_p` given by one square matrix, with the
/// range of degrees in which truncation does not affect its cohomology.
#[derive(Clone, Debug)]
pub struct TotalComplex {
    p: u64,
    degrees: Vec<i64>,
    matrix: Matrix,
    reliable: (i64, i64),
}

impl TotalComplex {
    pub fn reliable_range(&self) -> (i64, i64) {
        self.reliable
    }

    pub fn squares_to_zero(&self) -> bool {
        is_zero(&mat_mul(&self.matrix, &self.matrix, self.p))
    }

    /// Rank of the differential from degree `n` to degree `n + 1`.
    fn rank_from(&self, n: i64) -> usize {
        let src: Vec<usize> = (0..self.degrees.len()).filter(|&j| self.degrees[j] == n).collect();
        let dst: Vec<usize> = (0..self.degrees.len()).filter(|&i| self.degrees[i] == n + 1).collect();
        if src.is_empty() || dst.is_empty() {
            return 0;
        }
        let mut rows: Matrix = dst.iter().map(|&i| src.iter().map(|&j| self.matrix[i][j]).collect()).collect();
        rank_mod_p(&mut rows, self.p)
    }

    /// Cohomology dimension in degree `n`.
    pub fn dimension(&self, n: i64) -> usize {
        let c = self.degrees.iter().filter(|&&d| d == n).count();
        c - self.rank_from(n) - self.rank_from(n - 1)
    }

    /// Dimensions over the reliable range, keyed by degree.
    pub fn dimensions(&self) -> BTreeMap<i64, usize> {
        (self.reliable.0..=self.reliable.1).map(|n| (n, self.dimension(n))).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct BasisEntry {
    name: String,
    degree: i64,
}

#[derive(Serialize, Deserialize)]
struct MapEntry {
    input: String,
    output: Vec<(String, i64)>,
}

/// JSON envelope: `{p, truncation?, basis: [{name, degree}], differential?:
/// [{input, output: [[name, coeff]]}], action?: [...]}`. Missing action
/// entries act as the identity; missing differential entries as zero.
#[derive(Serialize, Deserialize)]
struct ComplexJson {
    p: u64,
    #[serde(default)]
    truncation: Option<usize>,
    basis: Vec<BasisEntry>,
    #[serde(default)]
    differential: Vec<MapEntry>,
    #[serde(default)]
    action: Vec<MapEntry>,
}

impl EquivariantComplex {
    pub fn from_json(text: &str) -> Result<Self, EquivariantError> {
        let j: ComplexJson = serde_json::from_str(text).map_err(|e| EquivariantError::Parse(e.to_string()))?;
        let n = j.basis.len();
        let names: Vec<String> = j.basis.iter().map(|b| b.name.clone()).collect();
        let index = |s: &str| {
            names.iter().position(|x| x == s).ok_or_else(|| EquivariantError::Parse(format!("unknown basis element '{s}'")))
        };
        let p = j.p;
        let fill = |entries: &[MapEntry], m: &mut Matrix| -> Result<(), EquivariantError> {
            for e in entries {
                let col = index(&e.input)?;
                for r in m.iter_mut() {
                    r[col] = 0;
                }
                for (name, c) in &e.output {
                    let row = index(name)?;
                    m[row][col] = (m[row][col] + c.rem_euclid(p as i64) as u64) % p.max(1);
                }
            }
            Ok(())
        };
        let mut d = vec![vec![0; n]; n];
        fill(&j.differential, &mut d)?;
        let mut action = identity(n);
        fill(&j.action, &mut action)?;
        let degrees: Vec<i64> = j.basis.iter().map(|b| b.degree).collect();
        let truncation = j.truncation.unwrap_or_else(|| default_truncation(&degrees));
        Self::new(p, names, degrees, d, action, truncation)
    }
}

/// Default number of `t`-powers: twice the length of `C` plus four.
pub fn default_truncation(degrees: &[i64]) -> usize {
    let len = match (degrees.iter().min(), degrees.iter().max()) {
        (Some(lo), Some(hi)) => (hi - lo + 1) as usize,
        _ => 0,
    };
    2 * len + 4
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_coefficients() {
        for p in [2, 3, 5, 7] {
            let c = EquivariantComplex::trivial(p, 6).unwrap();
            let m = c.cochain_model();
            assert!(m.squares_to_zero());
            assert!(m.dimensions().values().all(|&d| d == 1));
            assert_eq!(m.dimensions().len(), 13);
            let h = c.chain_model();
            assert!(h.squares_to_zero());
            assert!(h.dimensions().values().all(|&d| d == 1));
        }
    }

    #[test]
    fn free_module() {
        for p in [2, 3, 5] {
            let c = EquivariantComplex::free_cyclic(p, 5).unwrap();
            let m = c.cochain_model();
            assert!(m.squares_to_zero());
            let dims = m.dimensions();
            assert_eq!(dims[&0], 1);
            assert!(dims.iter().filter(|(&k, _)| k != 0).all(|(_, &d)| d == 0));
            let h = c.chain_model().dimensions();
            assert_eq!(h[&0], 1);
            assert!(h.iter().filter(|(&k, _)| k != 0).all(|(_, &d)| d == 0));
        }
    }

    #[test]
    fn rejects_invalid_input() {
        assert!(EquivariantComplex::new(3, vec!["a".into()], vec![0], vec![vec![0]], vec![vec![2]], 2).is_err());
        assert!(EquivariantComplex::new(4, vec!["a".into()], vec![0], vec![vec![0]], vec![vec![1]], 2).is_err());
        let d = vec![vec![0, 0], vec![1, 0]];
        assert!(EquivariantComplex::new(3, vec!["a".into(), "b".into()], vec![0, 0], d, identity(2), 2).is_err());
    }

    #[test]
    fn json_envelope() {
        let text = r#"{"p": 3, "basis": [{"name": "a", "degree": 0}, {"name": "b", "degree": 1}],
            "differential": [{"input": "a", "output": [["b", 1]]}]}"#;
        let c = EquivariantComplex::from_json(text).unwrap();
        assert_eq!(c.truncation(), 8);
        // Acyclic with trivial action: equivariant cohomology vanishes.
        assert!(c.cochain_model().dimensions().values().all(|&d| d == 0));
    }
}
