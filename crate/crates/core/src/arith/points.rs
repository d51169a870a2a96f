//! Brute-force point counts of projective varieties over `F_p`.

use rand::Rng;

use super::ArithError;
use crate::coeff::linalg::rank_mod_p;
use crate::coeff::{CoeffRing, LaurentPoly, Scalar};

/// Homogeneous polynomials in `n + 1` variables cutting out a subvariety
/// of `Pⁿ` over `F_p`.
#[derive(Clone, Debug)]
pub struct ProjectiveSystem {
    n: usize,
    p: u64,
    polys: Vec<LaurentPoly>,
    /// Per polynomial: `(coefficient mod p, exponents)`.
    compiled: Vec<Vec<(u64, Vec<usize>)>>,
}

impl ProjectiveSystem {
    pub fn new(n: usize, p: u64, polys: Vec<LaurentPoly>) -> Result<Self, ArithError> {
        let field = CoeffRing::prime_field(p)?;
        let mut compiled = Vec::new();
        for (index, f) in polys.iter().enumerate() {
            if f.nvars() != n + 1 {
                return Err(ArithError::WrongArity { index, found: f.nvars(), expected: n + 1 });
            }
            if f.has_negative_exponents() {
                return Err(ArithError::NegativeExponent { index });
            }
            if !f.is_empty() && f.homogeneous_degree().is_none() {
                return Err(ArithError::NotHomogeneous { index });
            }
            let g = f.map_ring(&field)?;
            compiled.push(
                g.terms()
                    .map(|(e, c)| match c {
                        Scalar::Mod(v) => (*v, e.iter().map(|&x| x as usize).collect()),
                        other => unreachable!("reduced coefficient {other:?}"),
                    })
                    .collect(),
            );
        }
        Ok(ProjectiveSystem { n, p, polys, compiled })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn polys(&self) -> &[LaurentPoly] {
        &self.polys
    }

    fn vanishes(&self, x: &[u64], powers: &mut [Vec<u64>]) -> bool {
        let p = self.p;
        for (i, &xi) in x.iter().enumerate() {
            let row = &mut powers[i];
            for k in 1..row.len() {
                row[k] = row[k - 1] * xi % p;
            }
        }
        self.compiled.iter().all(|f| {
            f.iter().fold(0, |acc, (c, e)| {
                let m = e.iter().enumerate().fold(*c, |m, (i, &k)| m * powers[i][k] % p);
                (acc + m) % p
            }) == 0
        })
    }

    /// Points of `Pⁿ(F_p)` on which every polynomial vanishes. Each point is
    /// visited once, as the representative whose first nonzero coordinate is 1.
    pub fn count_points(&self) -> u64 {
        let p = self.p;
        let dim = self.n + 1;
        let max_deg = self.compiled.iter().flatten().flat_map(|(_, e)| e.iter().copied()).max().unwrap_or(0);
        let mut powers = vec![vec![1u64; max_deg + 1]; dim];
        let mut count = 0;
        let mut x = vec![0u64; dim];
        for lead in 0..dim {
            for v in x.iter_mut() {
                *v = 0;
            }
            x[lead] = 1;
            let free = dim - lead - 1;
            let total = p.pow(free as u32);
            for code in 0..total {
                let mut c = code;
                for v in x[lead + 1..].iter_mut() {
                    *v = c % p;
                    c /= p;
                }
                if self.vanishes(&x, &mut powers) {
                    count += 1;
                }
            }
        }
        count
    }

    /// The system pulled back along `x ↦ A x`.
    pub fn linear_change(&self, a: &[Vec<u64>]) -> Result<Self, ArithError> {
        let field = CoeffRing::prime_field(self.p)?;
        let dim = self.n + 1;
        let names: Vec<String> = self.polys.first().map_or_else(
            || (0..dim).map(|i| format!("x{i}")).collect(),
            |f| f.vars().to_vec(),
        );
        let vars: Vec<&str> = names.iter().map(String::as_str).collect();
        let linear: Vec<LaurentPoly> = (0..dim)
            .map(|i| {
                let mut l = LaurentPoly::zero(&field, &vars);
                for j in 0..dim {
                    let mut e = vec![0; dim];
                    e[j] = 1;
                    l.add_term(e, Scalar::Mod(a[i][j] % self.p));
                }
                l
            })
            .collect();
        let mut out = Vec::new();
        for f in &self.polys {
            let mut g = LaurentPoly::zero(&field, &vars);
            for (e, c) in f.map_ring(&field)?.terms() {
                let mut term = LaurentPoly::one(&field, &vars).scale(c);
                for (i, &k) in e.iter().enumerate() {
                    term = term.mul(&linear[i].pow(k as u32));
                }
                g = g.add(&term);
            }
            out.push(g);
        }
        Self::new(self.n, self.p, out)
    }
}

/// `x₀² + x₁² + x₂x₃ = 0`, `x₀x₁ + x₂² + x₃² = 0` in `P³`.
pub fn two_quadrics(p: u64) -> ProjectiveSystem {
    let z = CoeffRing::integers();
    let vars = ["x0", "x1", "x2", "x3"];
    let q1 = LaurentPoly::from_terms(&z, &vars, &[(1, vec![2, 0, 0, 0]), (1, vec![0, 2, 0, 0]), (1, vec![0, 0, 1, 1])]);
    let q2 = LaurentPoly::from_terms(&z, &vars, &[(1, vec![1, 1, 0, 0]), (1, vec![0, 0, 2, 0]), (1, vec![0, 0, 0, 2])]);
    ProjectiveSystem::new(3, p, vec![q1, q2]).expect("homogeneous quadrics")
}

/// Uniform element of `GL_n(F_p)`, by rejection.
pub fn random_invertible_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, p: u64) -> Vec<Vec<u64>> {
    loop {
        let a: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
        if rank_mod_p(&mut a.clone(), p) == n {
            return a;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_space_and_hyperplane() {
        let z = CoeffRing::integers();
        let vars = ["x0", "x1", "x2", "x3"];
        for p in [2u64, 3, 7] {
            let empty = ProjectiveSystem::new(3, p, vec![]).unwrap();
            assert_eq!(empty.count_points(), p * p * p + p * p + p + 1);
            let h = LaurentPoly::from_terms(&z, &vars, &[(1, vec![1, 0, 0, 0])]);
            let hyper = ProjectiveSystem::new(3, p, vec![h]).unwrap();
            assert_eq!(hyper.count_points(), p * p + p + 1);
        }
    }

    #[test]
    fn two_quadrics_at_seven() {
        assert_eq!(two_quadrics(7).count_points(), 8);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let z = CoeffRing::integers();
        let f = LaurentPoly::from_terms(&z, &["x", "y"], &[(1, vec![2, 0]), (1, vec![0, 1])]);
        assert!(matches!(ProjectiveSystem::new(1, 5, vec![f]), Err(ArithError::NotHomogeneous { index: 0 })));
    }
}
