//! Sparse multivariate Laurent polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use super::{CoeffError, CoeffRing, Scalar};

/// `Σ c_e x^e` over integer exponent vectors `e` (negative entries allowed).
///
/// Terms are kept in lexicographic exponent order and zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    ring: CoeffRing,
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, Scalar>,
}

impl LaurentPoly {
    pub fn zero(ring: &CoeffRing, vars: &[&str]) -> Self {
        LaurentPoly { ring: ring.clone(), vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &CoeffRing, vars: &[&str]) -> Self {
        let n = vars.len();
        Self::zero(ring, vars).with_term(vec![0; n], ring.one())
    }

    /// Polynomial from `(coefficient, exponents)` pairs; like terms are merged.
    pub fn from_terms(ring: &CoeffRing, vars: &[&str], terms: &[(i64, Vec<i64>)]) -> Self {
        let mut p = Self::zero(ring, vars);
        for (c, e) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e.clone(), ring.from_i64(*c));
        }
        p
    }

    pub fn with_term(mut self, exps: Vec<i64>, c: Scalar) -> Self {
        self.add_term(exps, c);
        self
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: Scalar) {
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !self.ring.is_zero(&c) {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.ring.add(o.get(), &c);
                if self.ring.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[i64]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&vec![0; self.nvars()])
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self { terms: BTreeMap::new(), ..self.clone() };
        for (e, x) in &self.terms {
            out.add_term(e.clone(), self.ring.mul(x, c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&self.ring.from_i64(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self { terms: BTreeMap::new(), ..self.clone() };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, self.ring.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, m: u32) -> Self {
        let mut acc = Self::one(&self.ring, &self.var_refs());
        for _ in 0..m {
            acc = acc.mul(self);
        }
        acc
    }

    fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn map_ring(&self, target: &CoeffRing) -> Result<Self, CoeffError> {
        let mut out = LaurentPoly { ring: target.clone(), vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), target.reduce(c)?);
        }
        Ok(out)
    }

    /// Common total degree, if every term has the same one.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<i64>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&x| x < 0))
    }
}

/// Constant term of `W^m`, computed exactly over ℚ.
pub fn laurent_power_constant_term(w: &LaurentPoly, m: u32) -> Result<BigRational, CoeffError> {
    if m == 0 {
        return Ok(BigRational::one());
    }
    let wq = w.map_ring(&CoeffRing::Rationals)?;
    let ct = wq.pow(m).constant_term();
    Ok(ct.as_rational().expect("rational coefficient"))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            for (v, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => mono.push(v.clone()),
                    _ => mono.push(format!("{v}^{k}")),
                }
            }
            let cs = self.ring.format(c);
            parts.push(if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono.join("*")
            } else {
                format!("{cs}*{}", mono.join("*"))
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    /// W̃(1, x1, x2, x3) = (1 + x1² + x2x3)(x1 + x2² + x3²)/(x1x2x3).
    pub(crate) fn w_tilde() -> LaurentPoly {
        let z = CoeffRing::integers();
        let v = ["x1", "x2", "x3"];
        let a = LaurentPoly::from_terms(&z, &v, &[(1, vec![0, 0, 0]), (1, vec![2, 0, 0]), (1, vec![0, 1, 1])]);
        let b = LaurentPoly::from_terms(&z, &v, &[(1, vec![1, 0, 0]), (1, vec![0, 2, 0]), (1, vec![0, 0, 2])]);
        let d = LaurentPoly::from_terms(&z, &v, &[(1, vec![-1, -1, -1])]);
        a.mul(&b).mul(&d)
    }

    #[test]
    fn middle_binomial() {
        let w = LaurentPoly::from_terms(&CoeffRing::integers(), &["y"], &[(1, vec![1]), (1, vec![-1])]);
        assert_eq!(laurent_power_constant_term(&w, 2).unwrap(), int(2));
        assert_eq!(laurent_power_constant_term(&w, 0).unwrap(), int(1));
        let empty = LaurentPoly::zero(&CoeffRing::integers(), &["y"]);
        assert_eq!(laurent_power_constant_term(&empty, 0).unwrap(), int(1));
    }

    #[test]
    fn w_tilde_square() {
        assert_eq!(laurent_power_constant_term(&w_tilde(), 2).unwrap(), int(5));
    }

    #[test]
    fn w_tilde_matches_double_sum() {
        // Σ_{d1+2d2=m} m!²/(d1!² d2!⁴), summed independently.
        use crate::coeff::factorial;
        for m in 0..7u64 {
            let mut s = BigRational::from_integer(0.into());
            for d2 in 0..=m / 2 {
                let d1 = m - 2 * d2;
                s += BigRational::new(
                    factorial(m).pow(2),
                    factorial(d1).pow(2) * factorial(d2).pow(4),
                );
            }
            assert_eq!(laurent_power_constant_term(&w_tilde(), m as u32).unwrap(), s, "m = {m}");
        }
    }

    #[test]
    fn display_is_lex() {
        let w = LaurentPoly::from_terms(&CoeffRing::integers(), &["y"], &[(1, vec![-1]), (3, vec![1])]);
        assert_eq!(w.to_string(), "3*y + y^-1");
    }
}
