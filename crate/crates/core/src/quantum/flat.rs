//! Solving `q∂_q Φ + t^{-1}[M, Φ] = 0` order by order in `q`, where
//! `M = Σ M_k q^k` is quantum multiplication by the first Chern class.
//!
//! Order `k` reads `(k + t^{-1} ad_{M_0}) Φ_k = -t^{-1} Σ_{i≥1} [M_i, Φ_{k-i}]`.
//! With `M_0` nilpotent the operator on the left is inverted by a finite
//! Neumann series, or equivalently by iterating `Φ ↦ k^{-1}(R - t^{-1}[M_0, Φ])`.

use super::QuantumError;
use crate::coeff::{CoeffRing, LaurentPoly, Scalar};

/// Square matrix of Laurent polynomials in `t`.
pub type TMatrix = Vec<Vec<LaurentPoly>>;

const T: &str = "t";

fn tpoly(ring: &CoeffRing, c: Scalar, e: i64) -> LaurentPoly {
    LaurentPoly::zero(ring, &[T]).with_term(vec![e], c)
}

fn zero_matrix(ring: &CoeffRing, n: usize) -> TMatrix {
    vec![vec![LaurentPoly::zero(ring, &[T]); n]; n]
}

/// The identity as a matrix of Laurent polynomials.
pub fn identity(ring: &CoeffRing, n: usize) -> TMatrix {
    let mut m = zero_matrix(ring, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = LaurentPoly::one(ring, &[T]);
    }
    m
}

/// Embeds a constant matrix.
pub fn constant(ring: &CoeffRing, m: &[Vec<Scalar>]) -> TMatrix {
    m.iter().map(|row| row.iter().map(|c| tpoly(ring, c.clone(), 0)).collect()).collect()
}

fn mul(a: &TMatrix, b: &TMatrix) -> TMatrix {
    let n = a.len();
    let ring = a[0][0].ring().clone();
    let mut out = zero_matrix(&ring, n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_empty() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_empty() {
                    out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
                }
            }
        }
    }
    out
}

fn zip(a: &TMatrix, b: &TMatrix, f: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly) -> TMatrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| f(x, y)).collect()).collect()
}

fn map(a: &TMatrix, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> TMatrix {
    a.iter().map(|r| r.iter().map(&f).collect()).collect()
}

fn is_zero(a: &TMatrix) -> bool {
    a.iter().flatten().all(LaurentPoly::is_empty)
}

fn commutator(a: &TMatrix, b: &TMatrix) -> TMatrix {
    zip(&mul(a, b), &mul(b, a), LaurentPoly::sub)
}

/// Multiplies every entry by `c t^e`.
fn scale(a: &TMatrix, c: &Scalar, e: i64) -> TMatrix {
    let ring = a[0][0].ring().clone();
    let f = tpoly(&ring, c.clone(), e);
    map(a, |x| x.mul(&f))
}

/// `M = Σ_k M_k q^k` with constant coefficient matrices.
#[derive(Clone, Debug)]
pub struct QuantumConnection {
    ring: CoeffRing,
    dim: usize,
    terms: Vec<TMatrix>,
}

impl QuantumConnection {
    /// `terms[k]` is the `q^k` coefficient; `terms[0]` must be nilpotent.
    pub fn new(ring: &CoeffRing, terms: &[Vec<Vec<Scalar>>]) -> Result<Self, QuantumError> {
        let dim = terms.first().map_or(0, Vec::len);
        if dim == 0 {
            return Err(QuantumError::Dimension("empty connection".into()));
        }
        for (k, m) in terms.iter().enumerate() {
            if m.len() != dim || m.iter().any(|r| r.len() != dim) {
                return Err(QuantumError::Dimension(format!("q^{k} coefficient is not {dim}x{dim}")));
            }
        }
        let terms: Vec<TMatrix> = terms
            .iter()
            .map(|m| {
                let reduced: Result<Vec<Vec<Scalar>>, _> =
                    m.iter().map(|r| r.iter().map(|c| ring.reduce(c)).collect()).collect();
                reduced.map(|m| constant(ring, &m))
            })
            .collect::<Result<_, _>>()?;
        let mut power = terms[0].clone();
        for _ in 1..dim {
            power = mul(&power, &terms[0]);
        }
        if !is_zero(&power) {
            return Err(QuantumError::NotNilpotent);
        }
        Ok(QuantumConnection { ring: ring.clone(), dim, terms })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    fn term(&self, k: usize) -> Option<&TMatrix> {
        self.terms.get(k)
    }

    fn inverse_of(&self, k: usize) -> Result<Scalar, QuantumError> {
        self.ring.inv(&self.ring.from_i64(k as i64)).map_err(|_| QuantumError::OrderNotInvertible(k))
    }

    /// `-t^{-1} Σ_{i=1}^{k} op(M_i, X_{k-i})`.
    fn source(&self, xs: &[TMatrix], k: usize, op: impl Fn(&TMatrix, &TMatrix) -> TMatrix) -> TMatrix {
        let mut r = zero_matrix(&self.ring, self.dim);
        for i in 1..=k {
            if let Some(m) = self.term(i) {
                r = zip(&r, &op(m, &xs[k - i]), LaurentPoly::add);
            }
        }
        scale(&r, &self.ring.from_i64(-1), -1)
    }

    /// Sum of `(-1)^j k^{-1-j} t^{-j} L^j(R)` until `L^j(R)` vanishes.
    fn neumann(&self, r: TMatrix, k: usize, mut l: impl FnMut(&TMatrix) -> TMatrix) -> Result<TMatrix, QuantumError> {
        let inv = self.inverse_of(k)?;
        let mut term = r;
        let mut coeff = inv.clone();
        let mut out = zero_matrix(&self.ring, self.dim);
        for j in 0..=2 * self.dim {
            if is_zero(&term) {
                return Ok(out);
            }
            out = zip(&out, &scale(&term, &coeff, -(j as i64)), LaurentPoly::add);
            term = l(&term);
            coeff = self.ring.neg(&self.ring.mul(&coeff, &inv));
        }
        if is_zero(&term) {
            Ok(out)
        } else {
            Err(QuantumError::NotNilpotent)
        }
    }

    /// `ad_{M_0}^j(X) = Σ_i (-1)^{j-i} C(j, i) M_0^i X M_0^{j-i}`.
    fn ad_power(&self, x: &TMatrix, j: usize) -> TMatrix {
        let m0 = &self.terms[0];
        let mut powers = vec![identity(&self.ring, self.dim)];
        for i in 1..=j {
            powers.push(mul(&powers[i - 1], m0));
        }
        let mut out = zero_matrix(&self.ring, self.dim);
        let mut binom = 1i64;
        for i in 0..=j {
            let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
            let c = self.ring.from_i64(sign * binom);
            out = zip(&out, &scale(&mul(&mul(&powers[i], x), &powers[j - i]), &c, 0), LaurentPoly::add);
            binom = binom * (j - i) as i64 / (i as i64 + 1);
        }
        out
    }

    fn check_start(&self, phi0: &TMatrix) -> Result<(), QuantumError> {
        if phi0.len() != self.dim || phi0.iter().any(|r| r.len() != self.dim) {
            return Err(QuantumError::Dimension(format!("initial endomorphism is not {0}x{0}", self.dim)));
        }
        if !is_zero(&commutator(&self.terms[0], phi0)) {
            return Err(QuantumError::NotCommuting);
        }
        Ok(())
    }

    /// `Φ_0, ..., Φ_m` with each `Φ_k` given by the Neumann series in
    /// iterated commutators (binomial expansion of `ad^j`).
    pub fn flat_endomorphism_solve(&self, phi0: &TMatrix, m: usize) -> Result<Vec<TMatrix>, QuantumError> {
        self.check_start(phi0)?;
        let mut phis = vec![phi0.clone()];
        for k in 1..=m {
            let r = self.source(&phis, k, commutator);
            let mut j = 0;
            let phi = self.neumann(r.clone(), k, |_| {
                j += 1;
                self.ad_power(&r, j)
            })?;
            phis.push(phi);
        }
        Ok(phis)
    }

    /// Same solution by fixed-point iteration of
    /// `Φ_k ↦ k^{-1}(R_k - t^{-1}[M_0, Φ_k])`.
    pub fn flat_endomorphism_iterate(&self, phi0: &TMatrix, m: usize) -> Result<Vec<TMatrix>, QuantumError> {
        self.check_start(phi0)?;
        let mut phis = vec![phi0.clone()];
        for k in 1..=m {
            let r = self.source(&phis, k, commutator);
            let inv = self.inverse_of(k)?;
            let mut x = zero_matrix(&self.ring, self.dim);
            let mut fixed = false;
            for _ in 0..=2 * self.dim + 1 {
                let ad = scale(&commutator(&self.terms[0], &x), &self.ring.from_i64(-1), -1);
                let next = scale(&zip(&r, &ad, LaurentPoly::add), &inv, 0);
                if next == x {
                    fixed = true;
                    break;
                }
                x = next;
            }
            if !fixed {
                return Err(QuantumError::NotNilpotent);
            }
            phis.push(x);
        }
        Ok(phis)
    }

    /// `kΦ_k + t^{-1} Σ_{i≤k} [M_i, Φ_{k-i}] = 0` for every computed order.
    pub fn flat_residual_vanishes(&self, phis: &[TMatrix]) -> bool {
        (0..phis.len()).all(|k| {
            let mut r = scale(&phis[k], &self.ring.from_i64(k as i64), 0);
            for i in 0..=k {
                if let Some(m) = self.term(i) {
                    r = zip(&r, &scale(&commutator(m, &phis[k - i]), &self.ring.one(), -1), LaurentPoly::add);
                }
            }
            is_zero(&r)
        })
    }

    /// The flat section `S = Σ S_k q^k` of `q∂_q S + t^{-1} M S = 0` with `S_0 = 1`.
    pub fn flat_section_solve(&self, m: usize) -> Result<Vec<TMatrix>, QuantumError> {
        let mut ss = vec![identity(&self.ring, self.dim)];
        for k in 1..=m {
            let r = self.source(&ss, k, mul);
            let m0 = self.terms[0].clone();
            let phi = self.neumann(r, k, |x| mul(&m0, x))?;
            ss.push(phi);
        }
        Ok(ss)
    }
}
