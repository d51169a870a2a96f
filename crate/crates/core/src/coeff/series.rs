//! Univariate power series truncated at a fixed order.

use std::fmt;

use super::{CoeffError, CoeffRing, Scalar};

/// `Σ_{k < order} c_k q^k`, all arithmetic carried mod `q^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    ring: CoeffRing,
    coeffs: Vec<Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    /// `exp(a)`; the second operand is ignored.
    ExpOfNilpotent,
}

/// Binary series arithmetic with ring and order checks.
pub fn series_arith(a: &TruncSeries, b: &TruncSeries, op: SeriesOp) -> Result<TruncSeries, CoeffError> {
    if op != SeriesOp::ExpOfNilpotent && (a.ring != b.ring || a.order() != b.order()) {
        return Err(CoeffError::Mismatch(format!(
            "series over {} mod q^{} and {} mod q^{}",
            a.ring,
            a.order(),
            b.ring,
            b.order()
        )));
    }
    match op {
        SeriesOp::Add => Ok(a.add(b)),
        SeriesOp::Mul => Ok(a.mul(b)),
        SeriesOp::ExpOfNilpotent => a.exp(),
    }
}

impl TruncSeries {
    pub fn zero(ring: &CoeffRing, order: usize) -> Self {
        TruncSeries { ring: ring.clone(), coeffs: vec![ring.zero(); order] }
    }

    pub fn one(ring: &CoeffRing, order: usize) -> Self {
        Self::monomial(ring, order, ring.one(), 0)
    }

    /// `c·q^k` (zero if `k ≥ order`).
    pub fn monomial(ring: &CoeffRing, order: usize, c: Scalar, k: usize) -> Self {
        let mut s = Self::zero(ring, order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series from leading coefficients; missing ones are zero, extra ones dropped.
    pub fn from_coeffs(ring: &CoeffRing, order: usize, coeffs: Vec<Scalar>) -> Self {
        let mut s = Self::zero(ring, order);
        for (i, c) in coeffs.into_iter().take(order).enumerate() {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn from_i64s(ring: &CoeffRing, order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(ring, order, coeffs.iter().map(|&c| ring.from_i64(c)).collect())
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| self.ring.add(a, b)).collect();
        TruncSeries { ring: self.ring.clone(), coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncSeries { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TruncSeries { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|x| self.ring.mul(x, c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(&self.ring, n);
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                if self.ring.is_zero(b) {
                    continue;
                }
                out.coeffs[i + j] = self.ring.add(&out.coeffs[i + j], &self.ring.mul(a, b));
            }
        }
        out
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(&self.ring, self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a series with invertible constant term.
    pub fn inverse(&self) -> Result<Self, CoeffError> {
        let n = self.order();
        let c0inv = self.ring.inv(&self.coeff(0))?;
        let mut out = Self::zero(&self.ring, n);
        for k in 0..n {
            // out_k = c0^{-1} (δ_{k0} - Σ_{i≥1} a_i out_{k-i})
            let mut acc = if k == 0 { self.ring.one() } else { self.ring.zero() };
            for i in 1..=k {
                acc = self.ring.sub(&acc, &self.ring.mul(&self.coeffs[i], &out.coeffs[k - i]));
            }
            out.coeffs[k] = self.ring.mul(&acc, &c0inv);
        }
        Ok(out)
    }

    /// `exp(a)` for `a` with zero constant term.
    ///
    /// Needs `1/n!` for `n < order`, so over a ring of characteristic `p` the
    /// order may not exceed `p`.
    pub fn exp(&self) -> Result<Self, CoeffError> {
        if !self.ring.is_zero(&self.coeff(0)) {
            return Err(CoeffError::ExpUndefined("constant term is nonzero".into()));
        }
        let n = self.order();
        let mut out = Self::one(&self.ring, n);
        let mut term = Self::one(&self.ring, n);
        for k in 1..n {
            let kinv = self.ring.inv(&self.ring.from_i64(k as i64)).map_err(|_| {
                CoeffError::ExpUndefined(format!("{k} is not invertible in {} (order {n})", self.ring))
            })?;
            term = term.mul(self).scale(&kinv);
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Substitution `self(inner(q))`, `inner` having zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, CoeffError> {
        if !self.ring.is_zero(&inner.coeff(0)) {
            return Err(CoeffError::Mismatch("inner series must have zero constant term".into()));
        }
        let n = self.order().min(inner.order());
        let mut out = Self::zero(&self.ring, n);
        // Horner from the top coefficient.
        for k in (0..n).rev() {
            out = out.mul(inner);
            out.coeffs[0] = self.ring.add(&out.coeffs[0], &self.coeffs[k]);
        }
        Ok(out)
    }

    /// Image under coefficientwise reduction into another ring.
    pub fn map_ring(&self, target: &CoeffRing) -> Result<Self, CoeffError> {
        let coeffs = self.coeffs.iter().map(|c| target.reduce(c)).collect::<Result<_, _>>()?;
        Ok(TruncSeries { ring: target.clone(), coeffs })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(&self.ring, order, self.coeffs.clone())
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            let cs = self.ring.format(c);
            parts.push(match k {
                0 => cs,
                1 => format!("{cs}*q"),
                _ => format!("{cs}*q^{k}"),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(q^{})", parts.join(" + "), self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::factorial;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q() -> CoeffRing {
        CoeffRing::rationals()
    }

    fn r(n: i64, d: i64) -> Scalar {
        Scalar::Rat(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn difference_of_squares() {
        let ring = CoeffRing::integers();
        let a = TruncSeries::from_i64s(&ring, 3, &[1, 1]);
        let b = TruncSeries::from_i64s(&ring, 3, &[1, -1]);
        let c = series_arith(&a, &b, SeriesOp::Mul).unwrap();
        assert_eq!(c, TruncSeries::from_i64s(&ring, 3, &[1, 0, -1]));
    }

    #[test]
    fn exp_of_q() {
        let x = TruncSeries::from_i64s(&q(), 4, &[0, 1]);
        let e = series_arith(&x, &x, SeriesOp::ExpOfNilpotent).unwrap();
        assert_eq!(e.coeffs(), &[r(1, 1), r(1, 1), r(1, 2), r(1, 6)]);
    }

    #[test]
    fn exp_cancels_in_quartic_product() {
        // e^{24q} · (e^{-24q} Σ (4d)!/(d!)^5 q^d) = Σ (4d)!/(d!)^5 q^d, expanded by hand.
        let n = 3;
        let g: Vec<Scalar> = (0..n as u64)
            .map(|d| Scalar::Rat(BigRational::new(factorial(4 * d), factorial(d).pow(5))))
            .collect();
        let g = TruncSeries::from_coeffs(&q(), n, g);
        let em = TruncSeries::from_i64s(&q(), n, &[0, -24]).exp().unwrap();
        let ep = TruncSeries::from_i64s(&q(), n, &[0, 24]).exp().unwrap();
        let out = ep.mul(&em.mul(&g));
        assert_eq!(out, TruncSeries::from_i64s(&q(), n, &[1, 24, 1260]));
        // Hand expansion of e^{-24q}Σ: 1 + (24-24)q + (1260 - 576 + 288)q^2.
        assert_eq!(em.mul(&g), TruncSeries::from_i64s(&q(), n, &[1, 0, 972]));
    }

    #[test]
    fn exp_over_fp_limits() {
        let f5 = CoeffRing::prime_field(5).unwrap();
        let x = TruncSeries::from_i64s(&f5, 5, &[0, 1]);
        assert!(x.exp().is_ok());
        let y = TruncSeries::from_i64s(&f5, 6, &[0, 1]);
        assert!(matches!(y.exp(), Err(CoeffError::ExpUndefined(_))));
    }

    #[test]
    fn inverse_and_compose() {
        let a = TruncSeries::from_i64s(&q(), 6, &[1, -1]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, TruncSeries::from_i64s(&q(), 6, &[1, 1, 1, 1, 1, 1]));
        let x = TruncSeries::from_i64s(&q(), 6, &[0, 1, 1]);
        let sq = TruncSeries::from_i64s(&q(), 6, &[0, 0, 1]).compose(&x).unwrap();
        assert_eq!(sq, x.mul(&x));
        let _ = BigInt::from(0);
    }
}
