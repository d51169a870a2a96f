//! One-dimensional formal group laws as truncated two-variable series, their
//! `p`-th power maps, and formal groups of elliptic curves.

mod elliptic;
mod suite;

use thiserror::Error;

pub use elliptic::{ec_formal_group, hasse_invariant, WeierstrassCurve};
pub use suite::{fgl_suite, honda_suite, validate_model, MODEL_CURVE};

use crate::coeff::{CoeffError, CoeffRing, MvSeries, Scalar, TruncSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FglError {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("order {order} is too small for [{n}]")]
    OrderTooSmall { order: usize, n: u64 },
    #[error("characteristic conflict: law over {ring}, reduction mod {p} requested")]
    Characteristic { ring: String, p: u64 },
    #[error("{p} is a prime of bad reduction")]
    BadReduction { p: u64 },
    #[error("singular curve: discriminant is zero")]
    Singular,
}

/// `F(x, y)` with all terms of total degree at most `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalGroupLaw {
    pub name: String,
    series: MvSeries,
    order: usize,
}

impl FormalGroupLaw {
    /// Wraps a two-variable series; its internal truncation is `order + 1`.
    pub fn from_series(name: impl Into<String>, series: MvSeries) -> Self {
        assert_eq!(series.nvars(), 2, "a group law has two variables");
        let order = series.order() - 1;
        FormalGroupLaw { name: name.into(), series, order }
    }

    /// `x + y`.
    pub fn additive(ring: &CoeffRing, order: usize) -> Self {
        let (x, y) = xy(ring, order);
        Self::from_series("additive", x.add(&y))
    }

    /// `x + y + xy`, the completion of the multiplicative group at 1.
    pub fn multiplicative(ring: &CoeffRing, order: usize) -> Self {
        let (x, y) = xy(ring, order);
        Self::from_series("multiplicative", x.add(&y).add(&x.mul(&y)))
    }

    /// `(x + y) / (1 - xy)`, the circle `x² + y² = 1` in the coordinate
    /// `z = y / (1 + x)`.
    pub fn torus(ring: &CoeffRing, order: usize) -> Self {
        let (x, y) = xy(ring, order);
        let one = MvSeries::constant(ring, 2, order + 1, ring.one());
        let den = one.sub(&x.mul(&y)).inverse().expect("constant term is one");
        Self::from_series("torus", x.add(&y).mul(&den))
    }

    pub fn series(&self) -> &MvSeries {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ring(&self) -> &CoeffRing {
        self.series.ring()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Scalar {
        self.series.coeff(&[i, j])
    }

    pub fn map_ring(&self, target: &CoeffRing) -> Result<Self, FglError> {
        Ok(FormalGroupLaw { name: self.name.clone(), series: self.series.map_ring(target)?, order: self.order })
    }

    /// `F(x, 0) = x`, `F(0, y) = y`, `F(x, y) = F(y, x)` and associativity,
    /// coefficientwise up to the order.
    pub fn verify(&self) -> bool {
        let ring = self.ring();
        let n = self.order + 1;
        let x = MvSeries::var(ring, 1, n, 0);
        let zero = MvSeries::zero(ring, 1, n);
        let left_unit = self.series.substitute(&[x.clone(), zero.clone()]);
        let right_unit = self.series.substitute(&[zero, x.clone()]);
        if left_unit.as_ref() != Ok(&x) || right_unit.as_ref() != Ok(&x) {
            return false;
        }
        let swapped = self.series.embed(2, &[1, 0]);
        if swapped != self.series {
            return false;
        }
        let f = |a: usize, b: usize| self.series.embed(3, &[a, b]);
        let z = MvSeries::var(ring, 3, n, 2);
        let x3 = MvSeries::var(ring, 3, n, 0);
        let left = self.series.substitute(&[f(0, 1), z]);
        let right = self.series.substitute(&[x3, f(1, 2)]);
        matches!((left, right), (Ok(l), Ok(r)) if l == r)
    }

    /// `[n](z)`, the `n`-fold sum of `z` with itself.
    pub fn multiplication(&self, n: u64) -> TruncSeries {
        let ring = self.ring();
        let z = MvSeries::var(ring, 1, self.order + 1, 0);
        let mut acc = MvSeries::zero(ring, 1, self.order + 1);
        for _ in 0..n {
            acc = self.series.substitute(&[acc, z.clone()]).expect("arguments vanish at the origin");
        }
        acc.to_univariate()
    }

    /// `[p](z)`, optionally after reducing the law mod `p`.
    pub fn p_power_series(&self, p: u64, reduce_mod_p: bool) -> Result<TruncSeries, FglError> {
        if (self.order as u64) < p {
            return Err(FglError::OrderTooSmall { order: self.order, n: p });
        }
        if !reduce_mod_p {
            return Ok(self.multiplication(p));
        }
        let ch = self.ring().characteristic();
        if ch != 0 && ch != p {
            return Err(FglError::Characteristic { ring: self.ring().to_string(), p });
        }
        let target = CoeffRing::prime_field(p)?;
        Ok(self.map_ring(&target)?.multiplication(p))
    }

    /// `F([n]x, [n]y) = [n](F(x, y))` up to the order.
    pub fn multiplication_is_endomorphism(&self, n: u64) -> bool {
        let m = MvSeries::from_univariate(&self.multiplication(n));
        let lhs = self.series.substitute(&[m.embed(2, &[0]), m.embed(2, &[1])]);
        let rhs = m.substitute(&[self.series.clone()]);
        matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
    }
}

fn xy(ring: &CoeffRing, order: usize) -> (MvSeries, MvSeries) {
    (MvSeries::var(ring, 2, order + 1, 0), MvSeries::var(ring, 2, order + 1, 1))
}

/// Only exponents divisible by `p` occur (the Frobenius divisibility of `[p]`
/// in characteristic `p`).
pub fn is_series_in_z_to_the(s: &TruncSeries, p: u64) -> bool {
    (0..s.order()).all(|k| k as u64 % p == 0 || s.ring().is_zero(&s.coeff(k)))
}

/// Checks `[p](z) = c·z^p` exactly; returns `c` if so.
pub fn monomial_p_power(s: &TruncSeries, p: u64) -> Option<Scalar> {
    let ring = s.ring();
    let c = s.coeff(p as usize);
    let others_vanish = (0..s.order().min(p as usize + 1)).all(|k| k as u64 == p || ring.is_zero(&s.coeff(k)));
    others_vanish.then_some(c)
}
