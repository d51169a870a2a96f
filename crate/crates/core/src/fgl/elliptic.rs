//! Formal groups of elliptic curves in Weierstrass form, expanded in the
//! parameter `z = -x/y` at the point at infinity.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{FglError, FormalGroupLaw};
use crate::coeff::{CoeffRing, MvSeries, Scalar, TruncSeries};

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassCurve {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub a4: i64,
    pub a6: i64,
}

impl WeierstrassCurve {
    pub fn new(a1: i64, a2: i64, a3: i64, a4: i64, a6: i64) -> Self {
        WeierstrassCurve { a1, a2, a3, a4, a6 }
    }

    pub fn coefficients(&self) -> [i64; 5] {
        [self.a1, self.a2, self.a3, self.a4, self.a6]
    }

    pub fn discriminant(&self) -> BigInt {
        let [a1, a2, a3, a4, a6] = self.coefficients().map(BigInt::from);
        let b2 = &a1 * &a1 + 4 * &a2;
        let b4 = 2 * &a4 + &a1 * &a3;
        let b6 = &a3 * &a3 + 4 * &a6;
        let b8 = &a1 * &a1 * &a6 + 4 * &a2 * &a6 - &a1 * &a3 * &a4 + &a2 * &a3 * &a3 - &a4 * &a4;
        -&b2 * &b2 * &b8 - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 + 9 * &b2 * &b4 * &b6
    }

    pub fn has_good_reduction(&self, p: u64) -> bool {
        self.discriminant() % BigInt::from(p) != BigInt::from(0)
    }

    /// `#E(F_p)` by enumerating affine points, plus the point at infinity.
    pub fn count_points(&self, p: u64) -> u64 {
        let m = p as i64;
        let [a1, a2, a3, a4, a6] = self.coefficients().map(|a| a.rem_euclid(m));
        let mut n = 1;
        for x in 0..m {
            let rhs = ((x * x % m * x) + a2 * x % m * x + a4 * x + a6) % m;
            for y in 0..m {
                if (y * y + a1 * x % m * y + a3 * y - rhs).rem_euclid(m) == 0 {
                    n += 1;
                }
            }
        }
        n
    }

    /// `p + 1 - #E(F_p)`.
    pub fn trace_of_frobenius(&self, p: u64) -> i64 {
        p as i64 + 1 - self.count_points(p) as i64
    }
}

/// `w(z) = -1/y` as a series in `z`, the fixed point of
/// `w = z³ + a1·zw + a2·z²w + a3·w² + a4·zw² + a6·w³`.
fn w_series(e: &WeierstrassCurve, ring: &CoeffRing, len: usize) -> TruncSeries {
    let z = TruncSeries::monomial(ring, len, ring.one(), 1);
    let c = |a: i64| ring.from_i64(a);
    let z2 = z.mul(&z);
    let z3 = z2.mul(&z);
    let mut w = z3.clone();
    // Each pass fixes at least one more coefficient.
    for _ in 0..len {
        let w2 = w.mul(&w);
        w = z3
            .add(&z.mul(&w).scale(&c(e.a1)))
            .add(&z2.mul(&w).scale(&c(e.a2)))
            .add(&w2.scale(&c(e.a3)))
            .add(&z.mul(&w2).scale(&c(e.a4)))
            .add(&w2.mul(&w).scale(&c(e.a6)));
    }
    w
}

/// The group law to total degree `order`, with exact integer coefficients.
///
/// The line through `(z1, w(z1))` and `(z2, w(z2))` meets the curve in a
/// third point `z3`, read off from the sum of the roots of the restricted
/// cubic; the sum is the inverse of that point.
pub fn ec_formal_group(e: &WeierstrassCurve, order: usize) -> Result<FormalGroupLaw, FglError> {
    if e.discriminant() == BigInt::from(0) {
        return Err(FglError::Singular);
    }
    let q = CoeffRing::rationals();
    let n = order + 1;
    let w = w_series(e, &q, n + 2);
    let z1 = MvSeries::var(&q, 2, n, 0);
    let z2 = MvSeries::var(&q, 2, n, 1);
    // λ = Σ_k A_k (z2^k - z1^k) / (z2 - z1)
    let mut lambda = MvSeries::zero(&q, 2, n);
    for k in 3..=n + 1 {
        let a = w.coeff(k);
        if q.is_zero(&a) {
            continue;
        }
        for i in 0..k {
            let mut m = MvSeries::zero(&q, 2, n);
            m.set(&[i as u32, (k - 1 - i) as u32], a.clone());
            lambda = lambda.add(&m);
        }
    }
    let w1 = MvSeries::from_univariate(&w.truncate(n)).embed(2, &[0]);
    let nu = w1.sub(&lambda.mul(&z1));
    let c = |a: i64| q.from_i64(a);
    let l2 = lambda.mul(&lambda);
    let num = lambda
        .scale(&c(e.a1))
        .add(&nu.scale(&c(e.a2)))
        .add(&l2.scale(&c(e.a3)))
        .add(&lambda.mul(&nu).scale(&c(2 * e.a4)))
        .add(&l2.mul(&nu).scale(&c(3 * e.a6)));
    let one = MvSeries::constant(&q, 2, n, q.one());
    let den = one.add(&lambda.scale(&c(e.a2))).add(&l2.scale(&c(e.a4))).add(&l2.mul(&lambda).scale(&c(e.a6)));
    let z3 = z1.neg().sub(&z2).sub(&num.mul(&den.inverse()?));
    // Inverse: i(z) = z / (a1·z + a3·w(z) - 1).
    let zt = TruncSeries::monomial(&q, n, q.one(), 1);
    let inv_den = zt
        .scale(&c(e.a1))
        .add(&w.truncate(n).scale(&c(e.a3)))
        .sub(&TruncSeries::one(&q, n))
        .inverse()?;
    let inverse = MvSeries::from_univariate(&zt.mul(&inv_den));
    let law = inverse.substitute(&[z3])?;
    let integral = law.map_ring(&CoeffRing::integers())?;
    Ok(FormalGroupLaw::from_series("elliptic", integral))
}

/// Coefficient of `z^p` in `[p](z)` over `F_p`.
pub fn hasse_invariant(e: &WeierstrassCurve, p: u64) -> Result<u64, FglError> {
    if !e.has_good_reduction(p) {
        return Err(FglError::BadReduction { p });
    }
    let f = ec_formal_group(e, p as usize)?;
    let s = f.p_power_series(p, true)?;
    match s.coeff(p as usize) {
        Scalar::Mod(v) => Ok(v),
        other => unreachable!("reduction mod p gave {other:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        for e in [WeierstrassCurve::new(1, 1, 1, 0, 0), WeierstrassCurve::new(3, -2, 5, 1, 7)] {
            let f = ec_formal_group(&e, 4).unwrap();
            assert_eq!(f.coeff(1, 0), Scalar::Int(1.into()));
            assert_eq!(f.coeff(0, 1), Scalar::Int(1.into()));
            assert_eq!(f.coeff(1, 1), Scalar::Int((-e.a1).into()));
            assert_eq!(f.coeff(2, 0), Scalar::Int(0.into()));
            // Next term: -a2 (z1²z2 + z1z2²).
            assert_eq!(f.coeff(2, 1), Scalar::Int((-e.a2).into()));
        }
    }

    #[test]
    fn law_axioms() {
        let f = ec_formal_group(&WeierstrassCurve::new(1, 1, 1, 0, 0), 7).unwrap();
        assert!(f.verify());
        assert!(f.multiplication_is_endomorphism(2));
    }

    #[test]
    fn odd_when_only_a6() {
        let f = ec_formal_group(&WeierstrassCurve::new(0, 0, 0, 0, 5), 9).unwrap();
        for (e, c) in f.series().terms() {
            if (e[0] + e[1]) % 2 == 0 {
                panic!("even term {e:?} with coefficient {c:?}");
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let e = WeierstrassCurve::new(1, 1, 1, 0, 0);
        assert_eq!(e.discriminant(), BigInt::from(-15));
        assert!(matches!(hasse_invariant(&e, 3), Err(FglError::BadReduction { p: 3 })));
        assert!(matches!(ec_formal_group(&WeierstrassCurve::new(0, 0, 0, 0, 0), 3), Err(FglError::Singular)));
    }
}
