//! Constants relating the equivariant `p`-th power to `Sq^i` and `P^i`, and
//! `S¹`-equivariant Euler classes of weighted representations.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::coeff::{factorial, is_prime, pow_mod};

/// `((p-1)/2)! mod p`.
pub fn half_factorial(p: u64) -> u64 {
    (1..=(p - 1) / 2).fold(1, |acc, k| acc * k % p)
}

fn sign_mod(e: u64, p: u64) -> u64 {
    if e % 2 == 0 {
        1 % p
    } else {
        p - 1
    }
}

/// `((p-1)/2)!² mod p` and `(-1)^{(p+1)/2} mod p`; equal for every odd prime.
pub fn half_factorial_square(p: u64) -> (u64, u64) {
    let h = half_factorial(p);
    (h * h % p, sign_mod((p + 1) / 2, p))
}

/// One component of the classical part: the power operation with index
/// `index` multiplies `t^{doubled_t_exponent / 2}` with coefficient
/// `coefficient ∈ F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteenrodComponent {
    pub index: u64,
    pub doubled_t_exponent: u64,
    pub coefficient: u64,
}

/// Constants for the classical part of the equivariant `p`-th power on a
/// class of degree `degree`. For `p = 2` the `t`-exponents can be
/// half-integers, so all exponents are stored doubled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteenrodConstants {
    pub p: u64,
    pub degree: u64,
}

impl SteenrodConstants {
    pub fn new(p: u64, degree: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        SteenrodConstants { p, degree }
    }

    /// The exponent `|x|(|x|-1)/2 · (p-1)/2`.
    pub fn sign_exponent(&self) -> u64 {
        self.degree * self.degree.saturating_sub(1) / 2 * ((self.p - 1) / 2)
    }

    /// Overall factor `(-1)^∗ ((p-1)/2)!^{|x|}`; `1` for `p = 2`.
    pub fn prefactor(&self) -> u64 {
        let p = self.p;
        if p == 2 {
            return 1;
        }
        sign_mod(self.sign_exponent(), p) * pow_mod(half_factorial(p), self.degree, p) % p
    }

    /// All components with nonnegative `t`-exponent.
    pub fn components(&self) -> Vec<SteenrodComponent> {
        let (p, n) = (self.p, self.degree);
        if p == 2 {
            return (0..=n).map(|i| SteenrodComponent { index: i, doubled_t_exponent: n - i, coefficient: 1 }).collect();
        }
        let pre = self.prefactor();
        (0..=n / 2)
            .map(|i| SteenrodComponent {
                index: i,
                doubled_t_exponent: (n - 2 * i) * (p - 1),
                coefficient: pre * sign_mod(i, p) % p,
            })
            .collect()
    }

    /// The component of the identity operation (index 0).
    pub fn leading(&self) -> SteenrodComponent {
        self.components().remove(0)
    }

    /// The same leading component recomputed geometrically: a Koszul sign
    /// `(-1)^{|x|(|x|-1)/2 · p(p-1)/2}` times the `|x|`-th power of the Euler
    /// class of the cyclic representation.
    pub fn leading_from_euler(&self) -> SteenrodComponent {
        let p = self.p;
        let dagger = self.degree * self.degree.saturating_sub(1) / 2 * (p * (p - 1) / 2);
        let e = cyclic_euler(p);
        let c = e.reduce(p);
        SteenrodComponent {
            index: 0,
            doubled_t_exponent: 2 * e.degree as u64 * self.degree,
            coefficient: sign_mod(dagger, p) * pow_mod(c, self.degree, p) % p,
        }
    }

    /// For even degree and odd `p`: the coefficient of the `t⁰` term, where
    /// the top power operation is the `p`-th power. Always `1`.
    pub fn top_coefficient(&self) -> Option<u64> {
        if self.p == 2 || self.degree % 2 == 1 {
            return None;
        }
        self.components().last().map(|c| c.coefficient)
    }
}

/// Classes of degree 3 on a threefold: only the index-0 component survives.
/// Returns `(coefficient, doubled t-exponent)`, i.e. `-((p-1)/2)!` on
/// `t^{(3p-3)/2}` for odd `p`, and `1` on `t^{3/2}` for `p = 2`.
pub fn degree_three_coefficient(p: u64) -> (u64, u64) {
    if p == 2 {
        return (1, 3);
    }
    ((p - half_factorial(p)) % p, 3 * (p - 1))
}

/// A monomial `coefficient · t^degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerClass {
    pub coefficient: BigInt,
    pub degree: usize,
}

impl EulerClass {
    pub fn mul(&self, other: &EulerClass) -> EulerClass {
        EulerClass { coefficient: &self.coefficient * &other.coefficient, degree: self.degree + other.degree }
    }

    pub fn reduce(&self, p: u64) -> u64 {
        let m = BigInt::from(p);
        let r = ((&self.coefficient % &m) + &m) % &m;
        u64::try_from(r).expect("residue fits")
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }
}

/// Euler class of the sum of lines on which the circle acts with the given
/// weights: `k₁⋯k_d t^d`.
pub fn equivariant_euler(weights: &[i64]) -> EulerClass {
    EulerClass {
        coefficient: weights.iter().fold(BigInt::one(), |acc, &k| acc * BigInt::from(k)),
        degree: weights.len(),
    }
}

/// The reduced regular representation of `ℤ/p` for odd `p`, split by the
/// discrete Fourier transform into lines of weights `1, ..., (p-1)/2`. For
/// `p = 2` it is the sign line, with Euler class `t^{1/2}` recorded as
/// coefficient one and degree zero.
pub fn cyclic_euler(p: u64) -> EulerClass {
    let weights: Vec<i64> = (1..=(p as i64 - 1) / 2).collect();
    equivariant_euler(&weights)
}

/// Exact `((p-1)/2)!` as an integer.
pub fn cyclic_euler_expected(p: u64) -> BigInt {
    factorial((p - 1) / 2)
}
