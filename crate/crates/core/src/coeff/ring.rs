//! Coefficient ring descriptors and their elements.
//!
//! A [`CoeffRing`] is a value describing a ring; elements are [`Scalar`]s
//! whose arithmetic is always performed through the ring that owns them.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::CoeffError;

/// An element of some [`CoeffRing`].
///
/// The representation depends on the ring kind: integers and rationals are
/// stored as big numbers, residue rings as a reduced `u64`, and truncated
/// polynomial rings as a trimmed coefficient vector (index = power of the
/// formal variable).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
    Poly(Vec<Scalar>),
}

/// Truncated polynomial ring `R[var]/(var^{nilpotency+1})`.
///
/// The ideal `N = var·R[var]/(var^{nilpotency+1})` is the adic ring proper;
/// computations are carried out in its augmentation `R ⊕ N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdicSpec {
    pub base: CoeffRing,
    pub var: String,
    pub nilpotency: usize,
}

/// Descriptor of an exact commutative coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CoeffRing {
    Integers,
    Rationals,
    PrimeField { p: u64 },
    PrimePowerRing { p: u64, k: u32 },
    AdicTruncation(Box<AdicSpec>),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = egcd(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

fn bigint_mod(x: &BigInt, m: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(m));
    r.to_u64().expect("residue fits in u64")
}

impl CoeffRing {
    pub fn integers() -> Self {
        CoeffRing::Integers
    }

    pub fn rationals() -> Self {
        CoeffRing::Rationals
    }

    pub fn prime_field(p: u64) -> Result<Self, CoeffError> {
        if !is_prime(p) {
            return Err(CoeffError::NotPrime(p));
        }
        Ok(CoeffRing::PrimeField { p })
    }

    pub fn prime_power(p: u64, k: u32) -> Result<Self, CoeffError> {
        if !is_prime(p) {
            return Err(CoeffError::NotPrime(p));
        }
        if k == 0 || p.checked_pow(k).is_none() {
            return Err(CoeffError::InvalidRing(format!("Z/{p}^{k} is not representable")));
        }
        Ok(CoeffRing::PrimePowerRing { p, k })
    }

    /// `base[var]/(var^{nilpotency+1})`, whose ideal `N` satisfies `N^{nilpotency+1} = 0`.
    pub fn adic(base: CoeffRing, var: &str, nilpotency: usize) -> Result<Self, CoeffError> {
        if nilpotency == 0 {
            return Err(CoeffError::InvalidRing("nilpotency must be at least 1".into()));
        }
        Ok(CoeffRing::AdicTruncation(Box::new(AdicSpec {
            base,
            var: var.to_string(),
            nilpotency,
        })))
    }

    /// `q F_p[q]/q^{m+1}` (augmented), the standard test ring.
    pub fn truncated_fp(p: u64, m: usize) -> Result<Self, CoeffError> {
        CoeffRing::adic(CoeffRing::prime_field(p)?, "q", m)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoeffRing::Integers | CoeffRing::Rationals => 0,
            CoeffRing::PrimeField { p } => *p,
            CoeffRing::PrimePowerRing { p, k } => p.pow(*k),
            CoeffRing::AdicTruncation(s) => s.base.characteristic(),
        }
    }

    /// Modulus of a residue ring.
    pub fn modulus(&self) -> Option<u64> {
        match self {
            CoeffRing::PrimeField { p } => Some(*p),
            CoeffRing::PrimePowerRing { p, k } => Some(p.pow(*k)),
            _ => None,
        }
    }

    pub fn adic_spec(&self) -> Option<&AdicSpec> {
        match self {
            CoeffRing::AdicTruncation(s) => Some(s),
            _ => None,
        }
    }

    /// Exponent `m` with `N^{m+1} = 0`, for adic truncations.
    pub fn nilpotency(&self) -> Option<usize> {
        self.adic_spec().map(|s| s.nilpotency)
    }

    /// Innermost non-adic ring.
    pub fn ground(&self) -> &CoeffRing {
        match self {
            CoeffRing::AdicTruncation(s) => s.base.ground(),
            r => r,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            CoeffRing::Integers => Scalar::Int(BigInt::zero()),
            CoeffRing::Rationals => Scalar::Rat(BigRational::zero()),
            CoeffRing::PrimeField { .. } | CoeffRing::PrimePowerRing { .. } => Scalar::Mod(0),
            CoeffRing::AdicTruncation(_) => Scalar::Poly(Vec::new()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            CoeffRing::Integers => Scalar::Int(n.clone()),
            CoeffRing::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            CoeffRing::PrimeField { .. } | CoeffRing::PrimePowerRing { .. } => {
                Scalar::Mod(bigint_mod(n, self.modulus().unwrap()))
            }
            CoeffRing::AdicTruncation(s) => trim(vec![s.base.from_bigint(n)], &s.base),
        }
    }

    /// Image of a rational number; fails if the denominator is not invertible.
    pub fn from_rational(&self, x: &BigRational) -> Result<Scalar, CoeffError> {
        match self {
            CoeffRing::Integers => {
                if x.is_integer() {
                    Ok(Scalar::Int(x.to_integer()))
                } else {
                    Err(CoeffError::NotIntegral(x.to_string()))
                }
            }
            CoeffRing::Rationals => Ok(Scalar::Rat(x.clone())),
            CoeffRing::PrimeField { .. } | CoeffRing::PrimePowerRing { .. } => {
                let m = self.modulus().unwrap();
                let num = bigint_mod(x.numer(), m);
                let den = bigint_mod(x.denom(), m);
                let inv = mod_inverse(den, m).ok_or_else(|| CoeffError::DenominatorNotInvertible {
                    value: x.to_string(),
                    modulus: m,
                })?;
                Ok(Scalar::Mod(((num as u128 * inv as u128) % m as u128) as u64))
            }
            CoeffRing::AdicTruncation(s) => Ok(trim(vec![s.base.from_rational(x)?], &s.base)),
        }
    }

    /// Canonical representative of `x` in this ring.
    ///
    /// Accepts integers and rationals from any ring, residues (taken modulo
    /// this ring's modulus) and polynomial vectors (truncated at the
    /// nilpotency bound). Idempotent.
    pub fn reduce(&self, x: &Scalar) -> Result<Scalar, CoeffError> {
        match (self, x) {
            (_, Scalar::Int(n)) => Ok(self.from_bigint(n)),
            (_, Scalar::Rat(r)) => self.from_rational(r),
            (CoeffRing::PrimeField { .. } | CoeffRing::PrimePowerRing { .. }, Scalar::Mod(v)) => {
                Ok(Scalar::Mod(v % self.modulus().unwrap()))
            }
            (CoeffRing::AdicTruncation(s), Scalar::Poly(v)) => {
                let mut out = Vec::with_capacity(v.len().min(s.nilpotency + 1));
                for c in v.iter().take(s.nilpotency + 1) {
                    out.push(s.base.reduce(c)?);
                }
                Ok(trim(out, &s.base))
            }
            (CoeffRing::AdicTruncation(s), c) => Ok(trim(vec![s.base.reduce(c)?], &s.base)),
            (r, other) => Err(CoeffError::Mismatch(format!("{other:?} is not an element of {r}"))),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Int(n) => n.is_zero(),
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(v) => *v == 0,
            Scalar::Poly(v) => v.is_empty(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (_, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x + y),
            (_, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (_, Scalar::Mod(x), Scalar::Mod(y)) => {
                let m = self.modulus().expect("residue ring");
                Scalar::Mod(((*x as u128 + *y as u128) % m as u128) as u64)
            }
            (CoeffRing::AdicTruncation(s), Scalar::Poly(x), Scalar::Poly(y)) => {
                let n = x.len().max(y.len());
                let z = s.base.zero();
                let v = (0..n)
                    .map(|i| s.base.add(x.get(i).unwrap_or(&z), y.get(i).unwrap_or(&z)))
                    .collect();
                trim(v, &s.base)
            }
            _ => panic!("scalar representation mismatch in {self}: {a:?} + {b:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (_, Scalar::Int(x)) => Scalar::Int(-x),
            (_, Scalar::Rat(x)) => Scalar::Rat(-x),
            (_, Scalar::Mod(x)) => {
                let m = self.modulus().expect("residue ring");
                Scalar::Mod((m - x % m) % m)
            }
            (CoeffRing::AdicTruncation(s), Scalar::Poly(v)) => {
                Scalar::Poly(v.iter().map(|c| s.base.neg(c)).collect())
            }
            _ => panic!("scalar representation mismatch in {self}: -{a:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (_, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x * y),
            (_, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (_, Scalar::Mod(x), Scalar::Mod(y)) => {
                let m = self.modulus().expect("residue ring");
                Scalar::Mod(((*x as u128 * *y as u128) % m as u128) as u64)
            }
            (CoeffRing::AdicTruncation(s), Scalar::Poly(x), Scalar::Poly(y)) => {
                if x.is_empty() || y.is_empty() {
                    return Scalar::Poly(Vec::new());
                }
                let n = (x.len() + y.len() - 1).min(s.nilpotency + 1);
                let mut v = vec![s.base.zero(); n];
                for (i, xi) in x.iter().enumerate() {
                    if s.base.is_zero(xi) {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        if i + j >= n {
                            break;
                        }
                        let t = s.base.mul(xi, yj);
                        v[i + j] = s.base.add(&v[i + j], &t);
                    }
                }
                trim(v, &s.base)
            }
            _ => panic!("scalar representation mismatch in {self}: {a:?} * {b:?}"),
        }
    }

    pub fn mul_int(&self, a: &Scalar, n: i64) -> Scalar {
        self.mul(a, &self.from_i64(n))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut acc = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Multiplicative inverse, when it exists.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar, CoeffError> {
        match (self, a) {
            (CoeffRing::Integers, Scalar::Int(x)) => {
                if x.is_one() || (-x).is_one() {
                    Ok(Scalar::Int(x.clone()))
                } else {
                    Err(CoeffError::NotInvertible(x.to_string()))
                }
            }
            (CoeffRing::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    Err(CoeffError::NotInvertible("0".into()))
                } else {
                    Ok(Scalar::Rat(x.recip()))
                }
            }
            (_, Scalar::Mod(x)) => {
                let m = self.modulus().expect("residue ring");
                mod_inverse(*x, m)
                    .map(Scalar::Mod)
                    .ok_or_else(|| CoeffError::NotInvertible(format!("{x} mod {m}")))
            }
            (CoeffRing::AdicTruncation(s), Scalar::Poly(v)) => {
                // (c0 + n)^{-1} = c0^{-1} Σ (-c0^{-1} n)^k, finite by nilpotency.
                let c0 = v.first().cloned().unwrap_or_else(|| s.base.zero());
                let c0inv = s.base.inv(&c0)?;
                let c0inv_p = self.reduce(&c0inv)?;
                let mut nil = v.clone();
                if let Some(f) = nil.first_mut() {
                    *f = s.base.zero();
                }
                let nil = trim(nil, &s.base);
                let step = self.neg(&self.mul(&c0inv_p, &nil));
                let mut acc = self.one();
                let mut term = self.one();
                for _ in 0..s.nilpotency {
                    term = self.mul(&term, &step);
                    acc = self.add(&acc, &term);
                }
                Ok(self.mul(&acc, &c0inv_p))
            }
            _ => panic!("scalar representation mismatch in {self}: inverse of {a:?}"),
        }
    }

    /// The formal variable `q` of an adic truncation.
    pub fn var(&self) -> Result<Scalar, CoeffError> {
        match self {
            CoeffRing::AdicTruncation(s) => Ok(trim(vec![s.base.zero(), s.base.one()], &s.base)),
            r => Err(CoeffError::Mismatch(format!("{r} has no formal variable"))),
        }
    }

    /// `c·q^k` for `c` in the base ring of an adic truncation.
    pub fn monomial(&self, c: &Scalar, k: usize) -> Scalar {
        let s = self.adic_spec().expect("monomial requires an adic truncation");
        if k > s.nilpotency {
            return self.zero();
        }
        let mut v = vec![s.base.zero(); k + 1];
        v[k] = c.clone();
        trim(v, &s.base)
    }

    /// Coefficient of `q^k` (in the base ring).
    pub fn coefficient(&self, x: &Scalar, k: usize) -> Scalar {
        let s = self.adic_spec().expect("coefficient requires an adic truncation");
        match x {
            Scalar::Poly(v) => v.get(k).cloned().unwrap_or_else(|| s.base.zero()),
            _ => panic!("not a polynomial scalar"),
        }
    }

    /// q-adic valuation; `None` for zero. Non-adic rings give 0 for nonzero.
    pub fn valuation(&self, x: &Scalar) -> Option<usize> {
        if self.is_zero(x) {
            return None;
        }
        match (self, x) {
            (CoeffRing::AdicTruncation(s), Scalar::Poly(v)) => v.iter().position(|c| !s.base.is_zero(c)),
            _ => Some(0),
        }
    }

    /// Membership in the augmentation ideal `N` (zero constant term).
    pub fn in_ideal(&self, x: &Scalar) -> bool {
        match self {
            CoeffRing::AdicTruncation(_) => self.valuation(x).map_or(true, |v| v >= 1),
            _ => false,
        }
    }

    /// Uniform random element; restricted to the ideal `N` when `ideal` is set.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, ideal: bool, bound: i64) -> Scalar {
        match self {
            CoeffRing::Integers => Scalar::Int(BigInt::from(rng.gen_range(-bound..=bound))),
            CoeffRing::Rationals => {
                let n = rng.gen_range(-bound..=bound);
                let d = rng.gen_range(1..=bound.max(1));
                Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
            }
            CoeffRing::PrimeField { .. } | CoeffRing::PrimePowerRing { .. } => {
                Scalar::Mod(rng.gen_range(0..self.modulus().unwrap()))
            }
            CoeffRing::AdicTruncation(s) => {
                let v = (0..=s.nilpotency)
                    .map(|i| if ideal && i == 0 { s.base.zero() } else { s.base.random(rng, false, bound) })
                    .collect();
                trim(v, &s.base)
            }
        }
    }

    /// Least-absolute-value integer representative of a residue.
    pub fn symmetric_lift(&self, x: &Scalar) -> Option<i64> {
        let m = self.modulus()? as i64;
        match x {
            Scalar::Mod(v) => {
                let v = *v as i64;
                Some(if 2 * v > m { v - m } else { v })
            }
            _ => None,
        }
    }

    /// Human-readable form of an element.
    pub fn format(&self, x: &Scalar) -> String {
        match (self, x) {
            (_, Scalar::Int(n)) => n.to_string(),
            (_, Scalar::Rat(r)) => r.to_string(),
            (_, Scalar::Mod(v)) => v.to_string(),
            (CoeffRing::AdicTruncation(s), Scalar::Poly(v)) => {
                let mut parts = Vec::new();
                for (i, c) in v.iter().enumerate() {
                    if s.base.is_zero(c) {
                        continue;
                    }
                    let cs = s.base.format(c);
                    let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
                    parts.push(match i {
                        0 => cs,
                        1 if cs == "1" => s.var.clone(),
                        1 => format!("{cs}*{}", s.var),
                        _ if cs == "1" => format!("{}^{i}", s.var),
                        _ => format!("{cs}*{}^{i}", s.var),
                    });
                }
                if parts.is_empty() {
                    "0".into()
                } else {
                    parts.join(" + ")
                }
            }
            _ => format!("{x:?}"),
        }
    }
}

fn trim(mut v: Vec<Scalar>, base: &CoeffRing) -> Scalar {
    while v.last().is_some_and(|c| base.is_zero(c)) {
        v.pop();
    }
    Scalar::Poly(v)
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Integers => write!(f, "Z"),
            CoeffRing::Rationals => write!(f, "Q"),
            CoeffRing::PrimeField { p } => write!(f, "F_{p}"),
            CoeffRing::PrimePowerRing { p, k } => write!(f, "Z/{p}^{k}"),
            CoeffRing::AdicTruncation(s) => {
                write!(f, "{}[{}]/{}^{}", s.base, s.var, s.var, s.nilpotency + 1)
            }
        }
    }
}

/// Canonical representative of `x` in `ring` (see [`CoeffRing::reduce`]).
pub fn adic_reduce(x: &Scalar, ring: &CoeffRing) -> Result<Scalar, CoeffError> {
    ring.reduce(x)
}

impl Scalar {
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Int(n) => Some(BigRational::from_integer(n.clone())),
            Scalar::Rat(r) => Some(r.clone()),
            _ => None,
        }
    }

    pub fn as_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Int(n) => Some(n.clone()),
            Scalar::Rat(r) if r.is_integer() => Some(r.to_integer()),
            Scalar::Mod(v) => Some(BigInt::from(*v)),
            _ => None,
        }
    }

    pub fn is_negative_int(&self) -> bool {
        matches!(self, Scalar::Int(n) if n.sign() == Sign::Minus)
            || matches!(self, Scalar::Rat(r) if r.is_negative())
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Exact `a^e mod m` for small moduli.
pub fn pow_mod(b: u64, e: u64, m: u64) -> u64 {
    mod_pow(b, e, m)
}
