//! Quantum periods of four Fano threefolds and the scalar by which the
//! `q^{p-1}` power operation acts on their degree-3 cohomology.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::QuantumError;
use crate::coeff::{factorial, is_prime, CoeffRing, Scalar, TruncSeries};

/// Largest supported period order.
pub const MAX_PERIOD_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FanoModel {
    /// Intersection of two quadrics in `P⁵`.
    TwoQuadrics,
    /// Cubic threefold in `P⁴`.
    Cubic,
    /// Quartic threefold in `P⁴`.
    Quartic,
    /// Bidegree `(1,2)` hypersurface in `P¹ × P³`.
    Blowup12,
}

impl FanoModel {
    pub const ALL: [FanoModel; 4] = [FanoModel::TwoQuadrics, FanoModel::Cubic, FanoModel::Quartic, FanoModel::Blowup12];

    /// The eigenvalue of quantum multiplication by `c₁` on degree-3 classes.
    pub fn lambda(&self) -> i64 {
        match self {
            FanoModel::TwoQuadrics | FanoModel::Cubic => 0,
            FanoModel::Quartic => -24,
            FanoModel::Blowup12 => -1,
        }
    }

    /// `[q^d] e^{-λq} Π` from the registered closed form.
    pub fn shifted_period_coeff(&self, d: usize) -> BigRational {
        let f = |n: usize| factorial(n as u64);
        let int = |n: BigInt| BigRational::from_integer(n);
        match self {
            FanoModel::TwoQuadrics => {
                if d % 2 == 1 {
                    return BigRational::zero();
                }
                let h = d / 2;
                let num = f(2 * h) * f(2 * h);
                BigRational::new(num, f(h).pow(6))
            }
            FanoModel::Cubic => {
                if d % 2 == 1 {
                    return BigRational::zero();
                }
                let h = d / 2;
                BigRational::new(f(3 * h), f(h).pow(5))
            }
            FanoModel::Quartic => BigRational::new(f(4 * d), f(d).pow(5)),
            FanoModel::Blowup12 => {
                let mut s = BigRational::zero();
                for d2 in 0..=d / 2 {
                    let d1 = d - 2 * d2;
                    s += BigRational::new(f(d), f(d1).pow(2) * f(d2).pow(4));
                }
                if s.is_zero() {
                    int(BigInt::zero())
                } else {
                    s
                }
            }
        }
    }

    /// `e^{-λq} Π` to order `q^n`.
    pub fn shifted_period(&self, n: usize) -> TruncSeries {
        let q = CoeffRing::rationals();
        let coeffs = (0..=n).map(|d| Scalar::Rat(self.shifted_period_coeff(d))).collect();
        TruncSeries::from_coeffs(&q, n + 1, coeffs)
    }
}

impl fmt::Display for FanoModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FanoModel::TwoQuadrics => "two-quadrics",
            FanoModel::Cubic => "cubic",
            FanoModel::Quartic => "quartic",
            FanoModel::Blowup12 => "blowup12",
        };
        f.write_str(s)
    }
}

impl FromStr for FanoModel {
    type Err = QuantumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace(['_', ' '], "-").as_str() {
            "two-quadrics" | "twoquadrics" => Ok(FanoModel::TwoQuadrics),
            "cubic" => Ok(FanoModel::Cubic),
            "quartic" => Ok(FanoModel::Quartic),
            "blowup12" | "blowup-12" => Ok(FanoModel::Blowup12),
            _ => Err(QuantumError::UnknownModel(s.to_string())),
        }
    }
}

/// `e^{cq}` to order `q^n`.
fn exp_series(c: i64, n: usize) -> TruncSeries {
    let q = CoeffRing::rationals();
    let coeffs = (0..=n)
        .map(|k| Scalar::Rat(BigRational::new(BigInt::from(c).pow(k as u32), factorial(k as u64))))
        .collect();
    TruncSeries::from_coeffs(&q, n + 1, coeffs)
}

/// The quantum period `Π = 1 + Σ_{d≥2} ⟨ψ^{d-2}[pt]⟩_d q^d` to order `q^n`.
pub fn quantum_period(model: FanoModel, n: usize) -> Result<TruncSeries, QuantumError> {
    if n > MAX_PERIOD_ORDER {
        return Err(QuantumError::OrderTooLarge(n));
    }
    let shifted = model.shifted_period(n);
    Ok(match model.lambda() {
        0 => shifted,
        l => exp_series(l, n).mul(&shifted),
    })
}

fn rational(s: &Scalar) -> BigRational {
    s.as_rational().expect("rational series")
}

/// Reduction of a rational into `F_p`; a denominator divisible by `p` is fatal.
pub fn reduce_mod_p(x: &BigRational, p: u64) -> Result<u64, QuantumError> {
    match CoeffRing::prime_field(p)?.from_rational(x) {
        Ok(Scalar::Mod(v)) => Ok(v),
        Ok(other) => unreachable!("prime field element {other:?}"),
        Err(_) => Err(QuantumError::DenominatorDivisibleByP { value: x.to_string(), p }),
    }
}

/// Representative of `v mod p` of least absolute value (ties go negative).
pub fn least_abs(v: u64, p: u64) -> i64 {
    let v = v % p;
    if 2 * v >= p {
        v as i64 - p as i64
    } else {
        v as i64
    }
}

/// Both evaluations of the threefold scalar and its reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QxiValue {
    pub model: FanoModel,
    pub p: u64,
    /// `-λ^{p-1}/(p-1)! + Σ_{2≤d≤p-1} (-1)^{d-1} λ^{p-1-d}/(p-1-d)! ⟨ψ^{d-2}[pt]⟩_d`.
    pub explicit_sum: String,
    /// `-[q^{p-1}] e^{-λq} Π`.
    pub period_coefficient: String,
    pub value: u64,
    pub least_abs: i64,
}

/// The scalar by which the `q^{p-1}` power operation acts on degree-3
/// classes, evaluated by the explicit sum and by the period coefficient.
/// The two must agree mod `p`.
pub fn qxi_threefold(model: FanoModel, p: u64) -> Result<QxiValue, QuantumError> {
    if !is_prime(p) {
        return Err(QuantumError::NotPrime(p));
    }
    if p == 2 && model != FanoModel::Blowup12 {
        return Err(QuantumError::Unsupported(format!("p = 2 for {model}")));
    }
    let m = (p - 1) as usize;
    let lambda = BigRational::from_integer(BigInt::from(model.lambda()));
    let period = quantum_period(model, m)?;
    let pi = |d: usize| rational(&period.coeff(d));
    let fact = |n: usize| BigRational::from_integer(factorial(n as u64));
    let pow = |n: usize| {
        if n == 0 {
            BigRational::one()
        } else {
            num_traits::pow(lambda.clone(), n)
        }
    };
    let mut explicit = -pow(m) / fact(m);
    for d in 2..=m {
        let sign = if (d - 1) % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        explicit += sign * pow(m - d) / fact(m - d) * pi(d);
    }
    let shifted = exp_series(-model.lambda(), m).mul(&period);
    let coefficient = -rational(&shifted.coeff(m));
    let a = reduce_mod_p(&explicit, p)?;
    let b = reduce_mod_p(&coefficient, p)?;
    if a != b {
        return Err(QuantumError::RouteMismatch {
            what: format!("{model} at p = {p}"),
            left: explicit.to_string(),
            right: coefficient.to_string(),
        });
    }
    Ok(QxiValue {
        model,
        p,
        explicit_sum: explicit.to_string(),
        period_coefficient: coefficient.to_string(),
        value: a,
        least_abs: least_abs(a, p),
    })
}

/// `⟨y, ψ^d x⟩_2 / ∫yx` for `0 ≤ d`, by the recursion
/// `⟨y, ψ^d x⟩ = λ/(d+1) ⟨y, ψ^{d-1} x⟩` starting from `⟨y, x⟩ = λ ∫yx`.
pub fn odd_psi_descendants(lambda: i64, d_max: usize) -> Vec<BigRational> {
    let l = BigRational::from_integer(BigInt::from(lambda));
    let mut out = vec![l.clone()];
    for d in 1..=d_max {
        let next = out[d - 1].clone() * l.clone() / BigRational::from_integer(BigInt::from(d as u64 + 1));
        out.push(next);
    }
    out
}

/// `true` if the rational is an integer of absolute value below `bound`.
pub fn is_small_integer(x: &BigRational, bound: i64) -> bool {
    x.is_integer() && x.to_integer().abs() < BigInt::from(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Scalar {
        Scalar::Rat(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn period_prefixes() {
        let pi = quantum_period(FanoModel::TwoQuadrics, 6).unwrap();
        assert_eq!(pi.coeff(2), r(4, 1));
        assert_eq!(pi.coeff(4), r(9, 1));
        assert_eq!(pi.coeff(6), r(100, 9));
        let pi = quantum_period(FanoModel::Cubic, 4).unwrap();
        assert_eq!((pi.coeff(2), pi.coeff(4)), (r(6, 1), r(45, 2)));
        assert_eq!(FanoModel::Blowup12.shifted_period_coeff(2), BigRational::new(5.into(), 2.into()));
    }

    #[test]
    fn period_has_no_linear_term() {
        for m in FanoModel::ALL {
            let pi = quantum_period(m, 10).unwrap();
            assert_eq!(pi.coeff(0), r(1, 1), "{m}");
            assert_eq!(pi.coeff(1), r(0, 1), "{m}");
        }
    }

    #[test]
    fn blowup_at_five() {
        // Σ 1/(d1!² d2!⁴) over d1 + 2 d2 = 4 is 181/576.
        assert_eq!(reduce_mod_p(&BigRational::new(181.into(), 576.into()), 5).unwrap(), 1);
        assert_eq!(qxi_threefold(FanoModel::Blowup12, 5).unwrap().value, 1);
    }

    #[test]
    fn errors() {
        assert!(matches!("sextic".parse::<FanoModel>(), Err(QuantumError::UnknownModel(_))));
        assert!(matches!(quantum_period(FanoModel::Cubic, 65), Err(QuantumError::OrderTooLarge(65))));
        assert!(matches!(qxi_threefold(FanoModel::Cubic, 2), Err(QuantumError::Unsupported(_))));
        assert!(reduce_mod_p(&BigRational::new(1.into(), 10.into()), 5).is_err());
    }
}
