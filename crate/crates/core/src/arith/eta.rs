//! η-products expanded through Euler's pentagonal number theorem.

use serde::Serialize;

use super::ArithError;

/// Levels of `η(q)η(q³)η(q⁵)η(q¹⁵)`.
pub const LEVEL_FIFTEEN: [u64; 4] = [1, 3, 5, 15];

/// `q^{Σ levels / 24} ∏_k ∏_n (1 - q^{kn})`, expanded to `q^order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EtaProduct {
    levels: Vec<u64>,
    order: usize,
}

impl EtaProduct {
    pub fn new(levels: Vec<u64>, order: usize) -> Result<Self, ArithError> {
        let total: u64 = levels.iter().sum();
        if total % 24 != 0 {
            return Err(ArithError::FractionalShift(total));
        }
        Ok(EtaProduct { levels, order })
    }

    pub fn shift(&self) -> usize {
        (self.levels.iter().sum::<u64>() / 24) as usize
    }
}

/// Nonzero terms of `∏_{n≥1} (1 - x^n)` up to `x^bound`: the sign
/// `(-1)^k` at the generalized pentagonal numbers `k(3k ∓ 1)/2`.
fn pentagonal_terms(bound: usize) -> Vec<(usize, i64)> {
    let mut out = vec![(0, 1)];
    for k in 1.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let a = k * (3 * k - 1) / 2;
        if a > bound {
            break;
        }
        out.push((a, sign));
        let b = k * (3 * k + 1) / 2;
        if b <= bound {
            out.push((b, sign));
        }
    }
    out
}

/// `∏_{n≥1} (1 - q^n)` up to `q^bound`, from the pentagonal theorem.
pub fn euler_product_coeffs(bound: usize) -> Vec<i64> {
    let mut out = vec![0; bound + 1];
    for (e, s) in pentagonal_terms(bound) {
        out[e] = s;
    }
    out
}

/// Coefficients of `q¹, ..., q^order`.
pub fn eta_product_coeffs(eta: &EtaProduct) -> Vec<i64> {
    let shift = eta.shift();
    let n = eta.order;
    if n < shift {
        return vec![0; n];
    }
    let bound = n - shift;
    let mut acc = vec![0i64; bound + 1];
    acc[0] = 1;
    for &k in &eta.levels {
        let k = k as usize;
        let factor: Vec<(usize, i64)> =
            pentagonal_terms(bound / k).into_iter().map(|(e, s)| (e * k, s)).collect();
        let mut next = vec![0i64; bound + 1];
        for (i, &a) in acc.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(e, s) in &factor {
                if i + e > bound {
                    break;
                }
                next[i + e] = next[i + e].checked_add(a * s).expect("η coefficient overflow");
            }
        }
        acc = next;
    }
    (1..=n).map(|m| if m < shift { 0 } else { acc[m - shift] }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_coefficient() {
        let c = eta_product_coeffs(&EtaProduct::new(LEVEL_FIFTEEN.to_vec(), 10).unwrap());
        assert_eq!(c[0], 1);
        assert_eq!(c.len(), 10);
    }

    #[test]
    fn fractional_weight_rejected() {
        assert!(EtaProduct::new(vec![1, 2], 5).is_err());
    }

    #[test]
    fn pentagonal_start() {
        assert_eq!(euler_product_coeffs(12), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
    }
}
