//! Reduced-degree sign bookkeeping. Every sign in this module comes from here.

/// Reduced degree `‖a‖ = |a| - 1`.
pub fn reduced(deg: i64) -> i64 {
    deg - 1
}

/// `(-1)^n` as `±1`.
pub fn parity_sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Partial sums `✠_i = ‖a_1‖ + ... + ‖a_i‖` for `i = 0..=len`.
pub fn maltese_prefix(degrees: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(degrees.len() + 1);
    let mut acc = 0;
    out.push(0);
    for &d in degrees {
        acc += reduced(d);
        out.push(acc);
    }
    out
}

/// Koszul sign of permuting graded items: `perm[i]` is the original position
/// of the item placed at position `i`. Only odd-odd transpositions contribute.
pub fn koszul_permutation_sign(degrees: &[i64], perm: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] && degrees[perm[i]] * degrees[perm[j]] % 2 != 0 {
                sign = -sign;
            }
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_sums() {
        assert_eq!(maltese_prefix(&[1, 0, 2]), vec![0, 0, -1, 0]);
        assert_eq!(parity_sign(-3), -1);
    }

    #[test]
    fn koszul() {
        assert_eq!(koszul_permutation_sign(&[1, 1], &[1, 0]), -1);
        assert_eq!(koszul_permutation_sign(&[1, 2], &[1, 0]), 1);
        assert_eq!(koszul_permutation_sign(&[1, 1, 1], &[2, 0, 1]), 1);
    }
}
