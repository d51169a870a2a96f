//! Small exact linear algebra: ranks and solutions over F_p, and Smith
//! normal form over ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mod_inverse;

/// Row-reduces in place and returns the rank of a matrix over `F_p`.
pub fn rank_mod_p(rows: &mut [Vec<u64>], p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else { continue };
        rows.swap(rank, piv);
        let inv = mod_inverse(rows[rank][col] % p, p).expect("nonzero pivot");
        for x in rows[rank].iter_mut() {
            *x = (*x % p) * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] % p == 0 {
                continue;
            }
            let f = row[col] % p;
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x % p + p - f * y % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// A solution `x` of `A x = b` over `F_p`, if one exists.
pub fn solve_mod_p(a: &[Vec<u64>], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<u64>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| row.iter().map(|x| x % p).chain([bi % p]).collect())
        .collect();
    rank_mod_p(&mut aug, p);
    let mut x = vec![0; ncols];
    for row in &aug {
        match row.iter().position(|&v| v != 0) {
            None => {}
            Some(c) if c == ncols => return None,
            Some(c) => x[c] = row[ncols],
        }
    }
    Some(x)
}

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries only).
pub fn smith_diagonal(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pick the smallest nonzero entry in the remaining block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let v = &a[t][j] * &q;
                        a[i][j] -= v;
                    }
                    if !a[i][t].is_zero() {
                        a.swap(t, i);
                        changed = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let v = &row[t] * &q;
                        row[j] -= v;
                    }
                    if !a[t][j].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        changed = true;
                    }
                }
            }
            if changed {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| {
                !(&a[i][j] % &a[t][t]).is_zero()
            });
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Rank of the free part of `ℤ^cols / rowspace(m)`.
pub fn cokernel_rank(m: &[Vec<BigInt>], cols: usize) -> usize {
    cols - smith_diagonal(m).len()
}

/// True if `ℤ^cols / rowspace(m)` is torsion-free.
pub fn cokernel_torsion_free(m: &[Vec<BigInt>]) -> bool {
    smith_diagonal(m).iter().all(|d| d.is_one())
}

/// Presentation of `ℤ^cols / rowspace(m)` as `⊕ ℤ/d_i ⊕ ℤ^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel {
    /// Nonzero diagonal entries of a diagonalization of `m` (absolute values).
    pub diagonal: Vec<BigInt>,
    /// `rank × cols` matrix sending a vector of `ℤ^cols` to its free coordinates.
    pub free_coordinates: Vec<Vec<BigInt>>,
}

impl Cokernel {
    pub fn rank(&self) -> usize {
        self.free_coordinates.len()
    }

    pub fn torsion_free(&self) -> bool {
        self.diagonal.iter().all(|d| d.is_one())
    }

    /// Free coordinates of an element of `ℤ^cols`.
    pub fn project(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.free_coordinates.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }
}

/// Diagonalizes `m` by unimodular row and column operations `P m Q`,
/// tracking `Qᵀ`, which carries the row lattice of `m` onto that of the diagonal.
pub fn cokernel(m: &[Vec<BigInt>], cols: usize) -> Cokernel {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    let mut qt: Vec<Vec<BigInt>> =
        (0..cols).map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        qt.swap(t, pj);
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let v = &a[t][j] * &q;
                        a[i][j] -= v;
                    }
                    if !a[i][t].is_zero() {
                        a.swap(t, i);
                        changed = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut() {
                        let v = &row[t] * &q;
                        row[j] -= v;
                    }
                    let (lo, hi) = qt.split_at_mut(j);
                    for (y, x) in hi[0].iter_mut().zip(&lo[t]) {
                        *y -= x * &q;
                    }
                    if !a[t][j].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        qt.swap(t, j);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        diagonal.push(a[t][t].abs());
        t += 1;
    }
    Cokernel { diagonal, free_coordinates: qt.split_off(t) }
}
