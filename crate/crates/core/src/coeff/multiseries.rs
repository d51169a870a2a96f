//! Dense multivariate power series truncated by total degree.

use std::collections::HashMap;
use std::sync::Arc;

use super::{CoeffError, CoeffRing, Scalar, TruncSeries};

#[derive(Debug, PartialEq, Eq)]
struct Monomials {
    nvars: usize,
    order: usize,
    list: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl Monomials {
    fn new(nvars: usize, order: usize) -> Self {
        let mut list = Vec::new();
        for deg in 0..order as u32 {
            let mut cur = vec![0u32; nvars];
            compositions(deg, 0, &mut cur, &mut list);
        }
        let index = list.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Monomials { nvars, order, list, index }
    }
}

fn compositions(rest: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(cur.clone());
        return;
    }
    if cur.is_empty() {
        if rest == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for k in (0..=rest).rev() {
        cur[pos] = k;
        compositions(rest - k, pos + 1, cur, out);
    }
}

/// `Σ c_e x^e` over exponent vectors of total degree `< order`, stored densely
/// (the triangular array of all such monomials, graded by degree).
#[derive(Clone, Debug)]
pub struct MvSeries {
    ring: CoeffRing,
    mons: Arc<Monomials>,
    coeffs: Vec<Scalar>,
}

impl PartialEq for MvSeries {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.mons.nvars == other.mons.nvars
            && self.mons.order == other.mons.order
            && self.coeffs == other.coeffs
    }
}

impl MvSeries {
    pub fn zero(ring: &CoeffRing, nvars: usize, order: usize) -> Self {
        let mons = Arc::new(Monomials::new(nvars, order));
        let coeffs = vec![ring.zero(); mons.list.len()];
        MvSeries { ring: ring.clone(), mons, coeffs }
    }

    fn zero_like(&self) -> Self {
        MvSeries { ring: self.ring.clone(), mons: self.mons.clone(), coeffs: vec![self.ring.zero(); self.coeffs.len()] }
    }

    pub fn constant(ring: &CoeffRing, nvars: usize, order: usize, c: Scalar) -> Self {
        let mut s = Self::zero(ring, nvars, order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// The coordinate `x_i`.
    pub fn var(ring: &CoeffRing, nvars: usize, order: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut s = Self::zero(ring, nvars, order);
        s.set(&e, ring.one());
        s
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.mons.nvars
    }

    pub fn order(&self) -> usize {
        self.mons.order
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        match self.mons.index.get(exps) {
            Some(&i) => self.coeffs[i].clone(),
            None => self.ring.zero(),
        }
    }

    /// Sets a coefficient; ignored beyond the truncation degree.
    pub fn set(&mut self, exps: &[u32], c: Scalar) {
        if let Some(&i) = self.mons.index.get(exps) {
            self.coeffs[i] = c;
        }
    }

    /// Nonzero terms in graded order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.mons.list.iter().zip(&self.coeffs).filter(|(_, c)| !self.ring.is_zero(c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (o, c) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *o = self.ring.add(o, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for o in out.coeffs.iter_mut() {
            *o = self.ring.neg(o);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = self.clone();
        for o in out.coeffs.iter_mut() {
            *o = self.ring.mul(o, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.zero_like();
        let order = self.mons.order as u32;
        let mut e = vec![0u32; self.mons.nvars];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            let ea = &self.mons.list[i];
            let da: u32 = ea.iter().sum();
            for (j, b) in other.coeffs.iter().enumerate() {
                let eb = &other.mons.list[j];
                let db: u32 = eb.iter().sum();
                if da + db >= order {
                    // Monomials are graded, so every later one is too large.
                    break;
                }
                if self.ring.is_zero(b) {
                    continue;
                }
                for k in 0..e.len() {
                    e[k] = ea[k] + eb[k];
                }
                let idx = self.mons.index[&e];
                out.coeffs[idx] = self.ring.add(&out.coeffs[idx], &self.ring.mul(a, b));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(&self.ring, self.nvars(), self.order(), self.ring.one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a series with invertible constant term.
    pub fn inverse(&self) -> Result<Self, CoeffError> {
        let c0 = self.coeffs.first().cloned().unwrap_or_else(|| self.ring.zero());
        let c0inv = self.ring.inv(&c0)?;
        // u^{-1} = c0^{-1} Σ_k (1 - c0^{-1} u)^k, the tail being of positive order.
        let one = Self::constant(&self.ring, self.nvars(), self.order(), self.ring.one());
        let t = one.sub(&self.scale(&c0inv));
        let mut acc = one.clone();
        let mut term = one;
        for _ in 1..self.order() {
            term = term.mul(&t);
            acc = acc.add(&term);
        }
        Ok(acc.scale(&c0inv))
    }

    /// Substitutes `args[i]` for `x_i`; every argument must have zero constant term.
    pub fn substitute(&self, args: &[MvSeries]) -> Result<MvSeries, CoeffError> {
        assert_eq!(args.len(), self.nvars(), "one argument per variable");
        let target = args.first().map(|a| a.zero_like()).unwrap_or_else(|| self.clone());
        for a in args {
            if !self.ring.is_zero(&a.coeff(&vec![0; a.nvars()])) {
                return Err(CoeffError::Mismatch("substituted series must vanish at the origin".into()));
            }
        }
        // powers[i][k] = args[i]^k
        let maxdeg = self.order();
        let mut powers: Vec<Vec<MvSeries>> = Vec::new();
        for a in args {
            let mut ps = vec![Self::constant(&a.ring, a.nvars(), a.order(), a.ring.one())];
            for k in 1..maxdeg {
                let next = ps[k - 1].mul(a);
                ps.push(next);
            }
            powers.push(ps);
        }
        let mut out = target;
        for (e, c) in self.terms() {
            let mut m = powers[0][e[0] as usize].scale(c);
            for i in 1..e.len() {
                if e[i] > 0 {
                    m = m.mul(&powers[i][e[i] as usize]);
                }
            }
            out = out.add(&m);
        }
        Ok(out)
    }

    pub fn map_ring(&self, target: &CoeffRing) -> Result<Self, CoeffError> {
        let coeffs = self.coeffs.iter().map(|c| target.reduce(c)).collect::<Result<_, _>>()?;
        Ok(MvSeries { ring: target.clone(), mons: self.mons.clone(), coeffs })
    }

    /// A one-variable series as a [`TruncSeries`].
    pub fn to_univariate(&self) -> TruncSeries {
        assert_eq!(self.nvars(), 1);
        TruncSeries::from_coeffs(&self.ring, self.order(), self.coeffs.clone())
    }

    pub fn from_univariate(s: &TruncSeries) -> Self {
        let mut out = Self::zero(s.ring(), 1, s.order());
        out.coeffs = s.coeffs().to_vec();
        out
    }

    /// Re-embeds into a series space with more variables (variable `i` ↦ `targets[i]`).
    pub fn embed(&self, nvars: usize, targets: &[usize]) -> Self {
        let mut out = Self::zero(&self.ring, nvars, self.order());
        for (e, c) in self.terms() {
            let mut f = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                f[targets[i]] += k;
            }
            let idx = out.mons.index[&f];
            out.coeffs[idx] = self.ring.add(&out.coeffs[idx], c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_count() {
        let s = MvSeries::zero(&CoeffRing::integers(), 3, 10);
        assert_eq!(s.coeffs.len(), 220);
    }

    #[test]
    fn geometric_inverse() {
        let z = CoeffRing::integers();
        let x = MvSeries::var(&z, 2, 5, 0);
        let y = MvSeries::var(&z, 2, 5, 1);
        let one = MvSeries::constant(&z, 2, 5, z.one());
        let u = one.sub(&x.mul(&y));
        let inv = u.inverse().unwrap();
        assert_eq!(inv.coeff(&[2, 2]), z.one());
        assert_eq!(inv.coeff(&[1, 2]), z.zero());
        assert_eq!(u.mul(&inv), one);
    }

    #[test]
    fn substitution() {
        let z = CoeffRing::integers();
        let x = MvSeries::var(&z, 2, 6, 0);
        let y = MvSeries::var(&z, 2, 6, 1);
        let f = x.add(&y).add(&x.mul(&y));
        // f(x, x) = 2x + x²
        let t = MvSeries::var(&z, 1, 6, 0);
        let g = f.substitute(&[t.clone(), t.clone()]).unwrap();
        assert_eq!(g.to_univariate(), TruncSeries::from_i64s(&z, 6, &[0, 2, 1]));
    }
}
