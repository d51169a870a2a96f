//! Hochschild cochains and the brace operations `x{y_1, .., y_k}`.

use std::collections::{BTreeMap, HashMap};

use super::algebra::AInftyAlgebra;
use super::sign::{parity_sign, reduced};
use super::vector::Vector;
use super::AInftyError;
use crate::coeff::{CoeffRing, Scalar};

/// A cochain `c = (c^0, c^1, ..)`: each component maps basis tuples to vectors.
///
/// `bound = Some(L)` means only components of length `≤ L` are known; `None`
/// means every component not stored is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    ring: CoeffRing,
    degree: i64,
    entries: BTreeMap<Vec<usize>, Vector>,
    bound: Option<usize>,
}

impl Cochain {
    pub fn zero(ring: &CoeffRing, degree: i64) -> Self {
        Cochain { ring: ring.clone(), degree, entries: BTreeMap::new(), bound: None }
    }

    /// `μ_A` as a cochain of degree 2 with coefficients in `ring`.
    pub fn structure(alg: &AInftyAlgebra, ring: &CoeffRing) -> Self {
        let mut c = Cochain::zero(ring, 2);
        for (ins, outs) in alg.mu_table() {
            for &(o, k) in outs {
                c.add_term(ins, o, &ring.from_i64(k));
            }
        }
        c
    }

    /// A length-0 cochain holding a single element of the algebra.
    pub fn constant(ring: &CoeffRing, degree: i64, v: &Vector) -> Self {
        let mut c = Cochain::zero(ring, degree);
        if !v.is_zero() {
            c.entries.insert(Vec::new(), v.clone());
        }
        c
    }

    /// A length-1 cochain from `(input, output, coefficient)` triples.
    pub fn linear(ring: &CoeffRing, degree: i64, map: &[(usize, usize, Scalar)]) -> Self {
        let mut c = Cochain::zero(ring, degree);
        for (i, o, k) in map {
            c.add_term(&[*i], *o, k);
        }
        c
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn entries(&self) -> &BTreeMap<Vec<usize>, Vector> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, inputs: &[usize]) -> Vector {
        self.entries.get(inputs).cloned().unwrap_or_default()
    }

    /// The component `c^j` as a sub-map.
    pub fn component(&self, j: usize) -> impl Iterator<Item = (&Vec<usize>, &Vector)> {
        self.entries.iter().filter(move |(k, _)| k.len() == j)
    }

    pub fn add_term(&mut self, inputs: &[usize], out: usize, c: &Scalar) {
        if self.ring.is_zero(c) {
            return;
        }
        let v = self.entries.entry(inputs.to_vec()).or_default();
        v.add_term(&self.ring, out, c);
        if v.is_zero() {
            self.entries.remove(inputs);
        }
    }

    pub fn add_vector(&mut self, inputs: &[usize], v: &Vector) {
        for (o, c) in v.iter() {
            let c = c.clone();
            self.add_term(inputs, o, &c);
        }
    }

    pub fn with_bound(mut self, bound: Option<usize>) -> Self {
        self.bound = bound;
        if let Some(l) = bound {
            self.entries.retain(|k, _| k.len() <= l);
        }
        self
    }

    /// Restricts to components of length `≤ l`, tightening the bound.
    pub fn truncate(&self, l: usize) -> Self {
        let b = Some(self.bound.map_or(l, |b| b.min(l)));
        self.clone().with_bound(b)
    }

    pub fn min_arity(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.len()).min()
    }

    pub fn max_arity(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.len()).max()
    }

    /// Smallest arity any component could have, including unknown ones.
    fn effective_min_arity(&self) -> usize {
        let known = self.min_arity().unwrap_or(usize::MAX);
        match self.bound {
            Some(l) => known.min(l + 1),
            None => known,
        }
    }

    /// Minimal q-adic valuation over all coefficients.
    pub fn valuation(&self) -> Option<usize> {
        self.entries.values().filter_map(|v| v.valuation(&self.ring)).min()
    }

    fn combine_bound(a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    fn check_compatible(&self, other: &Cochain) -> Result<(), AInftyError> {
        if self.ring != other.ring {
            return Err(AInftyError::RingMismatch(format!("{} vs {}", self.ring, other.ring)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain, AInftyError> {
        self.check_compatible(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(AInftyError::Degree(format!("cannot add degrees {} and {}", self.degree, other.degree)));
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = Cochain { ring: self.ring.clone(), degree, entries: self.entries.clone(), bound: None };
        for (k, v) in &other.entries {
            out.add_vector(k, v);
        }
        Ok(out.with_bound(Self::combine_bound(self.bound, other.bound)))
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&self.ring.from_i64(-1))
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain, AInftyError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Cochain {
        let mut out = Cochain { entries: BTreeMap::new(), ..self.clone() };
        for (k, v) in &self.entries {
            out.add_vector(k, &v.scale(&self.ring, s));
        }
        out
    }

    /// Agreement on all components of length `≤ l` (both must be known there).
    pub fn agrees_up_to(&self, other: &Cochain, l: usize) -> Result<bool, AInftyError> {
        for c in [self, other] {
            if let Some(b) = c.bound {
                if b < l {
                    return Err(AInftyError::LengthBound(format!("cochain known only up to length {b}, need {l}")));
                }
            }
        }
        let diff = self.truncate(l).sub(&other.truncate(l))?;
        Ok(diff.is_zero())
    }

    /// Checks `|c^j(a)| = degree + Σ|a| - j` on every stored entry.
    pub fn check_degrees(&self, alg: &AInftyAlgebra) -> Result<(), AInftyError> {
        for (k, v) in &self.entries {
            let expect = self.degree + k.iter().map(|&i| alg.degree(i)).sum::<i64>() - k.len() as i64;
            if let Some((o, _)) = v.iter().find(|(o, _)| alg.degree(*o) != expect) {
                return Err(AInftyError::Degree(format!(
                    "entry {:?} -> {} has degree {}, expected {expect}",
                    k,
                    alg.basis_name(o),
                    alg.degree(o)
                )));
            }
        }
        Ok(())
    }

    /// Changes the coefficient ring by `f` applied to every coefficient.
    pub fn map_coefficients(
        &self,
        target: &CoeffRing,
        f: impl Fn(&Scalar) -> Result<Scalar, AInftyError>,
    ) -> Result<Cochain, AInftyError> {
        let mut out = Cochain::zero(target, self.degree).with_bound(self.bound);
        for (k, v) in &self.entries {
            for (o, c) in v.iter() {
                out.add_term(k, o, &f(c)?);
            }
        }
        Ok(out)
    }

    /// `c·q^k` in an adic ring over this cochain's ring.
    pub fn embed_scaled(&self, target: &CoeffRing, k: usize) -> Result<Cochain, AInftyError> {
        let base = target
            .adic_spec()
            .map(|s| &s.base)
            .ok_or_else(|| AInftyError::RingMismatch(format!("{target} is not an adic truncation")))?;
        if base != &self.ring {
            return Err(AInftyError::RingMismatch(format!("{} is not the base of {target}", self.ring)));
        }
        self.map_coefficients(target, |c| Ok(target.monomial(c, k)))
    }

    /// The coefficient of `q^k`, as a cochain over the base ring.
    pub fn q_coefficient(&self, k: usize) -> Result<Cochain, AInftyError> {
        let base = self
            .ring
            .adic_spec()
            .map(|s| s.base.clone())
            .ok_or_else(|| AInftyError::RingMismatch(format!("{} is not an adic truncation", self.ring)))?;
        self.map_coefficients(&base, |c| Ok(self.ring.coefficient(c, k)))
    }

    pub fn in_ideal(&self) -> bool {
        self.entries.values().all(|v| v.iter().all(|(_, c)| self.ring.in_ideal(c)))
    }

    /// Evaluates on a basis tuple.
    pub fn apply(&self, inputs: &[usize]) -> Vector {
        self.get(inputs)
    }

    pub fn format(&self, alg: &AInftyAlgebra) -> String {
        let mut lines = Vec::new();
        for (k, v) in &self.entries {
            let args: Vec<&str> = k.iter().map(|&i| alg.basis_name(i)).collect();
            lines.push(format!("c^{}({}) = {}", k.len(), args.join(","), v.format(&self.ring, alg)));
        }
        if let Some(b) = self.bound {
            lines.push(format!("(known up to length {b})"));
        }
        lines.join("\n")
    }
}

/// Inner cochain indexed by output basis element: `b -> [(inputs, coeff of b)]`.
struct OutputIndex<'a> {
    by_output: HashMap<usize, Vec<(&'a [usize], &'a Scalar)>>,
    reduced_degree: i64,
}

impl<'a> OutputIndex<'a> {
    fn new(c: &'a Cochain) -> Self {
        let mut by_output: HashMap<usize, Vec<(&'a [usize], &'a Scalar)>> = HashMap::new();
        for (k, v) in &c.entries {
            for (o, s) in v.iter() {
                by_output.entry(o).or_default().push((k.as_slice(), s));
            }
        }
        OutputIndex { by_output, reduced_degree: reduced(c.degree) }
    }
}

struct BraceCtx<'a> {
    ring: &'a CoeffRing,
    degrees: Vec<i64>,
    inner: Vec<OutputIndex<'a>>,
    cap: Option<usize>,
    out: BTreeMap<Vec<usize>, Vector>,
}

/// The brace operation
/// `x{y_1..y_k}(a..) = Σ ± x(a.., y_1(..), .., y_k(..), ..)`,
/// with sign `Σ_r ‖y_r‖·✠` over the inputs preceding `y_r`'s block.
///
/// Output components longer than `cap` are dropped. The result's bound is the
/// largest length at which every contributing term is known.
pub fn brace(alg: &AInftyAlgebra, x: &Cochain, ys: &[&Cochain], cap: Option<usize>) -> Result<Cochain, AInftyError> {
    for y in ys {
        x.check_compatible(y)?;
    }
    let degree = x.degree + ys.iter().map(|y| y.degree - 1).sum::<i64>();
    let k = ys.len();

    let mut bound = cap;
    if let Some(lx) = x.bound {
        let reach: usize = ys.iter().map(|y| y.effective_min_arity()).fold(0usize, |a, b| a.saturating_add(b));
        let b = (lx as i64) - (k as i64) + reach.min(i64::MAX as usize / 2) as i64;
        if b < 0 {
            return Err(AInftyError::LengthBound(format!(
                "outer cochain known up to length {lx} cannot feed {k} insertions"
            )));
        }
        bound = Cochain::combine_bound(bound, Some(b as usize));
    }
    for y in ys {
        bound = Cochain::combine_bound(bound, y.bound);
    }

    let mut ctx = BraceCtx {
        ring: &x.ring,
        degrees: alg.degrees(),
        inner: ys.iter().map(|y| OutputIndex::new(y)).collect(),
        cap: bound,
        out: BTreeMap::new(),
    };
    if ys.iter().all(|y| !y.is_zero()) {
        for (xin, xv) in &x.entries {
            if xin.len() < k {
                continue;
            }
            let mut prefix = Vec::new();
            brace_rec(&mut ctx, xin, xv, 0, 0, &mut prefix, 0, 0, x.ring.one());
        }
    }
    let mut out = Cochain { ring: x.ring.clone(), degree, entries: ctx.out, bound: None };
    out.entries.retain(|_, v| !v.is_zero());
    Ok(out.with_bound(bound))
}

#[allow(clippy::too_many_arguments)]
fn brace_rec(
    ctx: &mut BraceCtx<'_>,
    xin: &[usize],
    xv: &Vector,
    r: usize,
    pos: usize,
    prefix: &mut Vec<usize>,
    maltese: i64,
    sign_exp: i64,
    coeff: Scalar,
) {
    let k = ctx.inner.len();
    let n = xin.len();
    if r == k {
        let len = prefix.len() + (n - pos);
        if ctx.cap.map_or(false, |c| len > c) {
            return;
        }
        let mut key = prefix.clone();
        key.extend_from_slice(&xin[pos..]);
        let s = if parity_sign(sign_exp) < 0 { ctx.ring.neg(&coeff) } else { coeff };
        let entry = ctx.out.entry(key).or_default();
        for (o, c) in xv.iter() {
            entry.add_term(ctx.ring, o, &ctx.ring.mul(c, &s));
        }
        return;
    }
    let slots_left = k - r;
    for s in pos..=n - slots_left {
        // plain inputs xin[pos..s], then y_r fills slot s
        let base_len = prefix.len();
        let mut mal = maltese;
        for &a in &xin[pos..s] {
            prefix.push(a);
            mal += ctx.degrees[a] - 1;
        }
        if ctx.cap.map_or(true, |c| prefix.len() <= c) {
            let inner = &ctx.inner[r];
            let rd = inner.reduced_degree;
            let matches: Vec<(&[usize], &Scalar)> = inner.by_output.get(&xin[s]).cloned().unwrap_or_default();
            for (t, c) in matches {
                let next = ctx.ring.mul(&coeff, c);
                if ctx.ring.is_zero(&next) {
                    continue;
                }
                let l0 = prefix.len();
                if ctx.cap.map_or(false, |cap| l0 + t.len() > cap) {
                    continue;
                }
                let mut mal2 = mal;
                prefix.extend_from_slice(t);
                for &a in t {
                    mal2 += ctx.degrees[a] - 1;
                }
                brace_rec(ctx, xin, xv, r + 1, s + 1, prefix, mal2, sign_exp + rd * mal, next);
                prefix.truncate(l0);
            }
        }
        prefix.truncate(base_len);
    }
}
