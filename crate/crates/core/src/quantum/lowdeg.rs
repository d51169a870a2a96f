//! The quantum `p`-th power in low degrees, assembled from a finite table
//! of genus-zero descendant invariants with one or two marked points.
//!
//! For `y` in the basis, `∫ y QSt(x)` is
//!
//! ```text
//!   ∫ y St(x)
//! - t^{-1} Σ_A ⟨y, (1 + t^{-1}ψ)^{-1} St(x)⟩_{2,A}
//! + t^{-2} Σ_A ⟨(1 - t^{-1}ψ)^{-1} y St(x)⟩_{1,A}
//! - t^{-3} Σ_{A0,A1,k} ⟨y, (1 + t^{-1}ψ)^{-1} St(x) e_k⟩_{2,A0} ⟨(1 - t^{-1}ψ)^{-1} e_k^∨⟩_{1,A1}
//! ```
//!
//! summed over classes with `0 < Ω·A < p` (resp. `Ω·A0 + Ω·A1 < p`). In
//! the indecomposable mode the last term is dropped. Powers of `t` are
//! stored doubled so that `p = 2` stays integral.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use num_rational::BigRational;
use serde::Deserialize;

use super::classes::{AlgebraSpec, ClassAlgebra};
use super::fano::reduce_mod_p;
use super::QuantumError;
use crate::coeff::{factorial, is_prime, mod_inverse};

/// Which terms of the low-degree formula are summed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LowDegreeMode {
    /// All four terms.
    Full,
    /// Only the one- and two-point terms, class by class; valid when every
    /// listed class is holomorphically indecomposable.
    Indecomposable,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Insertion {
    #[serde(default)]
    pub psi: u32,
    pub class: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GwEntry {
    pub class: String,
    #[serde(rename = "omega_dot_A")]
    pub omega: u64,
    #[serde(rename = "c1_A")]
    pub c1: i64,
    pub insertions: Vec<Insertion>,
    pub value: String,
}

/// A summand `coefficient · t^{t2/2} · class` of the classical power.
#[derive(Clone, Debug, Deserialize)]
pub struct SteenrodTerm {
    pub coefficient: String,
    pub t2: i64,
    pub class: String,
}

/// One expected evaluation of the operation.
#[derive(Clone, Debug, Deserialize)]
pub struct FixtureCheck {
    pub input: String,
    pub mode: LowDegreeMode,
    pub steenrod: Vec<SteenrodTerm>,
    /// `[coefficient, class]` pairs.
    pub expected: Vec<(String, String)>,
}

#[derive(Clone, Debug, Deserialize)]
struct RawTable {
    name: String,
    p: u64,
    algebra: AlgebraSpec,
    entries: Vec<GwEntry>,
    #[serde(default)]
    checks: Vec<FixtureCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveClass {
    pub label: String,
    pub omega: u64,
    pub c1: i64,
}

type Key = (usize, Vec<(u32, usize)>);

/// Validated table of invariants, with values reduced mod `p`.
#[derive(Clone, Debug)]
pub struct GwTable {
    pub name: String,
    p: u64,
    algebra: ClassAlgebra,
    classes: Vec<CurveClass>,
    values: HashMap<Key, u64>,
    checks: Vec<FixtureCheck>,
}

/// Class vector over `F_p` in the monomial basis.
pub type ClassVec = Vec<u64>;

/// Laurent polynomial in `t^{1/2}` over `F_p`, keyed by doubled exponent.
pub type HalfLaurent = BTreeMap<i64, u64>;

impl GwTable {
    pub fn from_json(text: &str) -> Result<Self, QuantumError> {
        let raw: RawTable = serde_json::from_str(text).map_err(|e| QuantumError::Table(e.to_string()))?;
        let p = raw.p;
        if !is_prime(p) {
            return Err(QuantumError::NotPrime(p));
        }
        let algebra = ClassAlgebra::new(&raw.algebra)?;
        if algebra.top_degree() % 2 != 0 {
            return Err(QuantumError::Table("odd-dimensional manifold".into()));
        }
        let mut classes: Vec<CurveClass> = Vec::new();
        let mut values = HashMap::new();
        for e in &raw.entries {
            let m = e.insertions.len();
            if m == 0 {
                return Err(QuantumError::Table(format!("entry in {} has no insertions", e.class)));
            }
            if m <= 2 && !(0 < e.omega && e.omega < p) {
                return Err(QuantumError::Table(format!(
                    "{}-point entry in {} lies outside 0 < Ω·A < {p}",
                    m, e.class
                )));
            }
            let idx = match classes.iter().position(|c| c.label == e.class) {
                Some(i) => {
                    if (classes[i].omega, classes[i].c1) != (e.omega, e.c1) {
                        return Err(QuantumError::Table(format!("inconsistent data for class {}", e.class)));
                    }
                    i
                }
                None => {
                    classes.push(CurveClass { label: e.class.clone(), omega: e.omega, c1: e.c1 });
                    classes.len() - 1
                }
            };
            let value: BigRational =
                e.value.parse().map_err(|_| QuantumError::Table(format!("bad value {:?}", e.value)))?;
            let mut v = reduce_mod_p(&value, p)?;
            let mut ins = Vec::new();
            for i in &e.insertions {
                match algebra.parse(&i.class)? {
                    Some((s, b)) => {
                        if s < 0 {
                            v = (p - v) % p;
                        }
                        ins.push((i.psi, b));
                    }
                    None => return Err(QuantumError::Table(format!("insertion {:?} is zero", i.class))),
                }
            }
            if values.insert((idx, ins), v).is_some() {
                return Err(QuantumError::Table(format!("duplicate entry in class {}", e.class)));
            }
        }
        Ok(GwTable { name: raw.name, p, algebra, classes, values, checks: raw.checks })
    }

    pub fn load(path: &Path) -> Result<Self, QuantumError> {
        let text = std::fs::read_to_string(path).map_err(|e| QuantumError::Table(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn algebra(&self) -> &ClassAlgebra {
        &self.algebra
    }

    pub fn classes(&self) -> &[CurveClass] {
        &self.classes
    }

    pub fn checks(&self) -> &[FixtureCheck] {
        &self.checks
    }

    fn complex_dim(&self) -> i64 {
        self.algebra.top_degree() as i64 / 2
    }

    /// `⟨ψ^{r_1} b_1, ..., ψ^{r_m} b_m⟩_{m,A}`; zero when the degree
    /// constraint fails, an error when it holds and the entry is absent.
    fn invariant(&self, class: usize, ins: &[(u32, usize)]) -> Result<u64, QuantumError> {
        let a = &self.classes[class];
        let m = ins.len() as i64;
        let total: i64 = ins.iter().map(|&(r, b)| self.algebra.degree(b) as i64 + 2 * r as i64).sum();
        if total != 2 * (self.complex_dim() + a.c1 + m - 3) {
            return Ok(0);
        }
        if let Some(v) = self.values.get(&(class, ins.to_vec())) {
            return Ok(*v);
        }
        if ins.len() == 2 {
            let swapped = vec![ins[1], ins[0]];
            if let Some(v) = self.values.get(&(class, swapped)) {
                let odd = self.algebra.degree(ins[0].1) % 2 == 1 && self.algebra.degree(ins[1].1) % 2 == 1;
                return Ok(if odd { (self.p - v) % self.p } else { *v });
            }
        }
        let desc: Vec<String> = ins
            .iter()
            .map(|&(r, b)| if r == 0 { self.algebra.name(b) } else { format!("ψ^{r} {}", self.algebra.name(b)) })
            .collect();
        Err(QuantumError::MissingEntry(format!("⟨{}⟩ in class {}", desc.join(", "), a.label)))
    }

    /// `(coefficient mod p, basis index)` for `b_i · b_j`.
    fn product(&self, i: usize, j: usize) -> Option<(u64, usize)> {
        self.algebra.mul(i, j).map(|(s, k)| (if s < 0 { self.p - 1 } else { 1 }, k))
    }

    /// Parses a Steenrod datum into `(coefficient, doubled exponent, basis index)`.
    pub fn steenrod_terms(&self, terms: &[SteenrodTerm]) -> Result<Vec<(u64, i64, usize)>, QuantumError> {
        let p = self.p;
        let mut out = Vec::new();
        for t in terms {
            let c: BigRational =
                t.coefficient.parse().map_err(|_| QuantumError::Table(format!("bad coefficient {:?}", t.coefficient)))?;
            let c = reduce_mod_p(&c, p)?;
            if let Some((s, b)) = self.algebra.parse(&t.class)? {
                out.push((if s < 0 { (p - c) % p } else { c }, t.t2, b));
            }
        }
        Ok(out)
    }

    /// Parses a linear combination given as `[coefficient, class]` pairs.
    pub fn class_vector(&self, terms: &[(String, String)]) -> Result<ClassVec, QuantumError> {
        let p = self.p;
        let mut v = vec![0; self.algebra.dim()];
        for (c, class) in terms {
            let c: BigRational = c.parse().map_err(|_| QuantumError::Table(format!("bad coefficient {c:?}")))?;
            let c = reduce_mod_p(&c, p)?;
            if let Some((s, b)) = self.algebra.parse(class)? {
                let c = if s < 0 { (p - c) % p } else { c };
                v[b] = (v[b] + c) % p;
            }
        }
        Ok(v)
    }

    /// `∫ b_y QSt(x)` truncated to classes below `p`, with `St(x)` given as
    /// `(coefficient, doubled t-exponent, basis index)` terms.
    ///
    /// With `only = Some(e)` just the `t^{e/2}` coefficient is assembled and
    /// only the invariants feeding it are required. Otherwise all terms are
    /// summed and negative powers of `t` must cancel.
    pub fn qst_low_degree(
        &self,
        st: &[(u64, i64, usize)],
        y: usize,
        mode: LowDegreeMode,
        only: Option<i64>,
    ) -> Result<HalfLaurent, QuantumError> {
        let p = self.p;
        let mut out = HalfLaurent::new();
        let mut add = |e: i64, v: u64| {
            if v % p != 0 {
                let slot = out.entry(e).or_insert(0);
                *slot = (*slot + v) % p;
            }
        };
        let wanted = |e: i64| only.map_or(true, |w| w == e);
        let neg = |v: u64| (p - v % p) % p;
        let window: Vec<usize> = (0..self.classes.len()).filter(|&a| self.classes[a].omega < p).collect();
        let dual = if mode == LowDegreeMode::Full { self.algebra.dual_basis(p)? } else { Vec::new() };
        let n = self.complex_dim();
        let deg = |b: usize| self.algebra.degree(b) as i64;
        for &(c, s2, z) in st {
            if wanted(s2) {
                add(s2, c * self.algebra.pairing(y, z).rem_euclid(p as i64) as u64);
            }
            for &a in &window {
                let c1 = self.classes[a].c1;
                // Two-point term: |y| + |z| + 2r = 2(n + c1 - 1).
                let twice_r = 2 * (n + c1 - 1) - deg(y) - deg(z);
                if twice_r >= 0 && twice_r % 2 == 0 {
                    let r = twice_r / 2;
                    let e = s2 - 2 - 2 * r;
                    if wanted(e) {
                        let v = self.invariant(a, &[(0, y), (r as u32, z)])?;
                        let v = c * v % p;
                        add(e, if r % 2 == 0 { neg(v) } else { v });
                    }
                }
                // One-point term on y · z.
                if let Some((s, w)) = self.product(y, z) {
                    let twice_r = 2 * (n + c1 - 2) - deg(w);
                    if twice_r >= 0 && twice_r % 2 == 0 {
                        let r = twice_r / 2;
                        let e = s2 - 4 - 2 * r;
                        if wanted(e) {
                            add(e, c * s % p * self.invariant(a, &[(r as u32, w)])? % p);
                        }
                    }
                }
            }
            if mode == LowDegreeMode::Indecomposable {
                continue;
            }
            for &a0 in &window {
                for &a1 in &window {
                    if self.classes[a0].omega + self.classes[a1].omega >= p {
                        continue;
                    }
                    let (c0, c1) = (self.classes[a0].c1, self.classes[a1].c1);
                    for (k, ek_dual) in dual.iter().enumerate() {
                        let Some((s, w)) = self.product(z, k) else { continue };
                        let twice_r = 2 * (n + c0 - 1) - deg(y) - deg(w);
                        if twice_r < 0 || twice_r % 2 != 0 {
                            continue;
                        }
                        let r = twice_r / 2;
                        for (j, &dj) in ek_dual.iter().enumerate() {
                            if dj == 0 {
                                continue;
                            }
                            let twice_s = 2 * (n + c1 - 2) - deg(j);
                            if twice_s < 0 || twice_s % 2 != 0 {
                                continue;
                            }
                            let sdesc = twice_s / 2;
                            let e = s2 - 6 - 2 * r - 2 * sdesc;
                            if !wanted(e) {
                                continue;
                            }
                            let left = self.invariant(a0, &[(0, y), (r as u32, w)])?;
                            let right = self.invariant(a1, &[(sdesc as u32, j)])?;
                            let v = c * s % p * left % p * right % p * dj % p;
                            add(e, if r % 2 == 0 { neg(v) } else { v });
                        }
                    }
                }
            }
        }
        if only.is_none() {
            if let Some((e, _)) = out.iter().find(|(e, _)| **e < 0) {
                return Err(QuantumError::NegativePowers(format!(
                    "t^{} survives in the pairing with {}",
                    half(*e),
                    self.algebra.name(y)
                )));
            }
        }
        Ok(out)
    }

    /// Degrees of `y` for which `∫ y QSt(x)` can have a `t^{(p-1)/2}` term.
    pub fn relevant_degrees(&self, x_degree: u32) -> Vec<i64> {
        let p = self.p as i64;
        let base = 2 * self.complex_dim() - p * x_degree as i64 + (p - 1);
        let mut out = vec![base];
        out.extend(self.classes.iter().filter(|c| (c.omega as i64) < p).map(|c| base + 2 * c.c1));
        out.sort();
        out.dedup();
        out.retain(|&d| d >= 0 && d <= self.algebra.top_degree() as i64);
        out
    }

    /// The quantum operation `QΞ(x)`: the `t^{(p-1)/2}` part of `QSt(x)`,
    /// divided by `((p-1)/2)!` for odd `p`.
    pub fn qxi(&self, st: &[(u64, i64, usize)], mode: LowDegreeMode) -> Result<ClassVec, QuantumError> {
        let p = self.p;
        let dual = self.algebra.dual_basis(p)?;
        let target = p as i64 - 1;
        let mut out = vec![0; self.algebra.dim()];
        for y in 0..self.algebra.dim() {
            let v = self.qst_low_degree(st, y, mode, Some(target))?.get(&target).copied().unwrap_or(0);
            for (j, &d) in dual[y].iter().enumerate() {
                out[j] = (out[j] + v * d) % p;
            }
        }
        if p > 2 {
            let f = u64::try_from(&factorial((p - 1) / 2) % p).expect("residue fits");
            let inv = mod_inverse(f, p).expect("factorial below p is a unit");
            out.iter_mut().for_each(|c| *c = *c * inv % p);
        }
        Ok(out)
    }

    pub fn format_class(&self, v: &ClassVec) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { self.algebra.name(i) } else { format!("{c}·{}", self.algebra.name(i)) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn half(e: i64) -> String {
    if e % 2 == 0 {
        (e / 2).to_string()
    } else {
        format!("{e}/2")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOY: &str = r#"{
        "name": "plane", "p": 5,
        "algebra": {"even": [{"name": "h", "top": 2}]},
        "entries": [
            {"class": "line", "omega_dot_A": 1, "c1_A": 3, "insertions": [{"psi": 1, "class": "h^2"}], "value": "1"}
        ]
    }"#;

    #[test]
    fn loads_and_looks_up() {
        let t = GwTable::from_json(TOY).unwrap();
        assert_eq!(t.classes().len(), 1);
        let (_, pt) = t.algebra().parse("h^2").unwrap().unwrap();
        assert_eq!(t.invariant(0, &[(1, pt)]).unwrap(), 1);
        assert_eq!(t.invariant(0, &[(0, pt)]).unwrap(), 0);
        let (_, h) = t.algebra().parse("h").unwrap().unwrap();
        assert!(matches!(t.invariant(0, &[(2, h)]), Err(QuantumError::MissingEntry(_))));
    }

    #[test]
    fn rejects_entries_outside_window() {
        let bad = TOY.replace("\"omega_dot_A\": 1", "\"omega_dot_A\": 5");
        assert!(matches!(GwTable::from_json(&bad), Err(QuantumError::Table(_))));
        let dup = TOY.replace("\"value\": \"1\"}", "\"value\": \"1\"}, {\"class\": \"line\", \"omega_dot_A\": 1, \"c1_A\": 3, \"insertions\": [{\"psi\": 1, \"class\": \"h^2\"}], \"value\": \"2\"}");
        assert!(GwTable::from_json(&dup).is_err());
        let denom = TOY.replace("\"value\": \"1\"", "\"value\": \"1/5\"");
        assert!(matches!(GwTable::from_json(&denom), Err(QuantumError::DenominatorDivisibleByP { .. })));
    }

    #[test]
    fn uncancelled_negative_power_is_an_error() {
        // ⟨h, ψ² h⟩ = 0 leaves the one-point term ⟨ψ pt⟩ t^{-1} uncancelled.
        let with_zero = TOY.replace(
            "\"value\": \"1\"}",
            "\"value\": \"1\"}, {\"class\": \"line\", \"omega_dot_A\": 1, \"c1_A\": 3, \"insertions\": [{\"class\": \"h\"}, {\"psi\": 2, \"class\": \"h\"}], \"value\": \"0\"}",
        );
        let t = GwTable::from_json(&with_zero).unwrap();
        let (_, h) = t.algebra().parse("h").unwrap().unwrap();
        let st = [(1u64, 4i64, h)];
        let r = t.qst_low_degree(&st, h, LowDegreeMode::Indecomposable, None);
        assert!(matches!(r, Err(QuantumError::NegativePowers(_))), "{r:?}");
        let only = t.qst_low_degree(&st, h, LowDegreeMode::Indecomposable, Some(4)).unwrap();
        assert_eq!(only.get(&4), Some(&1));
    }
}
