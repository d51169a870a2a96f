//! Finite-basis A∞-algebras with integral structure constants.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::sign::{maltese_prefix, parity_sign};
use super::vector::Vector;
use super::AInftyError;
use crate::coeff::{CoeffRing, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElement {
    pub name: String,
    pub degree: i64,
}

/// Graded free module with operations `μ^d`, stored as sparse integer tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInftyAlgebra {
    name: String,
    basis: Vec<BasisElement>,
    mu: BTreeMap<Vec<usize>, Vec<(usize, i64)>>,
    unit: Option<Vec<(usize, i64)>>,
    ground: CoeffRing,
}

/// Outcome of checking the A∞-relations on all basis tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub max_length: usize,
    pub tuples_checked: usize,
    /// First tuple whose relation fails, with the nonzero left-hand side.
    pub violation: Option<(Vec<String>, String)>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl AInftyAlgebra {
    pub fn new(name: &str, basis: &[(&str, i64)], ground: CoeffRing) -> Self {
        AInftyAlgebra {
            name: name.to_string(),
            basis: basis.iter().map(|(n, d)| BasisElement { name: n.to_string(), degree: *d }).collect(),
            mu: BTreeMap::new(),
            unit: None,
            ground,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ground(&self) -> &CoeffRing {
        &self.ground
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.basis.iter().map(|b| b.degree).collect()
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Result<usize, AInftyError> {
        self.basis
            .iter()
            .position(|b| b.name == name)
            .ok_or_else(|| AInftyError::Parse(format!("unknown basis element '{name}'")))
    }

    /// Basis indices of the given degree.
    pub fn basis_of_degree(&self, deg: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree(i) == deg).collect()
    }

    pub fn max_arity(&self) -> usize {
        self.mu.keys().map(|k| k.len()).max().unwrap_or(0)
    }

    /// True when only `μ^1` and `μ^2` are present.
    pub fn is_dg(&self) -> bool {
        self.max_arity() <= 2
    }

    pub fn unit(&self) -> Option<&[(usize, i64)]> {
        self.unit.as_deref()
    }

    pub fn mu_table(&self) -> &BTreeMap<Vec<usize>, Vec<(usize, i64)>> {
        &self.mu
    }

    /// Sets `μ^d(inputs)`, checking `|out| = 2 - d + Σ|inputs|`.
    pub fn set_mu(&mut self, inputs: &[usize], output: &[(usize, i64)]) -> Result<(), AInftyError> {
        if inputs.is_empty() {
            return Err(AInftyError::Degree("operations of arity 0 are not allowed".into()));
        }
        let expect = 2 - inputs.len() as i64 + inputs.iter().map(|&i| self.degree(i)).sum::<i64>();
        let mut terms: Vec<(usize, i64)> = Vec::new();
        for &(o, c) in output {
            if c == 0 {
                continue;
            }
            if self.degree(o) != expect {
                return Err(AInftyError::Degree(format!(
                    "mu^{}({}) has output {} of degree {}, expected {}",
                    inputs.len(),
                    self.names(inputs).join(","),
                    self.basis_name(o),
                    self.degree(o),
                    expect
                )));
            }
            match terms.iter_mut().find(|(b, _)| *b == o) {
                Some(t) => t.1 += c,
                None => terms.push((o, c)),
            }
        }
        terms.retain(|t| t.1 != 0);
        terms.sort();
        if terms.is_empty() {
            self.mu.remove(inputs);
        } else {
            self.mu.insert(inputs.to_vec(), terms);
        }
        Ok(())
    }

    /// Name-based variant of [`set_mu`](Self::set_mu).
    pub fn set(&mut self, inputs: &[&str], output: &[(&str, i64)]) -> Result<(), AInftyError> {
        let ins = inputs.iter().map(|n| self.index_of(n)).collect::<Result<Vec<_>, _>>()?;
        let outs = output
            .iter()
            .map(|(n, c)| Ok((self.index_of(n)?, *c)))
            .collect::<Result<Vec<_>, AInftyError>>()?;
        self.set_mu(&ins, &outs)
    }

    pub fn set_unit(&mut self, unit: Vec<(usize, i64)>) -> Result<(), AInftyError> {
        if unit.iter().any(|&(i, _)| self.degree(i) != 0) {
            return Err(AInftyError::Degree("unit must have degree 0".into()));
        }
        self.unit = Some(unit);
        Ok(())
    }

    fn names(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.basis_name(i).to_string()).collect()
    }

    /// `μ^d(inputs)` as a vector over `ring`.
    pub fn mu(&self, inputs: &[usize], ring: &CoeffRing) -> Vector {
        let mut v = Vector::new();
        if let Some(terms) = self.mu.get(inputs) {
            for &(o, c) in terms {
                v.add_term(ring, o, &ring.from_i64(c));
            }
        }
        v
    }

    /// `μ^d` applied multilinearly to vector arguments.
    pub fn mu_vectors(&self, args: &[&Vector], ring: &CoeffRing) -> Vector {
        let mut out = Vector::new();
        let mut idx = Vec::with_capacity(args.len());
        self.mu_rec(args, ring, &mut idx, ring.one(), &mut out);
        out
    }

    fn mu_rec(&self, args: &[&Vector], ring: &CoeffRing, idx: &mut Vec<usize>, coeff: Scalar, out: &mut Vector) {
        if idx.len() == args.len() {
            if let Some(terms) = self.mu.get(idx.as_slice()) {
                for &(o, c) in terms {
                    out.add_term(ring, o, &ring.mul_int(&coeff, c));
                }
            }
            return;
        }
        for (b, c) in args[idx.len()].iter() {
            let next = ring.mul(&coeff, c);
            if ring.is_zero(&next) {
                continue;
            }
            idx.push(b);
            self.mu_rec(args, ring, idx, next, out);
            idx.pop();
        }
    }

    /// Ordinary product `x·y = (-1)^{|x|} μ^2(x, y)` on homogeneous-by-term vectors.
    pub fn product(&self, x: &Vector, y: &Vector, ring: &CoeffRing) -> Vector {
        let mut out = Vector::new();
        for (i, a) in x.iter() {
            let xi = Vector::single(ring, i, a.clone());
            let t = self.mu_vectors(&[&xi, y], ring);
            out = out.add(&t.scale(ring, &ring.from_i64(parity_sign(self.degree(i)))), ring);
        }
        out
    }

    /// Differential `d = -μ^1`.
    pub fn differential(&self, x: &Vector, ring: &CoeffRing) -> Vector {
        self.mu_vectors(&[x], ring).neg(ring)
    }

    /// The unit as a vector over `ring`, if declared.
    pub fn unit_vector(&self, ring: &CoeffRing) -> Option<Vector> {
        self.unit.as_ref().map(|u| {
            let mut v = Vector::new();
            for &(i, c) in u {
                v.add_term(ring, i, &ring.from_i64(c));
            }
            v
        })
    }

    /// Checks the A∞-relations on every basis tuple of length `1..=d_max`
    /// by direct enumeration over the ground ring.
    pub fn check_a_infinity(&self, d_max: usize) -> Result<RelationReport, AInftyError> {
        let bound = 2 * self.max_arity().max(1);
        if d_max > bound {
            return Err(AInftyError::LengthBound(format!("d_max = {d_max} exceeds twice the maximal arity ({bound})")));
        }
        let ring = &self.ground;
        let mut checked = 0;
        for d in 1..=d_max {
            for tuple in tuples(self.dim(), d) {
                checked += 1;
                let lhs = self.relation_lhs(&tuple, ring);
                if !lhs.is_zero() {
                    return Ok(RelationReport {
                        max_length: d_max,
                        tuples_checked: checked,
                        violation: Some((self.names(&tuple), lhs.format(ring, self))),
                    });
                }
            }
        }
        Ok(RelationReport { max_length: d_max, tuples_checked: checked, violation: None })
    }

    /// `Σ_{ij} (-1)^{✠_i} μ^{d-j+1}(a_1..a_i, μ^j(a_{i+1}..a_{i+j}), ..a_d)`.
    pub fn relation_lhs(&self, tuple: &[usize], ring: &CoeffRing) -> Vector {
        let degs: Vec<i64> = tuple.iter().map(|&i| self.degree(i)).collect();
        let mal = maltese_prefix(&degs);
        let d = tuple.len();
        let mut total = Vector::new();
        for i in 0..d {
            for j in 1..=d - i {
                let inner = self.mu(&tuple[i..i + j], ring);
                if inner.is_zero() {
                    continue;
                }
                let sign = ring.from_i64(parity_sign(mal[i]));
                for (b, c) in inner.iter() {
                    let mut outer: Vec<usize> = tuple[..i].to_vec();
                    outer.push(b);
                    outer.extend_from_slice(&tuple[i + j..]);
                    let v = self.mu(&outer, ring).scale(ring, &ring.mul(c, &sign));
                    total = total.add(&v, ring);
                }
            }
        }
        total
    }

    /// Strict unit axioms: `μ^1(e) = 0`, `μ^2(e,a) = a`, `μ^2(a,e) = (-1)^{|a|} a`,
    /// and `μ^d(.., e, ..) = 0` for `d ≥ 3` up to the maximal arity.
    pub fn check_strict_unit(&self) -> Result<bool, AInftyError> {
        let ring = &self.ground;
        let e = self.unit_vector(ring).ok_or_else(|| AInftyError::Parse("no unit declared".into()))?;
        if !self.mu_vectors(&[&e], ring).is_zero() {
            return Ok(false);
        }
        for a in 0..self.dim() {
            let av = Vector::single(ring, a, ring.one());
            if !self.mu_vectors(&[&e, &av], ring).sub(&av, ring).is_zero() {
                return Ok(false);
            }
            let signed = av.scale(ring, &ring.from_i64(parity_sign(self.degree(a))));
            if !self.mu_vectors(&[&av, &e], ring).sub(&signed, ring).is_zero() {
                return Ok(false);
            }
        }
        for d in 3..=self.max_arity() {
            for pos in 0..d {
                for rest in tuples(self.dim(), d - 1) {
                    let vs: Vec<Vector> = rest.iter().map(|&i| Vector::single(ring, i, ring.one())).collect();
                    let mut args: Vec<&Vector> = vs.iter().collect();
                    args.insert(pos, &e);
                    if !self.mu_vectors(&args, ring).is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Same structure constants over another ground ring.
    pub fn with_ground(&self, ground: CoeffRing) -> Self {
        AInftyAlgebra { ground, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        let mut entries: Vec<(&Vec<usize>, &Vec<(usize, i64)>)> = self.mu.iter().collect();
        entries.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        let file = AlgebraFile {
            name: Some(self.name.clone()),
            ground: Some(self.ground.clone()),
            basis: self.basis.clone(),
            mu: entries
                .into_iter()
                .map(|(ins, outs)| MuEntry {
                    arity: ins.len(),
                    inputs: self.names(ins),
                    output: outs.iter().map(|&(o, c)| (self.basis_name(o).to_string(), c)).collect(),
                })
                .collect(),
            unit: self.unit.as_ref().map(|u| match u.as_slice() {
                [(i, 1)] => UnitSpec::Name(self.basis_name(*i).to_string()),
                _ => UnitSpec::Terms(u.iter().map(|&(i, c)| (self.basis_name(i).to_string(), c)).collect()),
            }),
        };
        serde_json::to_string_pretty(&file).expect("algebra serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, AInftyError> {
        let file: AlgebraFile = serde_json::from_str(text).map_err(|e| AInftyError::Parse(e.to_string()))?;
        let mut alg = AInftyAlgebra {
            name: file.name.unwrap_or_else(|| "algebra".into()),
            basis: file.basis,
            mu: BTreeMap::new(),
            unit: None,
            ground: file.ground.unwrap_or(CoeffRing::Integers),
        };
        let mut seen = std::collections::BTreeSet::new();
        for b in &alg.basis {
            if !seen.insert(b.name.clone()) {
                return Err(AInftyError::Parse(format!("duplicate basis element '{}'", b.name)));
            }
        }
        for e in file.mu {
            if e.arity != e.inputs.len() {
                return Err(AInftyError::Parse(format!("arity {} does not match {} inputs", e.arity, e.inputs.len())));
            }
            let ins: Vec<&str> = e.inputs.iter().map(|s| s.as_str()).collect();
            let outs: Vec<(&str, i64)> = e.output.iter().map(|(s, c)| (s.as_str(), *c)).collect();
            let before = ins.iter().map(|n| alg.index_of(n)).collect::<Result<Vec<_>, _>>()?;
            if alg.mu.contains_key(&before) {
                return Err(AInftyError::Parse(format!("duplicate entry for mu({})", e.inputs.join(","))));
            }
            alg.set(&ins, &outs)?;
        }
        if let Some(u) = file.unit {
            let terms = match u {
                UnitSpec::Name(n) => vec![(alg.index_of(&n)?, 1)],
                UnitSpec::Terms(ts) => ts.iter().map(|(n, c)| Ok((alg.index_of(n)?, *c))).collect::<Result<_, AInftyError>>()?,
            };
            alg.set_unit(terms)?;
        }
        Ok(alg)
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ground: Option<CoeffRing>,
    basis: Vec<BasisElement>,
    #[serde(default)]
    mu: Vec<MuEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<UnitSpec>,
}

#[derive(Serialize, Deserialize)]
struct MuEntry {
    arity: usize,
    inputs: Vec<String>,
    output: Vec<(String, i64)>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum UnitSpec {
    Name(String),
    Terms(Vec<(String, i64)>),
}

/// All tuples in `0..dim` of length `len`, lexicographically.
pub fn tuples(dim: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..dim).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Exterior algebra on odd generators `a, b`: basis `1, a, b, ab`.
pub fn exterior_ab() -> AInftyAlgebra {
    let mut alg = AInftyAlgebra::new("exterior-ab", &[("1", 0), ("a", 1), ("b", 1), ("ab", 2)], CoeffRing::Integers);
    // product table x·y; μ^2(x,y) = (-1)^{|x|} x·y
    let products: [(&str, &str, &str, i64); 7] = [
        ("1", "1", "1", 1),
        ("1", "a", "a", 1),
        ("1", "b", "b", 1),
        ("1", "ab", "ab", 1),
        ("a", "b", "ab", 1),
        ("b", "a", "ab", -1),
        ("a", "1", "a", 1),
    ];
    let extra = [("b", "1", "b", 1), ("ab", "1", "ab", 1)];
    for (x, y, z, c) in products.iter().chain(extra.iter()) {
        let s = parity_sign(alg.degree(alg.index_of(x).unwrap()));
        alg.set(&[x, y], &[(z, s * c)]).unwrap();
    }
    alg.set_unit(vec![(0, 1)]).unwrap();
    alg
}

/// Exterior algebra on one odd generator: basis `1, a`.
pub fn exterior_a() -> AInftyAlgebra {
    let mut alg = AInftyAlgebra::new("exterior-a", &[("1", 0), ("a", 1)], CoeffRing::Integers);
    alg.set(&["1", "1"], &[("1", 1)]).unwrap();
    alg.set(&["1", "a"], &[("a", 1)]).unwrap();
    alg.set(&["a", "1"], &[("a", -1)]).unwrap();
    alg.set_unit(vec![(0, 1)]).unwrap();
    alg
}

/// `F_p[a]/(a^k)` with `|a| = 1` and zero differential.
pub fn truncated_polynomial(p: u64, k: usize) -> Result<AInftyAlgebra, AInftyError> {
    if k < 1 {
        return Err(AInftyError::Parse("truncation exponent must be positive".into()));
    }
    let ground = CoeffRing::prime_field(p)?;
    let names: Vec<String> = (0..k).map(|i| format!("a{i}")).collect();
    let basis: Vec<(&str, i64)> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i as i64)).collect();
    let mut alg = AInftyAlgebra::new(&format!("poly-F{p}-a^{k}"), &basis, ground);
    for i in 0..k {
        for j in 0..k - i {
            alg.set_mu(&[i, j], &[(i + j, parity_sign(i as i64))])?;
        }
    }
    alg.set_unit(vec![(0, 1)])?;
    Ok(alg)
}

/// The Euler derivation `a^i ↦ i a^i` of [`truncated_polynomial`], as
/// `(input, output, coefficient)` triples.
pub fn euler_derivation(alg: &AInftyAlgebra) -> Vec<(usize, usize, i64)> {
    (0..alg.dim()).map(|i| (i, i, alg.degree(i))).filter(|t| t.2 != 0).collect()
}

/// The noncommutative interval: `u, ũ` in degree 0, `v` in degree 1, with
/// `du = v`, `dũ = -v`, idempotents `u, ũ`, and `uv = v = vũ`.
pub fn interval() -> AInftyAlgebra {
    interval_with_sign(-1)
}

/// Interval with `dũ = +v`, which breaks the Leibniz rule.
pub fn interval_flipped() -> AInftyAlgebra {
    let mut alg = interval_with_sign(1);
    alg.name = "interval-flipped".into();
    alg
}

fn interval_with_sign(d_ut: i64) -> AInftyAlgebra {
    let mut alg = AInftyAlgebra::new("interval", &[("u", 0), ("ut", 0), ("v", 1)], CoeffRing::Integers);
    alg.set(&["u"], &[("v", -1)]).unwrap();
    alg.set(&["ut"], &[("v", -d_ut)]).unwrap();
    alg.set(&["u", "u"], &[("u", 1)]).unwrap();
    alg.set(&["ut", "ut"], &[("ut", 1)]).unwrap();
    alg.set(&["u", "v"], &[("v", 1)]).unwrap();
    alg.set(&["v", "ut"], &[("v", -1)]).unwrap();
    alg.set_unit(vec![(0, 1), (1, 1)]).unwrap();
    alg
}

/// Looks up a registered algebra by name: `exterior-ab`, `exterior-a`,
/// `interval`, `interval-flipped`, or `poly:<p>:<k>`.
pub fn registered(name: &str) -> Result<AInftyAlgebra, AInftyError> {
    match name {
        "exterior-ab" | "T1" => Ok(exterior_ab()),
        "exterior-a" => Ok(exterior_a()),
        "interval" | "T3" => Ok(interval()),
        "interval-flipped" => Ok(interval_flipped()),
        _ => {
            let parts: Vec<&str> = name.split(':').collect();
            match parts.as_slice() {
                ["poly", p, k] => {
                    let p = p.parse().map_err(|_| AInftyError::Parse(format!("bad prime in '{name}'")))?;
                    let k = k.parse().map_err(|_| AInftyError::Parse(format!("bad exponent in '{name}'")))?;
                    truncated_polynomial(p, k)
                }
                _ => Err(AInftyError::Parse(format!("unknown algebra '{name}'"))),
            }
        }
    }
}
