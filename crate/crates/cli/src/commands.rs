//! One function per subcommand, each producing a [`SuiteReport`].

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use formal_mc::ainfty::random::{random_cochain, random_mc};
use formal_mc::ainfty::suite::{group_axioms_suite, power_lemma_holds, power_lemma_suite};
use formal_mc::ainfty::{registered, AInftyAlgebra};
use formal_mc::arith::{eta_product_coeffs, eta_suite, point_count_suite, primes_up_to, two_quadrics, EtaProduct, BAD_PRIMES, FANO_TABLE, LEVEL_FIFTEEN};
use formal_mc::coeff::CoeffRing;
use formal_mc::equivariant::{equivariant_suite, t_periodic, zp_cohomology, zp_homology, EquivariantComplex};
use formal_mc::fgl::{fgl_suite, honda_suite, WeierstrassCurve, MODEL_CURVE};
use formal_mc::operads::{combinatorics_suite, monoid_check, monoid_suite, planar_trees, causal_orderings_brute_force, DecoratedTree, SearchBounds};
use formal_mc::quantum::{closed_forms_suite, expected_closed_form, fano_table_suite, fixtures_dir_suite, qxi_threefold, FanoModel};
use formal_mc::report::{Row, SuiteReport};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::Config;
use crate::output::{input, Failure};
use crate::{AlgebraArgs, EquivariantArgs, EtaArgs, FanoTableArgs, FglArgs, FullVerifyArgs, McPowerArgs, MonoidArgs, PMaxArgs, XiTreesArgs};

pub const DEFAULT_SEED: u64 = 20240607;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn prime(p: u64) -> Result<u64, Failure> {
    if formal_mc::coeff::is_prime(p) {
        Ok(p)
    } else {
        Err(input(format!("{p} is not prime")))
    }
}

/// Resolves `--algebra`/`--algebra-file`; `T2` means `F_p[a]/(a^3)`.
fn algebra(a: &AlgebraArgs, cfg: &Config, default: &str) -> Result<(AInftyAlgebra, u64), Failure> {
    let p = prime(cfg.or(a.p, "p")?.unwrap_or(3))?;
    let file = cfg.or(a.algebra_file.clone(), "algebra-file")?;
    let name = cfg.or(a.algebra.clone(), "algebra")?;
    let alg = match (file, name) {
        (Some(f), None) => {
            let alg = AInftyAlgebra::from_json(&read(&f)?)?;
            if a.p.is_some() || cfg.get::<u64>("p")?.is_some() {
                alg.with_ground(CoeffRing::prime_field(p).map_err(input)?)
            } else {
                alg
            }
        }
        (None, name) => {
            let name = name.unwrap_or_else(|| default.to_string());
            if name == "T2" {
                registered(&format!("poly:{p}:3"))?
            } else {
                registered(&name)?
            }
        }
        (Some(_), Some(_)) => return Err(input("--algebra and --algebra-file are exclusive")),
    };
    Ok((alg, p))
}

pub fn check_ainfty(a: &AlgebraArgs, cfg: &Config) -> Result<SuiteReport, Failure> {
    let (alg, _) = algebra(a, cfg, "T1")?;
    let d_max = cfg.or(a.order, "order")?.unwrap_or(2 * alg.max_arity().max(1));
    let rel = alg.check_a_infinity(d_max)?;
    let mut rep = SuiteReport::new("check-ainfty");
    let inputs = format!("{} over {}, length <= {d_max}, {} tuples", alg.name(), alg.ground(), rel.tuples_checked);
    let detail = rel.violation.as_ref().map_or(String::new(), |(t, lhs)| format!("{} -> {lhs}", t.join(",")));
    rep.push(Row::flag("relations", inputs, rel.passed(), detail));
    if alg.unit().is_some() {
        rep.push(Row::flag("strict-unit", alg.name(), alg.check_strict_unit()?, "unit axioms fail"));
    }
    Ok(rep)
}

pub fn mc_power(a: &McPowerArgs, cfg: &Config) -> Result<SuiteReport, Failure> {
    let (alg, p) = algebra(&a.algebra, cfg, "T2")?;
    let len = cfg.or(a.algebra.order, "order")?.unwrap_or(3);
    let samples = cfg.or(a.samples, "samples")?.unwrap_or(4);
    let seed = cfg.or(a.seed, "seed")?.unwrap_or(DEFAULT_SEED);
    let ring = CoeffRing::truncated_fp(p, p as usize).map_err(input)?;
    let base = CoeffRing::prime_field(p).map_err(input)?;
    let alg = alg.with_ground(base.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = SuiteReport::new("mc-power");
    for i in 0..samples {
        let inputs = format!("{} over {ring}, p={p}, L={len}, sample {i}", alg.name());
        let g = random_mc(&alg, &ring, &mut rng)?;
        rep.push(Row::flag("p-fold-composite/mc", inputs.clone(), power_lemma_holds(&alg, &g, p, len)?, "differs from Xi_p(c) q^p"));
        let c1 = random_cochain(&alg, &base, 1, 2, false, &mut rng).embed_scaled(&ring, 1)?;
        let c2 = random_cochain(&alg, &base, 1, 1, false, &mut rng).embed_scaled(&ring, 2)?;
        let ok = power_lemma_holds(&alg, &c1.add(&c2)?, p, len)?;
        rep.push(Row::flag("p-fold-composite/cochain", inputs, ok, "differs from Xi_p(c) q^p"));
    }
    Ok(rep)
}

fn catalan(n: u64) -> BigInt {
    // C_n = binom(2n, n) / (n + 1)
    let mut c = BigInt::from(1);
    for k in 0..n {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    c
}

pub fn xi_trees(a: &XiTreesArgs, cfg: &Config) -> Result<SuiteReport, Failure> {
    let p = cfg.or(a.p, "p")?.unwrap_or(3);
    if !(1..=8).contains(&p) {
        return Err(input(format!("--p {p} is outside 1..=8")));
    }
    let trees = planar_trees(p as usize);
    let mut rep = SuiteReport::new("xi-trees");
    rep.push(Row::check("tree-count", format!("{p} vertices"), catalan(p - 1), trees.len()));
    for t in &trees {
        let closed = t.causal_orderings();
        rep.push(Row::check("causal-orderings", t.to_string(), causal_orderings_brute_force(t), &closed));
        rep.push(Row::info("weight-mod-p", t.to_string(), closed % BigInt::from(p)));
    }
    Ok(rep)
}

pub fn monoid(a: &MonoidArgs, cfg: &Config) -> Result<SuiteReport, Failure> {
    let Some(path) = cfg.or(a.tree.clone(), "tree")? else {
        let n = cfg.or(a.samples, "samples")?.unwrap_or(50);
        return Ok(monoid_suite(n, cfg.or(a.seed, "seed")?.unwrap_or(DEFAULT_SEED)));
    };
    let text = read(&path)?;
    let tree = DecoratedTree::parse(text.trim()).map_err(input)?;
    let r = monoid_check(&tree, SearchBounds::default());
    let name = path.display().to_string();
    let mut rep = SuiteReport::new("monoid");
    rep.push(Row::check("rank", name.clone(), r.expected_rank, r.rank));
    rep.push(Row::info("edges", name.clone(), r.edges));
    rep.push(Row::info("group-free", name.clone(), r.group_free));
    rep.push(Row::info("monoid-free", name.clone(), r.monoid_free));
    rep.push(Row::info("saturated", name.clone(), r.saturated.map_or("not searched".to_string(), |s| s.to_string())));
    rep.push(Row::info("sharp", name.clone(), r.sharp));
    rep.push(Row::info("irreducible-generators", name, r.irreducible));
    Ok(rep)
}

pub fn equivariant(a: &EquivariantArgs, cfg: &Config) -> Result<SuiteReport, Failure> {
    let Some(path) = cfg.or(a.complex.clone(), "complex")? else {
        let p_max = cfg.or(a.p_max, "p-max")?.unwrap_or(97);
        return Ok(equivariant_suite(&primes_up_to(p_max)));
    };
    let c = EquivariantComplex::from_json(&read(&path)?).map_err(input)?;
    let name = path.display().to_string();
    let mut rep = SuiteReport::new("equivariant");
    rep.push(Row::flag("squares-to-zero", name.clone(), c.cochain_model().squares_to_zero() && c.chain_model().squares_to_zero(), "total differential does not square to zero"));
    for (n, d) in zp_cohomology(&c) {
        rep.push(Row::info("cohomology", format!("{name}, degree {n}"), d));
    }
    for (n, d) in zp_homology(&c) {
        rep.push(Row::info("homology", format!("{name}, degree {n}"), d));
    }
    rep.push(Row::info("t-periodic", name, t_periodic(&c)));
    Ok(rep)
}

pub fn fgl(a: &FglArgs, cfg: &Config) -> Result<SuiteReport, Failure> {
    let curve = match cfg.or(a.curve.clone(), "curve")? {
        None => MODEL_CURVE,
        Some(s) => {
            let v = s
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| input(format!("--curve: {e}")))?;
            let [a1, a2, a3, a4, a6] = v[..] else {
                return Err(input("--curve expects five integers a1,a2,a3,a4,a6"));
            };
            let e = WeierstrassCurve::new(a1, a2, a3, a4, a6);
            if e.discriminant() == BigInt::from(0) {
                return Err(input("--curve is singular"));
            }
            e
        }
    };
    let mut rep = fgl_suite();
    rep.suite = "fgl".into();
    rep.extend(honda_suite(&curve));
    Ok(rep)
}

fn eta_coefficients(order: usize) -> Vec<i64> {
    eta_product_coeffs(&EtaProduct::new(LEVEL_FIFTEEN.to_vec(), order).expect("levels of weight two"))
}

fn table_entry(p: u64) -> Option<i64> {
    FANO_TABLE.iter().find(|e| e.0 == p).map(|e| e.1)
}

/// Blowup rows compare with the table, or with the eta-product past its end;
/// `p = 2` comes from the eta-product alone.
pub fn fano_table(a: &FanoTableArgs, cfg: &Config) -> Result<SuiteReport, Failure> {
    let p_max = cfg.or(a.p_max, "p-max")?.unwrap_or(41);
    let model: FanoModel = cfg.or(a.model.clone(), "model")?.unwrap_or_else(|| "blowup12".into()).parse()?;
    if p_max > 61 {
        return Err(input(format!("--p-max {p_max} exceeds 61")));
    }
    let eta = eta_coefficients(p_max as usize + 1);
    let mut rep = SuiteReport::new("fano-table");
    for p in primes_up_to(p_max) {
        let eta_p = eta[p as usize - 1];
        let expected = table_entry(p).unwrap_or(eta_p);
        if model == FanoModel::Blowup12 {
            if p == 2 {
                rep.push(Row::check("fano-table", "p=2, eta-product", expected, eta_p));
            } else {
                let v = qxi_threefold(model, p)?;
                rep.push(Row::check("fano-table", format!("p={p}"), expected, v.least_abs));
            }
        } else if p == 2 {
            rep.push(Row::skip("fano-table", format!("{model}, p=2"), "defined for odd p only"));
        } else {
            let v = qxi_threefold(model, p)?;
            let want = expected_closed_form(model, p).map_or("-".to_string(), |w| w.to_string());
            rep.push(Row::check("fano-table", format!("{model}, p={p}"), want, v.value));
        }
    }
    Ok(rep)
}

pub fn point_count(a: &PMaxArgs, cfg: &Config) -> Result<SuiteReport, Failure> {
    let p_max = cfg.or(a.p_max, "p-max")?.unwrap_or(41);
    if p_max > 200 {
        return Err(input(format!("--p-max {p_max} exceeds 200")));
    }
    let eta = eta_coefficients(p_max as usize + 1);
    let mut rep = SuiteReport::new("point-count");
    for p in primes_up_to(p_max) {
        let eta_p = eta[p as usize - 1];
        if BAD_PRIMES.contains(&p) {
            rep.push(Row::skip("point-count", format!("p={p}, eta={eta_p}"), "excluded: bad reduction"));
            continue;
        }
        let n = two_quadrics(p).count_points() as i64;
        let m = p as i64;
        rep.push(Row::check("point-count", format!("p={p}, eta={eta_p}, #C={n}"), eta_p.rem_euclid(m), (1 - n).rem_euclid(m)));
    }
    Ok(rep)
}

pub fn eta(a: &EtaArgs, cfg: &Config) -> Result<SuiteReport, Failure> {
    let order = cfg.or(a.order, "order")?.unwrap_or(50);
    if !(1..=100_000).contains(&order) {
        return Err(input(format!("--order {order} is outside 1..=100000")));
    }
    let mut rep = eta_suite(order);
    let coeffs = eta_coefficients(order);
    for p in primes_up_to(order as u64).into_iter().filter(|&p| table_entry(p).is_none()) {
        rep.push(Row::info("eta-coefficient", format!("p={p}"), coeffs[p as usize - 1]));
    }
    Ok(rep)
}

fn prefixed(n: usize, rep: SuiteReport) -> Vec<Row> {
    rep.rows
        .into_iter()
        .map(|mut r| {
            r.id = format!("c{n:02}/{}", r.id);
            r
        })
        .collect()
}

fn budget_row(n: usize, elapsed: Duration, budget: Duration) -> Row {
    Row::flag(format!("c{n:02}/runtime"), format!("budget {}s", budget.as_secs()), elapsed <= budget, format!("{:.1}s", elapsed.as_secs_f64()))
}

pub fn full_verify(a: &FullVerifyArgs, cfg: &Config) -> Result<SuiteReport, Failure> {
    let fixtures = cfg.or(a.fixtures.clone(), "fixtures")?.unwrap_or_else(|| PathBuf::from("fixtures/gw"));
    let seed = cfg.or(a.seed, "seed")?.unwrap_or(DEFAULT_SEED);
    let table_primes: Vec<u64> = primes_up_to(41).into_iter().filter(|&p| p > 2).collect();
    let mut rep = SuiteReport::new("full-verify");
    rep.rows.extend(prefixed(1, fano_table_suite(&table_primes)));
    let start = Instant::now();
    let r = eta_suite(50);
    rep.rows.push(budget_row(2, start.elapsed(), Duration::from_secs(5)));
    rep.rows.extend(prefixed(2, r));
    let start = Instant::now();
    let r = point_count_suite();
    rep.rows.push(budget_row(3, start.elapsed(), Duration::from_secs(30)));
    rep.rows.extend(prefixed(3, r));
    rep.rows.extend(prefixed(4, honda_suite(&MODEL_CURVE)));
    rep.rows.extend(prefixed(5, closed_forms_suite(&[3, 5, 7, 11, 13])));
    rep.rows.extend(prefixed(6, power_lemma_suite(&[2, 3, 5], 3, 4, seed)?));
    rep.rows.extend(prefixed(7, group_axioms_suite(100, seed)?));
    rep.rows.extend(prefixed(8, combinatorics_suite()));
    rep.rows.extend(prefixed(9, monoid_suite(50, seed)));
    rep.rows.extend(prefixed(10, equivariant_suite(&primes_up_to(97))));
    rep.rows.extend(prefixed(11, fixtures_dir_suite(&fixtures)));
    rep.rows.extend(prefixed(12, fgl_suite()));
    Ok(rep)
}
