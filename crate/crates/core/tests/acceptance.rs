//! Acceptance run: one pass/fail line per criterion, nonzero exit on failure.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use formal_mc::ainfty::suite::{group_axioms_suite, power_lemma_suite};
use formal_mc::arith::{eta_suite, point_count_suite, primes_up_to};
use formal_mc::equivariant::equivariant_suite;
use formal_mc::fgl::{fgl_suite, honda_suite, MODEL_CURVE};
use formal_mc::operads::{combinatorics_suite, monoid_suite};
use formal_mc::quantum::{closed_forms_suite, fano_table_suite, fixtures_dir_suite};
use formal_mc::report::SuiteReport;

const SEED: u64 = 20240607;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_report(rep: SuiteReport, elapsed: Duration, budget: Option<Duration>) -> Outcome {
    let rows = rep.rows.len();
    let failures: Vec<String> = rep.failures().map(|r| format!("{} [{}]: expected {}, got {}", r.id, r.inputs, r.expected, r.got)).collect();
    let in_time = budget.map_or(true, |b| elapsed <= b);
    let mut detail = format!("{rows} rows, {:.2}s", elapsed.as_secs_f64());
    if let Some(b) = budget {
        detail.push_str(&format!(" (budget {}s)", b.as_secs()));
    }
    if !failures.is_empty() {
        detail.push_str(&format!("; {}", failures.join("; ")));
    }
    Outcome { ok: failures.is_empty() && rows > 0 && in_time, detail }
}

fn timed(budget: Option<Duration>, f: impl FnOnce() -> SuiteReport) -> Outcome {
    let start = Instant::now();
    let rep = f();
    from_report(rep, start.elapsed(), budget)
}

fn fallible<E: std::fmt::Display>(f: impl FnOnce() -> Result<SuiteReport, E>) -> Outcome {
    let start = Instant::now();
    match f() {
        Ok(rep) => from_report(rep, start.elapsed(), None),
        Err(e) => Outcome { ok: false, detail: format!("error: {e}") },
    }
}

fn main() -> ExitCode {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/gw");
    let table_primes: Vec<u64> = primes_up_to(41).into_iter().filter(|&p| p > 2).collect();
    let odd_small: Vec<u64> = vec![3, 5, 7, 11, 13];
    let criteria: Vec<(&str, Box<dyn FnOnce() -> Outcome>)> = vec![
        ("Fano table by the period sum, p = 3..41", Box::new(move || timed(None, || fano_table_suite(&table_primes)))),
        ("Fano table by the eta-product, N = 50", Box::new(|| timed(Some(Duration::from_secs(5)), || eta_suite(50)))),
        ("Fano table by point counts", Box::new(|| timed(Some(Duration::from_secs(30)), point_count_suite))),
        ("Fano table by the Hasse invariant", Box::new(|| timed(None, || honda_suite(&MODEL_CURVE)))),
        ("threefold closed forms and route agreement", Box::new(move || timed(None, || closed_forms_suite(&odd_small)))),
        ("Hochschild p-power lemma, p in {2,3,5}, L = 3", Box::new(|| fallible(|| power_lemma_suite(&[2, 3, 5], 3, 4, SEED)))),
        ("group axioms on 100 MC elements per algebra", Box::new(|| fallible(|| group_axioms_suite(100, SEED)))),
        ("operad combinatorics", Box::new(|| timed(None, combinatorics_suite))),
        ("gluing monoids on the examples and 50 random trees", Box::new(|| timed(None, || monoid_suite(50, SEED)))),
        ("equivariant cohomology and constants, p <= 97", Box::new(|| timed(None, || equivariant_suite(&primes_up_to(97))))),
        ("low-degree quantum fixtures", Box::new(move || timed(None, || fixtures_dir_suite(&fixtures)))),
        ("formal group laws", Box::new(|| timed(None, fgl_suite))),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let out = run();
        all &= out.ok;
        println!("criterion {:>2}: {} | {name} | {}", i + 1, if out.ok { "PASS" } else { "FAIL" }, out.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
