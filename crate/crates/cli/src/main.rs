//! `formal-mc`: runs the verification suites and prints machine-readable reports.
//!
//! Exit codes: 0 every check passed, 1 some check failed, 2 input error,
//! 3 internal invariant violation.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::Config;
use output::{input, render, Failure, Format};

#[derive(Parser, Debug)]
#[command(name = "formal-mc", version, about = "Exact verification suites for Maurer-Cartan power operations")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Print the report as CSV (id, inputs, expected, got, status).
    #[arg(long, global = true)]
    csv: bool,
    /// Read defaults from a `key = value` file; flags on the command line win.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the A-infinity relations (and strict unit, if declared) of an algebra.
    CheckAinfty(AlgebraArgs),
    /// Compare the p-fold composite of Maurer-Cartan elements with the tree power operation.
    McPower(McPowerArgs),
    /// Causal-ordering weights of the planar trees with p vertices.
    XiTrees(XiTreesArgs),
    /// Boundary, multiplihedron and causal-ordering combinatorics.
    Operads,
    /// Gluing-monoid invariants of a decorated tree, or the built-in monoid suite.
    Monoid(MonoidArgs),
    /// Equivariant cohomology dimensions and Steenrod constants.
    Equivariant(EquivariantArgs),
    /// Formal group laws, and the Hasse invariant of a Weierstrass curve.
    Fgl(FglArgs),
    /// Threefold power-operation scalars by prime.
    FanoTable(FanoTableArgs),
    /// Point counts of the curve of two quadrics against the eta-product.
    PointCount(PMaxArgs),
    /// Coefficients of the level-15 eta-product at prime powers of q.
    Eta(EtaArgs),
    /// Every acceptance suite.
    FullVerify(FullVerifyArgs),
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// Registered algebra: T1 (exterior-ab), T2 (poly:p:3), T3 (interval), exterior-a, interval-flipped, poly:P:K.
    #[arg(long, conflicts_with = "algebra_file")]
    algebra: Option<String>,
    /// Algebra structure constants as JSON.
    #[arg(long, value_name = "FILE")]
    algebra_file: Option<PathBuf>,
    /// Longest relation checked (check-ainfty) or output length (mc-power).
    #[arg(long)]
    order: Option<usize>,
    /// Prime used to resolve T2; also the ground field for `--algebra-file` when set.
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Args, Debug)]
struct McPowerArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct XiTreesArgs {
    /// Number of vertices (a prime for the weights to be meaningful).
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Args, Debug)]
struct MonoidArgs {
    /// File holding one decorated tree in bracket notation.
    #[arg(long, value_name = "FILE")]
    tree: Option<PathBuf>,
    /// Random trees for the built-in suite.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct EquivariantArgs {
    #[arg(long)]
    p_max: Option<u64>,
    /// Complex with a cyclic action, as JSON; reports its equivariant dimensions.
    #[arg(long, value_name = "FILE")]
    complex: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FglArgs {
    /// Weierstrass coefficients `a1,a2,a3,a4,a6`; defaults to the validated model curve.
    #[arg(long, allow_hyphen_values = true)]
    curve: Option<String>,
}

#[derive(Args, Debug)]
struct FanoTableArgs {
    #[arg(long)]
    p_max: Option<u64>,
    /// two-quadrics, cubic, quartic or blowup12.
    #[arg(long)]
    model: Option<String>,
}

#[derive(Args, Debug)]
struct PMaxArgs {
    #[arg(long)]
    p_max: Option<u64>,
}

#[derive(Args, Debug)]
struct EtaArgs {
    /// Number of q-coefficients computed.
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Args, Debug)]
struct FullVerifyArgs {
    /// Directory of invariant tables (`*.json`).
    #[arg(long, value_name = "DIR")]
    fixtures: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        match cfg.get::<String>("format")?.as_deref() {
            Some("json") => Format::Json,
            Some("csv") => Format::Csv,
            Some("text") | None if cfg.flag("json")? => Format::Json,
            Some("text") | None if cfg.flag("csv")? => Format::Csv,
            Some("text") | None => Format::Text,
            Some(other) => return Err(input(format!("unknown format '{other}'"))),
        }
    };
    let rep = match cli.command {
        Command::CheckAinfty(a) => commands::check_ainfty(&a, &cfg)?,
        Command::McPower(a) => commands::mc_power(&a, &cfg)?,
        Command::XiTrees(a) => commands::xi_trees(&a, &cfg)?,
        Command::Operads => formal_mc::operads::combinatorics_suite(),
        Command::Monoid(a) => commands::monoid(&a, &cfg)?,
        Command::Equivariant(a) => commands::equivariant(&a, &cfg)?,
        Command::Fgl(a) => commands::fgl(&a, &cfg)?,
        Command::FanoTable(a) => commands::fano_table(&a, &cfg)?,
        Command::PointCount(a) => commands::point_count(&a, &cfg)?,
        Command::Eta(a) => commands::eta(&a, &cfg)?,
        Command::FullVerify(a) => commands::full_verify(&a, &cfg)?,
    };
    let mut stdout = std::io::stdout().lock();
    let passed = match render(rep, format, &mut stdout) {
        Ok(passed) => passed,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return Ok(ExitCode::SUCCESS),
        Err(e) => return Err(Failure::Internal(format!("writing report: {e}"))),
    };
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("formal-mc: {f}");
            f.exit_code()
        }
    }
}
