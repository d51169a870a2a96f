//! Report rendering and process exit codes.

use std::fmt;
use std::io::Write;
use std::process::ExitCode;

use formal_mc::ainfty::AInftyError;
use formal_mc::quantum::QuantumError;
use formal_mc::report::{Status, SuiteReport};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Errors that stop a command before a report exists.
#[derive(Debug)]
pub enum Failure {
    /// Malformed flags, files or parameters (exit 2).
    Input(String),
    /// A library invariant was violated (exit 3).
    Internal(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "input error: {m}"),
            Failure::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Input(_) => ExitCode::from(2),
            Failure::Internal(_) => ExitCode::from(3),
        }
    }
}

impl From<AInftyError> for Failure {
    fn from(e: AInftyError) -> Self {
        match e {
            AInftyError::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<QuantumError> for Failure {
    fn from(e: QuantumError) -> Self {
        match e {
            QuantumError::RouteMismatch { .. } => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

pub fn input(e: impl fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

#[derive(Serialize)]
struct JsonReport<'a> {
    suite: &'a str,
    passed: bool,
    rows: &'a [formal_mc::report::Row],
}

/// Writes the report with rows stable-sorted by check id.
pub fn render(mut rep: SuiteReport, format: Format, out: &mut impl Write) -> std::io::Result<bool> {
    rep.rows.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = rep.passed();
    match format {
        Format::Json => {
            let j = JsonReport { suite: &rep.suite, passed, rows: &rep.rows };
            serde_json::to_writer_pretty(&mut *out, &j)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &rep.rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "suite: {}", rep.suite)?;
            for r in &rep.rows {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skip => "SKIP",
                    Status::Info => "INFO",
                };
                writeln!(out, "{tag}  {}  [{}]  expected {}  got {}", r.id, r.inputs, r.expected, r.got)?;
            }
            let count = |s: Status| rep.rows.iter().filter(|r| r.status == s).count();
            writeln!(
                out,
                "{} rows: {} pass, {} fail, {} skip, {} info",
                rep.rows.len(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Skip),
                count(Status::Info)
            )?;
        }
    }
    Ok(passed)
}
