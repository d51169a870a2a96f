//! Check reports shared by the library suites and the command-line front end.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    /// A recorded value with nothing to compare against.
    Info,
}

/// One verified fact: what was checked, on which input, and the outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub id: String,
    pub inputs: String,
    pub expected: String,
    pub got: String,
    pub status: Status,
}

impl Row {
    pub fn check(id: impl Into<String>, inputs: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        let status = if expected == got { Status::Pass } else { Status::Fail };
        Row { id: id.into(), inputs: inputs.into(), expected, got, status }
    }

    pub fn flag(id: impl Into<String>, inputs: impl Into<String>, ok: bool, detail: impl ToString) -> Self {
        Row {
            id: id.into(),
            inputs: inputs.into(),
            expected: "true".into(),
            got: if ok { "true".into() } else { format!("false ({})", detail.to_string()) },
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    pub fn info(id: impl Into<String>, inputs: impl Into<String>, got: impl ToString) -> Self {
        Row { id: id.into(), inputs: inputs.into(), expected: "-".into(), got: got.to_string(), status: Status::Info }
    }

    pub fn skip(id: impl Into<String>, inputs: impl Into<String>, reason: impl Into<String>) -> Self {
        Row { id: id.into(), inputs: inputs.into(), expected: "-".into(), got: reason.into(), status: Status::Skip }
    }
}

/// A named list of rows; passes iff no row fails.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub rows: Vec<Row>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteReport { suite: suite.into(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Row) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.rows.extend(other.rows);
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.status == Status::Fail)
    }
}
