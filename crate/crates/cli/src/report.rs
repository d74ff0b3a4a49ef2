//! Report model shared by every subcommand.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A closed form that disagrees with the measured value; never fails a run.
    Finding,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Finding => "FIND",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Entry>,
    pub overall: Status,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), checks: Vec::new(), overall: Status::Pass }
    }

    fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>, elapsed_us: u64) {
        if status == Status::Fail {
            self.overall = Status::Fail;
        }
        self.checks.push(Entry { name: name.into(), status, detail: detail.into(), elapsed_us });
    }

    /// An internal consistency check: failure fails the run.
    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>, elapsed_us: u64) {
        self.push(name, if passed { Status::Pass } else { Status::Fail }, detail, elapsed_us);
    }

    /// A closed form compared with the computation. Disagreement is recorded as a finding.
    pub fn claim(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>, elapsed_us: u64) {
        self.push(name, if holds { Status::Pass } else { Status::Finding }, detail, elapsed_us);
    }

    /// A measurement reported next to the reference value.
    pub fn finding(&mut self, name: impl Into<String>, detail: impl Into<String>, elapsed_us: u64) {
        self.push(name, Status::Finding, detail, elapsed_us);
    }

    /// Appends another report's entries, prefixing their names with its command.
    pub fn absorb(&mut self, other: Report) {
        for e in other.checks {
            self.push(format!("[{}] {}", other.command, e.name), e.status, e.detail, e.elapsed_us);
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|e| e.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("uvt {}\n", self.command);
        for e in &self.checks {
            let _ = writeln!(out, "{}  {} ({} us)", e.status.label(), e.name, e.elapsed_us);
            if !e.detail.is_empty() {
                for line in e.detail.lines() {
                    let _ = writeln!(out, "      {line}");
                }
            }
        }
        let _ = writeln!(
            out,
            "overall: {} ({} pass, {} fail, {} finding)",
            self.overall.label(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Finding)
        );
        out
    }
}

/// Runs `f` and returns its value with the wall-clock time in microseconds.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed().as_micros() as u64)
}
