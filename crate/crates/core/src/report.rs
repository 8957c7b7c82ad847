//! Verification reports.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::scalar::PolyMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    /// Informational deviation that does not count as a failure.
    Flagged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Flagged => "FLAG",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Fail, detail: detail.into() }
    }

    pub fn skip(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Skip, detail: detail.into() }
    }

    pub fn flagged(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Flagged, detail: detail.into() }
    }

    /// Pass iff `residual` vanishes exactly.
    pub fn zero(name: impl Into<String>, residual: &PolyMatrix) -> Self {
        match residual.residual() {
            None => Check::pass(name, "exact zero"),
            Some(r) => Check::fail(name, format!("nonzero residual at {r}")),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        if ok {
            Check::pass(name, detail)
        } else {
            Check::fail(name, detail)
        }
    }

    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new(), wall_time_ms: 0 }
    }

    /// Runs `f`, collecting its checks and the elapsed time.
    pub fn timed(suite: impl Into<String>, f: impl FnOnce(&mut Report)) -> Self {
        let start = Instant::now();
        let mut r = Report::new(suite);
        f(&mut r);
        r.wall_time_ms = start.elapsed().as_millis() as u64;
        r
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    /// Appends another report's checks, prefixing their names with its suite.
    pub fn absorb(&mut self, other: Report) {
        let prefix = other.suite;
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            c
        }));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.is_failure())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.suite)?;
        for c in &self.checks {
            writeln!(f, "[{}] {} -- {}", c.status, c.name, c.detail)?;
        }
        write!(
            f,
            "{} pass, {} fail, {} skip, {} flagged",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip),
            self.count(Status::Flagged)
        )
    }
}
