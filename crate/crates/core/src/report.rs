//! Pass/fail records produced by the `check_*` verifiers.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Maximum number of failing cases recorded per check.
pub const MAX_RECORDED_FAILURES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A known-bad variant failed, as required.
    ExpectedFail,
    /// A known-bad variant unexpectedly passed.
    UnexpectedPass,
}

impl Status {
    pub fn is_ok(self) -> bool {
        matches!(self, Status::Pass | Status::ExpectedFail)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedFail => "xfail",
            Status::UnexpectedPass => "xpass",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub element: String,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub cases: usize,
    pub failed_cases: usize,
    pub failures: Vec<Failure>,
    pub note: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Pass,
            cases: 0,
            failed_cases: 0,
            failures: Vec::new(),
            note: None,
        }
    }

    /// Records one case; `detail` is only evaluated on failure.
    pub fn case<F>(&mut self, ok: bool, detail: F)
    where
        F: FnOnce() -> (String, String),
    {
        self.cases += 1;
        if !ok {
            self.failed_cases += 1;
            self.status = Status::Fail;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                let (element, residual) = detail();
                self.failures.push(Failure { element, residual });
            }
        }
    }

    /// Records a hard error (e.g. fuel exhaustion) as a failing case.
    pub fn error(&mut self, element: impl Into<String>, err: impl fmt::Display) {
        let msg = alloc::format!("error: {}", err);
        self.case(false, || (element.into(), msg));
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Turns a check that was meant to fail into `xfail` / `xpass`.
    pub fn expect_failure(mut self) -> Self {
        self.status = match self.status {
            Status::Fail => Status::ExpectedFail,
            _ => Status::UnexpectedPass,
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.status.is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn first_failure(&self) -> Option<String> {
        self.checks.iter().find(|c| !c.passed()).map(|c| match c.failures.first() {
            Some(f) => alloc::format!("{}: {} -> {}", c.id, f.element, f.residual),
            None => c.id.to_string(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {} {} ({} cases)", self.suite, c.id, c.status, c.cases)?;
            for fl in &c.failures {
                writeln!(f, "    {} -> {}", fl.element, fl.residual)?;
            }
        }
        Ok(())
    }
}
