//! Structured pass/fail reports shared by the verification batteries and
//! the command-line front end.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Error => "ERROR",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Fail,
            detail: detail.into(),
        }
    }

    pub fn error(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Error,
            detail: detail.into(),
        }
    }
}

/// A deterministic, line-oriented check report. Checks render in insertion
/// order so reports are diffable.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    /// Machine-parsable rendering: one `CHECK <name>: <STATUS> <detail>`
    /// line per check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("CHECK {}: {}", c.name, c.status));
            if !c.detail.is_empty() {
                out.push(' ');
                out.push_str(&c.detail);
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_format() {
        let mut r = Report::new("demo");
        r.push(CheckResult::pass("constraints", "exact"));
        r.push(CheckResult::fail("ttrr", "nonzero residual at n = 2"));
        let text = r.render();
        assert_eq!(
            text,
            "CHECK constraints: PASS exact\nCHECK ttrr: FAIL nonzero residual at n = 2\n"
        );
        assert!(!r.all_passed());
    }
}
