//! Structured pass/fail records shared by every verification suite.

use std::fmt;

use serde::Serialize;

/// Outcome of a single identity or equality check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    /// Largest index (exponent, `k`, ...) through which the check was carried out.
    pub verified_through: Option<i64>,
    /// First counterexample, if any.
    pub first_failure: Option<String>,
    pub detail: String,
}

impl Check {
    pub fn pass(suite: &str, name: impl Into<String>, verified_through: Option<i64>) -> Self {
        Check {
            suite: suite.to_owned(),
            name: name.into(),
            passed: true,
            verified_through,
            first_failure: None,
            detail: String::new(),
        }
    }

    pub fn fail(
        suite: &str,
        name: impl Into<String>,
        verified_through: Option<i64>,
        first_failure: impl Into<String>,
    ) -> Self {
        Check {
            suite: suite.to_owned(),
            name: name.into(),
            passed: false,
            verified_through,
            first_failure: Some(first_failure.into()),
            detail: String::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(
                f,
                "{} [{}] {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.suite,
                c.name
            )?;
            if let Some(n) = c.verified_through {
                write!(f, " (through {n})")?;
            }
            if let Some(x) = &c.first_failure {
                write!(f, " first failure: {x}")?;
            }
            if !c.detail.is_empty() {
                write!(f, " {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
