//! Pass/fail reports emitted by axiom checkers.
//!
//! A report never aborts on the first failure: checkers collect every violated
//! instance (up to [`MAX_VIOLATIONS`]), sort them, and report deterministically.

use serde::{Deserialize, Serialize};

/// Cap on stored violations; the total count is still reported.
pub const MAX_VIOLATIONS: usize = 100;

/// One violated axiom instance: the witnessing tuple and what was evaluated.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Violation {
    /// The witnessing instance, e.g. the tuple of elements or subsets involved.
    pub witness: String,
    /// Description of the evaluated condition and how it failed.
    pub detail: String,
}

/// Outcome of a checker run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    /// Name of the check that produced this report.
    pub check: String,
    pub pass: bool,
    /// Violations, lexicographically sorted, truncated to [`MAX_VIOLATIONS`].
    pub violations: Vec<Violation>,
    /// True when violations were dropped due to the cap.
    pub truncated: bool,
    /// Total number of violations found (including dropped ones).
    pub total_violations: usize,
}

impl Report {
    pub fn new(check: impl Into<String>, mut violations: Vec<Violation>) -> Self {
        violations.sort();
        violations.dedup();
        let total = violations.len();
        let truncated = total > MAX_VIOLATIONS;
        violations.truncate(MAX_VIOLATIONS);
        Report {
            check: check.into(),
            pass: total == 0,
            violations,
            truncated,
            total_violations: total,
        }
    }

    pub fn passing(check: impl Into<String>) -> Self {
        Report::new(check, Vec::new())
    }
}

/// Builder that accumulates violations while enumerating instances.
#[derive(Debug, Default)]
pub struct ReportBuilder {
    violations: Vec<Violation>,
}

impl ReportBuilder {
    pub fn new() -> Self {
        ReportBuilder::default()
    }

    pub fn violation(&mut self, witness: impl Into<String>, detail: impl Into<String>) {
        self.violations.push(Violation {
            witness: witness.into(),
            detail: detail.into(),
        });
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn finish(self, check: impl Into<String>) -> Report {
        Report::new(check, self.violations)
    }
}
