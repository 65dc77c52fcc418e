//! Check reports: the uniform pass/fail/vacuous result of every
//! verification sweep, with a machine (JSON-line) and human rendering.
//!
//! A failed sweep always carries its first witness (smallest index tuple in
//! lexicographic sweep order) so failures are reproducible one-liners.
//! "Vacuous" means the sweep had nothing to check (zero-dimensional
//! component); it counts as a pass for exit-code purposes but is rendered
//! distinctly.

use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: &str = "report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Vacuous,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureWitness {
    /// Human-readable description of the first failing tuple
    /// (basis indices, tags, probe names — whatever the sweep iterates).
    pub witness: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: String,
    pub check: String,
    pub status: Status,
    /// Number of tuples actually swept.
    pub checked: usize,
    /// Number of violations found (0 for pass/vacuous).
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<FailureWitness>,
}

impl CheckReport {
    pub fn pass(check: impl Into<String>, checked: usize) -> Self {
        let status = if checked == 0 { Status::Vacuous } else { Status::Pass };
        CheckReport {
            schema: REPORT_SCHEMA.into(),
            check: check.into(),
            status,
            checked,
            failures: 0,
            first_failure: None,
        }
    }

    pub fn fail(
        check: impl Into<String>,
        checked: usize,
        failures: usize,
        witness: FailureWitness,
    ) -> Self {
        CheckReport {
            schema: REPORT_SCHEMA.into(),
            check: check.into(),
            status: Status::Fail,
            checked,
            failures,
            first_failure: Some(witness),
        }
    }

    /// Build from a sweep outcome: failure count plus optional first witness.
    pub fn from_sweep(
        check: impl Into<String>,
        checked: usize,
        failures: usize,
        first: Option<FailureWitness>,
    ) -> Self {
        match (failures, first) {
            (0, _) => CheckReport::pass(check, checked),
            (k, Some(w)) => CheckReport::fail(check, checked, k, w),
            (k, None) => CheckReport::fail(
                check,
                checked,
                k,
                FailureWitness {
                    witness: "witness lost".into(),
                    lhs: String::new(),
                    rhs: String::new(),
                },
            ),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }
}

/// Human-readable fixed-width summary, one row per report.
pub fn render_summary(reports: &[CheckReport]) -> String {
    let name_w = reports
        .iter()
        .map(|r| r.check.len())
        .max()
        .unwrap_or(5)
        .max(5);
    let mut out = String::new();
    for r in reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Vacuous => "pass (vacuous)",
            Status::Fail => "FAIL",
        };
        out.push_str(&format!(
            "{:<name_w$}  {:<14}  checked={}",
            r.check, status, r.checked
        ));
        if let Some(w) = &r.first_failure {
            out.push_str(&format!(
                "  failures={}  at {}: {} != {}",
                r.failures, w.witness, w.lhs, w.rhs
            ));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_checked_pass_is_vacuous() {
        let r = CheckReport::pass("unit", 0);
        assert_eq!(r.status, Status::Vacuous);
        assert!(r.is_pass());
    }

    #[test]
    fn json_line_round_trips() {
        let r = CheckReport::fail(
            "jacobi",
            100,
            2,
            FailureWitness {
                witness: "(3,5,7)".into(),
                lhs: "0".into(),
                rhs: "1/2".into(),
            },
        );
        let line = r.to_json_line();
        assert!(line.contains("\"status\":\"fail\""), "line: {line}");
        let back: CheckReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn summary_marks_failures_loudly() {
        let reports = vec![
            CheckReport::pass("assoc_a", 64),
            CheckReport::fail(
                "unit",
                4,
                1,
                FailureWitness {
                    witness: "1+ * e_0".into(),
                    lhs: "0".into(),
                    rhs: "e_0".into(),
                },
            ),
        ];
        let s = render_summary(&reports);
        assert!(s.contains("FAIL"), "summary: {s}");
        assert!(s.contains("assoc_a"), "summary: {s}");
    }
}
