//! Named pass/fail results with reproducible counterexamples.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub passed: bool,
    /// Basis indices of the first failing instance, in lexicographic order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checks: Vec<CheckResult>,
}

/// Reports of the contramodule and aYD checks share the same shape.
pub type AydReport = CheckReport;

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::default()
    }

    /// Records a check; it passes iff `witness` is `None`.
    pub fn record(&mut self, id: &str, witness: Option<Vec<usize>>) {
        self.checks.push(CheckResult {
            id: id.to_string(),
            passed: witness.is_none(),
            counterexample: witness,
            note: None,
        });
    }

    pub fn record_note(&mut self, id: &str, witness: Option<Vec<usize>>, note: impl Into<String>) {
        self.record(id, witness);
        self.checks.last_mut().unwrap().note = Some(note.into());
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Status of a named check; panics if it was never recorded.
    pub fn status(&self, id: &str) -> bool {
        self.get(id)
            .unwrap_or_else(|| panic!("no check named {id}"))
            .passed
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.id.as_str())
            .collect()
    }
}

/// Index of the first item for which `fails` holds, scanning in parallel
/// but always reporting the lowest index.
pub fn first_failure<F>(count: usize, fails: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    (0..count).into_par_iter().find_first(|&i| fails(i))
}

/// Splits a flat index into mixed-radix digits, most significant first.
pub fn digits(mut flat: usize, radices: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radices.len()];
    for (slot, &r) in radices.iter().enumerate().rev() {
        out[slot] = flat % r;
        flat /= r;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_lowest() {
        assert_eq!(first_failure(1000, |i| i % 97 == 13 || i == 500), Some(13));
        assert_eq!(first_failure(10, |_| false), None);
    }

    #[test]
    fn report_status() {
        let mut r = CheckReport::new();
        r.record("a", None);
        r.record("b", Some(vec![1, 2]));
        assert!(!r.passed());
        assert_eq!(r.failed_ids(), vec!["b"]);
        assert_eq!(digits(5, &[2, 3]), vec![1, 2]);
    }
}
