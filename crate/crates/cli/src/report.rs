//! Run reports with a fixed key order.

use serde::Serialize;
use serde_json::Value;

use qha_core::cyclic::CohomologyResult;
use qha_core::{CheckReport, CheckResult, Field, Theory};

use crate::schema::{content_hash, to_value, Document};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputRef {
    pub name: String,
    pub kind: String,
    pub sha256: String,
}

impl InputRef {
    pub fn new(doc: &Document) -> InputRef {
        InputRef {
            name: doc.name.clone(),
            kind: doc.body.kind().to_string(),
            sha256: content_hash(&to_value(doc)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologySummary {
    pub theory: Theory,
    pub field: String,
    pub dims: Vec<usize>,
    pub n_max: usize,
    pub sign_convention: String,
}

impl CohomologySummary {
    pub fn new(r: &CohomologyResult, n_max: usize) -> CohomologySummary {
        CohomologySummary {
            theory: r.theory,
            field: field_name(r.field),
            dims: r.dims.clone(),
            n_max,
            sign_convention: "lambda = (-1)^n t_n, N = sum_i lambda^i; columns b, -b'; rows 1 - lambda, N".into(),
        }
    }
}

fn field_name(f: Field) -> String {
    match f {
        Field::Rationals => "Q".into(),
        Field::Prime(p) => format!("GF{p}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputRef>,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<CohomologySummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Vec<InputRef>, checks: CheckReport) -> RunReport {
        RunReport {
            command: command.into(),
            inputs,
            passed: checks.passed(),
            checks: checks.checks,
            cohomology: None,
            output: None,
            timing_ms: None,
        }
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn render_pretty(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, if self.passed { "PASS" } else { "FAIL" });
        for i in &self.inputs {
            out += &format!("  input {} ({}) sha256 {}\n", i.name, i.kind, &i.sha256[..16]);
        }
        for c in &self.checks {
            let status = if c.passed { "ok  " } else { "FAIL" };
            out += &format!("  {status} {}", c.id);
            if let Some(w) = &c.counterexample {
                out += &format!("  counterexample {w:?}");
            }
            if let Some(n) = &c.note {
                out += &format!("  ({n})");
            }
            out.push('\n');
        }
        if let Some(h) = &self.cohomology {
            let name = match h.theory {
                Theory::Hochschild => "HH",
                Theory::Cyclic => "HC",
            };
            out += &format!("  {name}^n over {} for n = 0..{}: {:?}\n", h.field, h.dims.len() - 1, h.dims);
            out += &format!("  {}\n", h.sign_convention);
        }
        if let Some(ms) = self.timing_ms {
            out += &format!("  {ms} ms\n");
        }
        out
    }
}
