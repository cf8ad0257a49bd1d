//! Structured verification reports.
//!
//! Verifiers never panic on a failed axiom; they record each check with both
//! sides rendered canonically, so that deliberately corrupted structures can
//! be observed failing in tests.

use serde_json::{json, Value};

/// One verified (or failed) identity.
#[derive(Clone, Debug)]
pub struct Check {
    /// Short axiom tag, e.g. `coassoc`, `antipode-left`, `action-product`.
    pub axiom: String,
    /// The basis labels or elements the axiom was instantiated at.
    pub labels: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub preset: String,
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(preset: impl Into<String>) -> Self {
        Report {
            preset: preset.into(),
            notes: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn push(
        &mut self,
        axiom: impl Into<String>,
        labels: impl Into<String>,
        pass: bool,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) {
        self.checks.push(Check {
            axiom: axiom.into(),
            labels: labels.into(),
            pass,
            lhs: lhs.into(),
            rhs: rhs.into(),
        });
    }

    /// Record an equality check: passes iff `lhs == rhs`.
    pub fn check_eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        axiom: impl Into<String>,
        labels: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) {
        self.push(axiom, labels, lhs == rhs, lhs.to_string(), rhs.to_string());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn merge(&mut self, other: Report) {
        self.notes.extend(other.notes);
        self.checks.extend(other.checks);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "preset": self.preset,
            "pass": self.passed(),
            "notes": self.notes,
            "checks": self.checks.iter().map(|c| json!({
                "axiom": c.axiom,
                "labels": c.labels,
                "pass": c.pass,
                "lhs": c.lhs,
                "rhs": c.rhs,
            })).collect::<Vec<_>>(),
        })
    }

    /// Plain-text rendering: one line per check, failures show both sides.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("preset: {}\n", self.preset));
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        for c in &self.checks {
            if c.pass {
                out.push_str(&format!("PASS {:<16} {}\n", c.axiom, c.labels));
            } else {
                out.push_str(&format!(
                    "FAIL {:<16} {}: {} != {}\n",
                    c.axiom, c.labels, c.lhs, c.rhs
                ));
            }
        }
        let total = self.checks.len();
        let failed = self.failures().count();
        if failed == 0 {
            out.push_str(&format!("all {total} checks passed\n"));
        } else {
            out.push_str(&format!("{failed} of {total} checks FAILED\n"));
        }
        out
    }
}
