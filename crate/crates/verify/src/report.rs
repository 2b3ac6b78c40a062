use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one checker on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub instance: Value,
    pub verdict: Verdict,
    pub lhs: String,
    pub rhs: String,
    pub scalars: Vec<String>,
    /// First point where the sides differ, with both values.
    pub witness: Option<Value>,
    /// Set when the instance lies outside the theorem's standing assumptions.
    pub degenerate: bool,
    pub p: u32,
    pub notes: Vec<String>,
    /// Checker-specific structured findings.
    pub details: Value,
    pub timing_ms: u64,
}

impl VerificationReport {
    pub(crate) fn new(theorem: &str, instance: Value, p: u32) -> Self {
        Self {
            theorem: theorem.to_string(),
            instance,
            verdict: Verdict::Pass,
            lhs: String::new(),
            rhs: String::new(),
            scalars: Vec::new(),
            witness: None,
            degenerate: false,
            p,
            notes: Vec::new(),
            details: Value::Null,
            timing_ms: 0,
        }
    }

    pub(crate) fn fail(&mut self, witness: Value) {
        if self.verdict == Verdict::Pass {
            self.verdict = Verdict::Fail;
            self.witness = Some(witness);
        }
    }

    pub(crate) fn finish(mut self, start: Instant) -> Self {
        self.timing_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialise")
    }

    /// JSON with sorted keys and without the timing field.
    pub fn canonical_json(&self) -> String {
        let mut v = self.to_json();
        v.as_object_mut().expect("report is an object").remove("timing_ms");
        v.to_string()
    }
}

/// SHA-256 over the canonical JSON of the reports, one per line.
pub fn digest(reports: &[VerificationReport]) -> String {
    let mut h = Sha256::new();
    for r in reports {
        h.update(r.canonical_json().as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}
