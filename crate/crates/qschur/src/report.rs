//! Pass/fail records shared by the verification routines and the CLI.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

/// Outcome of one named check. Serializes as
/// `{"check", "status", "instances", "witness"}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub check: String,
    pub instances: usize,
    /// First failing instances (capped), empty on success.
    pub failures: Vec<Value>,
    /// Extra data recorded on success (e.g. a computed value).
    pub info: Option<Value>,
}

const MAX_WITNESSES: usize = 5;

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Self { check: check.into(), instances: 0, failures: Vec::new(), info: None }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record one instance; `Some(witness)` marks a failure.
    pub fn record(&mut self, failure: Option<Value>) {
        self.instances += 1;
        if let Some(w) = failure {
            self.fail(w);
        }
    }

    pub fn fail(&mut self, w: Value) {
        if self.failures.len() < MAX_WITNESSES {
            self.failures.push(w);
        } else if self.failures.len() == MAX_WITNESSES {
            self.failures.push(Value::String("…".into()));
        }
    }

    pub fn check_eq<T: PartialEq + std::fmt::Debug>(&mut self, lhs: &T, rhs: &T, what: impl FnOnce() -> String) {
        if lhs == rhs {
            self.record(None);
        } else {
            self.record(Some(Value::String(format!("{}: {:?} != {:?}", what(), lhs, rhs))));
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.instances += other.instances;
        for f in other.failures {
            self.fail(f);
        }
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("check", &self.check)?;
        m.serialize_entry("status", if self.passed() { "pass" } else { "fail" })?;
        m.serialize_entry("instances", &self.instances)?;
        let witness = if self.passed() { self.info.clone().unwrap_or(Value::Null) } else { Value::Array(self.failures.clone()) };
        m.serialize_entry("witness", &witness)?;
        m.end()
    }
}
