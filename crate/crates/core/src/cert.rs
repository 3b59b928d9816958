//! Machine-readable verdicts.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    pub max_weight: Option<usize>,
    pub reliable_weight: Option<usize>,
    pub window: Option<(i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub check: String,
    pub params: Params,
    pub verdict: Verdict,
    pub tables: BTreeMap<String, Value>,
    /// Counterexample on failure: which identity broke and where.
    pub witness: Option<Value>,
}

impl Certificate {
    pub fn new(check: &str) -> Self {
        Certificate {
            check: check.into(),
            params: Params::default(),
            verdict: Verdict::Pass,
            tables: BTreeMap::new(),
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Records a failure; only the first witness is kept.
    pub fn fail(&mut self, axiom: &str, at: impl Into<String>, detail: impl Into<String>) {
        if self.verdict == Verdict::Pass {
            self.witness = Some(serde_json::json!({
                "axiom": axiom,
                "at": at.into(),
                "detail": detail.into(),
            }));
        }
        self.verdict = Verdict::Fail;
    }

    pub fn table(&mut self, name: &str, v: impl Serialize) {
        self.tables.insert(
            name.into(),
            serde_json::to_value(v).expect("tables serialize"),
        );
    }

    pub fn with_params(mut self, p: Params) -> Self {
        self.params = p;
        self
    }

    /// Failed axiom name, if any.
    pub fn failed_axiom(&self) -> Option<&str> {
        self.witness.as_ref()?.get("axiom")?.as_str()
    }

    pub fn merge(&mut self, other: &Certificate) {
        if !other.passed() && self.passed() {
            self.witness = other.witness.clone();
            self.verdict = Verdict::Fail;
        }
        for (k, v) in &other.tables {
            self.tables
                .insert(format!("{}.{}", other.check, k), v.clone());
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}
