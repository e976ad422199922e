//! JSON run reports: `{version, config_echo, results[], summary{pass, fail, skipped}}`.

use askey_core::report::{Status, VerificationReport};
use askey_core::search::Classification;
use askey_core::ParameterSet;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::catalog_file::shift_summary;

pub const SCHEMA_VERSION: &str = concat!("askey/", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    /// 0 when something passed and nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.fail == 0 && self.pass > 0 {
            0
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub config_echo: Value,
    pub results: Vec<Value>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(config_echo: Value) -> Self {
        RunReport { version: SCHEMA_VERSION.into(), config_echo, results: Vec::new(), summary: Summary::default() }
    }

    /// Appends one result; `status` must be `pass`, `fail` or a skip reason.
    pub fn push(&mut self, result: Value) {
        match result.get("status").and_then(Value::as_str) {
            Some("pass") => self.summary.pass += 1,
            Some("fail") => self.summary.fail += 1,
            _ => self.summary.skipped += 1,
        }
        self.results.push(result);
    }

    /// Recounts the summary from the results (used when reading a file back).
    pub fn recount(&self) -> Summary {
        let mut s = RunReport::new(Value::Null);
        for r in &self.results {
            s.push(r.clone());
        }
        s.summary
    }
}

pub fn params_json(p: &ParameterSet) -> Value {
    let mut m = Map::new();
    m.insert("family".into(), json!(p.family.code()));
    m.insert("N".into(), json!(p.n));
    for (k, v) in p.named() {
        m.insert(k.name().into(), json!(v.to_string()));
    }
    Value::Object(m)
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Inconclusive => "skipped",
        Status::NotApplicable => "skipped",
    }
}

pub fn verification_json(r: &VerificationReport) -> Value {
    let locus: Vec<Value> = r.residual_locus.iter().map(|l| json!({"i": l.i, "x": l.x})).collect();
    json!({
        "id": r.relation_id,
        "status": status_str(r.status),
        "checked": r.checked,
        "params": r.params.iter().map(params_json).collect::<Vec<_>>(),
        "residual_locus": locus,
        "detail": r.detail,
    })
}

/// A result row for something that could not be run (e.g. no admissible draw).
pub fn skipped_json(id: &str, reason: &str) -> Value {
    json!({"id": id, "status": "skipped", "checked": 0, "params": [], "residual_locus": [], "detail": reason})
}

pub fn classification_json(c: &Classification) -> Value {
    json!({
        "family": c.family.code(),
        "kind": c.kind.code(),
        "discovered": c.discovered.iter().map(shift_summary).collect::<Vec<_>>(),
        "matched": c.matched,
        "unmatched": c.unmatched.iter().map(shift_summary).collect::<Vec<_>>(),
        "missing": c.missing,
        "undecided": c.undecided,
        "status": if c.exact() { "pass" } else { "fail" },
    })
}
