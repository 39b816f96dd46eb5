//! JSON-lines run reports.
//!
//! A report is a `run` record, one `check` record per check, any number of
//! `fact` records, and a closing `summary`. Wall times appear only when
//! timing is requested, so reports are otherwise byte-for-byte
//! reproducible.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use starbrace::witness::{NamedCheck, Verdict, Witness};

/// `sha256:<hex>` of a canonical text serialization.
pub fn digest(canonical: &str) -> String {
    format!("sha256:{:x}", Sha256::digest(canonical.as_bytes()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// The parameter the check was run at, e.g. `z=3`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Wall time of the batch that produced the check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub time_ms: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub structure_digest: Option<String>,
    pub checks: Vec<CheckRecord>,
    pub facts: Vec<Value>,
    timing: bool,
}

impl RunReport {
    pub fn new(command: impl Into<String>, timing: bool) -> Self {
        RunReport {
            command: command.into(),
            structure_digest: None,
            checks: Vec::new(),
            facts: Vec::new(),
            timing,
        }
    }

    /// Runs `f` and records its checks at parameter `at`.
    pub fn batch(&mut self, at: Option<String>, f: impl FnOnce() -> Vec<NamedCheck>) {
        self.batch_at(|| f().into_iter().map(|c| (at.clone(), c)).collect());
    }

    /// Runs `f` and records its checks, each at its own parameter.
    pub fn batch_at(&mut self, f: impl FnOnce() -> Vec<(Option<String>, NamedCheck)>) {
        let start = Instant::now();
        let checks = f();
        let ms = self.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
        for (at, c) in checks {
            self.push(c.name, at, c.verdict, ms);
        }
    }

    pub fn check(&mut self, name: &str, at: Option<String>, f: impl FnOnce() -> Verdict) {
        self.batch(at, || vec![NamedCheck::new(name, f())]);
    }

    fn push(&mut self, name: String, at: Option<String>, verdict: Verdict, time_ms: Option<f64>) {
        let (status, witness) = match verdict {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        self.checks.push(CheckRecord {
            name,
            at,
            status,
            witness,
            detail: None,
            time_ms,
        });
    }

    pub fn skip(&mut self, name: &str, at: Option<String>, reason: &str) {
        self.checks.push(CheckRecord {
            name: name.to_string(),
            at,
            status: Status::Skipped,
            witness: None,
            detail: Some(reason.to_string()),
            time_ms: None,
        });
    }

    /// Adds a `fact` record; `value` must be a JSON object.
    pub fn fact(&mut self, value: Value) {
        debug_assert!(value.is_object());
        self.facts.push(value);
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// No check failed. Skipped checks do not count against a run.
    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    /// `(name, at)` pairs that occur more than once; empty for every
    /// well-formed report.
    pub fn duplicate_checks(&self) -> Vec<(String, Option<String>)> {
        let mut seen = BTreeSet::new();
        self.checks
            .iter()
            .filter(|c| !seen.insert((c.name.clone(), c.at.clone())))
            .map(|c| (c.name.clone(), c.at.clone()))
            .collect()
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        let mut line = |record: &str, body: Value| {
            let mut m = Map::new();
            m.insert("record".into(), Value::from(record));
            if let Value::Object(fields) = body {
                m.extend(fields);
            }
            writeln!(out, "{}", Value::Object(m)).expect("writing to a string");
        };
        line(
            "run",
            json!({ "command": self.command, "structure_digest": self.structure_digest }),
        );
        for c in &self.checks {
            line("check", serde_json::to_value(c).expect("check records serialize"));
        }
        for f in &self.facts {
            line("fact", f.clone());
        }
        line(
            "summary",
            json!({
                "command": self.command,
                "checks": self.checks.len(),
                "passed": self.count(Status::Pass),
                "failed": self.count(Status::Fail),
                "skipped": self.count(Status::Skipped),
                "status": if self.passed() { "pass" } else { "fail" },
            }),
        );
        out
    }

    /// Failing and skipped checks, then a count line.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        for c in self.checks.iter().filter(|c| c.status != Status::Pass) {
            let at = c.at.as_deref().map(|a| format!(" [{a}]")).unwrap_or_default();
            let why = match (&c.witness, &c.detail) {
                (Some(w), _) => w.to_string(),
                (None, Some(d)) => d.clone(),
                (None, None) => String::new(),
            };
            let tag = if c.status == Status::Fail { "FAIL" } else { "SKIP" };
            writeln!(out, "{tag} {}{at}: {why}", c.name).expect("writing to a string");
        }
        writeln!(
            out,
            "{}: {} checks, {} passed, {} failed, {} skipped",
            self.command,
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        )
        .expect("writing to a string");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_sha256_hex() {
        assert_eq!(
            digest(""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn json_lines_shape() {
        let mut r = RunReport::new("check", false);
        r.structure_digest = Some(digest("x"));
        r.check("ok", None, || Ok(()));
        r.check("bad", Some("z=1".into()), || Err(Witness::mismatch("bad", &[1, 2], 3, 4)));
        r.skip("later", None, "previous level failed");
        r.fact(json!({ "n": 4 }));
        let text = r.to_json_lines();
        let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0]["record"], "run");
        assert_eq!(lines[1]["status"], "pass");
        assert!(lines[1].get("time_ms").is_none());
        assert_eq!(lines[2]["at"], "z=1");
        assert_eq!(lines[2]["witness"]["inputs"], json!([1, 2]));
        assert_eq!(lines[3]["status"], "skipped");
        assert_eq!(lines[4]["n"], 4);
        assert_eq!(lines[5]["failed"], 1);
        assert_eq!(lines[5]["status"], "fail");
        assert!(!r.passed());
        assert!(r.duplicate_checks().is_empty());
        assert!(r.human_summary().contains("FAIL bad [z=1]: bad fails at [1, 2]: expected 3, got 4"));
    }

    #[test]
    fn timing_is_opt_in() {
        let mut r = RunReport::new("check", true);
        r.check("ok", None, || Ok(()));
        assert!(r.checks[0].time_ms.is_some());
    }
}
