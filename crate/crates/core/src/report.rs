//! Machine-readable verification reports.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Informational,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckEntry {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub witnesses: Value,
}

impl CheckEntry {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, status: Status, witnesses: Value) -> Self {
        Self {
            id: id.into(),
            statement: statement.into(),
            status,
            witnesses,
        }
    }

    pub fn check(id: impl Into<String>, statement: impl Into<String>, ok: bool, witnesses: Value) -> Self {
        Self::new(id, statement, Status::from_bool(ok), witnesses)
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub informational: usize,
    pub exit_status: i32,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckEntry>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        match entry.status {
            Status::Pass => self.summary.passed += 1,
            Status::Fail => {
                self.summary.failed += 1;
                self.summary.exit_status = 1;
            }
            Status::Informational => self.summary.informational += 1,
        }
        self.checks.push(entry);
    }

    pub fn extend(&mut self, entries: impl IntoIterator<Item = CheckEntry>) {
        for e in entries {
            self.push(e);
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.summary.exit_status
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Informational => "INFO",
            };
            let _ = writeln!(out, "[{tag}] {}: {}", c.id, c.statement);
            if c.status != Status::Pass && !c.witnesses.is_null() {
                let _ = writeln!(out, "       {}", c.witnesses);
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} informational",
            s.passed, s.failed, s.informational
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn exit_status_tracks_failures() {
        let mut r = Report::new("test");
        r.push(CheckEntry::check("a", "holds", true, Value::Null));
        r.push(CheckEntry::new("b", "noted", Status::Informational, json!({"at": 0})));
        assert_eq!(r.exit_code(), 0);
        r.push(CheckEntry::check("c", "breaks", false, json!([1, 2])));
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.summary.passed, 1);
        assert!(r.to_text().contains("[FAIL] c"));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["checks"][1]["status"], "informational");
    }
}
