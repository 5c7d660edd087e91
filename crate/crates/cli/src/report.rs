use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;

pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Informational result that never affects the exit code.
    ReportOnly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    /// Present for failures, and for report-only items whose identity does not hold.
    pub witness: Option<String>,
    /// Wall-clock time in microseconds; omitted in deterministic mode.
    pub duration_us: Option<u64>,
    pub details: serde_json::Value,
}

impl Check {
    pub fn gated(id: impl Into<String>, passed: bool, witness: Option<String>, details: serde_json::Value) -> Self {
        Check {
            id: id.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            witness: if passed { None } else { witness.or_else(|| Some("check failed".into())) },
            duration_us: None,
            details,
        }
    }

    pub fn report_only(id: impl Into<String>, witness: Option<String>, details: serde_json::Value) -> Self {
        Check { id: id.into(), status: Status::ReportOnly, witness, duration_us: None, details }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub report_only: usize,
    pub exit_code: i32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub tool: String,
    pub tool_version: String,
    pub suite: String,
    pub config: serde_json::Value,
    /// Seconds since the Unix epoch; omitted in deterministic mode.
    pub timestamp_unix: Option<u64>,
    pub summary: Summary,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>, config: serde_json::Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION.into(),
            tool: "qsusy".into(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            suite: suite.into(),
            config,
            timestamp_unix: None,
            summary: Summary::default(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
        self.finish();
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.finish();
    }

    /// Sorts checks by id and recomputes the summary.
    pub fn finish(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        let count = |s: Status| self.checks.iter().filter(|c| c.status == s).count();
        let failed = count(Status::Fail);
        self.summary = Summary {
            total: self.checks.len(),
            passed: count(Status::Pass),
            failed,
            report_only: count(Status::ReportOnly),
            exit_code: if failed == 0 { 0 } else { 1 },
        };
    }

    pub fn stamp(&mut self) {
        self.timestamp_unix = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs());
    }

    /// Removes wall-clock fields so that equal configurations give identical bytes.
    pub fn strip_timing(&mut self) {
        self.timestamp_unix = None;
        for c in &mut self.checks {
            c.duration_us = None;
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }

    /// Pretty JSON with lexicographically sorted object keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report values are always representable");
        let mut s = serde_json::to_string_pretty(&value).expect("in-memory JSON serialises");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "qsusy {} suite '{}'", self.tool_version, self.suite);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::ReportOnly => "INFO",
            };
            let _ = write!(out, "  [{tag}] {}", c.id);
            if let Some(us) = c.duration_us {
                let _ = write!(out, " ({:.1} ms)", us as f64 / 1000.0);
            }
            out.push('\n');
            if let Some(result) = c.details.get("result").and_then(|v| v.as_str()) {
                let _ = writeln!(out, "         = {result}");
            }
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "         {w}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} checks: {} passed, {} failed, {} report-only; exit code {}",
            s.total, s.passed, s.failed, s.report_only, s.exit_code
        );
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }

    pub fn write_to(&self, format: Format, path: &Path) -> Result<(), ReportIoError> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).map_err(|e| ReportIoError { path: dir.display().to_string(), source: e })?;
        }
        std::fs::write(path, self.render(format)).map_err(|e| ReportIoError { path: path.display().to_string(), source: e })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Text => "txt",
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("cannot write report to {path}: {source}")]
pub struct ReportIoError {
    pub path: String,
    #[source]
    pub source: std::io::Error,
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn empty_report_is_valid_json() {
        let mut r = Report::new("empty", json!({}));
        r.finish();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["summary"]["total"], 0);
        assert_eq!(v["checks"], json!([]));
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn failure_sets_exit_code_and_keeps_witness() {
        let mut r = Report::new("t", json!({}));
        r.push(Check::gated("b", true, None, json!(null)));
        r.push(Check::gated("a", false, Some("E*F != F*E".into()), json!(null)));
        r.push(Check::report_only("c", Some("does not hold".into()), json!(null)));
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.checks[0].id, "a");
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.checks[0].witness.as_deref(), Some("E*F != F*E"));
    }

    #[test]
    fn report_only_never_gates() {
        let mut r = Report::new("t", json!({}));
        r.push(Check::report_only("x", Some("fails".into()), json!(null)));
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.summary.report_only, 1);
    }

    #[test]
    fn keys_are_sorted() {
        let mut r = Report::new("t", json!({"zeta": 1, "alpha": 2}));
        r.finish();
        let s = r.to_json();
        assert!(s.find("\"alpha\"").unwrap() < s.find("\"zeta\"").unwrap());
        assert!(s.find("\"checks\"").unwrap() < s.find("\"tool\"").unwrap());
    }

    #[test]
    fn write_errors_name_the_path() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        std::fs::write(&blocker, "x").unwrap();
        let target = blocker.join("report.json");
        let err = Report::new("t", json!({})).write_to(Format::Json, &target).unwrap_err();
        assert!(err.to_string().contains("file"));
    }
}
