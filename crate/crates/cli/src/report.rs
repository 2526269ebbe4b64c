//! Reports: per-check status, defect locations, counts and homology tables.
//!
//! Every map is ordered, so a report renders to the same bytes whenever
//! the inputs agree. Wall-clock timing is the one nondeterministic field
//! and is only filled in on request.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::workspace::Settings;
use crate::{field_name, sign_mode_name, EXIT_DEFECTS, EXIT_PASS};

/// At most this many defect locations are listed per check.
const MAX_DEFECTS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format {s:?}; use json or text")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub defects: Vec<String>,
    /// defects beyond the listed ones
    #[serde(skip_serializing_if = "is_zero")]
    pub more: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub field: String,
    pub seed: u64,
    pub sign_mode: String,
    pub status: Status,
    /// the constructed object or headline results, one line each
    pub lines: Vec<String>,
    pub checks: Vec<Check>,
    pub counts: BTreeMap<String, usize>,
    /// named tables of dimensions by degree
    pub tables: BTreeMap<String, BTreeMap<i32, usize>>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub output: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: impl Into<String>, settings: &Settings) -> Self {
        Report {
            command: command.into(),
            field: field_name(settings.field),
            seed: settings.seed,
            sign_mode: sign_mode_name(settings.sign_mode).into(),
            status: Status::Pass,
            lines: Vec::new(),
            checks: Vec::new(),
            counts: BTreeMap::new(),
            tables: BTreeMap::new(),
            warnings: Vec::new(),
            output: serde_json::Value::Null,
            timing_ms: None,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn warn(&mut self, s: impl Into<String>) {
        self.warnings.push(s.into());
    }

    pub fn count(&mut self, key: impl Into<String>, n: usize) {
        *self.counts.entry(key.into()).or_insert(0) += n;
    }

    pub fn table(&mut self, name: impl Into<String>, t: BTreeMap<i32, usize>) {
        self.tables.insert(name.into(), t);
    }

    /// A check that passes iff `defects` is empty.
    pub fn defects(&mut self, name: impl Into<String>, detail: impl Into<String>, defects: Vec<String>) {
        let status = Status::of(defects.is_empty());
        let more = defects.len().saturating_sub(MAX_DEFECTS);
        let defects = defects.into_iter().take(MAX_DEFECTS).collect();
        self.push(Check { name: name.into(), status, detail: detail.into(), defects, more });
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(Check { name: name.into(), status: Status::of(ok), detail: detail.into(), defects: Vec::new(), more: 0 });
    }

    fn push(&mut self, c: Check) {
        if c.status == Status::Fail {
            self.status = Status::Fail;
        }
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_PASS
        } else {
            EXIT_DEFECTS
        }
    }

    pub fn check_named(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command);
        let _ = writeln!(s, "field: {}  seed: {}  sign-mode: {}", self.field, self.seed, self.sign_mode);
        for l in &self.lines {
            let _ = writeln!(s, "{l}");
        }
        for c in &self.checks {
            let detail = if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) };
            let _ = writeln!(s, "[{}] {}{}", c.status.tag(), c.name, detail);
            for d in &c.defects {
                let _ = writeln!(s, "    defect {d}");
            }
            if c.more > 0 {
                let _ = writeln!(s, "    … {} more", c.more);
            }
        }
        for (k, v) in &self.counts {
            let _ = writeln!(s, "count {k} = {v}");
        }
        for (name, t) in &self.tables {
            let row: Vec<String> = t.iter().map(|(d, n)| format!("{d}:{n}")).collect();
            let _ = writeln!(s, "table {name} = {}", row.join(" "));
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(s, "time: {t} ms");
        }
        let _ = writeln!(s, "status: {}", if self.passed() { "pass" } else { "fail" });
        s
    }
}
