//! Machine-readable run reports.
//!
//! Reports serialize to JSON with stable key order (struct order plus
//! sorted parameter maps) and floats rounded to six decimals, so two runs
//! with identical arguments and seed differ at most in `wall_time_ms`.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl CheckLine {
    pub fn new(
        name: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
        pass: bool,
    ) -> Self {
        Self { name: name.into(), expected: expected.into(), actual: actual.into(), pass }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<CheckLine>,
    pub pass: bool,
    pub wall_time_ms: u64,
}

pub struct ReportBuilder {
    command: String,
    parameters: BTreeMap<String, Value>,
    checks: Vec<CheckLine>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            parameters: BTreeMap::new(),
            checks: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn parameter(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn check(&mut self, line: CheckLine) -> &mut Self {
        self.checks.push(line);
        self
    }

    pub fn finish(self) -> RunReport {
        let pass = self.checks.iter().all(|c| c.pass);
        RunReport {
            command: self.command,
            parameters: self.parameters,
            checks: self.checks,
            pass,
            wall_time_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

/// Round to six decimals so printed floats are reproducible.
pub fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

pub fn to_json(report: &RunReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}
