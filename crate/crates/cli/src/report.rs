use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use spunemb::surgery_calc::SignConvention;

pub const SCHEMA: &str = "spunemb.run/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: String,
    pub command: Vec<String>,
    pub convention: SignConvention,
    pub inputs: Value,
    pub outputs: Value,
    pub checks: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    /// Human-readable summary lines.
    #[serde(default)]
    pub summary: Vec<String>,
}

impl RunReport {
    pub fn new(command: Vec<String>, inputs: Value) -> Self {
        RunReport {
            schema: SCHEMA.into(),
            command,
            convention: SignConvention::default(),
            inputs,
            outputs: Value::Null,
            checks: Vec::new(),
            timestamp: None,
            summary: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.summary.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn stamp(&mut self) {
        self.timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs());
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for l in &self.summary {
            out.push_str(l);
            out.push('\n');
        }
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                out.push_str(&format!("[{mark}] {}\n", c.name));
            } else {
                out.push_str(&format!("[{mark}] {}: {}\n", c.name, c.detail));
            }
        }
        out
    }
}
