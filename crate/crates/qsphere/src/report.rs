use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use crate::config::RunConfig;

pub const SCHEMA_VERSION: u32 = 1;

/// How `observed` is compared with `expected`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    /// Exact equality of integers, rationals or symbolic objects.
    Exact,
    /// `|observed - expected| <= tolerance`.
    Absolute,
    /// `observed <= expected + tolerance`.
    UpperBound,
    /// `observed >= expected - tolerance`.
    LowerBound,
    /// `observed > expected`.
    StrictLowerBound,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criterion: Option<u8>,
    pub passed: bool,
    /// Informational checks are reported but do not fail the suite.
    pub required: bool,
    pub observed: Value,
    pub expected: Value,
    pub comparison: Comparison,
    pub tolerance: f64,
    pub oracle: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, observed: impl Into<Value>, expected: impl Into<Value>) -> Self {
        Self {
            name: name.into(),
            criterion: None,
            passed,
            required: true,
            observed: observed.into(),
            expected: expected.into(),
            comparison: Comparison::Exact,
            tolerance: 0.0,
            oracle: String::new(),
        }
    }

    pub fn exact(name: &str, observed: impl Into<Value>, expected: impl Into<Value>) -> Self {
        let (o, e) = (observed.into(), expected.into());
        Self::new(name, o == e, o, e)
    }

    pub fn absolute(name: &str, observed: f64, expected: f64, tolerance: f64) -> Self {
        let passed = (observed - expected).abs() <= tolerance;
        Self::new(name, passed, observed, expected).compared(Comparison::Absolute, tolerance)
    }

    pub fn upper_bound(name: &str, observed: f64, bound: f64, tolerance: f64) -> Self {
        let passed = observed <= bound + tolerance;
        Self::new(name, passed, observed, bound).compared(Comparison::UpperBound, tolerance)
    }

    pub fn lower_bound(name: &str, observed: f64, bound: f64, tolerance: f64) -> Self {
        let passed = observed >= bound - tolerance;
        Self::new(name, passed, observed, bound).compared(Comparison::LowerBound, tolerance)
    }

    pub fn strict_lower_bound(name: &str, observed: f64, bound: f64) -> Self {
        Self::new(name, observed > bound, observed, bound).compared(Comparison::StrictLowerBound, 0.0)
    }

    pub fn compared(mut self, comparison: Comparison, tolerance: f64) -> Self {
        self.comparison = comparison;
        self.tolerance = tolerance;
        self
    }

    pub fn criterion(mut self, c: u8) -> Self {
        self.criterion = Some(c);
        self
    }

    pub fn oracle(mut self, oracle: &str) -> Self {
        self.oracle = oracle.into();
        self
    }

    pub fn informational(mut self) -> Self {
        self.required = false;
        self
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Suite {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub data: Value,
}

impl Suite {
    pub fn new(name: &str, checks: Vec<Check>, data: Value) -> Self {
        Self {
            name: name.into(),
            passed: checks.iter().all(|c| c.passed || !c.required),
            checks,
            data,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub schema_version: u32,
    pub command: &'static str,
    pub config: RunConfig,
    pub passed: bool,
    pub suites: Vec<Suite>,
}

impl Report {
    pub fn new(command: &'static str, config: RunConfig, suites: Vec<Suite>) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            schema_version: SCHEMA_VERSION,
            command,
            config,
            passed: suites.iter().all(|s| s.passed),
            suites,
        }
    }

    /// Required checks that failed, as `suite/check`.
    pub fn failures(&self) -> Vec<String> {
        self.suites
            .iter()
            .flat_map(|s| {
                s.checks
                    .iter()
                    .filter(|c| c.required && !c.passed)
                    .map(move |c| format!("{}/{}", s.name, c.name))
            })
            .collect()
    }

    /// Pass/fail per acceptance criterion, in criterion order.
    pub fn criteria(&self) -> Vec<(u8, bool, Vec<String>)> {
        let mut out: Vec<(u8, bool, Vec<String>)> = Vec::new();
        for s in &self.suites {
            for c in &s.checks {
                let Some(n) = c.criterion else { continue };
                let ok = c.passed || !c.required;
                match out.iter_mut().find(|e| e.0 == n) {
                    Some(e) => {
                        e.1 &= ok;
                        e.2.push(format!("{}/{}", s.name, c.name));
                    }
                    None => out.push((n, ok, vec![format!("{}/{}", s.name, c.name)])),
                }
            }
        }
        out.sort_by_key(|e| e.0);
        out
    }

    pub fn write_json(&self, mut w: impl Write) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut w, self)?;
        w.write_all(b"\n")
    }
}
