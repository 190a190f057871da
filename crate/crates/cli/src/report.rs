//! Machine-readable verification reports.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Case {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wallclock_ms: Option<u64>,
}

/// Cases are sorted by name; `extra` holds command-specific fields.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub cases: Vec<Case>,
    pub summary: Summary,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn case(&self, name: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports contain only serializable values") + "\n"
    }
}

/// Accumulates named residuals; repeated names keep the worst residual.
#[derive(Debug, Clone, Default)]
pub struct Checker {
    cases: BTreeMap<String, (f64, f64, Option<Value>)>,
    tol_override: Option<f64>,
    prefix: String,
}

impl Checker {
    pub fn new(tol_override: Option<f64>) -> Self {
        Self {
            tol_override,
            ..Self::default()
        }
    }

    /// Prepends `prefix.` to subsequently recorded names.
    pub fn set_prefix(&mut self, prefix: &str) {
        self.prefix = if prefix.is_empty() {
            String::new()
        } else {
            format!("{prefix}.")
        };
    }

    fn key(&self, name: &str) -> String {
        format!("{}{}", self.prefix, name)
    }

    /// A floating-point residual; `--tol` replaces `tol` when given.
    pub fn residual(&mut self, name: &str, residual: f64, tol: f64) {
        let tol = self.tol_override.unwrap_or(tol);
        let key = self.key(name);
        let entry = self.cases.entry(key).or_insert((0.0, tol, None));
        if !entry.0.is_nan() && !(residual <= entry.0) {
            entry.0 = residual;
        }
    }

    /// A residual annotated with a measured value (last write wins).
    pub fn with_value(&mut self, name: &str, residual: f64, tol: f64, value: Value) {
        self.residual(name, residual, tol);
        let key = self.key(name);
        if let Some(e) = self.cases.get_mut(&key) {
            e.2 = Some(value);
        }
    }

    /// An exact integer count; never affected by `--tol`.
    pub fn exact(&mut self, name: &str, got: usize, want: usize) {
        let key = self.key(name);
        let residual = got.abs_diff(want) as f64;
        let entry = self.cases.entry(key).or_insert((0.0, 0.0, None));
        entry.0 = entry.0.max(residual);
        entry.2 = Some(Value::from(got));
    }

    pub fn merge(&mut self, other: Checker) {
        self.cases.extend(other.cases);
    }

    pub fn finish(self, suite: &str, seed: u64, extra: Map<String, Value>) -> Report {
        let cases: Vec<Case> = self
            .cases
            .into_iter()
            .map(|(name, (residual, tolerance, value))| Case {
                pass: residual <= tolerance,
                name,
                residual,
                tolerance,
                value,
            })
            .collect();
        let passed = cases.iter().filter(|c| c.pass).count();
        Report {
            suite: suite.to_string(),
            seed,
            summary: Summary {
                passed,
                failed: cases.len() - passed,
                wallclock_ms: None,
            },
            cases,
            extra,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worst_residual_wins_and_nan_fails() {
        let mut c = Checker::new(None);
        c.residual("a", 1e-12, 1e-10);
        c.residual("a", 1e-11, 1e-10);
        c.residual("a", 1e-13, 1e-10);
        c.residual("b", f64::NAN, 1.0);
        c.residual("b", 0.0, 1.0);
        c.exact("n", 3, 3);
        let r = c.finish("t", 0, Map::new());
        assert_eq!(r.case("a").unwrap().residual, 1e-11);
        assert!(!r.case("b").unwrap().pass);
        assert!(r.case("n").unwrap().pass);
        assert_eq!((r.summary.passed, r.summary.failed), (2, 1));
        assert!(r.cases.windows(2).all(|w| w[0].name < w[1].name));
    }

    #[test]
    fn override_skips_exact_cases() {
        let mut c = Checker::new(Some(10.0));
        c.residual("a", 5.0, 1e-10);
        c.exact("n", 2, 1);
        let r = c.finish("t", 0, Map::new());
        assert!(r.case("a").unwrap().pass);
        assert!(!r.case("n").unwrap().pass);
    }
}
