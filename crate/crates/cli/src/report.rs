//! Versioned JSON reports and their human-readable rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use liebialg::exact::{format_rational, QMatrix, Rational};
use liebialg::liealg::LieAlgebra;
use serde::Serialize;
use serde_json::Value;

/// Schema identifier written at the top of every report.
pub const SCHEMA: &str = "liebialg-report/1";

/// Algebra description embedded in a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraInfo {
    /// Display name.
    pub name: String,
    /// Catalog name or file path.
    pub source: String,
    /// Dimension.
    pub dim: usize,
    /// Parameter values as rational strings.
    pub params: BTreeMap<String, String>,
    /// Nonzero brackets, e.g. `[e1,e2] = 1*e2`.
    pub brackets: Vec<String>,
}

impl AlgebraInfo {
    /// Describes an algebra.
    pub fn new(g: &LieAlgebra, source: &str) -> Self {
        AlgebraInfo {
            name: g.name().to_string(),
            source: source.to_string(),
            dim: g.dim(),
            params: params_strings(g.params()),
            brackets: g.describe(),
        }
    }
}

/// One check with its outcome.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    /// Short name, unique within the report.
    pub name: String,
    /// Stable identifier of the statement being checked, e.g. `killing/sl2/L3`.
    pub anchor: String,
    /// Outcome.
    pub passed: bool,
    /// Computed values and witnesses.
    pub details: Value,
    /// Error raised by the library, when the check could not run.
    pub error: Option<String>,
}

impl Check {
    /// A check that ran to completion.
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, passed: bool, details: Value) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            passed,
            details,
            error: None,
        }
    }

    /// A check that failed with a library error.
    pub fn failed(name: impl Into<String>, anchor: impl Into<String>, error: impl ToString) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            passed: false,
            details: Value::Null,
            error: Some(error.to_string()),
        }
    }
}

/// Pass and fail counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    /// Number of checks.
    pub total: usize,
    /// Number of passing checks.
    pub passed: usize,
    /// Number of failing checks.
    pub failed: usize,
}

/// Wall-clock timing; the only field that varies between identical runs.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Timing {
    /// Elapsed milliseconds.
    pub total_ms: f64,
}

/// Top-level report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    /// Always [`SCHEMA`].
    pub schema: &'static str,
    /// Tool name.
    pub tool: &'static str,
    /// Tool version.
    pub version: &'static str,
    /// Subcommand that produced the report.
    pub command: String,
    /// Algebra the command ran on, if a single one.
    pub algebra: Option<AlgebraInfo>,
    /// Checks in execution order.
    pub checks: Vec<Check>,
    /// Command-specific output.
    pub data: Value,
    /// Counts over `checks`.
    pub summary: Summary,
    /// Timing.
    pub timing: Timing,
}

impl Report {
    /// Assembles a report and computes its summary.
    pub fn new(command: &str, algebra: Option<AlgebraInfo>, checks: Vec<Check>, data: Value) -> Self {
        let passed = checks.iter().filter(|c| c.passed).count();
        Report {
            schema: SCHEMA,
            tool: "liebialg",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            algebra,
            summary: Summary {
                total: checks.len(),
                passed,
                failed: checks.len() - passed,
            },
            checks,
            data,
            timing: Timing { total_ms: 0.0 },
        }
    }

    /// True when every check passed.
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Process exit code: 0 when all checks pass, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    /// JSON text; pretty-printed on request.
    pub fn to_json(&self, pretty: bool) -> String {
        let out = if pretty {
            serde_json::to_string_pretty(self)
        } else {
            serde_json::to_string(self)
        };
        out.expect("report serializes")
    }

    /// Plain-text table of the checks.
    pub fn table(&self) -> String {
        let mut out = String::new();
        if let Some(a) = &self.algebra {
            let _ = writeln!(out, "algebra {} (dim {}, from {})", a.name, a.dim, a.source);
            for b in &a.brackets {
                let _ = writeln!(out, "  {b}");
            }
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        let _ = writeln!(out, "{:<width$}  {:<6}  anchor", "check", "result");
        for c in &self.checks {
            let result = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{:<width$}  {:<6}  {}", c.name, result, c.anchor);
            if let Some(e) = &c.error {
                let _ = writeln!(out, "{:<width$}  error: {e}", "");
            }
        }
        let _ = writeln!(
            out,
            "{} checks, {} passed, {} failed, {:.1} ms",
            self.summary.total, self.summary.passed, self.summary.failed, self.timing.total_ms
        );
        out
    }
}

/// Parameters as rational strings.
pub fn params_strings(p: &BTreeMap<String, Rational>) -> BTreeMap<String, String> {
    p.iter().map(|(k, v)| (k.clone(), format_rational(v))).collect()
}

/// Matrix as nested arrays of rational strings.
pub fn matrix_json(m: &QMatrix) -> Value {
    Value::from(
        m.to_rows()
            .iter()
            .map(|r| Value::from(r.iter().map(format_rational).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
    )
}

/// Vector as an array of rational strings.
pub fn vector_json(v: &[Rational]) -> Value {
    Value::from(v.iter().map(format_rational).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn summary_and_exit_code() {
        let ok = Report::new("x", None, vec![Check::new("a", "a/1", true, json!(1))], Value::Null);
        assert_eq!(ok.exit_code(), 0);
        let bad = Report::new(
            "x",
            None,
            vec![Check::new("a", "a/1", true, Value::Null), Check::failed("b", "b/1", "boom")],
            Value::Null,
        );
        assert_eq!(bad.summary, Summary { total: 2, passed: 1, failed: 1 });
        assert_eq!(bad.exit_code(), 1);
        assert!(bad.table().contains("error: boom"));
    }

    #[test]
    fn schema_is_the_first_field() {
        let r = Report::new("x", None, Vec::new(), Value::Null);
        assert!(r.to_json(false).starts_with("{\"schema\":\"liebialg-report/1\""));
    }
}
