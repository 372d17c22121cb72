//! Machine-readable verification reports.
//!
//! Every verifying command produces a [`VerificationReport`]: the
//! command, its inputs, one [`CheckResult`] per check, the overall
//! verdict, and the elapsed time. Identical invocations produce
//! identical reports except for the timing field, which callers strip
//! when comparing runs.

use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub holds: bool,
    pub details: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub command: String,
    pub inputs: Vec<String>,
    pub checks: Vec<CheckResult>,
    pub verdict: Verdict,
    pub timing_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Copy with the timing zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> VerificationReport {
        VerificationReport {
            timing_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if !self.inputs.is_empty() {
            out.push_str(&format!("inputs: {}\n", self.inputs.join(" ")));
        }
        for check in &self.checks {
            let mark = if check.holds { "ok  " } else { "FAIL" };
            out.push_str(&format!("{mark} {}: {}\n", check.name, check.details));
        }
        out.push_str(&format!(
            "verdict: {}\n",
            match self.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
            }
        ));
        out.push_str(&format!("elapsed-ms: {}\n", self.timing_ms));
        out
    }
}

/// Incremental builder; the verdict is PASS exactly when every recorded
/// check holds.
pub struct ReportBuilder {
    command: String,
    inputs: Vec<String>,
    checks: Vec<CheckResult>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(command: &str, inputs: Vec<String>) -> ReportBuilder {
        ReportBuilder {
            command: command.to_string(),
            inputs,
            checks: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, holds: bool, details: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            holds,
            details: details.into(),
        });
    }

    /// Absorb another report's checks under a name prefix.
    pub fn merge(&mut self, prefix: &str, report: &VerificationReport) {
        for check in &report.checks {
            self.checks.push(CheckResult {
                name: format!("{prefix}.{}", check.name),
                holds: check.holds,
                details: check.details.clone(),
            });
        }
    }

    pub fn finish(self) -> VerificationReport {
        let verdict = if self.checks.iter().all(|c| c.holds) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationReport {
            command: self.command,
            inputs: self.inputs,
            checks: self.checks,
            verdict,
            timing_ms: self.started.elapsed().as_millis(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_follows_checks() {
        let mut b = ReportBuilder::new("demo", vec![]);
        b.check("one", true, "fine");
        let r = b.finish();
        assert!(r.passed());

        let mut b = ReportBuilder::new("demo", vec![]);
        b.check("one", true, "fine");
        b.check("two", false, "broken");
        let r = b.finish();
        assert!(!r.passed());
        assert!(r.render_text().contains("FAIL two"));
    }

    #[test]
    fn json_strips_cleanly() {
        let mut b = ReportBuilder::new("demo", vec!["seed=1".into()]);
        b.check("one", true, "fine");
        let r = b.finish();
        let a = r.without_timing().to_json();
        let b2 = r.without_timing().to_json();
        assert_eq!(a, b2);
        assert!(a.contains("\"verdict\": \"PASS\""));
    }
}
