//! Verification reports: one entry per checked claim, rendered as text or JSON.

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Printed in the published tables or statements.
    Published,
    /// Follows from a definition or elementary arithmetic.
    Trivial,
    /// Computed independently by another route.
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// Work budget ran out; `computed` holds what was established.
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub claim: String,
    /// Short human label of the statement being checked.
    pub anchor: String,
    pub computed: Value,
    pub expected: Value,
    pub provenance: Provenance,
    pub outcome: Outcome,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl Check {
    pub fn new(
        claim: &str,
        anchor: &str,
        computed: impl Serialize,
        expected: impl Serialize,
        provenance: Provenance,
        pass: bool,
    ) -> Self {
        Check {
            claim: claim.to_string(),
            anchor: anchor.to_string(),
            computed: serde_json::to_value(computed).expect("serializable"),
            expected: serde_json::to_value(expected).expect("serializable"),
            provenance,
            outcome: if pass { Outcome::Pass } else { Outcome::Fail },
            pass,
            elapsed_ms: 0,
        }
    }

    /// Check whose computation stopped at a work cap.
    pub fn budget_exceeded(
        claim: &str,
        anchor: &str,
        partial: impl Serialize,
        expected: impl Serialize,
        provenance: Provenance,
    ) -> Self {
        Check {
            outcome: Outcome::BudgetExceeded,
            ..Check::new(claim, anchor, partial, expected, provenance, false)
        }
    }

    /// Equality check.
    pub fn equal<T: Serialize + PartialEq>(
        claim: &str,
        anchor: &str,
        computed: T,
        expected: T,
        provenance: Provenance,
    ) -> Self {
        let pass = computed == expected;
        Check::new(claim, anchor, computed, expected, provenance, pass)
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed_ms = elapsed.as_millis() as u64;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    /// 0 when every check passes, 1 on any failure, 3 when the only problems
    /// are exhausted budgets, 2 for an empty report.
    pub fn exit_code(&self) -> i32 {
        if self.checks.is_empty() {
            2
        } else if self.checks.iter().any(|c| c.outcome == Outcome::Fail) {
            1
        } else if self.checks.iter().any(|c| c.outcome == Outcome::BudgetExceeded) {
            3
        } else {
            0
        }
    }

    /// Checks with failures first, otherwise in insertion order.
    pub fn ordered(&self) -> Vec<&Check> {
        let mut out: Vec<&Check> = self.checks.iter().filter(|c| !c.pass).collect();
        out.extend(self.checks.iter().filter(|c| c.pass));
        out
    }

    pub fn render_text(&self) -> String {
        if self.checks.is_empty() {
            return "no checks requested\n".to_string();
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        let mut s = format!(
            "{} checks, {} passed, {} failed\n",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        );
        for c in self.ordered() {
            let tag = match c.outcome {
                Outcome::Pass => "PASS",
                Outcome::Fail => "FAIL",
                Outcome::BudgetExceeded => "BUDGET",
            };
            let _ = writeln!(
                s,
                "{tag} {} [{}] computed={} expected={} ({:?}, {} ms)",
                c.claim, c.anchor, c.computed, c.expected, c.provenance, c.elapsed_ms
            );
        }
        s
    }

    pub fn render_json(&self) -> String {
        let ordered = VerificationReport {
            checks: self.ordered().into_iter().cloned().collect(),
        };
        serde_json::to_string_pretty(&ordered).expect("serializable") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let r = VerificationReport::default();
        assert_eq!(r.render_text(), "no checks requested\n");
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn single_pass() {
        let mut r = VerificationReport::default();
        r.push(Check::equal("dim", "dimension", 26, 26, Provenance::Published));
        assert_eq!(r.exit_code(), 0);
        let text = r.render_text();
        assert!(text.starts_with("1 checks, 1 passed, 0 failed\nPASS dim [dimension]"));
        let json: Value = serde_json::from_str(&r.render_json()).unwrap();
        assert_eq!(json["checks"][0]["pass"], true);
        assert_eq!(json["checks"][0]["provenance"], "published");
    }

    #[test]
    fn failures_are_listed_first() {
        let mut r = VerificationReport::default();
        r.push(Check::equal("a", "a", 1, 1, Provenance::Trivial));
        r.push(Check::equal("b", "b", 1, 2, Provenance::Derived));
        r.push(Check::budget_exceeded("c", "c", 0, 1, Provenance::Derived));
        assert_eq!(r.exit_code(), 1);
        let claims: Vec<&str> = r.ordered().iter().map(|c| c.claim.as_str()).collect();
        assert_eq!(claims, ["b", "c", "a"]);
    }

    #[test]
    fn budget_only_gives_exit_3() {
        let mut r = VerificationReport::default();
        r.push(Check::equal("a", "a", 1, 1, Provenance::Trivial));
        r.push(Check::budget_exceeded("c", "c", 0, 1, Provenance::Derived));
        assert_eq!(r.exit_code(), 3);
    }
}
