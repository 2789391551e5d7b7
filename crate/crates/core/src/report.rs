//! Verdict records shared by the verification suites and the command line.

use std::fmt;

use serde::Serialize;

/// Whether a check is backed by a theorem (gating) or by an open conjecture (informational).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Theorem,
    Conjecture,
}

/// One named pass/fail check; failures carry a human-readable witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub level: Level,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            level: Level::Theorem,
            pass: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            level: Level::Theorem,
            pass: false,
            witness: Some(witness.into()),
        }
    }

    /// Passes when `ok`; otherwise fails with the lazily built witness.
    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }

    pub fn conjecture(mut self) -> Self {
        self.level = Level::Conjecture;
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {}", self.name)?;
        if let Some(w) = &self.witness {
            write!(f, " -- {w}")?;
        }
        Ok(())
    }
}

/// The coefficient that attains (or violates) a valuation bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub term: String,
    pub coefficient: String,
    pub valuation: i64,
}

/// Result of an `O(α^k)` test on an object with α-dependent coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationVerdict {
    pub inputs: String,
    pub required_valuation: i64,
    /// `None` when the tested object is zero (the bound then holds vacuously).
    pub achieved_valuation: Option<i64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ValuationVerdict {
    pub fn new(
        inputs: impl Into<String>,
        required: i64,
        achieved: Option<i64>,
        witness: Option<Witness>,
    ) -> Self {
        let pass = achieved.is_none_or(|v| v >= required);
        ValuationVerdict {
            inputs: inputs.into(),
            required_valuation: required,
            achieved_valuation: achieved,
            pass,
            witness: if pass { None } else { witness },
        }
    }
}

impl fmt::Display for ValuationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let achieved = self
            .achieved_valuation
            .map_or_else(|| String::from("inf"), |v| v.to_string());
        write!(
            f,
            "[{status}] {}: valuation {achieved} (required {})",
            self.inputs, self.required_valuation
        )?;
        if let Some(w) = &self.witness {
            write!(
                f,
                " -- {} has coefficient {} of valuation {}",
                w.term, w.coefficient, w.valuation
            )?;
        }
        Ok(())
    }
}

/// A named collection of checks with a summary.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteReport {
            suite: suite.into(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn theorem_failures(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| !c.pass && c.level == Level::Theorem)
    }

    pub fn conjecture_findings(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| !c.pass && c.level == Level::Conjecture)
    }

    /// All theorem-level checks pass; conjecture-level findings do not count.
    pub fn passed(&self) -> bool {
        self.theorem_failures().next().is_none()
    }

    pub fn summary(&self) -> String {
        let theorem = self
            .checks
            .iter()
            .filter(|c| c.level == Level::Theorem)
            .count();
        let conj = self.checks.len() - theorem;
        format!(
            "{}: {} theorem-level checks, {} failed; {} conjecture-level checks, {} findings",
            self.suite,
            theorem,
            self.theorem_failures().count(),
            conj,
            self.conjecture_findings().count()
        )
    }
}
