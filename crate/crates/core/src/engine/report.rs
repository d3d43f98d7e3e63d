//! Verdicts with witnesses and the cross-checks that must agree with them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};

/// How a cross-check relates to the primary verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Must equal the primary verdict.
    Equivalent,
    /// Must hold whenever the primary verdict is true.
    Necessary,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossCheck {
    pub name: String,
    pub verdict: bool,
    pub relation: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PredicateReport {
    pub predicate: String,
    pub subject: String,
    pub verdict: bool,
    /// Indecomposables examined by the primary route.
    pub universe: usize,
    pub witnesses: Vec<String>,
    pub crosschecks: Vec<CrossCheck>,
    /// Part of the verdict rests on a finite sample or a bounded search.
    pub bounded: bool,
}

impl PredicateReport {
    pub fn new(
        predicate: &str,
        subject: impl Into<String>,
        verdict: bool,
        universe: usize,
    ) -> PredicateReport {
        PredicateReport {
            predicate: String::from(predicate),
            subject: subject.into(),
            verdict,
            universe,
            witnesses: Vec::new(),
            crosschecks: Vec::new(),
            bounded: false,
        }
    }

    pub fn witness(mut self, w: impl Into<String>) -> PredicateReport {
        self.witnesses.push(w.into());
        self
    }

    pub fn equivalent(mut self, name: &str, verdict: bool) -> PredicateReport {
        self.crosschecks.push(CrossCheck {
            name: String::from(name),
            verdict,
            relation: Relation::Equivalent,
        });
        self
    }

    pub fn necessary(mut self, name: &str, verdict: bool) -> PredicateReport {
        self.crosschecks.push(CrossCheck {
            name: String::from(name),
            verdict,
            relation: Relation::Necessary,
        });
        self
    }

    pub fn bounded(mut self, bounded: bool) -> PredicateReport {
        self.bounded |= bounded;
        self
    }

    /// Fails with an inconsistency when a cross-check contradicts the verdict.
    pub fn finish(self) -> Result<PredicateReport> {
        for c in &self.crosschecks {
            let agrees = match c.relation {
                Relation::Equivalent => c.verdict == self.verdict,
                Relation::Necessary => c.verdict || !self.verdict,
            };
            if !agrees {
                return Err(Error::inconsistency(format!(
                    "{} of {}: primary verdict {} but {} gives {}",
                    self.predicate, self.subject, self.verdict, c.name, c.verdict
                )));
            }
        }
        Ok(self)
    }

    /// Line-oriented text: `VERDICT:` first, then keyed lines.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "VERDICT: {}", self.verdict);
        let _ = writeln!(out, "PREDICATE: {}", self.predicate);
        let _ = writeln!(out, "MODULE: {}", self.subject);
        let _ = writeln!(out, "UNIVERSE: {}", self.universe);
        let _ = writeln!(out, "BOUNDED: {}", self.bounded);
        for w in &self.witnesses {
            let _ = writeln!(out, "WITNESS: {w}");
        }
        for c in &self.crosschecks {
            let rel = match c.relation {
                Relation::Equivalent => "equivalent",
                Relation::Necessary => "necessary",
            };
            let _ = writeln!(out, "CROSSCHECK: {} = {} ({rel})", c.name, c.verdict);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agreement_and_rendering() {
        let r = PredicateReport::new("faithful", "P1", true, 3)
            .equivalent("projectives_cogenerated", true)
            .necessary("something", true)
            .finish()
            .unwrap();
        let text = r.render();
        assert!(text.starts_with("VERDICT: true\n"));
        assert!(text.contains("CROSSCHECK: projectives_cogenerated = true (equivalent)"));
    }

    #[test]
    fn disagreement_is_an_error() {
        let r = PredicateReport::new("x", "M", false, 1)
            .equivalent("y", true)
            .finish();
        assert!(matches!(r, Err(Error::Inconsistency(_))));
        let ok = PredicateReport::new("x", "M", false, 1)
            .necessary("y", false)
            .finish();
        assert!(ok.is_ok());
        let bad = PredicateReport::new("x", "M", true, 1)
            .necessary("y", false)
            .finish();
        assert!(bad.is_err());
    }
}
