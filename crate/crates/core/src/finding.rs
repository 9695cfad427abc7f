use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rdf::{Term, Triple};
use crate::vocab::{axiom, AxiomId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "ERROR",
            Severity::Warning => "WARNING",
        })
    }
}

/// One integrity violation or guideline warning.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Finding {
    pub rule_id: String,
    pub severity: Severity,
    pub focus: Term,
    pub evidence: Vec<Triple>,
    pub message: String,
}

/// Whether `rule_id` names an integrity condition of the catalog.
pub fn is_integrity_rule(rule_id: &str) -> bool {
    rule_id.parse::<AxiomId>().is_ok_and(|id| axiom(id).is_integrity_condition)
}

/// Axiom ids in numeric order first, then everything else by name.
pub fn rule_order(a: &str, b: &str) -> Ordering {
    let key = |s: &str| match s.parse::<AxiomId>() {
        Ok(id) => (0, id.number()),
        Err(_) => (1, 0),
    };
    key(a).cmp(&key(b)).then_with(|| a.cmp(b))
}

impl Finding {
    pub fn new(rule_id: impl Into<String>, focus: Term, evidence: Vec<Triple>, message: impl Into<String>) -> Self {
        let rule_id = rule_id.into();
        let severity = if is_integrity_rule(&rule_id) { Severity::Error } else { Severity::Warning };
        debug_assert!(!evidence.is_empty(), "finding {rule_id} without evidence");
        Finding { rule_id, severity, focus, evidence, message: message.into() }
    }

    /// Report order: severity, rule id, focus, then evidence.
    pub fn report_cmp(&self, other: &Self) -> Ordering {
        self.severity
            .cmp(&other.severity)
            .then_with(|| rule_order(&self.rule_id, &other.rule_id))
            .then_with(|| self.focus.to_string().cmp(&other.focus.to_string()))
            .then_with(|| self.evidence.cmp(&other.evidence))
            .then_with(|| self.message.cmp(&other.message))
    }
}

pub fn sort_findings(findings: &mut [Finding]) {
    findings.sort_by(Finding::report_cmp);
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}: {}", self.severity, self.rule_id, self.focus, self.message)
    }
}
