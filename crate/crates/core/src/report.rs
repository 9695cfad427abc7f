//! Validation reports and their text and JSON renderings.
//!
//! JSON layout:
//!
//! ```text
//! { "version", "inputs": [{ "path", "sha256", "triples" }], "asserted", "derived",
//!   "findings": [{ "rule", "severity", "focus", "message", "evidence": [<N-Triples line>] }],
//!   "tallies": { <rule>: <count> }, "elapsed_ms" }
//! ```
//!
//! Terms and evidence triples use N-Triples syntax, so a report can be read
//! back with [`Report::from_json`].

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::finding::{is_integrity_rule, rule_order, sort_findings, Finding, Severity};
use crate::guidelines::RuleSet;
use crate::rdf::{parse_term, parse_triple_line, LineError};
use crate::vocab::axiom_table;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub path: String,
    pub sha256: String,
    pub triples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub version: String,
    pub inputs: Vec<InputSummary>,
    pub asserted: usize,
    pub derived: usize,
    /// Sorted by severity, rule id and focus.
    pub findings: Vec<Finding>,
    pub tallies: BTreeMap<String, usize>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected text or json)")),
        }
    }
}

impl Report {
    /// Sorts the findings and tallies them. Every integrity condition and
    /// every enabled guideline gets a tally entry, zero or not.
    pub fn new(
        inputs: Vec<InputSummary>,
        asserted: usize,
        derived: usize,
        mut findings: Vec<Finding>,
        rules: &RuleSet,
    ) -> Self {
        sort_findings(&mut findings);
        let mut tallies: BTreeMap<String, usize> = axiom_table()
            .iter()
            .filter(|a| a.is_integrity_condition)
            .map(|a| (a.id.to_string(), 0))
            .chain(rules.enabled_ids().map(|id| (id.to_owned(), 0)))
            .collect();
        for f in &findings {
            *tallies.entry(f.rule_id.clone()).or_insert(0) += 1;
        }
        Report { version: TOOL_VERSION.to_owned(), inputs, asserted, derived, findings, tallies, elapsed_ms: 0 }
    }

    pub fn has_errors(&self) -> bool {
        self.findings.iter().any(|f| f.severity == Severity::Error)
    }

    pub fn count(&self, severity: Severity) -> usize {
        self.findings.iter().filter(|f| f.severity == severity).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&ReportDoc::from(self)).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report, ReportError> {
        let doc: ReportDocOwned = serde_json::from_str(text)?;
        let mut findings = Vec::with_capacity(doc.findings.len());
        for f in doc.findings {
            let focus = parse_term(&f.focus).map_err(|e| ReportError::Term(f.focus.clone(), e))?;
            let evidence = f
                .evidence
                .iter()
                .map(|line| parse_triple_line(line).map_err(|e| ReportError::Term(line.clone(), e)))
                .collect::<Result<Vec<_>, _>>()?;
            if (f.severity == Severity::Error) != is_integrity_rule(&f.rule) {
                return Err(ReportError::Severity(f.rule));
            }
            findings.push(Finding { rule_id: f.rule, severity: f.severity, focus, evidence, message: f.message });
        }
        Ok(Report {
            version: doc.version,
            inputs: doc.inputs,
            asserted: doc.asserted,
            derived: doc.derived,
            findings,
            tallies: doc.tallies,
            elapsed_ms: doc.elapsed_ms,
        })
    }
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("invalid report JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad N-Triples in report ({0:?}): {1}")]
    Term(String, LineError),
    #[error("severity of {0} does not match its rule kind")]
    Severity(String),
}

#[derive(Serialize)]
struct FindingDoc<'a> {
    rule: &'a str,
    severity: Severity,
    focus: String,
    message: &'a str,
    evidence: Vec<String>,
}

struct Tallies<'a>(&'a BTreeMap<String, usize>);

impl Serialize for Tallies<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut keys: Vec<&String> = self.0.keys().collect();
        keys.sort_by(|a, b| rule_order(a, b));
        let mut map = s.serialize_map(Some(keys.len()))?;
        for k in keys {
            map.serialize_entry(k, &self.0[k])?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    version: &'a str,
    inputs: &'a [InputSummary],
    asserted: usize,
    derived: usize,
    findings: Vec<FindingDoc<'a>>,
    tallies: Tallies<'a>,
    elapsed_ms: u64,
}

impl<'a> From<&'a Report> for ReportDoc<'a> {
    fn from(r: &'a Report) -> Self {
        ReportDoc {
            version: &r.version,
            inputs: &r.inputs,
            asserted: r.asserted,
            derived: r.derived,
            findings: r
                .findings
                .iter()
                .map(|f| FindingDoc {
                    rule: &f.rule_id,
                    severity: f.severity,
                    focus: f.focus.to_string(),
                    message: &f.message,
                    evidence: f.evidence.iter().map(ToString::to_string).collect(),
                })
                .collect(),
            tallies: Tallies(&r.tallies),
            elapsed_ms: r.elapsed_ms,
        }
    }
}

#[derive(Deserialize)]
struct FindingDocOwned {
    rule: String,
    severity: Severity,
    focus: String,
    message: String,
    evidence: Vec<String>,
}

#[derive(Deserialize)]
struct ReportDocOwned {
    version: String,
    inputs: Vec<InputSummary>,
    asserted: usize,
    derived: usize,
    findings: Vec<FindingDocOwned>,
    tallies: BTreeMap<String, usize>,
    elapsed_ms: u64,
}

const RED: &str = "\x1b[31m";
const YELLOW: &str = "\x1b[33m";
const RESET: &str = "\x1b[0m";

/// One `SEVERITY rule_id focus: message` line per finding, optionally with
/// ANSI colour on the severity.
pub fn format_text(r: &Report, color: bool) -> String {
    let mut out = String::new();
    for f in &r.findings {
        if color {
            let c = if f.severity == Severity::Error { RED } else { YELLOW };
            out.push_str(&format!("{c}{}{RESET} {} {}: {}\n", f.severity, f.rule_id, f.focus, f.message));
        } else {
            out.push_str(&format!("{f}\n"));
        }
    }
    out
}

pub fn format_report(r: &Report, fmt: Format) -> Vec<u8> {
    match fmt {
        Format::Json => r.to_json().into_bytes(),
        Format::Text => format_text(r, false).into_bytes(),
    }
}
