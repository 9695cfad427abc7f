//! Browser bindings: paste N-Triples, then infer, validate or explore the
//! broader hierarchy of one concept. Every call returns a JSON string.

use serde::Serialize;
use skosforge_core::guidelines::{check_guidelines, RuleSet};
use skosforge_core::inference::{broader_closure, materialize};
use skosforge_core::integrity::check_integrity;
use skosforge_core::rdf::{parse_ntriples_str, parse_term};
use skosforge_core::report::Report;
use skosforge_core::vocab::ns::skos;
use skosforge_core::{serialize_ntriples, Graph, Profile, Term};
use wasm_bindgen::prelude::*;

fn parse(source: &str) -> Result<Graph, String> {
    parse_ntriples_str(source).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Step {
    axiom: String,
    derived: String,
    premises: Vec<String>,
}

#[derive(Serialize)]
struct Inferred {
    asserted: usize,
    derived: usize,
    ntriples: String,
    trace: Vec<Step>,
}

pub fn infer_json(source: &str, profile: &str) -> Result<String, String> {
    let profile: Profile = profile.parse()?;
    let mg = materialize(&parse(source)?, profile);
    let trace = mg
        .trace()
        .map(|e| Step {
            axiom: e.axiom.to_string(),
            derived: e.derived.to_string(),
            premises: e.premises.iter().map(ToString::to_string).collect(),
        })
        .collect();
    let out = Inferred {
        asserted: mg.asserted_count(),
        derived: mg.derived_count(),
        ntriples: String::from_utf8(serialize_ntriples(mg.graph())).expect("N-Triples output is UTF-8"),
        trace,
    };
    Ok(serde_json::to_string(&out).expect("serializes"))
}

pub fn validate_json(source: &str) -> Result<String, String> {
    let mg = materialize(&parse(source)?, Profile::Reference);
    let rules = RuleSet::all_enabled();
    let mut findings = check_integrity(&mg);
    findings.extend(check_guidelines(&mg, &rules));
    findings.extend(mg.diagnostics().iter().cloned());
    Ok(Report::new(Vec::new(), mg.asserted_count(), mg.derived_count(), findings, &rules).to_json())
}

#[derive(Serialize)]
struct Closure {
    concept: String,
    broader: Vec<String>,
    narrower: Vec<String>,
    cyclic: bool,
}

/// `concept` is an IRI, with or without angle brackets, or a blank node.
pub fn closure_json(source: &str, concept: &str) -> Result<String, String> {
    let concept = concept.trim();
    let term = if concept.starts_with('<') || concept.starts_with("_:") {
        parse_term(concept).map_err(|e| e.to_string())?
    } else {
        Term::iri(concept).map_err(|e| e.to_string())?
    };
    let mg = materialize(&parse(source)?, Profile::Reference);
    let g = mg.graph();
    let broader = broader_closure(&mg, &term);
    let narrower: Vec<String> = match (g.id_of(&term), g.id_of_iri(&skos::narrower_transitive())) {
        (Some(c), Some(nt)) => {
            let mut v: Vec<String> = g.objects(c, nt).map(|t| g.term(t).to_string()).collect();
            v.sort();
            v
        }
        _ => Vec::new(),
    };
    let out = Closure {
        concept: term.to_string(),
        cyclic: broader.contains(&term),
        broader: broader.iter().map(ToString::to_string).collect(),
        narrower,
    };
    Ok(serde_json::to_string(&out).expect("serializes"))
}

/// Materializes under `profile` (`reference`, `rdf-schema` or
/// `owl-dl-prune`) and returns the closed graph with its derivation trace.
#[wasm_bindgen]
pub fn infer(source: &str, profile: &str) -> Result<String, JsValue> {
    infer_json(source, profile).map_err(|e| JsValue::from_str(&e))
}

/// The validation report JSON for the pasted graph.
#[wasm_bindgen]
pub fn validate(source: &str) -> Result<String, JsValue> {
    validate_json(source).map_err(|e| JsValue::from_str(&e))
}

/// Everything above and below `concept` in the transitive hierarchy.
#[wasm_bindgen]
pub fn closure(source: &str, concept: &str) -> Result<String, JsValue> {
    closure_json(source, concept).map_err(|e| JsValue::from_str(&e))
}
