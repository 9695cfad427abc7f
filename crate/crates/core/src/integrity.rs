//! The SKOS integrity conditions and the checkable SKOS-XL ones.
//!
//! Checks run over a graph materialized under the reference profile, so that
//! derived types, inverse and symmetric triples and transitive closures are
//! all visible. Every check is driven by a catalog entry.

use std::collections::{BTreeMap, HashSet};

use crate::finding::{sort_findings, Finding};
use crate::inference::MaterializedGraph;
use crate::rdf::{Graph, IdTriple, Iri, TermId};
use crate::vocab::ns::{compact, rdf};
use crate::vocab::{axiom_table, Axiom, AxiomKind};

fn name(iri: &Iri) -> String {
    compact(iri.as_str())
}

/// Every violation of every integrity condition in the catalog.
pub fn check_integrity(mg: &MaterializedGraph) -> Vec<Finding> {
    let g = mg.graph();
    let mut findings = Vec::new();
    for a in axiom_table().iter().filter(|a| a.is_integrity_condition) {
        match a.kind {
            AxiomKind::DisjointClasses => disjoint_classes(g, a, &mut findings),
            AxiomKind::DisjointProperties => disjoint_properties(g, a, &mut findings),
            AxiomKind::UniquePrefLabelPerLanguage => unique_pref_label(g, a, &mut findings),
            AxiomKind::CardinalityExactlyOne => exactly_one(g, a, &mut findings),
            _ => unreachable!("{} is not an integrity kind", a.id),
        }
    }
    sort_findings(&mut findings);
    findings
}

fn disjoint_classes(g: &Graph, a: &Axiom, out: &mut Vec<Finding>) {
    let Some(ty) = g.id_of_iri(&rdf::type_()) else { return };
    for (x, y) in a.disjoint_pairs() {
        let (Some(cx), Some(cy)) = (g.id_of_iri(x), g.id_of_iri(y)) else { continue };
        for node in g.subjects(ty, cx) {
            let other = IdTriple::new(node, ty, cy);
            if g.contains_ids(other) {
                out.push(Finding::new(
                    a.id.to_string(),
                    g.term(node).clone(),
                    vec![g.resolve(IdTriple::new(node, ty, cx)), g.resolve(other)],
                    format!("typed both {} and {}, which are disjoint", name(x), name(y)),
                ));
            }
        }
    }
}

fn is_symmetric(p: &Iri) -> bool {
    axiom_table().iter().filter(|a| a.kind == AxiomKind::Symmetric).any(|a| a.properties().contains(&p))
}

/// The same (subject, object) pair under two disjoint properties.
///
/// When both properties are symmetric each violation also appears mirrored;
/// only the direction with the smaller subject is reported.
fn disjoint_properties(g: &Graph, a: &Axiom, out: &mut Vec<Finding>) {
    for (x, y) in a.disjoint_pairs() {
        let (Some(px), Some(py)) = (g.id_of_iri(x), g.id_of_iri(y)) else { continue };
        let mirrored = is_symmetric(x) && is_symmetric(y);
        for t in g.with_predicate(px) {
            let other = IdTriple::new(t.s, py, t.o);
            if !g.contains_ids(other) {
                continue;
            }
            if mirrored && g.term(t.o).is_resource() && g.term(t.o).to_string() < g.term(t.s).to_string() {
                continue;
            }
            out.push(Finding::new(
                a.id.to_string(),
                g.term(t.s).clone(),
                vec![g.resolve(t), g.resolve(other)],
                format!("{} is a value of both {} and {}, which are disjoint", g.term(t.o), name(x), name(y)),
            ));
        }
    }
}

fn unique_pref_label(g: &Graph, a: &Axiom, out: &mut Vec<Finding>) {
    for p in a.properties() {
        let Some(pid) = g.id_of_iri(p) else { continue };
        // node -> language bucket -> label triples
        let mut buckets: BTreeMap<(TermId, Option<String>), Vec<IdTriple>> = BTreeMap::new();
        for t in g.with_predicate(pid) {
            if let Some(lit) = g.term(t.o).as_literal() {
                buckets.entry((t.s, lit.language_key())).or_default().push(t);
            }
        }
        for ((node, lang), triples) in buckets {
            if triples.len() < 2 {
                continue;
            }
            let tag = lang.map_or_else(|| "no language tag".to_owned(), |l| format!("language tag @{l}"));
            out.push(Finding::new(
                a.id.to_string(),
                g.term(node).clone(),
                triples.iter().map(|&t| g.resolve(t)).collect(),
                format!("{} values of {} share {tag}", triples.len(), name(p)),
            ));
        }
    }
}

fn exactly_one(g: &Graph, a: &Axiom, out: &mut Vec<Finding>) {
    let Some(ty) = g.id_of_iri(&rdf::type_()) else { return };
    for class in a.classes() {
        let Some(cid) = g.id_of_iri(class) else { continue };
        for p in a.properties() {
            let pid = g.id_of_iri(p);
            let mut seen = HashSet::new();
            for node in g.subjects(ty, cid) {
                if !seen.insert(node) {
                    continue;
                }
                let values: Vec<TermId> = pid.map(|pid| g.objects(node, pid).collect()).unwrap_or_default();
                if values.len() == 1 {
                    continue;
                }
                let evidence = if values.is_empty() {
                    vec![g.resolve(IdTriple::new(node, ty, cid))]
                } else {
                    values.iter().map(|&v| g.resolve(IdTriple::new(node, pid.unwrap(), v))).collect()
                };
                out.push(Finding::new(
                    a.id.to_string(),
                    g.term(node).clone(),
                    evidence,
                    format!("{} has {} values of {}; exactly one is required", name(class), values.len(), name(p)),
                ));
            }
        }
    }
}
