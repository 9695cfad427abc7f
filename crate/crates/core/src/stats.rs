//! Vocabulary statistics over a materialized graph.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::inference::MaterializedGraph;
use crate::rdf::{Graph, IdTriple, Iri};
use crate::vocab::ns::{rdf, skos};
use crate::vocab::{axiom_table, AxiomKind};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub triples_asserted: usize,
    pub triples_derived: usize,
    pub concepts: usize,
    pub concept_schemes: usize,
    pub collections: usize,
    /// Lexical labels (pref, alt, hidden) by lower-cased language tag; the
    /// empty key counts labels without a tag.
    pub labels_per_language: BTreeMap<String, usize>,
    /// Asserted triples using skos:semanticRelation or a sub-property of it.
    pub semantic_relation_triples: usize,
}

fn count_typed(g: &Graph, class: Iri) -> usize {
    match (g.id_of_iri(&rdf::type_()), g.id_of_iri(&class)) {
        (Some(ty), Some(c)) => g.subjects(ty, c).count(),
        _ => 0,
    }
}

fn semantic_family() -> Vec<Iri> {
    let mut family = vec![skos::semantic_relation()];
    loop {
        let before = family.len();
        for a in axiom_table().iter().filter(|a| a.kind == AxiomKind::SubPropertyOf) {
            for (sub, sup) in a.sub_pairs() {
                if family.contains(sup) && !family.contains(sub) {
                    family.push(sub.clone());
                }
            }
        }
        if family.len() == before {
            return family;
        }
    }
}

pub fn compute_stats(mg: &MaterializedGraph) -> Stats {
    let g = mg.graph();
    let mut labels_per_language = BTreeMap::new();
    for prop in [skos::pref_label(), skos::alt_label(), skos::hidden_label()] {
        let Some(p) = g.id_of_iri(&prop) else { continue };
        for t in g.with_predicate(p) {
            if let Some(l) = g.term(t.o).as_literal() {
                *labels_per_language.entry(l.language_key().unwrap_or_default()).or_insert(0) += 1;
            }
        }
    }
    let family: Vec<_> = semantic_family().iter().filter_map(|p| g.id_of_iri(p)).collect();
    let semantic_relation_triples = mg.asserted().filter(|t: &IdTriple| family.contains(&t.p)).count();
    Stats {
        triples_asserted: mg.asserted_count(),
        triples_derived: mg.derived_count(),
        concepts: count_typed(g, skos::concept()),
        concept_schemes: count_typed(g, skos::concept_scheme()),
        collections: count_typed(g, skos::collection()),
        labels_per_language,
        semantic_relation_triples,
    }
}

impl std::fmt::Display for Stats {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "triples asserted          {}", self.triples_asserted)?;
        writeln!(f, "triples derived           {}", self.triples_derived)?;
        writeln!(f, "concepts                  {}", self.concepts)?;
        writeln!(f, "concept schemes           {}", self.concept_schemes)?;
        writeln!(f, "collections               {}", self.collections)?;
        writeln!(f, "semantic relation triples {}", self.semantic_relation_triples)?;
        for (lang, n) in &self.labels_per_language {
            let lang = if lang.is_empty() { "(none)" } else { lang };
            writeln!(f, "labels @{lang:<17} {n}")?;
        }
        Ok(())
    }
}
