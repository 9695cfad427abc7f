//! Random and synthetic SKOS graphs.

use std::fmt::Write;

use rand::seq::SliceRandom;
use rand::Rng;
use skosforge_core::{Graph, Iri, Literal, Term, Triple};

use crate::hierarchy::Hierarchy;

pub const EX: &str = "http://example.org/";
const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
const SKOS: &str = "http://www.w3.org/2004/02/skos/core#";
const XL: &str = "http://www.w3.org/2008/05/skos-xl#";
const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";

const SKOS_PROPERTIES: &[&str] = &[
    "inScheme",
    "hasTopConcept",
    "topConceptOf",
    "prefLabel",
    "altLabel",
    "hiddenLabel",
    "notation",
    "note",
    "changeNote",
    "definition",
    "editorialNote",
    "example",
    "historyNote",
    "scopeNote",
    "semanticRelation",
    "broader",
    "narrower",
    "related",
    "broaderTransitive",
    "narrowerTransitive",
    "member",
    "memberList",
    "mappingRelation",
    "closeMatch",
    "exactMatch",
    "broadMatch",
    "narrowMatch",
    "relatedMatch",
];
const XL_PROPERTIES: &[&str] = &["prefLabel", "altLabel", "hiddenLabel", "literalForm", "labelRelation"];
const SKOS_CLASSES: &[&str] = &["Concept", "ConceptScheme", "Collection", "OrderedCollection"];

fn iri(s: impl Into<String>) -> Iri {
    Iri::new(s).expect("generated IRI is valid")
}

pub fn ex(local: impl std::fmt::Display) -> Term {
    Term::Iri(iri(format!("{EX}{local}")))
}

fn rdf(local: &str) -> Iri {
    iri(format!("{RDF}{local}"))
}

fn skos(local: &str) -> Iri {
    iri(format!("{SKOS}{local}"))
}

fn xl(local: &str) -> Iri {
    iri(format!("{XL}{local}"))
}

fn triple(s: Term, p: Iri, o: Term) -> Triple {
    Triple::new(s, p, o).expect("generated subject is a resource")
}

fn random_node<R: Rng>(rng: &mut R) -> Term {
    match rng.gen_range(0..10) {
        0 => Term::blank(format!("b{}", rng.gen_range(0..4))).unwrap(),
        1..=2 => ex(format!("l{}", rng.gen_range(0..5))),
        _ => ex(format!("c{}", rng.gen_range(0..12))),
    }
}

fn random_literal<R: Rng>(rng: &mut R) -> Term {
    let lexical = ["cat", "dog", "Cat", "chat", "x"].choose(rng).unwrap().to_string();
    Term::Literal(match rng.gen_range(0..4) {
        0 => Literal::plain(lexical),
        1 => Literal::typed(lexical, iri(XSD_STRING)),
        _ => Literal::lang(lexical, *["en", "fr", "EN"].choose(rng).unwrap()).unwrap(),
    })
}

fn random_predicate<R: Rng>(rng: &mut R) -> Iri {
    match rng.gen_range(0..10) {
        0..=5 => skos(SKOS_PROPERTIES.choose(rng).unwrap()),
        6..=7 => xl(XL_PROPERTIES.choose(rng).unwrap()),
        8 => rdf("type"),
        _ => iri(format!("{EX}p{}", rng.gen_range(0..2))),
    }
}

fn push_list<R: Rng>(rng: &mut R, out: &mut Vec<Triple>, owner: Term) {
    let len = rng.gen_range(0..4);
    let id = rng.gen_range(0..1000);
    let cells: Vec<Term> = (0..len).map(|i| Term::blank(format!("list{id}n{i}")).unwrap()).collect();
    let head = cells.first().cloned().unwrap_or_else(|| Term::Iri(rdf("nil")));
    out.push(triple(owner, skos("memberList"), head));
    let broken = rng.gen_bool(0.2);
    for (i, cell) in cells.iter().enumerate() {
        out.push(triple(cell.clone(), rdf("first"), random_node(rng)));
        let next = cells.get(i + 1).cloned().unwrap_or_else(|| Term::Iri(rdf("nil")));
        if !(broken && i + 1 == len) {
            out.push(triple(cell.clone(), rdf("rest"), next));
        }
    }
}

/// Up to `max_triples` triples drawn over the SKOS and SKOS-XL vocabulary,
/// a few foreign properties, literals of every kind and occasional
/// (sometimes broken) member lists.
pub fn random_skos_graph<R: Rng>(rng: &mut R, max_triples: usize) -> Graph {
    let target = rng.gen_range(0..=max_triples);
    let mut triples = Vec::with_capacity(target);
    while triples.len() < target {
        let subject = random_node(rng);
        if rng.gen_ratio(1, 40) {
            push_list(rng, &mut triples, subject);
            continue;
        }
        let p = random_predicate(rng);
        let object = if p == rdf("type") {
            if rng.gen_bool(0.8) {
                Term::Iri(skos(SKOS_CLASSES.choose(rng).unwrap()))
            } else {
                Term::Iri(xl("Label"))
            }
        } else if rng.gen_ratio(1, 4) {
            random_literal(rng)
        } else {
            random_node(rng)
        };
        triples.push(triple(subject, p, object));
    }
    triples.truncate(max_triples);
    triples.into_iter().collect()
}

/// A random broader hierarchy over `1..=max_nodes` concepts. Roughly a third
/// of them contain a cycle; edges are asserted as `skos:broader` or, reversed,
/// as `skos:narrower`.
pub fn random_hierarchy<R: Rng>(rng: &mut R, max_nodes: usize) -> (Hierarchy, Graph) {
    let n = rng.gen_range(1..=max_nodes);
    let mut edges = Vec::new();
    for child in 1..n {
        if rng.gen_bool(0.9) {
            edges.push((child, rng.gen_range(0..child)));
        }
        if rng.gen_bool(0.1) {
            edges.push((child, rng.gen_range(0..child)));
        }
    }
    if rng.gen_bool(0.35) {
        for _ in 0..rng.gen_range(1..=3) {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..=a);
            edges.push((b, a));
        }
    }
    let mut g = Graph::new();
    for &(child, parent) in &edges {
        let t = if rng.gen_bool(0.7) {
            triple(ex(format!("c{child}")), skos("broader"), ex(format!("c{parent}")))
        } else {
            triple(ex(format!("c{parent}")), skos("narrower"), ex(format!("c{child}")))
        };
        g.insert(&t);
    }
    for i in 0..n {
        g.insert(&triple(ex(format!("c{i}")), rdf("type"), Term::Iri(skos("Concept"))));
    }
    (Hierarchy { n, edges }, g)
}

fn nt_literal(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A tree-shaped thesaurus as N-Triples: ten triples per concept (type,
/// scheme, three labels, one hierarchy link, notation, definition, scope note
/// and an external match) plus a scheme declaration.
pub fn synthetic_thesaurus(concepts: usize) -> String {
    let mut out = String::with_capacity(concepts * 1000);
    let scheme = format!("<{EX}scheme>");
    let _ = writeln!(out, "{scheme} <{RDF}type> <{SKOS}ConceptScheme> .");
    let _ = writeln!(out, "{scheme} <{SKOS}prefLabel> \"Synthetic thesaurus\"@en .");
    for i in 0..concepts {
        let c = format!("<{EX}concept/{i}>");
        let _ = writeln!(out, "{c} <{RDF}type> <{SKOS}Concept> .");
        let _ = writeln!(out, "{c} <{SKOS}inScheme> {scheme} .");
        let _ = writeln!(out, "{c} <{SKOS}prefLabel> \"{}\"@en .", nt_literal(&format!("term {i}")));
        let _ = writeln!(out, "{c} <{SKOS}altLabel> \"alias {i}\"@en .");
        let _ = writeln!(out, "{c} <{SKOS}prefLabel> \"terme {i}\"@fr .");
        if i == 0 {
            let _ = writeln!(out, "{c} <{SKOS}topConceptOf> {scheme} .");
        } else {
            let _ = writeln!(out, "{c} <{SKOS}broader> <{EX}concept/{}> .", (i - 1) / 10);
        }
        let _ = writeln!(out, "{c} <{SKOS}notation> \"N{i}\"^^<http://example.org/code> .");
        let _ = writeln!(out, "{c} <{SKOS}definition> \"Definition of term {i}.\"@en .");
        let _ = writeln!(out, "{c} <{SKOS}scopeNote> \"Use for {i}.\"@en .");
        let _ = writeln!(out, "{c} <{SKOS}exactMatch> <http://other.example.org/{i}> .");
    }
    out
}
