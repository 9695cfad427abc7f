//! A naive apply-until-nothing-changes closure over string triples.
//!
//! The rules are written out by hand from the published axiom statements and
//! share no code with the engine: terms are N-Triples strings, the vocabulary
//! is spelled out literally, and each round rescans the whole graph.

use std::collections::{BTreeSet, HashMap, HashSet};

use skosforge_core::Graph;

pub type StrTriple = (String, String, String);

const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
const SKOS: &str = "http://www.w3.org/2004/02/skos/core#";
const XL: &str = "http://www.w3.org/2008/05/skos-xl#";

fn s(local: &str) -> String {
    format!("<{SKOS}{local}>")
}

fn xl(local: &str) -> String {
    format!("<{XL}{local}>")
}

fn rdf(local: &str) -> String {
    format!("<{RDF}{local}>")
}

enum Rule {
    SubProperty(Vec<(String, String)>),
    SubClass(String, String),
    Domain(String, String),
    Range(Vec<String>, String),
    Inverse(String, String),
    Symmetric(Vec<String>),
    Transitive(Vec<String>),
    Chain(String, String, String),
    ListMember,
}

fn sub_each(subs: &[&str], sup: &str) -> Rule {
    Rule::SubProperty(subs.iter().map(|p| (s(p), s(sup))).collect())
}

/// The rule an axiom licenses, or `None` for axioms that derive nothing.
fn rule(n: u8) -> Option<Rule> {
    use Rule::*;
    Some(match n {
        4 => Range(vec![s("inScheme")], s("ConceptScheme")),
        5 => Domain(s("hasTopConcept"), s("ConceptScheme")),
        6 => Range(vec![s("hasTopConcept")], s("Concept")),
        7 => sub_each(&["topConceptOf"], "inScheme"),
        8 => Inverse(s("topConceptOf"), s("hasTopConcept")),
        11 => SubProperty(
            ["prefLabel", "altLabel", "hiddenLabel"].iter().map(|p| (s(p), format!("<{RDFS}label>"))).collect(),
        ),
        17 => sub_each(&["changeNote", "definition", "editorialNote", "example", "historyNote", "scopeNote"], "note"),
        19 => Domain(s("semanticRelation"), s("Concept")),
        20 => Range(vec![s("semanticRelation")], s("Concept")),
        21 => sub_each(&["broaderTransitive", "narrowerTransitive", "related"], "semanticRelation"),
        22 => SubProperty(vec![(s("broader"), s("broaderTransitive")), (s("narrower"), s("narrowerTransitive"))]),
        23 => Symmetric(vec![s("related")]),
        24 => Transitive(vec![s("broaderTransitive"), s("narrowerTransitive")]),
        25 => Inverse(s("narrower"), s("broader")),
        26 => Inverse(s("narrowerTransitive"), s("broaderTransitive")),
        29 => SubClass(s("OrderedCollection"), s("Collection")),
        31 => Domain(s("member"), s("Collection")),
        33 => Domain(s("memberList"), s("OrderedCollection")),
        34 => Range(vec![s("memberList")], rdf("List")),
        36 => ListMember,
        39 => sub_each(&["mappingRelation"], "semanticRelation"),
        40 => sub_each(&["closeMatch", "broadMatch", "narrowMatch", "relatedMatch"], "mappingRelation"),
        41 => SubProperty(vec![
            (s("broadMatch"), s("broader")),
            (s("narrowMatch"), s("narrower")),
            (s("relatedMatch"), s("related")),
        ]),
        42 => sub_each(&["exactMatch"], "closeMatch"),
        43 => Inverse(s("narrowMatch"), s("broadMatch")),
        44 => Symmetric(vec![s("relatedMatch"), s("closeMatch"), s("exactMatch")]),
        45 => Transitive(vec![s("exactMatch")]),
        50 => Domain(xl("literalForm"), xl("Label")),
        54 => Range(vec![xl("prefLabel"), xl("altLabel"), xl("hiddenLabel")], xl("Label")),
        55 => Chain(xl("prefLabel"), xl("literalForm"), s("prefLabel")),
        56 => Chain(xl("altLabel"), xl("literalForm"), s("altLabel")),
        57 => Chain(xl("hiddenLabel"), xl("literalForm"), s("hiddenLabel")),
        60 => Domain(xl("labelRelation"), xl("Label")),
        61 => Range(vec![xl("labelRelation")], xl("Label")),
        62 => Symmetric(vec![xl("labelRelation")]),
        _ => return None,
    })
}

fn is_literal(term: &str) -> bool {
    term.starts_with('"')
}

pub fn to_strings(g: &Graph) -> BTreeSet<StrTriple> {
    g.triples().map(|t| (t.subject().to_string(), t.predicate().to_string(), t.object().to_string())).collect()
}

/// Items of a well-formed list at `head`, or `None` if it is broken anywhere.
fn list_items(g: &BTreeSet<StrTriple>, head: &str) -> Option<Vec<String>> {
    let (first, rest, nil) = (rdf("first"), rdf("rest"), rdf("nil"));
    let mut items = Vec::new();
    let mut seen = HashSet::new();
    let mut node = head.to_owned();
    while node != nil {
        if !seen.insert(node.clone()) {
            return None;
        }
        let firsts: Vec<&String> = g.iter().filter(|t| t.0 == node && t.1 == first).map(|t| &t.2).collect();
        let rests: Vec<&String> = g.iter().filter(|t| t.0 == node && t.1 == rest).map(|t| &t.2).collect();
        if firsts.len() != 1 || rests.len() != 1 {
            return None;
        }
        items.push(firsts[0].clone());
        node = rests[0].clone();
    }
    Some(items)
}

fn by_pred<'a>(g: &'a BTreeSet<StrTriple>, p: &'a str) -> impl Iterator<Item = &'a StrTriple> + 'a {
    g.iter().filter(move |t| t.1 == p)
}

fn round(g: &BTreeSet<StrTriple>, rules: &[Rule]) -> Vec<StrTriple> {
    let ty = rdf("type");
    let mut out = Vec::new();
    for r in rules {
        match r {
            Rule::SubProperty(pairs) => {
                for (sub, sup) in pairs {
                    for t in by_pred(g, sub) {
                        out.push((t.0.clone(), sup.clone(), t.2.clone()));
                    }
                }
            }
            Rule::SubClass(sub, sup) => {
                for t in by_pred(g, &ty).filter(|t| &t.2 == sub) {
                    out.push((t.0.clone(), ty.clone(), sup.clone()));
                }
            }
            Rule::Domain(p, c) => {
                for t in by_pred(g, p) {
                    out.push((t.0.clone(), ty.clone(), c.clone()));
                }
            }
            Rule::Range(ps, c) => {
                for p in ps {
                    for t in by_pred(g, p).filter(|t| !is_literal(&t.2)) {
                        out.push((t.2.clone(), ty.clone(), c.clone()));
                    }
                }
            }
            Rule::Inverse(p, q) => {
                for t in by_pred(g, p).filter(|t| !is_literal(&t.2)) {
                    out.push((t.2.clone(), q.clone(), t.0.clone()));
                }
                for t in by_pred(g, q).filter(|t| !is_literal(&t.2)) {
                    out.push((t.2.clone(), p.clone(), t.0.clone()));
                }
            }
            Rule::Symmetric(ps) => {
                for p in ps {
                    for t in by_pred(g, p).filter(|t| !is_literal(&t.2)) {
                        out.push((t.2.clone(), p.clone(), t.0.clone()));
                    }
                }
            }
            Rule::Transitive(ps) => {
                for p in ps {
                    let mut succ: HashMap<&str, Vec<&str>> = HashMap::new();
                    for t in by_pred(g, p) {
                        succ.entry(&t.0).or_default().push(&t.2);
                    }
                    for t in by_pred(g, p) {
                        for z in succ.get(t.2.as_str()).into_iter().flatten() {
                            out.push((t.0.clone(), p.clone(), (*z).to_owned()));
                        }
                    }
                }
            }
            Rule::Chain(first, second, sup) => {
                for a in by_pred(g, first) {
                    for b in by_pred(g, second).filter(|b| b.0 == a.2) {
                        out.push((a.0.clone(), sup.clone(), b.2.clone()));
                    }
                }
            }
            Rule::ListMember => {
                for t in by_pred(g, &s("memberList")) {
                    for item in list_items(g, &t.2).into_iter().flatten() {
                        out.push((t.0.clone(), s("member"), item));
                    }
                }
            }
        }
    }
    out
}

/// Closes `input` under the rules of the listed axiom numbers.
pub fn naive_closure(input: &BTreeSet<StrTriple>, axioms: &[u8]) -> BTreeSet<StrTriple> {
    let rules: Vec<Rule> = axioms.iter().filter_map(|&n| rule(n)).collect();
    let mut g = input.clone();
    loop {
        let before = g.len();
        g.extend(round(&g, &rules));
        if g.len() == before {
            return g;
        }
    }
}

/// Axiom numbers present in each published formalization, read straight off
/// the three tables.
pub mod profile_ids {
    pub fn reference() -> Vec<u8> {
        (1..=62).collect()
    }

    pub fn rdf_schema() -> Vec<u8> {
        (1..=62).filter(|n| ![12, 13, 14, 27, 36, 46, 55, 56, 57].contains(n)).collect()
    }

    pub fn owl_dl_prune() -> Vec<u8> {
        (1..=46).filter(|n| ![11, 12, 13, 14, 17, 27, 34, 36, 46].contains(n)).collect()
    }
}
