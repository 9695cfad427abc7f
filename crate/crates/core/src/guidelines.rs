//! Advisory checks: structural conventions that are not axioms.
//!
//! Each rule has a `G-` id and can be switched off. Violations are always
//! warnings.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use crate::finding::{sort_findings, Finding};
use crate::inference::MaterializedGraph;
use crate::rdf::{Graph, IdTriple, Iri, TermId};
use crate::vocab::ns::{compact, rdf, skos, skosxl};
use crate::vocab::{axiom_table, AxiomKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuidelineRule {
    pub id: &'static str,
    pub description: &'static str,
    pub enabled: bool,
}

pub const HIER_CYCLE: &str = "G-HIER-CYCLE";
pub const REFLEXIVE: &str = "G-REFLEXIVE";
pub const SAME_SCHEME_MATCH: &str = "G-SAME-SCHEME-MATCH";
pub const MISSING_PREFLABEL: &str = "G-MISSING-PREFLABEL";
pub const TOP_WITH_BROADER: &str = "G-TOP-WITH-BROADER";
pub const ORPHAN: &str = "G-ORPHAN";
pub const PLAIN_LITERAL: &str = "G-PLAIN-LITERAL";
pub const NOTATION_UNTYPED: &str = "G-NOTATION-UNTYPED";
pub const MEMBERLIST_MULTI: &str = "G-MEMBERLIST-MULTI";
pub const UNION_RANGE: &str = "G-UNION-RANGE";

const RULES: [(&str, &str); 10] = [
    (HIER_CYCLE, "concept reaches itself over skos:broaderTransitive"),
    (REFLEXIVE, "concept asserted broader, narrower or related to itself"),
    (SAME_SCHEME_MATCH, "mapping relation between concepts of the same scheme"),
    (MISSING_PREFLABEL, "concept without any skos:prefLabel"),
    (TOP_WITH_BROADER, "top concept with a broader concept in the same scheme"),
    (ORPHAN, "concept with no semantic relation and no top-concept link"),
    (PLAIN_LITERAL, "label or literal form that is not a plain literal"),
    (NOTATION_UNTYPED, "skos:notation given as a plain literal"),
    (MEMBERLIST_MULTI, "resource with more than one skos:memberList"),
    (UNION_RANGE, "skos:member value that is neither a concept nor a collection"),
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown guideline rule {0:?}")]
pub struct UnknownRule(pub String);

/// The set of guideline rules with their on/off state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    rules: Vec<GuidelineRule>,
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet::all_enabled()
    }
}

impl RuleSet {
    pub fn all_enabled() -> Self {
        RuleSet {
            rules: RULES.iter().map(|&(id, description)| GuidelineRule { id, description, enabled: true }).collect(),
        }
    }

    pub fn none_enabled() -> Self {
        let mut s = Self::all_enabled();
        s.rules.iter_mut().for_each(|r| r.enabled = false);
        s
    }

    pub fn rules(&self) -> &[GuidelineRule] {
        &self.rules
    }

    pub fn set(&mut self, id: &str, enabled: bool) -> Result<(), UnknownRule> {
        let rule = self.rules.iter_mut().find(|r| r.id == id).ok_or_else(|| UnknownRule(id.to_owned()))?;
        rule.enabled = enabled;
        Ok(())
    }

    pub fn is_enabled(&self, id: &str) -> bool {
        self.rules.iter().any(|r| r.id == id && r.enabled)
    }

    pub fn enabled_ids(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.rules.iter().filter(|r| r.enabled).map(|r| r.id)
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{:<22} {:<3} {}", r.id, if r.enabled { "on" } else { "off" }, r.description)?;
        }
        Ok(())
    }
}

/// Ids of the vocabulary terms the rules look at, if present in the graph.
struct Ids {
    rdf_type: Option<TermId>,
    concept: Option<TermId>,
    collection: Option<TermId>,
    broader: Option<TermId>,
    narrower: Option<TermId>,
    related: Option<TermId>,
    broader_transitive: Option<TermId>,
    semantic_relation: Option<TermId>,
    in_scheme: Option<TermId>,
    top_concept_of: Option<TermId>,
    pref_label: Option<TermId>,
    notation: Option<TermId>,
    member: Option<TermId>,
    member_list: Option<TermId>,
}

impl Ids {
    fn new(g: &Graph) -> Self {
        let id = |i: Iri| g.id_of_iri(&i);
        Ids {
            rdf_type: id(rdf::type_()),
            concept: id(skos::concept()),
            collection: id(skos::collection()),
            broader: id(skos::broader()),
            narrower: id(skos::narrower()),
            related: id(skos::related()),
            broader_transitive: id(skos::broader_transitive()),
            semantic_relation: id(skos::semantic_relation()),
            in_scheme: id(skos::in_scheme()),
            top_concept_of: id(skos::top_concept_of()),
            pref_label: id(skos::pref_label()),
            notation: id(skos::notation()),
            member: id(skos::member()),
            member_list: id(skos::member_list()),
        }
    }

    fn concepts(&self, g: &Graph) -> Vec<TermId> {
        match (self.rdf_type, self.concept) {
            (Some(ty), Some(c)) => g.subjects(ty, c).collect(),
            _ => Vec::new(),
        }
    }
}

fn with_pred(g: &Graph, p: Option<TermId>) -> Vec<IdTriple> {
    p.map(|p| g.with_predicate(p).collect()).unwrap_or_default()
}

/// Sub-properties of `top` in the catalog, including `top` itself.
fn sub_properties_of(top: &Iri) -> BTreeSet<Iri> {
    let mut out: BTreeSet<Iri> = [top.clone()].into();
    loop {
        let before = out.len();
        for a in axiom_table().iter().filter(|a| a.kind == AxiomKind::SubPropertyOf) {
            for (sub, sup) in a.sub_pairs() {
                if out.contains(sup) {
                    out.insert(sub.clone());
                }
            }
        }
        if out.len() == before {
            return out;
        }
    }
}

/// Runs every enabled rule.
pub fn check_guidelines(mg: &MaterializedGraph, rules: &RuleSet) -> Vec<Finding> {
    let g = mg.graph();
    let ids = Ids::new(g);
    let mut out = Vec::new();
    let on = |id| rules.is_enabled(id);
    if on(HIER_CYCLE) {
        hier_cycle(g, &ids, &mut out);
    }
    if on(REFLEXIVE) {
        reflexive(mg, &ids, &mut out);
    }
    if on(SAME_SCHEME_MATCH) {
        same_scheme_match(mg, &ids, &mut out);
    }
    if on(MISSING_PREFLABEL) {
        missing_pref_label(g, &ids, &mut out);
    }
    if on(TOP_WITH_BROADER) {
        top_with_broader(g, &ids, &mut out);
    }
    if on(ORPHAN) {
        orphan(g, &ids, &mut out);
    }
    if on(PLAIN_LITERAL) {
        plain_literal(g, &mut out);
    }
    if on(NOTATION_UNTYPED) {
        notation_untyped(g, &ids, &mut out);
    }
    if on(MEMBERLIST_MULTI) {
        member_list_multi(g, &ids, &mut out);
    }
    if on(UNION_RANGE) {
        union_range(g, &ids, &mut out);
    }
    sort_findings(&mut out);
    out
}

fn hier_cycle(g: &Graph, ids: &Ids, out: &mut Vec<Finding>) {
    for t in with_pred(g, ids.broader_transitive) {
        if t.s == t.o {
            out.push(Finding::new(
                HIER_CYCLE,
                g.term(t.s).clone(),
                vec![g.resolve(t)],
                "lies on a cycle of skos:broader links",
            ));
        }
    }
}

fn reflexive(mg: &MaterializedGraph, ids: &Ids, out: &mut Vec<Finding>) {
    let g = mg.graph();
    for p in [ids.broader, ids.narrower, ids.related] {
        for t in with_pred(g, p) {
            if t.s == t.o && mg.is_asserted_ids(t) {
                let prop = compact(g.term(t.p).as_iri().expect("predicate").as_str());
                out.push(Finding::new(REFLEXIVE, g.term(t.s).clone(), vec![g.resolve(t)], format!("is {prop} itself")));
            }
        }
    }
}

fn same_scheme_match(mg: &MaterializedGraph, ids: &Ids, out: &mut Vec<Finding>) {
    let g = mg.graph();
    let Some(in_scheme) = ids.in_scheme else { return };
    for prop in sub_properties_of(&skos::mapping_relation()) {
        let Some(p) = g.id_of_iri(&prop) else { continue };
        for t in g.with_predicate(p).filter(|&t| mg.is_asserted_ids(t)) {
            let left: BTreeSet<TermId> = g.objects(t.s, in_scheme).collect();
            for scheme in g.objects(t.o, in_scheme).filter(|s| left.contains(s)) {
                out.push(Finding::new(
                    SAME_SCHEME_MATCH,
                    g.term(t.s).clone(),
                    vec![
                        g.resolve(t),
                        g.resolve(IdTriple::new(t.s, in_scheme, scheme)),
                        g.resolve(IdTriple::new(t.o, in_scheme, scheme)),
                    ],
                    format!("{} links two concepts of scheme {}", compact(prop.as_str()), g.term(scheme)),
                ));
            }
        }
    }
}

fn missing_pref_label(g: &Graph, ids: &Ids, out: &mut Vec<Finding>) {
    for c in ids.concepts(g) {
        let labelled = ids.pref_label.is_some_and(|p| g.objects(c, p).next().is_some());
        if !labelled {
            let ty = IdTriple::new(c, ids.rdf_type.expect("typed"), ids.concept.expect("typed"));
            out.push(Finding::new(
                MISSING_PREFLABEL,
                g.term(c).clone(),
                vec![g.resolve(ty)],
                "concept has no skos:prefLabel",
            ));
        }
    }
}

fn top_with_broader(g: &Graph, ids: &Ids, out: &mut Vec<Finding>) {
    let (Some(broader), Some(in_scheme)) = (ids.broader, ids.in_scheme) else { return };
    for top in with_pred(g, ids.top_concept_of) {
        let scheme = top.o;
        for parent in g.objects(top.s, broader) {
            let parent_in = IdTriple::new(parent, in_scheme, scheme);
            if g.contains_ids(parent_in) {
                out.push(Finding::new(
                    TOP_WITH_BROADER,
                    g.term(top.s).clone(),
                    vec![g.resolve(top), g.resolve(IdTriple::new(top.s, broader, parent)), g.resolve(parent_in)],
                    format!(
                        "top concept of {} has broader concept {} in the same scheme",
                        g.term(scheme),
                        g.term(parent)
                    ),
                ));
            }
        }
    }
}

fn orphan(g: &Graph, ids: &Ids, out: &mut Vec<Finding>) {
    let related_to_other = |c: TermId| {
        ids.semantic_relation.is_some_and(|p| g.objects(c, p).any(|o| o != c) || g.subjects(p, c).any(|s| s != c))
    };
    let is_top = |c: TermId| ids.top_concept_of.is_some_and(|p| g.objects(c, p).next().is_some());
    for c in ids.concepts(g) {
        if !related_to_other(c) && !is_top(c) {
            let ty = IdTriple::new(c, ids.rdf_type.expect("typed"), ids.concept.expect("typed"));
            out.push(Finding::new(
                ORPHAN,
                g.term(c).clone(),
                vec![g.resolve(ty)],
                "concept has no semantic relation and is not a top concept",
            ));
        }
    }
}

fn plain_literal(g: &Graph, out: &mut Vec<Finding>) {
    let checked = [skos::pref_label(), skos::alt_label(), skos::hidden_label(), skosxl::literal_form()];
    for prop in checked {
        let Some(p) = g.id_of_iri(&prop) else { continue };
        for t in g.with_predicate(p) {
            let why = match g.term(t.o).as_literal() {
                None => "is not a literal".to_owned(),
                Some(l) if !l.is_plain() => format!("has datatype {}", l.datatype().expect("typed")),
                Some(_) => continue,
            };
            out.push(Finding::new(
                PLAIN_LITERAL,
                g.term(t.s).clone(),
                vec![g.resolve(t)],
                format!("value {} of {} {why}; a plain literal is expected", g.term(t.o), compact(prop.as_str())),
            ));
        }
    }
}

fn notation_untyped(g: &Graph, ids: &Ids, out: &mut Vec<Finding>) {
    for t in with_pred(g, ids.notation) {
        if g.term(t.o).as_literal().is_some_and(|l| l.is_plain()) {
            out.push(Finding::new(
                NOTATION_UNTYPED,
                g.term(t.s).clone(),
                vec![g.resolve(t)],
                format!("notation {} has no datatype", g.term(t.o)),
            ));
        }
    }
}

fn member_list_multi(g: &Graph, ids: &Ids, out: &mut Vec<Finding>) {
    let mut by_subject: BTreeMap<TermId, Vec<IdTriple>> = BTreeMap::new();
    for t in with_pred(g, ids.member_list) {
        by_subject.entry(t.s).or_default().push(t);
    }
    for (s, ts) in by_subject.into_iter().filter(|(_, ts)| ts.len() > 1) {
        out.push(Finding::new(
            MEMBERLIST_MULTI,
            g.term(s).clone(),
            ts.iter().map(|&t| g.resolve(t)).collect(),
            format!("{} values of skos:memberList, which is functional", ts.len()),
        ));
    }
}

fn union_range(g: &Graph, ids: &Ids, out: &mut Vec<Finding>) {
    let typed_as = |x: TermId, class: Option<TermId>| match (ids.rdf_type, class) {
        (Some(ty), Some(c)) => g.contains_ids(IdTriple::new(x, ty, c)),
        _ => false,
    };
    let mut by_object: BTreeMap<TermId, Vec<IdTriple>> = BTreeMap::new();
    let mut seen = HashSet::new();
    for t in with_pred(g, ids.member) {
        if seen.insert(t) && !typed_as(t.o, ids.concept) && !typed_as(t.o, ids.collection) {
            by_object.entry(t.o).or_default().push(t);
        }
    }
    for (o, ts) in by_object {
        out.push(Finding::new(
            UNION_RANGE,
            g.term(o).clone(),
            ts.iter().map(|&t| g.resolve(t)).collect(),
            "collection member is typed neither skos:Concept nor skos:Collection",
        ));
    }
}
