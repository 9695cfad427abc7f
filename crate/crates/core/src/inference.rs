//! Forward-chaining materialization of the catalog's definition axioms.
//!
//! The engine is a worklist variant of semi-naive evaluation: every triple,
//! asserted or derived, is taken off the queue exactly once and joined
//! against the graph as it stands at that moment. A pair of premises is
//! therefore always joined when the later of the two is dequeued, and no
//! rule ever re-fires on old data alone.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::finding::Finding;
use crate::rdf::{list_cells, Graph, IdTriple, Iri, Term, TermId, Triple};
use crate::vocab::ns::{rdf, skos};
use crate::vocab::{axioms_for, Axiom, AxiomId, AxiomKind, Profile};

/// Why a derived triple holds: the first derivation found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub derived: Triple,
    pub axiom: AxiomId,
    pub premises: Vec<Triple>,
}

#[derive(Debug, Clone)]
struct Derivation {
    triple: IdTriple,
    axiom: Option<AxiomId>,
    premises: Vec<IdTriple>,
}

/// The input graph closed under a set of definition axioms.
#[derive(Debug, Clone)]
pub struct MaterializedGraph {
    graph: Graph,
    derivations: Vec<Derivation>,
    by_triple: HashMap<IdTriple, usize>,
    diagnostics: Vec<Finding>,
    profile: Option<Profile>,
}

impl MaterializedGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn derived_count(&self) -> usize {
        self.derivations.len()
    }

    pub fn asserted_count(&self) -> usize {
        self.graph.len() - self.derivations.len()
    }

    /// The profile used, or `None` for an explicit axiom subset.
    pub fn profile(&self) -> Option<Profile> {
        self.profile
    }

    /// Problems met while applying rules, e.g. a broken `skos:memberList`.
    pub fn diagnostics(&self) -> &[Finding] {
        &self.diagnostics
    }

    pub fn is_derived_ids(&self, t: IdTriple) -> bool {
        self.by_triple.contains_key(&t)
    }

    pub fn is_asserted_ids(&self, t: IdTriple) -> bool {
        self.graph.contains_ids(t) && !self.is_derived_ids(t)
    }

    pub fn trace_for(&self, t: &Triple) -> Option<TraceEntry> {
        let ids = IdTriple::new(
            self.graph.id_of(t.subject())?,
            self.graph.id_of_iri(t.predicate())?,
            self.graph.id_of(t.object())?,
        );
        self.by_triple.get(&ids).map(|&i| self.entry(&self.derivations[i]))
    }

    fn entry(&self, d: &Derivation) -> TraceEntry {
        TraceEntry {
            derived: self.graph.resolve(d.triple),
            axiom: d.axiom.expect("derived triples carry an axiom"),
            premises: d.premises.iter().map(|&p| self.graph.resolve(p)).collect(),
        }
    }

    /// Every derivation, in the order the engine found them.
    pub fn trace(&self) -> impl Iterator<Item = TraceEntry> + '_ {
        self.derivations.iter().map(|d| self.entry(d))
    }

    /// Input triples only.
    pub fn asserted(&self) -> impl Iterator<Item = IdTriple> + '_ {
        self.graph.id_triples().iter().copied().filter(|t| !self.by_triple.contains_key(t))
    }
}

type Targets = HashMap<TermId, Vec<(TermId, AxiomId)>>;

/// Catalog axioms compiled to term ids of one graph.
#[derive(Default)]
struct Rules {
    rdf_type: Option<TermId>,
    sub_property: Targets,
    sub_class: Targets,
    domain: Targets,
    range: Targets,
    inverse: Targets,
    symmetric: HashMap<TermId, AxiomId>,
    transitive: HashMap<TermId, AxiomId>,
    /// first property -> (second property, implied property)
    chain_first: HashMap<TermId, Vec<(TermId, TermId, AxiomId)>>,
    /// second property -> (first property, implied property)
    chain_second: HashMap<TermId, Vec<(TermId, TermId, AxiomId)>>,
    list_member: HashMap<TermId, (TermId, AxiomId)>,
}

impl Rules {
    fn compile(graph: &mut Graph, axioms: &[&Axiom]) -> Rules {
        let mut r = Rules::default();
        let mut id = |iri: &Iri| graph.intern_iri(iri);
        r.rdf_type = Some(id(&rdf::type_()));
        for a in axioms {
            match a.kind {
                AxiomKind::SubPropertyOf => {
                    for (sub, sup) in a.sub_pairs() {
                        r.sub_property.entry(id(sub)).or_default().push((id(sup), a.id));
                    }
                }
                AxiomKind::SubClassOf => {
                    for (sub, sup) in a.sub_pairs() {
                        r.sub_class.entry(id(sub)).or_default().push((id(sup), a.id));
                    }
                }
                AxiomKind::Domain => {
                    for (p, c) in a.domain_pairs() {
                        r.domain.entry(id(p)).or_default().push((id(c), a.id));
                    }
                }
                AxiomKind::Range => {
                    // A union of classes licenses no single type.
                    if let [class] = a.range_classes()[..] {
                        let c = id(class);
                        for p in a.properties() {
                            r.range.entry(id(p)).or_default().push((c, a.id));
                        }
                    }
                }
                AxiomKind::InverseOf => {
                    for (p, q) in a.inverse_pairs() {
                        let (p, q) = (id(p), id(q));
                        r.inverse.entry(p).or_default().push((q, a.id));
                        r.inverse.entry(q).or_default().push((p, a.id));
                    }
                }
                AxiomKind::Symmetric => {
                    for p in a.properties() {
                        r.symmetric.insert(id(p), a.id);
                    }
                }
                AxiomKind::Transitive => {
                    for p in a.properties() {
                        r.transitive.insert(id(p), a.id);
                    }
                }
                AxiomKind::PropertyChain => {
                    let (first, second, sup) = a.chain().expect("chain axiom");
                    let (first, second, sup) = (id(first), id(second), id(sup));
                    r.chain_first.entry(first).or_default().push((second, sup, a.id));
                    r.chain_second.entry(second).or_default().push((first, sup, a.id));
                }
                AxiomKind::ListMemberRule => {
                    let (list, member) = a.list_member().expect("list rule");
                    r.list_member.insert(id(list), (id(member), a.id));
                }
                // Checks and vocabulary declarations derive nothing.
                AxiomKind::Functional
                | AxiomKind::DisjointClasses
                | AxiomKind::DisjointProperties
                | AxiomKind::CardinalityExactlyOne
                | AxiomKind::UniquePrefLabelPerLanguage
                | AxiomKind::PlainLiteralRange
                | AxiomKind::InstanceOfMetaclass => {}
            }
        }
        r
    }
}

struct Engine {
    graph: Graph,
    rules: Rules,
    derivations: Vec<Derivation>,
    by_triple: HashMap<IdTriple, usize>,
    queue: VecDeque<IdTriple>,
    diagnostics: Vec<Finding>,
}

impl Engine {
    fn derive(&mut self, triple: IdTriple, axiom: AxiomId, premises: Vec<IdTriple>) {
        if self.graph.insert_ids(triple) {
            self.by_triple.insert(triple, self.derivations.len());
            self.derivations.push(Derivation { triple, axiom: Some(axiom), premises });
            self.queue.push_back(triple);
        }
    }

    fn is_resource(&self, t: TermId) -> bool {
        self.graph.term(t).is_resource()
    }

    fn step(&mut self, t: IdTriple) {
        let IdTriple { s, p, o } = t;
        let rdf_type = self.rules.rdf_type.expect("compiled");
        let mut out: Vec<(IdTriple, AxiomId, Vec<IdTriple>)> = Vec::new();
        let r = &self.rules;
        let g = &self.graph;

        for &(q, ax) in r.sub_property.get(&p).into_iter().flatten() {
            out.push((IdTriple::new(s, q, o), ax, vec![t]));
        }
        if p == rdf_type {
            for &(d, ax) in r.sub_class.get(&o).into_iter().flatten() {
                out.push((IdTriple::new(s, rdf_type, d), ax, vec![t]));
            }
        }
        for &(d, ax) in r.domain.get(&p).into_iter().flatten() {
            out.push((IdTriple::new(s, rdf_type, d), ax, vec![t]));
        }
        let object_is_resource = self.is_resource(o);
        if object_is_resource {
            for &(c, ax) in r.range.get(&p).into_iter().flatten() {
                out.push((IdTriple::new(o, rdf_type, c), ax, vec![t]));
            }
            for &(q, ax) in r.inverse.get(&p).into_iter().flatten() {
                out.push((IdTriple::new(o, q, s), ax, vec![t]));
            }
            if let Some(&ax) = r.symmetric.get(&p) {
                out.push((IdTriple::new(o, p, s), ax, vec![t]));
            }
        }
        if let Some(&ax) = r.transitive.get(&p) {
            for z in g.objects(o, p) {
                out.push((IdTriple::new(s, p, z), ax, vec![t, IdTriple::new(o, p, z)]));
            }
            for w in g.subjects(p, s) {
                out.push((IdTriple::new(w, p, o), ax, vec![IdTriple::new(w, p, s), t]));
            }
        }
        for &(second, sup, ax) in r.chain_first.get(&p).into_iter().flatten() {
            for f in g.objects(o, second) {
                out.push((IdTriple::new(s, sup, f), ax, vec![t, IdTriple::new(o, second, f)]));
            }
        }
        for &(first, sup, ax) in r.chain_second.get(&p).into_iter().flatten() {
            for c in g.subjects(first, s) {
                out.push((IdTriple::new(c, sup, o), ax, vec![IdTriple::new(c, first, s), t]));
            }
        }
        if let Some(&(member, ax)) = r.list_member.get(&p) {
            match list_cells(g, o) {
                Ok(cells) => {
                    let first = g.id_of_iri(&rdf::first());
                    for (node, item) in cells {
                        let cell = IdTriple::new(node, first.expect("non-empty list has rdf:first"), item);
                        out.push((IdTriple::new(s, member, item), ax, vec![t, cell]));
                    }
                }
                Err(e) => {
                    let msg = format!(
                        "{} is not a usable member list ({e}); no skos:member triples derived from it",
                        g.term(o)
                    );
                    self.diagnostics.push(Finding::new(ax.to_string(), g.term(s).clone(), vec![g.resolve(t)], msg));
                }
            }
        }

        for (triple, ax, premises) in out {
            self.derive(triple, ax, premises);
        }
    }

    fn run(mut self, profile: Option<Profile>) -> MaterializedGraph {
        self.queue.extend(self.graph.id_triples().iter().copied());
        while let Some(t) = self.queue.pop_front() {
            self.step(t);
        }
        MaterializedGraph {
            graph: self.graph,
            derivations: self.derivations,
            by_triple: self.by_triple,
            diagnostics: self.diagnostics,
            profile,
        }
    }
}

fn run(g: &Graph, axioms: &[&Axiom], profile: Option<Profile>) -> MaterializedGraph {
    let mut graph = g.clone();
    let rules = Rules::compile(&mut graph, axioms);
    Engine {
        graph,
        rules,
        derivations: Vec::new(),
        by_triple: HashMap::new(),
        queue: VecDeque::new(),
        diagnostics: Vec::new(),
    }
    .run(profile)
}

/// Closes `g` under every definition axiom of `profile`.
pub fn materialize(g: &Graph, profile: Profile) -> MaterializedGraph {
    run(g, &axioms_for(profile), Some(profile))
}

/// Closes `g` under an explicit subset of the catalog.
pub fn materialize_with(g: &Graph, axioms: &[&Axiom]) -> MaterializedGraph {
    run(g, axioms, None)
}

/// `g` plus the plain SKOS labels implied by its SKOS-XL labels.
pub fn dumb_down_xl(g: &Graph) -> Graph {
    let chains: Vec<&Axiom> =
        crate::vocab::axiom_table().iter().filter(|a| a.kind == AxiomKind::PropertyChain).collect();
    materialize_with(g, &chains).into_graph()
}

/// Everything `concept` reaches over `skos:broaderTransitive`.
///
/// The concept itself is included only when a cycle leads back to it.
pub fn broader_closure(mg: &MaterializedGraph, concept: &Term) -> BTreeSet<Term> {
    let g = mg.graph();
    let (Some(c), Some(bt)) = (g.id_of(concept), g.id_of_iri(&skos::broader_transitive())) else {
        return BTreeSet::new();
    };
    g.objects(c, bt).map(|t| g.term(t).clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::parse_ntriples_str;
    use crate::vocab::ns::{self, skosxl};

    /// Expands `skos:`, `skosxl:`, `rdf:` and `ex:` shorthand in `s p o .`
    /// lines into N-Triples.
    fn graph(lines: &str) -> Graph {
        let mut out = String::new();
        for line in lines.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let parts: Vec<String> = line
                .trim_end_matches(" .")
                .splitn(3, ' ')
                .map(|tok| {
                    if tok.starts_with('"') || tok.starts_with("_:") {
                        tok.to_owned()
                    } else {
                        format!("<{}>", ns::expand(tok).map(|i| i.as_str().to_owned()).unwrap_or(tok.to_owned()))
                    }
                })
                .collect();
            out.push_str(&format!("{} .\n", parts.join(" ")));
        }
        parse_ntriples_str(&out).unwrap()
    }

    fn iri(s: &str) -> Term {
        Term::Iri(ns::expand(s).unwrap_or_else(|| Iri::new(s).unwrap()))
    }

    fn has(mg: &MaterializedGraph, s: &str, p: &str, o: Term) -> bool {
        let p = ns::expand(p).unwrap();
        mg.graph().contains(&Triple::new(iri(s), p, o).unwrap())
    }

    #[test]
    fn love_chain() {
        let g = graph(
            "ex:concept-1234 skosxl:prefLabel ex:label-5678 .\n\
             ex:label-5678 skosxl:literalForm \"love\" .",
        );
        let mg = materialize(&g, Profile::Reference);
        assert!(has(&mg, "ex:concept-1234", "skos:prefLabel", Term::Literal(crate::Literal::plain("love"))));
        let entry = mg
            .trace_for(
                &Triple::new(iri("ex:concept-1234"), skos::pref_label(), crate::Literal::plain("love").into()).unwrap(),
            )
            .unwrap();
        assert_eq!(entry.axiom.to_string(), "S55");
        assert_eq!(entry.premises.len(), 2);
        // Profiles without S55 derive nothing about skos:prefLabel.
        let schema = materialize(&g, Profile::RdfSchema);
        assert!(!has(&schema, "ex:concept-1234", "skos:prefLabel", Term::Literal(crate::Literal::plain("love"))));
    }

    #[test]
    fn broader_inverse_and_supers() {
        let mg = materialize(&graph("ex:mammals skos:broader ex:animals ."), Profile::Reference);
        assert!(has(&mg, "ex:animals", "skos:narrower", iri("ex:mammals")));
        assert!(has(&mg, "ex:mammals", "skos:broaderTransitive", iri("ex:animals")));
        assert!(has(&mg, "ex:animals", "skos:narrowerTransitive", iri("ex:mammals")));
        assert!(has(&mg, "ex:mammals", "rdf:type", iri("skos:Concept")));
    }

    #[test]
    fn related_is_symmetric() {
        let mg = materialize(&graph("ex:birds skos:related ex:ornithology ."), Profile::Reference);
        assert!(has(&mg, "ex:ornithology", "skos:related", iri("ex:birds")));
    }

    #[test]
    fn empty_graph() {
        let mg = materialize(&Graph::new(), Profile::Reference);
        assert_eq!(mg.derived_count(), 0);
        assert!(mg.graph().is_empty());
    }

    #[test]
    fn broader_is_not_transitive() {
        let mg = materialize(&graph("ex:a skos:broader ex:b .\nex:b skos:broader ex:c ."), Profile::Reference);
        assert!(has(&mg, "ex:a", "skos:broaderTransitive", iri("ex:c")));
        assert!(!has(&mg, "ex:a", "skos:broader", iri("ex:c")));
    }

    #[test]
    fn reflexive_broader_survives() {
        let mg = materialize(&graph("ex:a skos:broader ex:a ."), Profile::Reference);
        assert!(has(&mg, "ex:a", "skos:broader", iri("ex:a")));
        assert!(has(&mg, "ex:a", "skos:narrower", iri("ex:a")));
    }

    #[test]
    fn closure_queries() {
        let mg = materialize(
            &graph("ex:growing-vegetables skos:broader ex:gardening .\nex:gardening skos:broader ex:home-activities ."),
            Profile::Reference,
        );
        let got = broader_closure(&mg, &iri("ex:growing-vegetables"));
        assert_eq!(got, [iri("ex:gardening"), iri("ex:home-activities")].into_iter().collect());
        assert!(broader_closure(&mg, &iri("ex:home-activities")).is_empty());
        assert!(broader_closure(&mg, &iri("ex:unknown")).is_empty());

        let cyclic = materialize(&graph("ex:a skos:broader ex:b .\nex:b skos:broader ex:a ."), Profile::Reference);
        assert_eq!(broader_closure(&cyclic, &iri("ex:a")), [iri("ex:a"), iri("ex:b")].into_iter().collect());
    }

    #[test]
    fn member_list_expands() {
        let g = graph(
            "ex:coll skos:memberList _:l1 .\n_:l1 rdf:first ex:x .\n_:l1 rdf:rest _:l2 .\n\
             _:l2 rdf:first ex:y .\n_:l2 rdf:rest rdf:nil .",
        );
        let mg = materialize(&g, Profile::Reference);
        assert!(has(&mg, "ex:coll", "skos:member", iri("ex:x")));
        assert!(has(&mg, "ex:coll", "skos:member", iri("ex:y")));
        assert!(has(&mg, "ex:coll", "rdf:type", iri("skos:OrderedCollection")));
        assert!(has(&mg, "ex:coll", "rdf:type", iri("skos:Collection")));
        assert!(mg.diagnostics().is_empty());
        // S36 is absent from the schema profiles.
        assert!(!has(&materialize(&g, Profile::RdfSchema), "ex:coll", "skos:member", iri("ex:x")));
    }

    #[test]
    fn broken_member_list_is_a_diagnostic() {
        let g = graph("ex:coll skos:memberList _:l1 .\n_:l1 rdf:first ex:x .\n_:l1 rdf:rest _:l1 .");
        let mg = materialize(&g, Profile::Reference);
        assert_eq!(mg.diagnostics().len(), 1);
        assert_eq!(mg.diagnostics()[0].rule_id, "S36");
        assert!(!has(&mg, "ex:coll", "skos:member", iri("ex:x")));
        // The rest of materialization still happens.
        assert!(has(&mg, "ex:coll", "rdf:type", iri("skos:Collection")));
    }

    #[test]
    fn union_range_types_nothing() {
        let mg = materialize(&graph("ex:coll skos:member ex:x ."), Profile::Reference);
        assert!(!has(&mg, "ex:x", "rdf:type", iri("skos:Concept")));
        assert!(!has(&mg, "ex:x", "rdf:type", iri("skos:Collection")));
        assert!(has(&mg, "ex:coll", "rdf:type", iri("skos:Collection")));
    }

    #[test]
    fn literal_objects_get_no_range_type() {
        let mg = materialize(&graph("ex:c skos:inScheme \"not a scheme\" ."), Profile::Reference);
        assert!(mg.graph().id_triples().iter().all(|t| mg.graph().term(t.s).is_resource()));
        assert!(has(&mg, "ex:c", "skos:inScheme", Term::Literal(crate::Literal::plain("not a scheme"))));
    }

    #[test]
    fn dumb_down_only_adds_chain_triples() {
        let g = graph(
            "ex:c1 skosxl:altLabel _:lab .\nex:c2 skosxl:altLabel _:lab .\n_:lab skosxl:literalForm \"FAO\"@en .\n\
             ex:c1 skos:broader ex:c2 .",
        );
        let out = dumb_down_xl(&g);
        assert_eq!(out.len(), g.len() + 2);
        let no_form = graph("ex:c1 skosxl:prefLabel _:lab .");
        assert_eq!(dumb_down_xl(&no_form), no_form);
        assert!(skosxl::label_relation().as_str().ends_with("labelRelation"));
    }

    #[test]
    fn fixpoint() {
        let g = graph("ex:a skos:broader ex:b .\nex:b skos:broader ex:c .\nex:a skos:exactMatch ex:z .\nex:z skos:exactMatch ex:y .");
        let once = materialize(&g, Profile::Reference);
        let twice = materialize(once.graph(), Profile::Reference);
        assert_eq!(twice.derived_count(), 0);
    }
}
