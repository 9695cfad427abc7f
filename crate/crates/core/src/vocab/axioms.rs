//! The SKOS (S1–S46) and SKOS-XL (S47–S62) axiom catalog.
//!
//! Each entry records what it says about the vocabulary (its kind and IRI
//! arguments), which of the three published tables it comes from, and whether
//! the normative RDF schema and the OWL 1 DL prune actually contain it. The
//! inference and integrity engines interpret this data; nothing about the
//! vocabulary semantics is hard-coded elsewhere.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::ns::{compact, owl, rdf, rdfs, skos, skosxl};
use crate::rdf::Iri;

/// `S1` through `S62`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxiomId(u8);

impl AxiomId {
    pub const MAX: u8 = 62;

    pub fn new(n: u8) -> Option<Self> {
        (1..=Self::MAX).contains(&n).then_some(AxiomId(n))
    }

    pub fn number(self) -> u8 {
        self.0
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.0)
    }
}

impl FromStr for AxiomId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.strip_prefix('S')
            .and_then(|n| n.parse().ok())
            .and_then(AxiomId::new)
            .ok_or_else(|| format!("not an axiom id: {s:?}"))
    }
}

impl Serialize for AxiomId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AxiomKind {
    SubPropertyOf,
    SubClassOf,
    Domain,
    Range,
    InverseOf,
    Symmetric,
    Transitive,
    Functional,
    DisjointClasses,
    DisjointProperties,
    PropertyChain,
    CardinalityExactlyOne,
    ListMemberRule,
    UniquePrefLabelPerLanguage,
    PlainLiteralRange,
    InstanceOfMetaclass,
}

impl AxiomKind {
    /// Kinds that state when data is inconsistent rather than what follows.
    pub fn is_integrity(self) -> bool {
        matches!(
            self,
            AxiomKind::DisjointClasses
                | AxiomKind::DisjointProperties
                | AxiomKind::CardinalityExactlyOne
                | AxiomKind::UniquePrefLabelPerLanguage
        )
    }
}

/// What an IRI argument plays in its axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Sub,
    Super,
    Instance,
    Metaclass,
    Property,
    Class,
    DomainClass,
    RangeClass,
    Inverse,
    /// Paired with the single `Class`/`Property` argument.
    DisjointWith,
    /// Pairwise disjoint with every other `Member`.
    Member,
    ChainFirst,
    ChainSecond,
    ListProperty,
    MemberProperty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Argument {
    pub role: Role,
    #[serde(serialize_with = "iri_str")]
    pub iri: Iri,
}

fn iri_str<S: Serializer>(iri: &Iri, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(iri.as_str())
}

/// Which published table an axiom belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SourceTable {
    Definitions,
    IntegrityConditions,
    SkosXl,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axiom {
    pub id: AxiomId,
    pub kind: AxiomKind,
    pub arguments: Vec<Argument>,
    pub table: SourceTable,
    pub in_rdf_schema: bool,
    pub in_owl_dl_prune: bool,
    pub is_integrity_condition: bool,
}

impl Axiom {
    fn with_role(&self, role: Role) -> impl Iterator<Item = &Iri> + '_ {
        self.arguments.iter().filter(move |a| a.role == role).map(|a| &a.iri)
    }

    pub fn properties(&self) -> Vec<&Iri> {
        self.with_role(Role::Property).collect()
    }

    pub fn classes(&self) -> Vec<&Iri> {
        self.with_role(Role::Class).collect()
    }

    /// (sub, super) pairs of a SubPropertyOf or SubClassOf axiom.
    pub fn sub_pairs(&self) -> Vec<(&Iri, &Iri)> {
        let subs = self.with_role(Role::Sub);
        let supers = self.with_role(Role::Super);
        subs.zip(supers).collect()
    }

    /// (property, class) pairs of a Domain axiom.
    pub fn domain_pairs(&self) -> Vec<(&Iri, &Iri)> {
        let class = self.with_role(Role::DomainClass).next();
        self.with_role(Role::Property).flat_map(|p| class.map(|c| (p, c))).collect()
    }

    /// Range classes; more than one means their union.
    pub fn range_classes(&self) -> Vec<&Iri> {
        self.with_role(Role::RangeClass).collect()
    }

    /// (property, inverse) pairs.
    pub fn inverse_pairs(&self) -> Vec<(&Iri, &Iri)> {
        self.with_role(Role::Property).zip(self.with_role(Role::Inverse)).collect()
    }

    /// Unordered pairs declared disjoint, for both disjointness kinds.
    pub fn disjoint_pairs(&self) -> Vec<(&Iri, &Iri)> {
        let others: Vec<&Iri> = self.with_role(Role::DisjointWith).collect();
        if !others.is_empty() {
            let head = self
                .arguments
                .iter()
                .find(|a| matches!(a.role, Role::Class | Role::Property))
                .map(|a| &a.iri)
                .expect("disjointness axiom has a subject");
            return others.into_iter().map(|o| (head, o)).collect();
        }
        let members: Vec<&Iri> = self.with_role(Role::Member).collect();
        let mut pairs = Vec::new();
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                pairs.push((*a, *b));
            }
        }
        pairs
    }

    /// (first, second, implied super-property) of a property chain axiom.
    pub fn chain(&self) -> Option<(&Iri, &Iri, &Iri)> {
        Some((
            self.with_role(Role::ChainFirst).next()?,
            self.with_role(Role::ChainSecond).next()?,
            self.with_role(Role::Super).next()?,
        ))
    }

    /// (list property, member property) of the list-member rule.
    pub fn list_member(&self) -> Option<(&Iri, &Iri)> {
        Some((self.with_role(Role::ListProperty).next()?, self.with_role(Role::MemberProperty).next()?))
    }

    pub fn in_profile(&self, profile: Profile) -> bool {
        match profile {
            Profile::Reference => true,
            Profile::RdfSchema => self.in_rdf_schema,
            Profile::OwlDlPrune => self.in_owl_dl_prune,
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |i: &Iri| compact(i.as_str());
        let list = |v: Vec<&Iri>| v.into_iter().map(c).collect::<Vec<_>>().join(", ");
        write!(f, "{} ", self.id)?;
        match self.kind {
            AxiomKind::SubPropertyOf | AxiomKind::SubClassOf => {
                let rel = if self.kind == AxiomKind::SubClassOf { "subClassOf" } else { "subPropertyOf" };
                let parts: Vec<String> =
                    self.sub_pairs().into_iter().map(|(a, b)| format!("{} rdfs:{rel} {}", c(a), c(b))).collect();
                write!(f, "{}", parts.join("; "))
            }
            AxiomKind::Domain => {
                let d = self.with_role(Role::DomainClass).map(c).collect::<Vec<_>>().join("");
                write!(f, "rdfs:domain of {} is {d}", list(self.properties()))
            }
            AxiomKind::Range => {
                write!(
                    f,
                    "rdfs:range of {} is {}",
                    list(self.properties()),
                    self.range_classes().into_iter().map(c).collect::<Vec<_>>().join(" \u{222a} ")
                )
            }
            AxiomKind::InverseOf => {
                let parts: Vec<String> =
                    self.inverse_pairs().into_iter().map(|(a, b)| format!("{} owl:inverseOf {}", c(a), c(b))).collect();
                write!(f, "{}", parts.join("; "))
            }
            AxiomKind::Symmetric => write!(f, "{} symmetric", list(self.properties())),
            AxiomKind::Transitive => write!(f, "{} transitive", list(self.properties())),
            AxiomKind::Functional => write!(f, "{} functional", list(self.properties())),
            AxiomKind::DisjointClasses | AxiomKind::DisjointProperties => {
                let parts: Vec<String> =
                    self.disjoint_pairs().into_iter().map(|(a, b)| format!("{} \u{2260} {}", c(a), c(b))).collect();
                write!(f, "disjoint: {}", parts.join(", "))
            }
            AxiomKind::PropertyChain => {
                let (a, b, s) = self.chain().expect("chain axiom");
                write!(f, "({} \u{2218} {}) \u{2291} {}", c(a), c(b), c(s))
            }
            AxiomKind::CardinalityExactlyOne => {
                write!(f, "{} has exactly one {}", list(self.classes()), list(self.properties()))
            }
            AxiomKind::ListMemberRule => {
                let (l, m) = self.list_member().expect("list rule");
                write!(f, "items of {} are values of {}", c(l), c(m))
            }
            AxiomKind::UniquePrefLabelPerLanguage => {
                write!(f, "at most one {} per language tag", list(self.properties()))
            }
            AxiomKind::PlainLiteralRange => write!(f, "range of {} is plain literals", list(self.properties())),
            AxiomKind::InstanceOfMetaclass => {
                let m = self.with_role(Role::Metaclass).map(c).collect::<Vec<_>>().join("");
                write!(f, "{} a {m}", self.with_role(Role::Instance).map(c).collect::<Vec<_>>().join(", "))
            }
        }
    }
}

impl Serialize for Axiom {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Axiom", 8)?;
        st.serialize_field("id", &self.id)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("table", &self.table)?;
        st.serialize_field("arguments", &self.arguments)?;
        st.serialize_field("in_rdf_schema", &self.in_rdf_schema)?;
        st.serialize_field("in_owl_dl_prune", &self.in_owl_dl_prune)?;
        st.serialize_field("is_integrity_condition", &self.is_integrity_condition)?;
        st.serialize_field("statement", &self.to_string())?;
        st.end()
    }
}

/// A selectable subset of the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Profile {
    /// Every axiom.
    #[default]
    Reference,
    /// Axioms the normative RDF schemas contain.
    RdfSchema,
    /// Axioms the OWL 1 DL prune contains. It covers S1–S46 only.
    OwlDlPrune,
}

impl Profile {
    pub const ALL: [Profile; 3] = [Profile::Reference, Profile::RdfSchema, Profile::OwlDlPrune];

    pub fn name(self) -> &'static str {
        match self {
            Profile::Reference => "reference",
            Profile::RdfSchema => "rdf-schema",
            Profile::OwlDlPrune => "owl-dl-prune",
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Profile::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown profile {s:?} (expected reference, rdf-schema or owl-dl-prune)"))
    }
}

fn arg(role: Role, iri: Iri) -> Argument {
    Argument { role, iri }
}

fn sub(a: Iri, b: Iri) -> [Argument; 2] {
    [arg(Role::Sub, a), arg(Role::Super, b)]
}

fn props(ps: impl IntoIterator<Item = Iri>) -> Vec<Argument> {
    ps.into_iter().map(|p| arg(Role::Property, p)).collect()
}

fn instances(metaclass: Iri, xs: impl IntoIterator<Item = Iri>) -> Vec<Argument> {
    let mut v: Vec<Argument> = xs.into_iter().map(|x| arg(Role::Instance, x)).collect();
    v.push(arg(Role::Metaclass, metaclass));
    v
}

fn labels() -> [Iri; 3] {
    [skos::pref_label(), skos::alt_label(), skos::hidden_label()]
}

fn xl_labels() -> [Iri; 3] {
    [skosxl::pref_label(), skosxl::alt_label(), skosxl::hidden_label()]
}

/// Presence in the two formalisations: `G` present, `R` absent. SKOS-XL rows
/// have a single schema column; the OWL prune never covers them.
fn build(n: u8, table: SourceTable, cells: &str, kind: AxiomKind, arguments: Vec<Argument>) -> Axiom {
    let cell = |i: usize| match cells.as_bytes().get(i) {
        Some(b'G') => true,
        Some(b'R') | None => false,
        Some(other) => panic!("bad cell {}", *other as char),
    };
    Axiom {
        id: AxiomId::new(n).expect("id in range"),
        kind,
        arguments,
        table,
        in_rdf_schema: cell(0),
        in_owl_dl_prune: cell(1),
        is_integrity_condition: kind.is_integrity(),
    }
}

fn catalog() -> Vec<Axiom> {
    use AxiomKind::*;
    use Role::*;
    use SourceTable::*;

    let d = |n, cells, kind, args| build(n, Definitions, cells, kind, args);
    let ic = |n, cells, kind, args| build(n, IntegrityConditions, cells, kind, args);
    let xl = |n, cells, kind, args| build(n, SkosXl, cells, kind, args);

    vec![
        d(1, "GG", InstanceOfMetaclass, instances(owl::class(), [skos::concept()])),
        d(2, "GG", InstanceOfMetaclass, instances(owl::class(), [skos::concept_scheme()])),
        d(
            3,
            "GG",
            InstanceOfMetaclass,
            instances(owl::object_property(), [skos::in_scheme(), skos::has_top_concept(), skos::top_concept_of()]),
        ),
        d(4, "GG", Range, vec![arg(Property, skos::in_scheme()), arg(RangeClass, skos::concept_scheme())]),
        d(5, "GG", Domain, vec![arg(Property, skos::has_top_concept()), arg(DomainClass, skos::concept_scheme())]),
        d(6, "GG", Range, vec![arg(Property, skos::has_top_concept()), arg(RangeClass, skos::concept())]),
        d(7, "GG", SubPropertyOf, sub(skos::top_concept_of(), skos::in_scheme()).to_vec()),
        d(8, "GG", InverseOf, vec![arg(Property, skos::top_concept_of()), arg(Inverse, skos::has_top_concept())]),
        ic(9, "GG", DisjointClasses, vec![arg(Class, skos::concept_scheme()), arg(DisjointWith, skos::concept())]),
        d(10, "GG", InstanceOfMetaclass, instances(owl::annotation_property(), labels())),
        d(11, "GR", SubPropertyOf, labels().into_iter().flat_map(|l| sub(l, rdfs::label())).collect()),
        d(12, "RR", PlainLiteralRange, props(labels())),
        ic(13, "RR", DisjointProperties, labels().into_iter().map(|l| arg(Member, l)).collect()),
        ic(14, "RR", UniquePrefLabelPerLanguage, props([skos::pref_label()])),
        d(15, "GG", InstanceOfMetaclass, instances(owl::datatype_property(), [skos::notation()])),
        d(
            16,
            "GG",
            InstanceOfMetaclass,
            instances(
                owl::annotation_property(),
                [
                    skos::note(),
                    skos::change_note(),
                    skos::definition(),
                    skos::editorial_note(),
                    skos::example(),
                    skos::history_note(),
                    skos::scope_note(),
                ],
            ),
        ),
        d(
            17,
            "GR",
            SubPropertyOf,
            [
                skos::change_note(),
                skos::definition(),
                skos::editorial_note(),
                skos::example(),
                skos::history_note(),
                skos::scope_note(),
            ]
            .into_iter()
            .flat_map(|n| sub(n, skos::note()))
            .collect(),
        ),
        d(
            18,
            "GG",
            InstanceOfMetaclass,
            instances(
                owl::object_property(),
                [
                    skos::semantic_relation(),
                    skos::broader(),
                    skos::narrower(),
                    skos::related(),
                    skos::broader_transitive(),
                    skos::narrower_transitive(),
                ],
            ),
        ),
        d(19, "GG", Domain, vec![arg(Property, skos::semantic_relation()), arg(DomainClass, skos::concept())]),
        d(20, "GG", Range, vec![arg(Property, skos::semantic_relation()), arg(RangeClass, skos::concept())]),
        d(
            21,
            "GG",
            SubPropertyOf,
            [skos::broader_transitive(), skos::narrower_transitive(), skos::related()]
                .into_iter()
                .flat_map(|p| sub(p, skos::semantic_relation()))
                .collect(),
        ),
        d(
            22,
            "GG",
            SubPropertyOf,
            [sub(skos::broader(), skos::broader_transitive()), sub(skos::narrower(), skos::narrower_transitive())]
                .concat(),
        ),
        d(23, "GG", Symmetric, props([skos::related()])),
        d(24, "GG", Transitive, props([skos::broader_transitive(), skos::narrower_transitive()])),
        d(25, "GG", InverseOf, vec![arg(Property, skos::narrower()), arg(Inverse, skos::broader())]),
        d(
            26,
            "GG",
            InverseOf,
            vec![arg(Property, skos::narrower_transitive()), arg(Inverse, skos::broader_transitive())],
        ),
        ic(
            27,
            "RR",
            DisjointProperties,
            vec![arg(Property, skos::related()), arg(DisjointWith, skos::broader_transitive())],
        ),
        d(28, "GG", InstanceOfMetaclass, instances(owl::class(), [skos::collection(), skos::ordered_collection()])),
        d(29, "GG", SubClassOf, sub(skos::ordered_collection(), skos::collection()).to_vec()),
        d(30, "GG", InstanceOfMetaclass, instances(owl::object_property(), [skos::member(), skos::member_list()])),
        d(31, "GG", Domain, vec![arg(Property, skos::member()), arg(DomainClass, skos::collection())]),
        d(
            32,
            "GG",
            Range,
            vec![arg(Property, skos::member()), arg(RangeClass, skos::concept()), arg(RangeClass, skos::collection())],
        ),
        d(33, "GG", Domain, vec![arg(Property, skos::member_list()), arg(DomainClass, skos::ordered_collection())]),
        d(34, "GR", Range, vec![arg(Property, skos::member_list()), arg(RangeClass, rdf::list())]),
        d(35, "GG", Functional, props([skos::member_list()])),
        d(36, "RR", ListMemberRule, vec![arg(ListProperty, skos::member_list()), arg(MemberProperty, skos::member())]),
        ic(
            37,
            "GG",
            DisjointClasses,
            vec![
                arg(Class, skos::collection()),
                arg(DisjointWith, skos::concept()),
                arg(DisjointWith, skos::concept_scheme()),
            ],
        ),
        d(
            38,
            "GG",
            InstanceOfMetaclass,
            instances(
                owl::object_property(),
                [
                    skos::mapping_relation(),
                    skos::close_match(),
                    skos::exact_match(),
                    skos::broad_match(),
                    skos::narrow_match(),
                    skos::related_match(),
                ],
            ),
        ),
        d(39, "GG", SubPropertyOf, sub(skos::mapping_relation(), skos::semantic_relation()).to_vec()),
        d(
            40,
            "GG",
            SubPropertyOf,
            [skos::close_match(), skos::broad_match(), skos::narrow_match(), skos::related_match()]
                .into_iter()
                .flat_map(|p| sub(p, skos::mapping_relation()))
                .collect(),
        ),
        d(
            41,
            "GG",
            SubPropertyOf,
            [
                sub(skos::broad_match(), skos::broader()),
                sub(skos::narrow_match(), skos::narrower()),
                sub(skos::related_match(), skos::related()),
            ]
            .concat(),
        ),
        d(42, "GG", SubPropertyOf, sub(skos::exact_match(), skos::close_match()).to_vec()),
        d(43, "GG", InverseOf, vec![arg(Property, skos::narrow_match()), arg(Inverse, skos::broad_match())]),
        d(44, "GG", Symmetric, props([skos::related_match(), skos::close_match(), skos::exact_match()])),
        d(45, "GG", Transitive, props([skos::exact_match()])),
        ic(
            46,
            "RR",
            DisjointProperties,
            vec![
                arg(Property, skos::exact_match()),
                arg(DisjointWith, skos::broad_match()),
                arg(DisjointWith, skos::related_match()),
            ],
        ),
        xl(47, "G", InstanceOfMetaclass, instances(owl::class(), [skosxl::label()])),
        xl(
            48,
            "G",
            DisjointClasses,
            vec![
                arg(Class, skosxl::label()),
                arg(DisjointWith, skos::concept()),
                arg(DisjointWith, skos::concept_scheme()),
                arg(DisjointWith, skos::collection()),
            ],
        ),
        xl(49, "G", InstanceOfMetaclass, instances(owl::datatype_property(), [skosxl::literal_form()])),
        xl(50, "G", Domain, vec![arg(Property, skosxl::literal_form()), arg(DomainClass, skosxl::label())]),
        xl(51, "G", PlainLiteralRange, props([skosxl::literal_form()])),
        xl(52, "G", CardinalityExactlyOne, vec![arg(Class, skosxl::label()), arg(Property, skosxl::literal_form())]),
        xl(53, "G", InstanceOfMetaclass, instances(owl::object_property(), xl_labels())),
        xl(54, "G", Range, {
            let mut v = props(xl_labels());
            v.push(arg(RangeClass, skosxl::label()));
            v
        }),
        xl(
            55,
            "R",
            PropertyChain,
            vec![
                arg(ChainFirst, skosxl::pref_label()),
                arg(ChainSecond, skosxl::literal_form()),
                arg(Super, skos::pref_label()),
            ],
        ),
        xl(
            56,
            "R",
            PropertyChain,
            vec![
                arg(ChainFirst, skosxl::alt_label()),
                arg(ChainSecond, skosxl::literal_form()),
                arg(Super, skos::alt_label()),
            ],
        ),
        xl(
            57,
            "R",
            PropertyChain,
            vec![
                arg(ChainFirst, skosxl::hidden_label()),
                arg(ChainSecond, skosxl::literal_form()),
                arg(Super, skos::hidden_label()),
            ],
        ),
        xl(58, "G", DisjointProperties, xl_labels().into_iter().map(|l| arg(Member, l)).collect()),
        xl(59, "G", InstanceOfMetaclass, instances(owl::object_property(), [skosxl::label_relation()])),
        xl(60, "G", Domain, vec![arg(Property, skosxl::label_relation()), arg(DomainClass, skosxl::label())]),
        xl(61, "G", Range, vec![arg(Property, skosxl::label_relation()), arg(RangeClass, skosxl::label())]),
        xl(62, "G", Symmetric, props([skosxl::label_relation()])),
    ]
}

/// All 62 axioms, ordered by number.
pub fn axiom_table() -> &'static [Axiom] {
    static TABLE: OnceLock<Vec<Axiom>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut v = catalog();
        v.sort_by_key(|a| a.id);
        v
    })
}

pub fn axiom(id: AxiomId) -> &'static Axiom {
    &axiom_table()[id.number() as usize - 1]
}

pub fn axioms_for(profile: Profile) -> Vec<&'static Axiom> {
    axiom_table().iter().filter(|a| a.in_profile(profile)).collect()
}

/// The catalog as pretty-printed JSON, one object per axiom.
pub fn catalog_json() -> String {
    serde_json::to_string_pretty(axiom_table()).expect("catalog serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vocab::ns::{OWL, RDF, RDFS, SKOS, SKOSXL};
    use std::collections::HashSet;

    fn id(s: &str) -> AxiomId {
        s.parse().unwrap()
    }

    #[test]
    fn sixty_two_dense_ids() {
        let t = axiom_table();
        assert_eq!(t.len(), 62);
        for (i, a) in t.iter().enumerate() {
            assert_eq!(a.id.number() as usize, i + 1);
        }
        let unique: HashSet<AxiomId> = t.iter().map(|a| a.id).collect();
        assert_eq!(unique.len(), 62);
    }

    #[test]
    fn table_row_counts() {
        let count = |tab| axiom_table().iter().filter(|a| a.table == tab).count();
        assert_eq!(count(SourceTable::Definitions), 40);
        assert_eq!(count(SourceTable::IntegrityConditions), 6);
        assert_eq!(count(SourceTable::SkosXl), 16);
    }

    #[test]
    fn integrity_flags_among_core_axioms() {
        let flagged: Vec<String> = axiom_table()
            .iter()
            .filter(|a| a.id.number() <= 46 && a.is_integrity_condition)
            .map(|a| a.id.to_string())
            .collect();
        assert_eq!(flagged, ["S9", "S13", "S14", "S27", "S37", "S46"]);
        for a in axiom_table() {
            assert_eq!(
                a.is_integrity_condition,
                a.table == SourceTable::IntegrityConditions || matches!(a.id.number(), 48 | 52 | 58)
            );
        }
    }

    #[test]
    fn s25_and_s52_content() {
        let s25 = axiom(id("S25"));
        assert_eq!(s25.kind, AxiomKind::InverseOf);
        assert_eq!(s25.inverse_pairs(), vec![(&skos::narrower(), &skos::broader())]);
        let s52 = axiom(id("S52"));
        assert_eq!(s52.kind, AxiomKind::CardinalityExactlyOne);
        assert_eq!(s52.classes(), vec![&skosxl::label()]);
        assert_eq!(s52.properties(), vec![&skosxl::literal_form()]);
    }

    #[test]
    fn profile_examples() {
        let has = |p, s: &str| axioms_for(p).iter().any(|a| a.id == id(s));
        assert_eq!(axioms_for(Profile::Reference).len(), 62);
        assert!(has(Profile::RdfSchema, "S11") && !has(Profile::OwlDlPrune, "S11"));
        assert!(!has(Profile::RdfSchema, "S13") && !has(Profile::OwlDlPrune, "S13"));
        assert!(axioms_for(Profile::OwlDlPrune).iter().all(|a| a.id.number() <= 46));
    }

    #[test]
    fn profiles_nest() {
        for a in axiom_table() {
            if a.in_owl_dl_prune {
                assert!(a.in_rdf_schema, "{} in prune but not schema", a.id);
            }
        }
    }

    #[test]
    fn arguments_stay_in_known_namespaces() {
        let core = [RDF, RDFS, OWL];
        for a in axiom_table() {
            for arg in &a.arguments {
                let s = arg.iri.as_str();
                let ok = s.starts_with(SKOS) || s.starts_with(SKOSXL) || core.iter().any(|n| s.starts_with(n));
                assert!(ok, "{} references {s}", a.id);
            }
        }
    }

    #[test]
    fn disjoint_pairs_shapes() {
        assert_eq!(axiom(id("S13")).disjoint_pairs().len(), 3);
        assert_eq!(axiom(id("S37")).disjoint_pairs().len(), 2);
        assert_eq!(axiom(id("S48")).disjoint_pairs().len(), 3);
        assert_eq!(axiom(id("S9")).disjoint_pairs(), vec![(&skos::concept_scheme(), &skos::concept())]);
    }

    #[test]
    fn ids_parse() {
        assert!("S0".parse::<AxiomId>().is_err());
        assert!("S63".parse::<AxiomId>().is_err());
        assert!("G-ORPHAN".parse::<AxiomId>().is_err());
        assert_eq!(id("S62").to_string(), "S62");
    }

    #[test]
    fn json_export_has_every_axiom() {
        let v: serde_json::Value = serde_json::from_str(&catalog_json()).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 62);
        assert_eq!(arr[54]["id"], "S55");
        assert_eq!(arr[54]["kind"], "PropertyChain");
        assert_eq!(arr[54]["in_rdf_schema"], false);
    }
}
