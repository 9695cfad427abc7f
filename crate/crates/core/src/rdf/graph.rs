//! In-memory triple set with pattern-match indexes.
//!
//! Terms are interned into dense [`TermId`]s; triples are stored once in
//! insertion order and indexed by subject, predicate, object, (s,p) and (p,o).
//! Insertion order is what makes every downstream traversal deterministic.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::term::{Iri, Term, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermId(u32);

impl TermId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdTriple {
    pub s: TermId,
    pub p: TermId,
    pub o: TermId,
}

impl IdTriple {
    pub fn new(s: TermId, p: TermId, o: TermId) -> Self {
        IdTriple { s, p, o }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Graph {
    terms: Vec<Term>,
    ids: HashMap<Term, TermId>,
    triples: Vec<IdTriple>,
    set: HashSet<IdTriple>,
    by_s: HashMap<TermId, Vec<u32>>,
    by_p: HashMap<TermId, Vec<u32>>,
    by_o: HashMap<TermId, Vec<u32>>,
    by_sp: HashMap<(TermId, TermId), Vec<u32>>,
    by_po: HashMap<(TermId, TermId), Vec<u32>>,
}

const EMPTY: &[u32] = &[];

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Returns the id for `term`, adding it to the term table if needed.
    ///
    /// Literals whose language tags differ only in case are one term; the
    /// table keeps the lexicographically smallest spelling so that output
    /// does not depend on insertion order.
    pub fn intern(&mut self, term: &Term) -> TermId {
        if let Some(&id) = self.ids.get(term) {
            if let (Term::Literal(new), Term::Literal(old)) = (term, &self.terms[id.index()]) {
                if !new.same_spelling(old) && term.to_string() < self.terms[id.index()].to_string() {
                    self.terms[id.index()] = term.clone();
                }
            }
            return id;
        }
        let id = TermId(u32::try_from(self.terms.len()).expect("term table overflow"));
        self.terms.push(term.clone());
        self.ids.insert(term.clone(), id);
        id
    }

    pub fn intern_iri(&mut self, iri: &Iri) -> TermId {
        self.intern(&Term::Iri(iri.clone()))
    }

    pub fn id_of(&self, term: &Term) -> Option<TermId> {
        self.ids.get(term).copied()
    }

    pub fn id_of_iri(&self, iri: &Iri) -> Option<TermId> {
        // Avoids cloning into a Term for the common lookup.
        self.ids.get(&Term::Iri(iri.clone())).copied()
    }

    pub fn term(&self, id: TermId) -> &Term {
        &self.terms[id.index()]
    }

    /// Inserts a triple; returns false when it was already present.
    pub fn insert(&mut self, triple: &Triple) -> bool {
        let s = self.intern(triple.subject());
        let p = self.intern_iri(triple.predicate());
        let o = self.intern(triple.object());
        self.insert_ids(IdTriple::new(s, p, o))
    }

    /// Inserts by id. The ids must come from this graph, and `t.s` must not
    /// be a literal.
    pub fn insert_ids(&mut self, t: IdTriple) -> bool {
        debug_assert!(self.term(t.s).is_resource());
        debug_assert!(self.term(t.p).as_iri().is_some());
        if !self.set.insert(t) {
            return false;
        }
        let pos = u32::try_from(self.triples.len()).expect("triple table overflow");
        self.triples.push(t);
        self.by_s.entry(t.s).or_default().push(pos);
        self.by_p.entry(t.p).or_default().push(pos);
        self.by_o.entry(t.o).or_default().push(pos);
        self.by_sp.entry((t.s, t.p)).or_default().push(pos);
        self.by_po.entry((t.p, t.o)).or_default().push(pos);
        true
    }

    /// Adds every triple of `other`.
    pub fn merge(&mut self, other: &Graph) {
        for t in &other.triples {
            let s = self.intern(other.term(t.s));
            let p = self.intern(other.term(t.p));
            let o = self.intern(other.term(t.o));
            self.insert_ids(IdTriple::new(s, p, o));
        }
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        let (Some(s), Some(p), Some(o)) =
            (self.id_of(triple.subject()), self.id_of_iri(triple.predicate()), self.id_of(triple.object()))
        else {
            return false;
        };
        self.set.contains(&IdTriple::new(s, p, o))
    }

    pub fn contains_ids(&self, t: IdTriple) -> bool {
        self.set.contains(&t)
    }

    /// All triples by id, in insertion order.
    pub fn id_triples(&self) -> &[IdTriple] {
        &self.triples
    }

    pub fn resolve(&self, t: IdTriple) -> Triple {
        Triple::new(
            self.term(t.s).clone(),
            self.term(t.p).as_iri().expect("predicate is an IRI").clone(),
            self.term(t.o).clone(),
        )
        .expect("stored subject is a resource")
    }

    pub fn triples(&self) -> impl Iterator<Item = Triple> + '_ {
        self.triples.iter().map(|&t| self.resolve(t))
    }

    pub fn to_set(&self) -> BTreeSet<Triple> {
        self.triples().collect()
    }

    /// Triples agreeing with every bound position, by id.
    pub fn match_ids(
        &self,
        s: Option<TermId>,
        p: Option<TermId>,
        o: Option<TermId>,
    ) -> impl Iterator<Item = IdTriple> + '_ {
        let positions: Box<dyn Iterator<Item = u32> + '_> = match (s, p, o) {
            (Some(s), Some(p), Some(o)) => {
                let hit = self.set.contains(&IdTriple::new(s, p, o));
                let slot = if hit { self.by_sp.get(&(s, p)).map_or(EMPTY, Vec::as_slice) } else { EMPTY };
                Box::new(slot.iter().copied())
            }
            (Some(s), Some(p), None) => Box::new(self.slice(self.by_sp.get(&(s, p)))),
            (None, Some(p), Some(o)) => Box::new(self.slice(self.by_po.get(&(p, o)))),
            (Some(s), None, _) => Box::new(self.slice(self.by_s.get(&s))),
            (None, Some(p), None) => Box::new(self.slice(self.by_p.get(&p))),
            (None, None, Some(o)) => Box::new(self.slice(self.by_o.get(&o))),
            (None, None, None) => Box::new(0..self.triples.len() as u32),
        };
        positions
            .map(move |pos| self.triples[pos as usize])
            .filter(move |t| s.is_none_or(|x| t.s == x) && p.is_none_or(|x| t.p == x) && o.is_none_or(|x| t.o == x))
    }

    fn slice<'a>(&'a self, v: Option<&'a Vec<u32>>) -> impl Iterator<Item = u32> + 'a {
        v.map_or(EMPTY, Vec::as_slice).iter().copied()
    }

    /// Triples agreeing with every bound position.
    pub fn match_pattern(&self, s: Option<&Term>, p: Option<&Iri>, o: Option<&Term>) -> Vec<Triple> {
        let lookup = |t: Option<&Term>| t.map(|t| self.id_of(t));
        let (s, o) = (lookup(s), lookup(o));
        let p = p.map(|p| self.id_of_iri(p));
        // A bound term the graph has never seen matches nothing.
        if matches!(s, Some(None)) || matches!(p, Some(None)) || matches!(o, Some(None)) {
            return Vec::new();
        }
        self.match_ids(s.flatten(), p.flatten(), o.flatten()).map(|t| self.resolve(t)).collect()
    }

    pub fn objects(&self, s: TermId, p: TermId) -> impl Iterator<Item = TermId> + '_ {
        self.slice(self.by_sp.get(&(s, p))).map(move |pos| self.triples[pos as usize].o)
    }

    pub fn subjects(&self, p: TermId, o: TermId) -> impl Iterator<Item = TermId> + '_ {
        self.slice(self.by_po.get(&(p, o))).map(move |pos| self.triples[pos as usize].s)
    }

    pub fn with_predicate(&self, p: TermId) -> impl Iterator<Item = IdTriple> + '_ {
        self.slice(self.by_p.get(&p)).map(move |pos| self.triples[pos as usize])
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.to_set() == other.to_set()
    }
}

impl Eq for Graph {}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut g = Graph::new();
        for t in iter {
            g.insert(&t);
        }
        g
    }
}
