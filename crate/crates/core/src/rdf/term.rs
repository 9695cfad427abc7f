//! RDF terms: IRIs, blank nodes and literals.
//!
//! Terms compare syntactically. The one exception is the language tag of a
//! literal, which is kept exactly as written but compared case-insensitively.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("IRI is empty")]
    EmptyIri,
    #[error("IRI {0:?} contains a forbidden character")]
    IriForbiddenChar(String),
    #[error("IRI {0:?} has no scheme")]
    IriNotAbsolute(String),
    #[error("blank node label {0:?} must match [A-Za-z0-9_]+")]
    BadBlankLabel(String),
    #[error("language tag {0:?} is malformed")]
    BadLanguageTag(String),
}

fn iri_char_allowed(c: char) -> bool {
    !(c.is_whitespace() || c.is_control() || matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\'))
}

fn has_scheme(s: &str) -> bool {
    let Some(colon) = s.find(':') else {
        return false;
    };
    let scheme = &s[..colon];
    let mut chars = scheme.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
}

/// An absolute IRI, compared by exact code points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Iri(String);

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self, TermError> {
        let value = value.into();
        if value.is_empty() {
            return Err(TermError::EmptyIri);
        }
        if !value.chars().all(iri_char_allowed) {
            return Err(TermError::IriForbiddenChar(value));
        }
        if !has_scheme(&value) {
            return Err(TermError::IriNotAbsolute(value));
        }
        Ok(Iri(value))
    }

    /// For vocabulary constants that are known to be valid.
    pub(crate) fn new_unchecked(value: &str) -> Self {
        debug_assert!(Iri::new(value).is_ok(), "bad IRI constant {value}");
        Iri(value.to_owned())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlankNode(String);

impl BlankNode {
    pub fn new(label: impl Into<String>) -> Result<Self, TermError> {
        let label = label.into();
        if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(TermError::BadBlankLabel(label));
        }
        Ok(BlankNode(label))
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BlankNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "_:{}", self.0)
    }
}

/// Either a language tag or a datatype, never both.
#[derive(Debug, Clone)]
enum LiteralTag {
    None,
    Language(String),
    Datatype(Iri),
}

#[derive(Debug, Clone)]
pub struct Literal {
    lexical: String,
    tag: LiteralTag,
}

pub(crate) fn valid_language_tag(tag: &str) -> bool {
    let mut parts = tag.split('-');
    let first_ok = matches!(parts.next(), Some(p) if !p.is_empty() && p.chars().all(|c| c.is_ascii_alphabetic()));
    first_ok && parts.all(|p| !p.is_empty() && p.chars().all(|c| c.is_ascii_alphanumeric()))
}

impl Literal {
    pub fn plain(lexical: impl Into<String>) -> Self {
        Literal { lexical: lexical.into(), tag: LiteralTag::None }
    }

    pub fn lang(lexical: impl Into<String>, tag: impl Into<String>) -> Result<Self, TermError> {
        let tag = tag.into();
        if !valid_language_tag(&tag) {
            return Err(TermError::BadLanguageTag(tag));
        }
        Ok(Literal { lexical: lexical.into(), tag: LiteralTag::Language(tag) })
    }

    pub fn typed(lexical: impl Into<String>, datatype: Iri) -> Self {
        Literal { lexical: lexical.into(), tag: LiteralTag::Datatype(datatype) }
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    /// The language tag as written.
    pub fn language(&self) -> Option<&str> {
        match &self.tag {
            LiteralTag::Language(l) => Some(l),
            _ => None,
        }
    }

    /// The language tag folded to lower case, for grouping.
    pub fn language_key(&self) -> Option<String> {
        self.language().map(str::to_ascii_lowercase)
    }

    pub fn datatype(&self) -> Option<&Iri> {
        match &self.tag {
            LiteralTag::Datatype(d) => Some(d),
            _ => None,
        }
    }

    /// No datatype; with or without a language tag.
    pub fn is_plain(&self) -> bool {
        !matches!(self.tag, LiteralTag::Datatype(_))
    }

    fn key(&self) -> (&str, u8, String) {
        match &self.tag {
            LiteralTag::None => (&self.lexical, 0, String::new()),
            LiteralTag::Language(l) => (&self.lexical, 1, l.to_ascii_lowercase()),
            LiteralTag::Datatype(d) => (&self.lexical, 2, d.as_str().to_owned()),
        }
    }

    /// Same literal, but written with a different tag spelling.
    pub(crate) fn same_spelling(&self, other: &Literal) -> bool {
        self.lexical == other.lexical && self.language() == other.language()
    }
}

impl PartialEq for Literal {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Literal {}

impl Hash for Literal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl PartialOrd for Literal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Literal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

pub(crate) fn escape_literal(s: &str, out: &mut String) {
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::with_capacity(self.lexical.len() + 2);
        s.push('"');
        escape_literal(&self.lexical, &mut s);
        s.push('"');
        match &self.tag {
            LiteralTag::None => {}
            LiteralTag::Language(l) => {
                s.push('@');
                s.push_str(l);
            }
            LiteralTag::Datatype(d) => {
                s.push_str("^^");
                s.push_str(&d.to_string());
            }
        }
        f.write_str(&s)
    }
}

/// An RDF node. Display gives the N-Triples form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Iri(Iri),
    Blank(BlankNode),
    Literal(Literal),
}

impl Term {
    pub fn iri(value: impl Into<String>) -> Result<Self, TermError> {
        Iri::new(value).map(Term::Iri)
    }

    pub fn blank(label: impl Into<String>) -> Result<Self, TermError> {
        BlankNode::new(label).map(Term::Blank)
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Term::Literal(_))
    }

    /// IRIs and blank nodes may stand in subject position.
    pub fn is_resource(&self) -> bool {
        !self.is_literal()
    }

    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(i) => Some(i),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(l) => Some(l),
            _ => None,
        }
    }
}

impl From<Iri> for Term {
    fn from(i: Iri) -> Self {
        Term::Iri(i)
    }
}

impl From<&Iri> for Term {
    fn from(i: &Iri) -> Self {
        Term::Iri(i.clone())
    }
}

impl From<BlankNode> for Term {
    fn from(b: BlankNode) -> Self {
        Term::Blank(b)
    }
}

impl From<Literal> for Term {
    fn from(l: Literal) -> Self {
        Term::Literal(l)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(i) => i.fmt(f),
            Term::Blank(b) => b.fmt(f),
            Term::Literal(l) => l.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotASubject;

/// A statement. The subject is never a literal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    subject: Term,
    predicate: Iri,
    object: Term,
}

impl Triple {
    pub fn new(subject: Term, predicate: Iri, object: Term) -> Result<Self, NotASubject> {
        if subject.is_literal() {
            return Err(NotASubject);
        }
        Ok(Triple { subject, predicate, object })
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }

    pub fn predicate(&self) -> &Iri {
        &self.predicate
    }

    pub fn object(&self) -> &Term {
        &self.object
    }

    /// The three N-Triples term strings, the canonical sort key.
    pub fn serialized_parts(&self) -> (String, String, String) {
        (self.subject.to_string(), self.predicate.to_string(), self.object.to_string())
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iri_rules() {
        assert!(Iri::new("ex:concept-1234").is_ok());
        assert!(Iri::new("http://example.org/a b").is_err());
        assert_eq!(Iri::new(""), Err(TermError::EmptyIri));
        assert!(matches!(Iri::new("no-scheme"), Err(TermError::IriNotAbsolute(_))));
        assert!(matches!(Iri::new("1ab:x"), Err(TermError::IriNotAbsolute(_))));
        assert!(Iri::new("http://a/\u{7}").is_err());
    }

    #[test]
    fn iri_equality_is_verbatim() {
        assert_ne!(Iri::new("http://Example.org/").unwrap(), Iri::new("http://example.org/").unwrap());
    }

    #[test]
    fn blank_labels() {
        assert!(BlankNode::new("b0_x").is_ok());
        assert!(BlankNode::new("b-0").is_err());
        assert!(BlankNode::new("").is_err());
    }

    #[test]
    fn language_tags_compare_case_insensitively() {
        let a = Literal::lang("animals", "en-GB").unwrap();
        let b = Literal::lang("animals", "EN-gb").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.language(), Some("en-GB"));
        assert_eq!(b.to_string(), "\"animals\"@EN-gb");
        assert!(Literal::lang("x", "en-").is_err());
        assert!(Literal::lang("x", "1en").is_err());
    }

    #[test]
    fn plain_vs_typed() {
        let xsd_string = Iri::new("http://www.w3.org/2001/XMLSchema#string").unwrap();
        let plain = Literal::plain("a");
        let typed = Literal::typed("a", xsd_string);
        assert_ne!(plain, typed);
        assert!(plain.is_plain());
        assert!(Literal::lang("a", "en").unwrap().is_plain());
        assert!(!typed.is_plain());
    }

    #[test]
    fn literal_display_escapes() {
        let l = Literal::plain("say \"hi\"\n\\");
        assert_eq!(l.to_string(), r#""say \"hi\"\n\\""#);
    }

    #[test]
    fn literal_subject_rejected() {
        let p = Iri::new("ex:p").unwrap();
        assert!(Triple::new(Literal::plain("x").into(), p, Term::iri("ex:o").unwrap()).is_err());
    }
}
