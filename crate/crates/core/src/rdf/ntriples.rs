//! N-Triples reading and canonical writing.
//!
//! Parsing is all-or-nothing: every malformed line is reported, and no graph
//! is returned if there is at least one. Canonical output puts one triple per
//! line, sorted by the serialized (subject, predicate, object) strings.

use std::fmt;

use thiserror::Error;

use super::graph::Graph;
use super::term::{valid_language_tag, BlankNode, Iri, Literal, Term, Triple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    InvalidUtf8,
    MalformedIri(String),
    UnterminatedIri,
    UnterminatedLiteral,
    BadEscape(String),
    BadBlankNode(String),
    BadLanguageTag(String),
    LiteralSubject,
    MissingDot,
    Unexpected { expected: &'static str, found: Option<char> },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::InvalidUtf8 => write!(f, "input is not valid UTF-8"),
            ParseErrorKind::MalformedIri(why) => write!(f, "malformed IRI: {why}"),
            ParseErrorKind::UnterminatedIri => write!(f, "unterminated IRI"),
            ParseErrorKind::UnterminatedLiteral => write!(f, "unterminated literal"),
            ParseErrorKind::BadEscape(e) => write!(f, "bad escape sequence {e}"),
            ParseErrorKind::BadBlankNode(l) => write!(f, "bad blank node label {l:?}"),
            ParseErrorKind::BadLanguageTag(t) => write!(f, "bad language tag {t:?}"),
            ParseErrorKind::LiteralSubject => write!(f, "a literal cannot be a subject"),
            ParseErrorKind::MissingDot => write!(f, "missing terminal '.'"),
            ParseErrorKind::Unexpected { expected, found: Some(c) } => {
                write!(f, "expected {expected}, found {c:?}")
            }
            ParseErrorKind::Unexpected { expected, found: None } => {
                write!(f, "expected {expected}, found end of line")
            }
        }
    }
}

/// One problem on one line. Line and column are 1-based; columns count
/// characters, not bytes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct LineError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub errors: Vec<LineError>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.errors.len();
        write!(f, "{n} N-Triples syntax error{}", if n == 1 { "" } else { "s" })?;
        for e in &self.errors {
            write!(f, "\n  {e}")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    chars: &'a [char],
    pos: usize,
}

type Step<T> = Result<T, (usize, ParseErrorKind)>;

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t')) {
            self.pos += 1;
        }
    }

    fn fail<T>(&self, kind: ParseErrorKind) -> Step<T> {
        Err((self.pos, kind))
    }

    fn unexpected<T>(&self, expected: &'static str) -> Step<T> {
        self.fail(ParseErrorKind::Unexpected { expected, found: self.peek() })
    }

    fn hex(&mut self, digits: usize, start: usize, marker: char) -> Step<char> {
        let mut v: u32 = 0;
        for _ in 0..digits {
            match self.bump().and_then(|c| c.to_digit(16)) {
                Some(d) => v = v * 16 + d,
                None => {
                    let seen: String = self.chars[start..self.pos.min(self.chars.len())].iter().collect();
                    return Err((
                        start,
                        ParseErrorKind::BadEscape(format!("{seen} (\\{marker} needs {digits} hex digits)")),
                    ));
                }
            }
        }
        char::from_u32(v)
            .ok_or_else(|| (start, ParseErrorKind::BadEscape(format!("\\{marker}{v:X} is not a scalar value"))))
    }

    /// `\uXXXX` or `\UXXXXXXXX`, with the backslash already consumed.
    fn uchar(&mut self, start: usize) -> Step<char> {
        match self.bump() {
            Some('u') => self.hex(4, start, 'u'),
            Some('U') => self.hex(8, start, 'U'),
            other => {
                Err((start, ParseErrorKind::BadEscape(format!("\\{}", other.map(String::from).unwrap_or_default()))))
            }
        }
    }

    fn iri(&mut self) -> Step<Iri> {
        let start = self.pos;
        if self.bump() != Some('<') {
            self.pos = start;
            return self.unexpected("'<'");
        }
        let mut value = String::new();
        loop {
            match self.bump() {
                None => return Err((start, ParseErrorKind::UnterminatedIri)),
                Some('>') => break,
                Some('\\') => {
                    let esc = self.pos - 1;
                    value.push(self.uchar(esc)?);
                }
                Some(c) if c <= ' ' || matches!(c, '<' | '"' | '{' | '}' | '|' | '^' | '`') => {
                    return Err((self.pos - 1, ParseErrorKind::MalformedIri(format!("forbidden character {c:?}"))));
                }
                Some(c) => value.push(c),
            }
        }
        Iri::new(value).map_err(|e| (start, ParseErrorKind::MalformedIri(e.to_string())))
    }

    fn blank(&mut self) -> Step<BlankNode> {
        let start = self.pos;
        if self.bump() != Some('_') || self.bump() != Some(':') {
            self.pos = start;
            return self.unexpected("'_:'");
        }
        let label_start = self.pos;
        while matches!(self.peek(), Some(c) if !c.is_whitespace() && c != '<' && c != '"' && !(c == '.' && self.is_final_dot()))
        {
            self.pos += 1;
        }
        let label: String = self.chars[label_start..self.pos].iter().collect();
        BlankNode::new(label.clone()).map_err(|_| (label_start, ParseErrorKind::BadBlankNode(label)))
    }

    /// A '.' followed only by whitespace or a comment ends the statement.
    fn is_final_dot(&self) -> bool {
        let rest = &self.chars[self.pos + 1..];
        let rest = rest.iter().skip_while(|c| matches!(c, ' ' | '\t'));
        matches!(rest.clone().next(), None | Some('#'))
    }

    fn literal(&mut self) -> Step<Literal> {
        let start = self.pos;
        self.bump();
        let mut lexical = String::new();
        loop {
            match self.bump() {
                None => return Err((start, ParseErrorKind::UnterminatedLiteral)),
                Some('"') => break,
                Some('\\') => {
                    let esc = self.pos - 1;
                    let c = match self.peek() {
                        Some('t') => '\t',
                        Some('b') => '\u{8}',
                        Some('n') => '\n',
                        Some('r') => '\r',
                        Some('f') => '\u{c}',
                        Some('"') => '"',
                        Some('\'') => '\'',
                        Some('\\') => '\\',
                        Some('u' | 'U') => {
                            lexical.push(self.uchar(esc)?);
                            continue;
                        }
                        Some(other) => return Err((esc, ParseErrorKind::BadEscape(format!("\\{other}")))),
                        None => return Err((start, ParseErrorKind::UnterminatedLiteral)),
                    };
                    self.pos += 1;
                    lexical.push(c);
                }
                Some(c) => lexical.push(c),
            }
        }
        match self.peek() {
            Some('@') => {
                self.pos += 1;
                let tag_start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '-') {
                    self.pos += 1;
                }
                let tag: String = self.chars[tag_start..self.pos].iter().collect();
                if !valid_language_tag(&tag) {
                    return Err((tag_start, ParseErrorKind::BadLanguageTag(tag)));
                }
                Ok(Literal::lang(lexical, tag).expect("tag validated"))
            }
            Some('^') => {
                self.pos += 1;
                if self.bump() != Some('^') {
                    self.pos -= 1;
                    return self.unexpected("'^^'");
                }
                Ok(Literal::typed(lexical, self.iri()?))
            }
            _ => Ok(Literal::plain(lexical)),
        }
    }

    fn subject(&mut self) -> Step<Term> {
        match self.peek() {
            Some('<') => self.iri().map(Term::Iri),
            Some('_') => self.blank().map(Term::Blank),
            Some('"') => self.fail(ParseErrorKind::LiteralSubject),
            _ => self.unexpected("subject IRI or blank node"),
        }
    }

    fn object(&mut self) -> Step<Term> {
        match self.peek() {
            Some('<') => self.iri().map(Term::Iri),
            Some('_') => self.blank().map(Term::Blank),
            Some('"') => self.literal().map(Term::Literal),
            _ => self.unexpected("object term"),
        }
    }

    /// Parses one line; `Ok(None)` for blank and comment-only lines.
    fn statement(&mut self) -> Step<Option<Triple>> {
        self.skip_ws();
        if matches!(self.peek(), None | Some('#')) {
            return Ok(None);
        }
        let s = self.subject()?;
        self.skip_ws();
        let p = self.iri()?;
        self.skip_ws();
        let o = self.object()?;
        self.skip_ws();
        if self.peek() != Some('.') {
            return self.fail(ParseErrorKind::MissingDot);
        }
        self.pos += 1;
        self.skip_ws();
        if !matches!(self.peek(), None | Some('#')) {
            return self.unexpected("end of line after '.'");
        }
        Ok(Some(Triple::new(s, p, o).expect("subject checked")))
    }
}

/// Parses an N-Triples document.
pub fn parse_ntriples(input: &[u8]) -> Result<Graph, ParseError> {
    let mut graph = Graph::new();
    let mut errors = Vec::new();
    for (n, raw) in input.split(|&b| b == b'\n').enumerate() {
        let line_no = n + 1;
        let raw = raw.strip_suffix(b"\r").unwrap_or(raw);
        let text = match std::str::from_utf8(raw) {
            Ok(t) => t,
            Err(e) => {
                let column = String::from_utf8_lossy(&raw[..e.valid_up_to()]).chars().count() + 1;
                errors.push(LineError { line: line_no, column, kind: ParseErrorKind::InvalidUtf8 });
                continue;
            }
        };
        let chars: Vec<char> = text.chars().collect();
        let mut cursor = Cursor { chars: &chars, pos: 0 };
        match cursor.statement() {
            Ok(Some(t)) => {
                if errors.is_empty() {
                    graph.insert(&t);
                }
            }
            Ok(None) => {}
            Err((col, kind)) => errors.push(LineError { line: line_no, column: col + 1, kind }),
        }
    }
    if errors.is_empty() {
        Ok(graph)
    } else {
        Err(ParseError { errors })
    }
}

pub fn parse_ntriples_str(input: &str) -> Result<Graph, ParseError> {
    parse_ntriples(input.as_bytes())
}

/// Parses a single N-Triples term, e.g. `<http://x>` or `"a"@en`.
pub fn parse_term(input: &str) -> Result<Term, LineError> {
    let chars: Vec<char> = input.trim().chars().collect();
    let mut cursor = Cursor { chars: &chars, pos: 0 };
    let at = |(col, kind): (usize, ParseErrorKind)| LineError { line: 1, column: col + 1, kind };
    let term = cursor.object().map_err(at)?;
    if cursor.peek().is_some() {
        return Err(at((cursor.pos, ParseErrorKind::Unexpected { expected: "end of term", found: cursor.peek() })));
    }
    Ok(term)
}

/// Parses a single `s p o .` line.
pub fn parse_triple_line(input: &str) -> Result<Triple, LineError> {
    let chars: Vec<char> = input.chars().collect();
    let mut cursor = Cursor { chars: &chars, pos: 0 };
    match cursor.statement() {
        Ok(Some(t)) => Ok(t),
        Ok(None) => Err(LineError {
            line: 1,
            column: 1,
            kind: ParseErrorKind::Unexpected { expected: "a triple", found: None },
        }),
        Err((col, kind)) => Err(LineError { line: 1, column: col + 1, kind }),
    }
}

/// Sorted N-Triples lines for an arbitrary set of triples.
pub fn canonical_lines<'a>(triples: impl IntoIterator<Item = &'a Triple>) -> Vec<String> {
    let mut keyed: Vec<((String, String, String), String)> = triples
        .into_iter()
        .map(|t| {
            let parts = t.serialized_parts();
            let line = format!("{} {} {} .", parts.0, parts.1, parts.2);
            (parts, line)
        })
        .collect();
    keyed.sort();
    keyed.dedup_by(|a, b| a.1 == b.1);
    keyed.into_iter().map(|(_, line)| line).collect()
}

/// Canonical N-Triples: sorted, one triple per line, each ending in `\n`.
pub fn serialize_ntriples(graph: &Graph) -> Vec<u8> {
    let triples: Vec<Triple> = graph.triples().collect();
    let mut out = String::new();
    for line in canonical_lines(&triples) {
        out.push_str(&line);
        out.push('\n');
    }
    out.into_bytes()
}
