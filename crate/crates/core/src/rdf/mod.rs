//! Minimal RDF data model: terms, an indexed graph, N-Triples and lists.

mod graph;
mod list;
mod ntriples;
mod term;

pub use graph::{Graph, IdTriple, TermId};
pub use list::{list_cells, read_list_ids, read_rdf_list, ListError};
pub use ntriples::{
    canonical_lines, parse_ntriples, parse_ntriples_str, parse_term, parse_triple_line, serialize_ntriples, LineError,
    ParseError, ParseErrorKind,
};
pub use term::{BlankNode, Iri, Literal, NotASubject, Term, TermError, Triple};
