//! SKOS/SKOS-XL toolkit: N-Triples graphs, axiom-driven materialization,
//! integrity checking and advisory vocabulary linting.

pub mod finding;
pub mod guidelines;
pub mod inference;
pub mod integrity;
pub mod rdf;
pub mod report;
pub mod stats;
pub mod vocab;

pub use finding::{Finding, Severity};
pub use inference::{broader_closure, dumb_down_xl, materialize, MaterializedGraph};
pub use rdf::{parse_ntriples, serialize_ntriples, Graph, Iri, Literal, Term, Triple};
pub use vocab::{axiom_table, axioms_for, Profile};
