//! SKOS and SKOS-XL vocabulary terms and the axiom catalog.

mod axioms;
pub mod ns;

pub use axioms::{
    axiom, axiom_table, axioms_for, catalog_json, Argument, Axiom, AxiomId, AxiomKind, Profile, Role, SourceTable,
};
