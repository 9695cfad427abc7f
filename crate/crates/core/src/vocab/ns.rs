//! Namespace IRIs for RDF, RDFS, OWL, SKOS and SKOS-XL.

use crate::rdf::Iri;

pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const OWL: &str = "http://www.w3.org/2002/07/owl#";
pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
pub const SKOS: &str = "http://www.w3.org/2004/02/skos/core#";
pub const SKOSXL: &str = "http://www.w3.org/2008/05/skos-xl#";

const PREFIXES: [(&str, &str); 6] =
    [("rdf", RDF), ("rdfs", RDFS), ("owl", OWL), ("xsd", XSD), ("skos", SKOS), ("skosxl", SKOSXL)];

/// `skos:prefLabel` for a known namespace, the full IRI otherwise.
pub fn compact(iri: &str) -> String {
    for (prefix, ns) in PREFIXES {
        if let Some(local) = iri.strip_prefix(ns) {
            return format!("{prefix}:{local}");
        }
    }
    iri.to_owned()
}

/// Inverse of [`compact`] for the known prefixes.
pub fn expand(curie: &str) -> Option<Iri> {
    let (prefix, local) = curie.split_once(':')?;
    let ns = PREFIXES.iter().find(|(p, _)| *p == prefix)?.1;
    Iri::new(format!("{ns}{local}")).ok()
}

macro_rules! terms {
    ($ns:literal; $($name:ident => $local:literal),* $(,)?) => {
        $(
            pub fn $name() -> Iri {
                Iri::new_unchecked(concat!($ns, $local))
            }
        )*
    };
}

pub mod rdf {
    use crate::rdf::Iri;
    terms!("http://www.w3.org/1999/02/22-rdf-syntax-ns#";
        type_ => "type", first => "first", rest => "rest", nil => "nil", list => "List");
}

pub mod rdfs {
    use crate::rdf::Iri;
    terms!("http://www.w3.org/2000/01/rdf-schema#"; label => "label");
}

pub mod owl {
    use crate::rdf::Iri;
    terms!("http://www.w3.org/2002/07/owl#";
        class => "Class",
        object_property => "ObjectProperty",
        datatype_property => "DatatypeProperty",
        annotation_property => "AnnotationProperty",
    );
}

pub mod skos {
    use crate::rdf::Iri;
    terms!("http://www.w3.org/2004/02/skos/core#";
        concept => "Concept",
        concept_scheme => "ConceptScheme",
        collection => "Collection",
        ordered_collection => "OrderedCollection",
        in_scheme => "inScheme",
        has_top_concept => "hasTopConcept",
        top_concept_of => "topConceptOf",
        pref_label => "prefLabel",
        alt_label => "altLabel",
        hidden_label => "hiddenLabel",
        notation => "notation",
        note => "note",
        change_note => "changeNote",
        definition => "definition",
        editorial_note => "editorialNote",
        example => "example",
        history_note => "historyNote",
        scope_note => "scopeNote",
        semantic_relation => "semanticRelation",
        broader => "broader",
        narrower => "narrower",
        related => "related",
        broader_transitive => "broaderTransitive",
        narrower_transitive => "narrowerTransitive",
        member => "member",
        member_list => "memberList",
        mapping_relation => "mappingRelation",
        close_match => "closeMatch",
        exact_match => "exactMatch",
        broad_match => "broadMatch",
        narrow_match => "narrowMatch",
        related_match => "relatedMatch",
    );
}

pub mod skosxl {
    use crate::rdf::Iri;
    terms!("http://www.w3.org/2008/05/skos-xl#";
        label => "Label",
        literal_form => "literalForm",
        pref_label => "prefLabel",
        alt_label => "altLabel",
        hidden_label => "hiddenLabel",
        label_relation => "labelRelation",
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_round_trip() {
        assert_eq!(compact(skos::pref_label().as_str()), "skos:prefLabel");
        assert_eq!(expand("skosxl:literalForm"), Some(skosxl::literal_form()));
        assert_eq!(compact("ex:thing"), "ex:thing");
        assert_eq!(expand("ex:thing"), None);
    }
}
