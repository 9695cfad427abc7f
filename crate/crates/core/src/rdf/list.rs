//! `rdf:List` traversal.

use std::collections::HashSet;

use thiserror::Error;

use super::graph::{Graph, TermId};
use super::term::Term;
use crate::vocab::ns::rdf;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("list node {node} lacks rdf:first or rdf:rest")]
    Malformed { node: Term },
    #[error("list node {node} is reached twice")]
    Cyclic { node: Term },
    #[error("list node {node} has several rdf:first or rdf:rest values")]
    Ambiguous { node: Term },
}

impl ListError {
    pub fn node(&self) -> &Term {
        match self {
            ListError::Malformed { node } | ListError::Cyclic { node } | ListError::Ambiguous { node } => node,
        }
    }
}

/// Items of the list starting at `head`, by id, in order.
pub fn read_list_ids(g: &Graph, head: TermId) -> Result<Vec<TermId>, ListError> {
    Ok(list_cells(g, head)?.into_iter().map(|(_, item)| item).collect())
}

/// `(node, item)` for every cell of the list, in order.
pub fn list_cells(g: &Graph, head: TermId) -> Result<Vec<(TermId, TermId)>, ListError> {
    let nil = g.id_of_iri(&rdf::nil());
    let (Some(first), Some(rest)) = (g.id_of_iri(&rdf::first()), g.id_of_iri(&rdf::rest())) else {
        return if Some(head) == nil {
            Ok(Vec::new())
        } else {
            Err(ListError::Malformed { node: g.term(head).clone() })
        };
    };
    let mut items = Vec::new();
    let mut seen = HashSet::new();
    let mut node = head;
    while Some(node) != nil {
        if !seen.insert(node) {
            return Err(ListError::Cyclic { node: g.term(node).clone() });
        }
        let firsts: Vec<TermId> = g.objects(node, first).collect();
        let rests: Vec<TermId> = g.objects(node, rest).collect();
        match (firsts.as_slice(), rests.as_slice()) {
            ([item], [next]) => {
                items.push((node, *item));
                node = *next;
            }
            ([], _) | (_, []) => return Err(ListError::Malformed { node: g.term(node).clone() }),
            _ => return Err(ListError::Ambiguous { node: g.term(node).clone() }),
        }
    }
    Ok(items)
}

/// Items of the list starting at `head`; `rdf:nil` is the empty list.
pub fn read_rdf_list(g: &Graph, head: &Term) -> Result<Vec<Term>, ListError> {
    if head.as_iri() == Some(&rdf::nil()) {
        return Ok(Vec::new());
    }
    let id = g.id_of(head).ok_or_else(|| ListError::Malformed { node: head.clone() })?;
    Ok(read_list_ids(g, id)?.into_iter().map(|t| g.term(t).clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::ntriples::parse_ntriples_str;

    const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

    fn graph(body: &str) -> Graph {
        parse_ntriples_str(&body.replace("rdf:", RDF).replace("{", "<").replace("}", ">")).unwrap()
    }

    #[test]
    fn nil_is_empty() {
        let nil = Term::iri(format!("{RDF}nil")).unwrap();
        assert_eq!(read_rdf_list(&Graph::new(), &nil).unwrap(), Vec::<Term>::new());
    }

    #[test]
    fn three_items_in_order() {
        let g = graph(
            "_:l1 {rdf:first} {ex:c} .\n_:l1 {rdf:rest} _:l2 .\n\
             _:l2 {rdf:first} {ex:a} .\n_:l2 {rdf:rest} _:l3 .\n\
             _:l3 {rdf:first} {ex:b} .\n_:l3 {rdf:rest} {rdf:nil} .\n",
        );
        let items = read_rdf_list(&g, &Term::blank("l1").unwrap()).unwrap();
        let expected: Vec<Term> = ["ex:c", "ex:a", "ex:b"].iter().map(|s| Term::iri(*s).unwrap()).collect();
        assert_eq!(items, expected);
    }

    #[test]
    fn cycle_back_to_head() {
        let g = graph(
            "_:l1 {rdf:first} {ex:a} .\n_:l1 {rdf:rest} _:l2 .\n_:l2 {rdf:first} {ex:b} .\n_:l2 {rdf:rest} _:l1 .\n",
        );
        let err = read_rdf_list(&g, &Term::blank("l1").unwrap()).unwrap_err();
        assert_eq!(err, ListError::Cyclic { node: Term::blank("l1").unwrap() });
    }

    #[test]
    fn missing_rest_and_ambiguous() {
        let g = graph("_:l1 {rdf:first} {ex:a} .\n");
        assert!(matches!(read_rdf_list(&g, &Term::blank("l1").unwrap()), Err(ListError::Malformed { .. })));
        let g = graph("_:l1 {rdf:first} {ex:a} .\n_:l1 {rdf:first} {ex:b} .\n_:l1 {rdf:rest} {rdf:nil} .\n");
        assert!(matches!(read_rdf_list(&g, &Term::blank("l1").unwrap()), Err(ListError::Ambiguous { .. })));
        assert!(matches!(read_rdf_list(&g, &Term::blank("zz").unwrap()), Err(ListError::Malformed { .. })));
    }
}
