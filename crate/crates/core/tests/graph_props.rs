use std::collections::BTreeSet;

use proptest::prelude::*;
use skosforge_core::rdf::{Graph, Iri, Term, Triple};

fn pool_term(i: u8) -> Term {
    match i % 4 {
        0 => Term::blank(format!("b{}", i % 3)).unwrap(),
        1 => Term::Literal(skosforge_core::Literal::lang("x", if i % 8 == 1 { "EN" } else { "en" }).unwrap()),
        _ => Term::iri(format!("http://example.org/n{}", i % 6)).unwrap(),
    }
}

fn pool_iri(i: u8) -> Iri {
    Iri::new(format!("http://example.org/p{}", i % 3)).unwrap()
}

fn triples() -> impl Strategy<Value = Vec<Triple>> {
    prop::collection::vec((any::<u8>(), any::<u8>(), any::<u8>()), 0..60).prop_map(|v| {
        v.into_iter()
            .map(|(s, p, o)| {
                let s =
                    if pool_term(s).is_literal() { Term::iri("http://example.org/s").unwrap() } else { pool_term(s) };
                Triple::new(s, pool_iri(p), pool_term(o)).unwrap()
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn graph_has_set_semantics(ts in triples()) {
        let g: Graph = ts.iter().cloned().collect();
        let set: BTreeSet<Triple> = ts.iter().cloned().collect();
        prop_assert_eq!(g.len(), set.len());
        prop_assert_eq!(g.to_set(), set.clone());
        let mut again = g.clone();
        for t in &ts {
            prop_assert!(!again.insert(t));
            prop_assert!(g.contains(t));
        }
        again.merge(&g);
        prop_assert_eq!(again.len(), set.len());
    }

    #[test]
    fn pattern_match_equals_linear_scan(ts in triples(), s in any::<u8>(), p in any::<u8>(), o in any::<u8>(), mask in 0u8..8) {
        let g: Graph = ts.iter().cloned().collect();
        let (bs, bp, bo) = (pool_term(s), pool_iri(p), pool_term(o));
        let qs = (mask & 1 != 0).then_some(&bs);
        let qp = (mask & 2 != 0).then_some(&bp);
        let qo = (mask & 4 != 0).then_some(&bo);
        let got: BTreeSet<Triple> = g.match_pattern(qs, qp, qo).into_iter().collect();
        let want: BTreeSet<Triple> = g
            .to_set()
            .into_iter()
            .filter(|t| qs.is_none_or(|x| t.subject() == x))
            .filter(|t| qp.is_none_or(|x| t.predicate() == x))
            .filter(|t| qo.is_none_or(|x| t.object() == x))
            .collect();
        prop_assert_eq!(got, want);
    }
}
