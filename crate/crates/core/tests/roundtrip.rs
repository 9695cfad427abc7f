use proptest::prelude::*;
use skosforge_core::rdf::{parse_ntriples, serialize_ntriples, Graph, Iri, Literal, Term, Triple};
use skosforge_testkit::nt_corpus;

#[test]
fn corpus_round_trips() {
    let files = nt_corpus();
    assert!(files.len() >= 50, "corpus has {} files", files.len());
    for path in files {
        let bytes = std::fs::read(&path).unwrap();
        let g = parse_ntriples(&bytes).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let canonical = serialize_ntriples(&g);
        let back = parse_ntriples(&canonical).unwrap();
        assert_eq!(back, g, "{}", path.display());
        assert_eq!(serialize_ntriples(&back), canonical, "{} not byte-stable", path.display());
    }
}

fn term_strategy() -> impl Strategy<Value = Term> {
    prop_oneof![
        "[a-z]{1,6}".prop_map(|s| Term::iri(format!("http://example.org/{s}")).unwrap()),
        "[A-Za-z0-9_]{1,5}".prop_map(|s| Term::blank(s).unwrap()),
        any::<String>().prop_map(|s| Term::Literal(Literal::plain(s))),
        ("\\PC{0,8}", "[a-zA-Z]{1,8}(-[a-zA-Z0-9]{1,8})?")
            .prop_map(|(s, tag)| Term::Literal(Literal::lang(s, tag).unwrap())),
        ("\\PC{0,8}", "[a-z]{1,5}").prop_map(|(s, dt)| {
            Term::Literal(Literal::typed(s, Iri::new(format!("http://example.org/dt/{dt}")).unwrap()))
        }),
    ]
}

fn triple_strategy() -> impl Strategy<Value = Triple> {
    (term_strategy(), "[a-z]{1,4}", term_strategy()).prop_map(|(s, p, o)| {
        let s = if s.is_literal() { Term::iri("http://example.org/lit-subject").unwrap() } else { s };
        Triple::new(s, Iri::new(format!("http://example.org/p/{p}")).unwrap(), o).unwrap()
    })
}

proptest! {
    #[test]
    fn serialize_then_parse_is_identity(triples in prop::collection::vec(triple_strategy(), 0..40)) {
        let g: Graph = triples.into_iter().collect();
        let bytes = serialize_ntriples(&g);
        let back = parse_ntriples(&bytes).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_ntriples(&back), bytes);
    }

    #[test]
    fn output_ignores_insertion_order(triples in prop::collection::vec(triple_strategy(), 0..30), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let forward: Graph = triples.iter().cloned().collect();
        let mut shuffled = triples.clone();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let other: Graph = shuffled.into_iter().collect();
        prop_assert_eq!(serialize_ntriples(&forward), serialize_ntriples(&other));
    }
}
