use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skosforge_core::guidelines::{check_guidelines, RuleSet, HIER_CYCLE};
use skosforge_core::inference::{broader_closure, materialize};
use skosforge_core::{Profile, Term};
use skosforge_testkit::generate::{ex, random_hierarchy};

#[test]
fn broader_closure_matches_bfs_and_cycles_match_scc() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut cyclic_cases = 0;
    for _ in 0..200 {
        let (h, g) = random_hierarchy(&mut rng, 50);
        let mg = materialize(&g, Profile::Reference);
        for i in 0..h.n {
            let got = broader_closure(&mg, &ex(format!("c{i}")));
            let want: BTreeSet<Term> = h.reachable(i).into_iter().map(|j| ex(format!("c{j}"))).collect();
            assert_eq!(got, want, "closure of c{i}");
        }
        let mut rules = RuleSet::none_enabled();
        rules.set(HIER_CYCLE, true).unwrap();
        let flagged: BTreeSet<Term> = check_guidelines(&mg, &rules).into_iter().map(|f| f.focus).collect();
        let want: BTreeSet<Term> = h.cyclic_nodes().into_iter().map(|j| ex(format!("c{j}"))).collect();
        if !want.is_empty() {
            cyclic_cases += 1;
        }
        assert_eq!(flagged, want);
    }
    assert!(cyclic_cases >= 20, "only {cyclic_cases} cyclic hierarchies generated");
}

#[test]
fn unknown_concept_has_empty_closure() {
    let mg = materialize(&skosforge_core::Graph::new(), Profile::Reference);
    assert!(broader_closure(&mg, &ex("nowhere")).is_empty());
}
