use skosforge_core::inference::{materialize, materialize_with};
use skosforge_core::integrity::check_integrity;
use skosforge_core::rdf::parse_ntriples_str;
use skosforge_core::{Profile, Severity};
use skosforge_testkit::integrity_cases;

#[test]
fn every_condition_has_a_violating_and_a_near_miss_fixture() {
    let cases = integrity_cases();
    for rule in ["S9", "S13", "S14", "S27", "S37", "S46", "S48", "S52", "S58"] {
        assert!(cases.iter().any(|c| c.rule == rule && c.violating), "{rule} violating");
        assert!(cases.iter().any(|c| c.rule == rule && !c.violating), "{rule} near miss");
    }
}

#[test]
fn fixtures_produce_exactly_the_expected_findings() {
    for case in integrity_cases() {
        let g = parse_ntriples_str(&case.source).unwrap();
        let findings = check_integrity(&materialize(&g, Profile::Reference));
        assert!(findings.iter().all(|f| f.severity == Severity::Error));
        let got: Vec<(String, String)> = findings.iter().map(|f| (f.rule_id.clone(), f.focus.to_string())).collect();
        assert_eq!(got, case.expected, "{}", case.path.display());
        if case.closure_only {
            assert!(check_integrity(&materialize_with(&g, &[])).is_empty(), "{} without closure", case.path.display());
        }
    }
}
