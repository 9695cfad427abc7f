use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skosforge::{main_with, run, Mode, RunConfig, EXIT_ERRORS, EXIT_INPUT, EXIT_OK, EXIT_USAGE};
use skosforge_core::report::{Format, Report};
use skosforge_core::serialize_ntriples;
use skosforge_testkit::fixtures_dir;
use skosforge_testkit::generate::random_skos_graph;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("skosforge").chain(args.iter().copied());
    let code = main_with(argv, &mut out, &mut err, false);
    Outcome { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn fixture(rel: &str) -> String {
    fixtures_dir().join(rel).display().to_string()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

#[test]
fn infer_derives_love_pref_label() {
    let o = cli(&["infer", &fixture("nt/love_example.nt")]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o
        .out
        .contains("<http://example.org/love> <http://www.w3.org/2004/02/skos/core#prefLabel> \"love\"@en .\n"));
}

#[test]
fn infer_under_rdf_schema_lacks_chain() {
    let o = cli(&["infer", "--profile", "rdf-schema", &fixture("nt/love_example.nt")]);
    assert_eq!(o.code, EXIT_OK);
    assert!(!o.out.contains("core#prefLabel"));
}

#[test]
fn trace_goes_to_stderr() {
    let o = cli(&["infer", "--trace", &fixture("nt/love_example.nt")]);
    assert!(o.err.contains("S55 <http://example.org/love>"));
    assert!(o.err.contains("    from <http://example.org/love_label>"));
    assert!(!o.out.contains("from"));
}

#[test]
fn empty_file_validates_clean() {
    let o = cli(&["validate", "--format", "json", &fixture("nt/empty.nt")]);
    assert_eq!(o.code, EXIT_OK);
    let r = Report::from_json(&o.out).unwrap();
    assert!(r.findings.is_empty());
    assert!(r.tallies.values().all(|&n| n == 0));
}

#[test]
fn single_s14_clash_exits_one_with_tally() {
    let o = cli(&["validate", "--format", "json", &fixture("integrity/S14.violating.nt")]);
    assert_eq!(o.code, EXIT_ERRORS);
    let r = Report::from_json(&o.out).unwrap();
    assert_eq!(r.tallies["S14"], 1);
    assert_eq!(r.tallies.iter().filter(|(k, _)| k.starts_with('S')).map(|(_, v)| v).sum::<usize>(), 1);
}

#[test]
fn warnings_alone_do_not_fail() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "orphan.nt",
        "<http://example.org/a> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/2004/02/skos/core#Concept> .\n",
    );
    let o = cli(&["validate", &f]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.out.contains("WARNING G-ORPHAN"));
    assert!(o.out.contains("WARNING G-MISSING-PREFLABEL"));
    let quiet = cli(&["validate", "--disable", "G-ORPHAN", "--disable", "G-MISSING-PREFLABEL", &f]);
    assert_eq!(quiet.out, "");
}

#[test]
fn config_file_disables_rules() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "a.nt",
        "<http://example.org/a> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/2004/02/skos/core#Concept> .\n",
    );
    let cfg = write(dir.path(), "skosforge.toml", "[guidelines]\ndisable = [\"G-ORPHAN\"]\n");
    let o = cli(&["validate", "--config", &cfg, &f]);
    assert!(!o.out.contains("G-ORPHAN"));
    assert!(o.out.contains("G-MISSING-PREFLABEL"));
    let back = cli(&["validate", "--config", &cfg, "--enable", "G-ORPHAN", &f]);
    assert!(back.out.contains("G-ORPHAN"));
    let bad = write(dir.path(), "bad.toml", "[guidelines]\ndisable = [\"G-NOPE\"]\n");
    assert_eq!(cli(&["validate", "--config", &bad, &f]).code, EXIT_USAGE);
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(cli(&["validate"]).code, EXIT_USAGE);
    assert_eq!(cli(&["validate", "--bogus", "x.nt"]).code, EXIT_USAGE);
    assert_eq!(cli(&["validate", "--profile", "owl2", "x.nt"]).code, EXIT_USAGE);
    assert_eq!(cli(&["lint", "x.nt"]).code, EXIT_USAGE);
    assert_eq!(cli(&["validate", "--enable", "G-NOPE", "x.nt"]).code, EXIT_USAGE);
    assert_eq!(cli(&["infer", "--format", "json", &fixture("nt/empty.nt")]).code, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).code, EXIT_OK);
}

#[test]
fn unreadable_and_malformed_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.nt").display().to_string();
    let o = cli(&["validate", &missing]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.err.contains("cannot read"));
    let bad = write(dir.path(), "bad.nt", "<http://example.org/a> <http://example.org/p> \"open .\n");
    let o = cli(&["validate", &bad]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.err.contains("bad.nt:1:"), "{}", o.err);
    assert_eq!(o.out, "");
}

#[test]
fn inputs_are_merged() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.nt",
        "<http://example.org/c> <http://www.w3.org/2004/02/skos/core#prefLabel> \"a\"@en .\n",
    );
    let b = write(
        dir.path(),
        "b.nt",
        "<http://example.org/c> <http://www.w3.org/2004/02/skos/core#prefLabel> \"b\"@en .\n",
    );
    assert_eq!(cli(&["validate", &a]).code, EXIT_OK);
    let o = cli(&["validate", "--format", "json", &a, &b]);
    assert_eq!(o.code, EXIT_ERRORS);
    let r = Report::from_json(&o.out).unwrap();
    assert_eq!(r.inputs.len(), 2);
    assert_eq!(r.inputs[0].triples, 1);
    assert_eq!(r.inputs[0].sha256.len(), 64);
    assert_eq!(r.tallies["S14"], 1);
}

/// Every integrity check is monotone under union except the "no value" half
/// of S52: a label without a literal form stops violating once another file
/// supplies one.
#[test]
fn integrity_findings_grow_under_union() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let errors = |o: &Outcome| -> BTreeSet<(String, String, Vec<String>)> {
        Report::from_json(&o.out)
            .unwrap()
            .findings
            .into_iter()
            .filter(|f| f.severity == skosforge_core::Severity::Error)
            .filter(|f| !(f.rule_id == "S52" && f.message.contains(" 0 values")))
            .map(|f| (f.rule_id, f.focus.to_string(), f.evidence.iter().map(|t| t.to_string()).collect()))
            .collect()
    };
    for i in 0..25 {
        let a = write(
            dir.path(),
            &format!("a{i}.nt"),
            std::str::from_utf8(&serialize_ntriples(&random_skos_graph(&mut rng, 60))).unwrap(),
        );
        let b = write(
            dir.path(),
            &format!("b{i}.nt"),
            std::str::from_utf8(&serialize_ntriples(&random_skos_graph(&mut rng, 60))).unwrap(),
        );
        let ea = errors(&cli(&["validate", "--format", "json", &a]));
        let eb = errors(&cli(&["validate", "--format", "json", &b]));
        let joint = cli(&["validate", "--format", "json", &a, &b]);
        let ej = errors(&joint);
        for (rule, focus, _) in ea.iter().chain(&eb) {
            assert!(ej.iter().any(|(r, f, _)| r == rule && f == focus), "{rule} on {focus} lost in union");
        }
    }
}

#[test]
fn json_report_round_trips_with_evidence() {
    let o = cli(&["validate", "--format", "json", &fixture("integrity/S58.violating.nt")]);
    let r = Report::from_json(&o.out).unwrap();
    assert_eq!(r.to_json(), o.out);
    assert!(r.findings.iter().all(|f| !f.evidence.is_empty()));
}

#[test]
fn run_accepts_a_built_config() {
    let mut config = RunConfig::new(Mode::Stats, vec![PathBuf::from(fixture("nt/concept_scheme.nt"))]);
    config.format = Format::Json;
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(run(&config, &mut out, &mut err), EXIT_OK);
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["concepts"], 1);
    assert_eq!(v["concept_schemes"], 1);
}

#[test]
fn axioms_respect_profile() {
    let all = cli(&["axioms", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&all.out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 62);
    let prune = cli(&["axioms", "--profile", "owl-dl-prune"]);
    assert!(!prune.out.contains("S55 "));
    assert!(!prune.out.lines().any(|l| l.starts_with("S11 ")));
    assert!(prune.out.lines().any(|l| l.starts_with("S25 ")));
}

#[test]
fn binary_honours_no_color_and_reads_stdin() {
    let bin = env!("CARGO_BIN_EXE_skosforge");
    let out = Command::new(bin)
        .args(["validate", &fixture("integrity/S9.violating.nt")])
        .env("SKOSFORGE_NO_COLOR", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_ERRORS));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("ERROR S9 "), "{text}");
    assert!(!text.contains('\x1b'));

    use std::io::Write;
    let mut child = Command::new(bin)
        .args(["infer", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"<http://example.org/a> <http://www.w3.org/2004/02/skos/core#narrower> <http://example.org/b> .\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("<http://example.org/b> <http://www.w3.org/2004/02/skos/core#broader> <http://example.org/a> ."));
}
