//! Shared test support: a naive closure oracle, hierarchy oracles, graph
//! generators and paths to the checked-in fixtures.

pub mod generate;
pub mod hierarchy;
pub mod oracle;

use std::path::PathBuf;

/// `crates/core/tests/fixtures`.
pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures")
}

/// Every `.nt` file of the round-trip corpus, sorted by name.
pub fn nt_corpus() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixtures_dir().join("nt"))
        .expect("corpus directory exists")
        .map(|e| e.expect("readable entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "nt"))
        .collect();
    files.sort();
    files
}

/// One row of the transcription audit: id, source table and the schema and
/// prune cells (`None` where the table has no prune column).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRow {
    pub id: String,
    pub table: String,
    pub schema: bool,
    pub prune: Option<bool>,
}

pub fn axiom_audit() -> Vec<AuditRow> {
    let text = std::fs::read_to_string(fixtures_dir().join("axiom_cells.txt")).expect("audit fixture exists");
    let cell = |c: &str| match c {
        "G" => Some(true),
        "R" => Some(false),
        "-" => None,
        other => panic!("bad audit cell {other:?}"),
    };
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            assert_eq!(f.len(), 4, "audit row {l:?}");
            AuditRow {
                id: f[0].to_owned(),
                table: f[1].to_owned(),
                schema: cell(f[2]).expect("schema cell present"),
                prune: cell(f[3]),
            }
        })
        .collect()
}

/// A fixture from `fixtures/integrity` with the findings it must produce,
/// as `(rule, focus)` pairs in report order.
#[derive(Debug, Clone)]
pub struct IntegrityCase {
    pub rule: String,
    pub violating: bool,
    pub closure_only: bool,
    pub path: PathBuf,
    pub source: String,
    pub expected: Vec<(String, String)>,
}

pub fn integrity_cases() -> Vec<IntegrityCase> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixtures_dir().join("integrity"))
        .expect("integrity fixtures exist")
        .map(|e| e.expect("readable entry").path())
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|path| {
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            let (rule, rest) = name.split_once('.').expect("RULE.kind.nt");
            let source = std::fs::read_to_string(&path).expect("readable fixture");
            let mut expected = Vec::new();
            let mut closure_only = false;
            for line in source.lines().filter_map(|l| l.strip_prefix("# ")) {
                if line == "closure-only" {
                    closure_only = true;
                } else if let Some(e) = line.strip_prefix("expect: ") {
                    if let Some((r, focus)) = e.split_once(' ') {
                        expected.push((r.to_owned(), focus.to_owned()));
                    }
                }
            }
            IntegrityCase {
                rule: rule.to_owned(),
                violating: rest.starts_with("violating"),
                closure_only,
                path,
                source,
                expected,
            }
        })
        .collect()
}
