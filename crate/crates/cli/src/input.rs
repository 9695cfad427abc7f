//! Reading, hashing and parsing input files.

use std::io::Read;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use skosforge_core::rdf::{parse_ntriples, ParseError};
use skosforge_core::report::InputSummary;
use skosforge_core::Graph;

#[derive(Debug)]
pub enum InputError {
    Unreadable(PathBuf, std::io::Error),
    Parse(PathBuf, ParseError),
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InputError::Unreadable(path, e) => write!(f, "{}: cannot read: {e}", path.display()),
            InputError::Parse(path, e) => {
                let lines: Vec<String> = e
                    .errors
                    .iter()
                    .map(|l| format!("{}:{}:{}: {}", path.display(), l.line, l.column, l.kind))
                    .collect();
                write!(f, "{}", lines.join("\n"))
            }
        }
    }
}

fn read(path: &Path) -> std::io::Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path)
    }
}

fn load_one(path: &Path) -> Result<(Graph, InputSummary), InputError> {
    let bytes = read(path).map_err(|e| InputError::Unreadable(path.to_owned(), e))?;
    let sha256 = hex::encode(Sha256::digest(&bytes));
    let graph = parse_ntriples(&bytes).map_err(|e| InputError::Parse(path.to_owned(), e))?;
    let summary = InputSummary { path: path.display().to_string(), sha256, triples: graph.len() };
    Ok((graph, summary))
}

/// Parses every file on its own thread and merges the graphs in argument
/// order. All failures are collected, not just the first.
pub fn load(paths: &[PathBuf]) -> Result<(Graph, Vec<InputSummary>), Vec<InputError>> {
    let results: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = paths.iter().map(|p| scope.spawn(move || load_one(p))).collect();
        handles.into_iter().map(|h| h.join().expect("parser thread panicked")).collect()
    });
    let mut merged = Graph::new();
    let mut summaries = Vec::with_capacity(paths.len());
    let mut errors = Vec::new();
    for r in results {
        match r {
            Ok((g, s)) => {
                if merged.is_empty() {
                    merged = g;
                } else {
                    merged.merge(&g);
                }
                summaries.push(s);
            }
            Err(e) => errors.push(e),
        }
    }
    if errors.is_empty() {
        Ok((merged, summaries))
    } else {
        Err(errors)
    }
}
