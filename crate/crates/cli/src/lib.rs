//! The `skosforge` command: parse, materialize, check and report.

pub mod args;
mod input;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::Result;
use clap::Parser;
use skosforge_core::guidelines::{check_guidelines, RuleSet};
use skosforge_core::inference::{materialize, MaterializedGraph};
use skosforge_core::integrity::check_integrity;
use skosforge_core::report::{format_report, format_text, Format, Report};
use skosforge_core::stats::compute_stats;
use skosforge_core::vocab::axioms_for;
use skosforge_core::{serialize_ntriples, Profile, Severity};

use args::{Cli, ModeArgs, Options};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERRORS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Validate,
    Infer,
    Stats,
    Axioms,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub mode: Mode,
    pub inputs: Vec<PathBuf>,
    pub profile: Profile,
    pub format: Format,
    pub rules: RuleSet,
    pub trace: bool,
    pub timing: bool,
    /// ANSI colour in text reports.
    pub color: bool,
}

impl RunConfig {
    pub fn new(mode: Mode, inputs: Vec<PathBuf>) -> Self {
        RunConfig {
            mode,
            inputs,
            profile: Profile::Reference,
            format: Format::Text,
            rules: RuleSet::all_enabled(),
            trace: false,
            timing: false,
            color: false,
        }
    }
}

fn config_from(mode: Mode, inputs: Vec<PathBuf>, o: &Options) -> Result<RunConfig> {
    Ok(RunConfig {
        mode,
        inputs,
        profile: o.profile.into(),
        format: o.format.into(),
        rules: args::rule_set(o)?,
        trace: o.trace,
        timing: o.timing,
        color: false,
    })
}

/// Parses `argv` (including the program name) into a config, or returns the
/// exit code to stop with after printing help, version or a usage error.
pub fn parse_args<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> Result<RunConfig, i32>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return Err(match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            });
        }
    };
    let built = match &cli.mode {
        ModeArgs::Validate(c) => config_from(Mode::Validate, c.files.clone(), &c.options),
        ModeArgs::Infer(c) => config_from(Mode::Infer, c.files.clone(), &c.options),
        ModeArgs::Stats(c) => config_from(Mode::Stats, c.files.clone(), &c.options),
        ModeArgs::Axioms(a) => config_from(Mode::Axioms, Vec::new(), &a.options),
    };
    built.map_err(|e| {
        let _ = writeln!(err, "skosforge: {e:#}");
        EXIT_USAGE
    })
}

/// Parses arguments and runs; the process entry point in library form.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_args(argv, out, err) {
        Ok(mut config) => {
            config.color = color;
            run(&config, out, err)
        }
        Err(code) => code,
    }
}

pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_inner(config, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "skosforge: {e:#}");
            EXIT_INPUT
        }
    }
}

fn run_inner(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if config.mode == Mode::Axioms {
        write_axioms(config, out)?;
        return Ok(EXIT_OK);
    }
    if config.inputs.is_empty() {
        writeln!(err, "skosforge: no input files")?;
        return Ok(EXIT_USAGE);
    }
    if config.mode == Mode::Infer && config.format == Format::Json {
        writeln!(err, "skosforge: infer writes N-Triples; --format json is not supported")?;
        return Ok(EXIT_USAGE);
    }
    let started = Instant::now();
    let (graph, inputs) = match input::load(&config.inputs) {
        Ok(loaded) => loaded,
        Err(errors) => {
            for e in errors {
                writeln!(err, "{e}")?;
            }
            return Ok(EXIT_INPUT);
        }
    };
    let profile = if config.mode == Mode::Validate {
        if config.profile != Profile::Reference {
            writeln!(err, "skosforge: validate always materializes under the reference profile")?;
        }
        Profile::Reference
    } else {
        config.profile
    };
    let mg = materialize(&graph, profile);
    if config.trace {
        write_trace(&mg, err)?;
    }
    match config.mode {
        Mode::Infer => {
            out.write_all(&serialize_ntriples(mg.graph()))?;
            writeln!(err, "skosforge: {} asserted, {} derived triples", mg.asserted_count(), mg.derived_count())?;
            Ok(EXIT_OK)
        }
        Mode::Stats => {
            let stats = compute_stats(&mg);
            match config.format {
                Format::Text => write!(out, "{stats}")?,
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&stats)?)?,
            }
            Ok(EXIT_OK)
        }
        Mode::Validate => {
            let mut findings = check_integrity(&mg);
            findings.extend(check_guidelines(&mg, &config.rules));
            findings.extend(mg.diagnostics().iter().cloned());
            let mut report = Report::new(inputs, mg.asserted_count(), mg.derived_count(), findings, &config.rules);
            if config.timing {
                report.elapsed_ms = started.elapsed().as_millis() as u64;
            }
            match config.format {
                Format::Text => out.write_all(format_text(&report, config.color).as_bytes())?,
                Format::Json => out.write_all(&format_report(&report, Format::Json))?,
            }
            let (errors, warnings) = (report.count(Severity::Error), report.count(Severity::Warning));
            writeln!(
                err,
                "skosforge: {errors} error{}, {warnings} warning{} ({} asserted, {} derived triples)",
                plural(errors),
                plural(warnings),
                report.asserted,
                report.derived
            )?;
            Ok(if report.has_errors() { EXIT_ERRORS } else { EXIT_OK })
        }
        Mode::Axioms => unreachable!(),
    }
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "s"
    }
}

fn write_axioms(config: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let axioms = axioms_for(config.profile);
    match config.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&axioms)?)?,
        Format::Text => {
            for a in axioms {
                let cell = |b: bool| if b { "yes" } else { "no" };
                writeln!(out, "{a}  [schema: {}, prune: {}]", cell(a.in_rdf_schema), cell(a.in_owl_dl_prune))?;
            }
        }
    }
    Ok(())
}

fn write_trace(mg: &MaterializedGraph, err: &mut dyn Write) -> Result<()> {
    for entry in mg.trace() {
        writeln!(err, "{} {}", entry.axiom, entry.derived)?;
        for p in &entry.premises {
            writeln!(err, "    from {p}")?;
        }
    }
    Ok(())
}
