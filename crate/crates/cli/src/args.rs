//! Command-line grammar and the optional TOML config file.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use skosforge_core::guidelines::RuleSet;
use skosforge_core::report::Format;
use skosforge_core::Profile;

#[derive(Debug, Parser)]
#[command(name = "skosforge", version, about = "Validate and reason over SKOS vocabularies in N-Triples")]
pub struct Cli {
    #[command(subcommand)]
    pub mode: ModeArgs,
}

#[derive(Debug, Subcommand)]
pub enum ModeArgs {
    /// Check integrity conditions and guidelines; exit 1 if any error is found
    Validate(Common),
    /// Print the materialized graph as canonical N-Triples
    Infer(Common),
    /// Print vocabulary statistics
    Stats(Common),
    /// Print the axiom catalog
    Axioms(AxiomArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// N-Triples files; `-` reads standard input
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Args)]
pub struct AxiomArgs {
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Axiom subset used for inference (validate always uses reference)
    #[arg(long, value_enum, default_value_t = ProfileArg::Reference)]
    pub profile: ProfileArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// Write the derivation of every inferred triple to standard error
    #[arg(long)]
    pub trace: bool,
    /// Enable a guideline rule (repeatable)
    #[arg(long, value_name = "ID")]
    pub enable: Vec<String>,
    /// Disable a guideline rule (repeatable)
    #[arg(long, value_name = "ID")]
    pub disable: Vec<String>,
    /// TOML file with a [guidelines] table of `enable` and `disable` lists
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Record elapsed time in the report (makes output vary between runs)
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Reference,
    RdfSchema,
    OwlDlPrune,
}

impl From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Profile {
        match p {
            ProfileArg::Reference => Profile::Reference,
            ProfileArg::RdfSchema => Profile::RdfSchema,
            ProfileArg::OwlDlPrune => Profile::OwlDlPrune,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(default)]
    guidelines: GuidelineSection,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct GuidelineSection {
    #[serde(default)]
    enable: Vec<String>,
    #[serde(default)]
    disable: Vec<String>,
}

/// Starts from every rule enabled, applies the config file, then the flags.
pub fn rule_set(options: &Options) -> Result<RuleSet> {
    let mut rules = RuleSet::all_enabled();
    if let Some(path) = &options.config {
        let file = read_config(path)?;
        apply(&mut rules, &file.guidelines.enable, &file.guidelines.disable)
            .with_context(|| format!("in {}", path.display()))?;
    }
    apply(&mut rules, &options.enable, &options.disable)?;
    Ok(rules)
}

fn read_config(path: &Path) -> Result<ConfigFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read config {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("invalid config {}", path.display()))
}

fn apply(rules: &mut RuleSet, enable: &[String], disable: &[String]) -> Result<()> {
    for id in enable {
        rules.set(id, true)?;
    }
    for id in disable {
        if enable.contains(id) {
            bail!("{id} is both enabled and disabled");
        }
        rules.set(id, false)?;
    }
    Ok(())
}
