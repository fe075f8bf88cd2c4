//! `jaco` command line: graph construction, clique invariants, the Pascal
//! clique matrix, claim verification and table regeneration.
//!
//! Exit codes: 0 on success, 1 when a claim is refuted or a table has
//! mismatching cells, 2 on usage or input errors.

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use jaco_core::budget::{DEFAULT_CENSUS_BUDGET, DEFAULT_CYCLE_BUDGET, DEFAULT_SUBSET_BUDGET};
use jaco_core::{Budgets, JacoError, SequenceSpec, SetVariant};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Jaco(#[from] JacoError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

pub type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Parser)]
#[command(
    name = "jaco",
    version,
    about = "Jaco-type graphs: clique censuses, invariants and claim verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct J_n from a sequence family and export it.
    Build(GraphArgs),
    /// Count l-cliques for every l.
    Census(CensusArgs),
    /// Vertex clique degrees d^{K_l}(v).
    Degrees(GraphArgs),
    /// List all maximal cliques of the underlying graph.
    Maximal(GraphArgs),
    /// Girth, circumference, max degree, Jaconian set, clique number, covers.
    Invariants(GraphArgs),
    /// The clique matrix of complete graphs, its inverse and clique degrees.
    Pascal(PascalArgs),
    /// Evaluate one registered claim or all of them.
    Verify(VerifyArgs),
    /// Recompute the published tables and diff them cell by cell.
    Tables(TablesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// a_i = i
    S1,
    /// Fibonacci numbers
    S2,
    /// a_i = i mod k
    S3,
    /// subset sums of {1..base}
    S4,
    /// the linear Jaco sequence
    Linear,
    /// explicit terms read from --file
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    EdgeList,
    Json,
    Csv,
    Text,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Dot => "dot",
            Format::EdgeList => "edge-list",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
    }
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// Sequence family.
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Modulus for s3 (default 5).
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    k: Option<u64>,
    /// Ground-set size for s4 (default 3).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=63))]
    base: Option<u32>,
    /// s4 variant: definitional or paper-figure (default definitional).
    #[arg(long)]
    variant: Option<SetVariant>,
    /// Term file for the custom family: one integer per line, # comments.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl FamilyArgs {
    fn spec(&self) -> CliResult<Option<SequenceSpec>> {
        let Some(family) = self.family else {
            if self.k.is_some()
                || self.base.is_some()
                || self.variant.is_some()
                || self.file.is_some()
            {
                return Err(usage("--k, --base, --variant and --file need --family"));
            }
            return Ok(None);
        };
        if self.k.is_some() && family != Family::S3 {
            return Err(usage("--k applies only to --family s3"));
        }
        if (self.base.is_some() || self.variant.is_some()) && family != Family::S4 {
            return Err(usage("--base and --variant apply only to --family s4"));
        }
        if self.file.is_some() != (family == Family::Custom) {
            return Err(usage(
                "--file is required by, and only accepted with, --family custom",
            ));
        }
        let spec = match family {
            Family::S1 => SequenceSpec::PositiveIntegers,
            Family::S2 => SequenceSpec::Fibonacci,
            Family::S3 => SequenceSpec::modulo(self.k.unwrap_or(5)),
            Family::S4 => {
                let base = self.base.unwrap_or(3);
                let variant = self.variant.unwrap_or_default();
                if variant == SetVariant::PaperFigure && base != 3 {
                    return Err(usage("the paper-figure variant exists only for --base 3"));
                }
                SequenceSpec::set_sequence(base, variant)
            }
            Family::Linear => SequenceSpec::LinearJaco,
            Family::Custom => {
                let path = self.file.as_ref().expect("checked above");
                SequenceSpec::load_explicit(path)?
            }
        };
        spec.validate()?;
        Ok(Some(spec))
    }
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Largest order for clique enumeration (default 64).
    #[arg(long, value_parser = positive)]
    census_cap: Option<usize>,
    /// Largest order for exhaustive longest-cycle search (default 20).
    #[arg(long, value_parser = positive)]
    cycle_cap: Option<usize>,
    /// Largest order for 2^n subset oracles and exact cover search (default 14).
    #[arg(long, value_parser = positive)]
    subset_cap: Option<usize>,
    /// Allow caps above their defaults and searches beyond the caps.
    #[arg(long)]
    force: bool,
}

impl BudgetArgs {
    fn budgets(&self) -> CliResult<Budgets> {
        let pick = |flag: &str, value: Option<usize>, default: usize| -> CliResult<usize> {
            match value {
                Some(v) if v > default && !self.force => Err(usage(format!(
                    "raising --{flag} above its default {default} requires --force"
                ))),
                Some(v) => Ok(v),
                None => Ok(default),
            }
        };
        Ok(Budgets {
            census: pick("census-cap", self.census_cap, DEFAULT_CENSUS_BUDGET)?,
            cycle: pick("cycle-cap", self.cycle_cap, DEFAULT_CYCLE_BUDGET)?,
            subset: pick("subset-cap", self.subset_cap, DEFAULT_SUBSET_BUDGET)?,
            force: self.force,
        })
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format; each command accepts a subset of dot, edge-list, json, csv, text.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutputArgs {
    fn format(&self, command: &str, allowed: &[Format]) -> CliResult<Format> {
        match self.format {
            None => Ok(allowed[0]),
            Some(f) if allowed.contains(&f) => Ok(f),
            Some(f) => {
                let names: Vec<&str> = allowed.iter().map(|a| a.name()).collect();
                Err(usage(format!(
                    "{command} does not support --format {}; use one of {}",
                    f.name(),
                    names.join(", ")
                )))
            }
        }
    }
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Number of vertices (custom defaults to the number of terms).
    #[arg(long, value_parser = positive)]
    n: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
    #[command(flatten)]
    budgets: BudgetArgs,
}

#[derive(Debug, Args)]
struct CensusArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Stop counting at this clique size.
    #[arg(long, value_parser = positive)]
    max_size: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PascalView {
    /// A[i][j] = C(i, j), the clique census of K_1..K_n.
    Matrix,
    /// The signed binomial inverse of A.
    Inverse,
    /// Clique census and vertex clique degree of K_n by size.
    Degrees,
}

#[derive(Debug, Args)]
struct PascalArgs {
    /// Matrix dimension, or the complete-graph order for degrees.
    #[arg(long, default_value_t = 10, value_parser = matrix_dim)]
    n: usize,
    #[arg(long, value_enum, default_value_t = PascalView::Matrix)]
    what: PascalView,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("which").required(true).args(["claim", "all"])))]
struct VerifyArgs {
    /// Claim id, e.g. P-2.1.4.
    #[arg(long)]
    claim: Option<String>,
    /// Evaluate every registered claim.
    #[arg(long)]
    all: bool,
    #[command(flatten)]
    family: FamilyArgs,
    /// Instance order, or the upper end of the claim's range.
    #[arg(long, value_parser = positive)]
    n: Option<usize>,
    /// Seed for randomized instance generation.
    #[arg(long, env = "JACO_SEED")]
    seed: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
    #[command(flatten)]
    budgets: BudgetArgs,
}

#[derive(Debug, Args)]
struct TablesArgs {
    /// Table number; all five when omitted.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    id: Option<u8>,
    /// Modulus for table 4.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(2..))]
    k: u64,
    /// Set variant for table 5.
    #[arg(long, default_value = "paper-figure")]
    variant: SetVariant,
    #[command(flatten)]
    output: OutputArgs,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn matrix_dim(s: &str) -> Result<usize, String> {
    positive(s).and_then(|v| {
        if v <= 64 {
            Ok(v)
        } else {
            Err("must be at most 64".into())
        }
    })
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, CliError::Usage(_)) {
                let _ = writeln!(err, "run `jaco <command> --help` for usage");
            }
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Build(a) => commands::build(&a, out),
        Command::Census(a) => commands::census(&a, out),
        Command::Degrees(a) => commands::degrees(&a, out),
        Command::Maximal(a) => commands::maximal(&a, out),
        Command::Invariants(a) => commands::invariants(&a, out),
        Command::Pascal(a) => commands::pascal(&a, out),
        Command::Verify(a) => commands::verify(&a, out),
        Command::Tables(a) => commands::tables(&a, out),
    }
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}
