//! The `sp2sigma` command line: every subcommand prints one JSON report on stdout.
//!
//! Exit codes: 0 when the checked property holds, 1 when it does not (or the
//! computation hits a non-invertible element), 2 on usage errors.

mod commands;
mod golden;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub use golden::{golden_files, GoldenFile};

#[derive(Debug, Parser)]
#[command(name = "sp2sigma", version, about = "Exact Sp₂(A,σ), cluster mutation and generalized Markov triples")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Ring spec, e.g. `int`, `complex-conj`, `mat:2:laurent:t:int`, `group:Z5:int`.
    #[arg(long, default_value = "int")]
    pub ring: String,
    /// Treat a `laurent:s:<base>` ring as the q-ring (σ(s) = s⁻¹).
    #[arg(long)]
    pub qmode: bool,
    /// Worker threads for suites and tree expansion.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Also write the report to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long = "rng-seed", default_value_t = 0)]
    pub rng_seed: u64,
}

#[derive(Debug, Subcommand, Clone)]
pub enum Command {
    /// Symplectic report, determinants, traces and identity residuals of one matrix.
    Sp2Verify {
        #[command(flatten)]
        common: Common,
        /// `[[A, B], [C, D]]`
        #[arg(long)]
        seed: String,
    },
    /// Seeded identity suites over a ring.
    IdentitiesFuzz {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Quantum report of one matrix over the q-ring of `--ring`, or the seeded lift suite.
    QuantumVerify {
        #[command(flatten)]
        common: Common,
        /// `[[A, B], [C, D]]` with entries in the q-ring (symbol `s`).
        #[arg(long)]
        seed: Option<String>,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Square seed of a matrix (extraction, φ, flip, monodromy), or the seeded cluster suite.
    ClusterSquare {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        seed: Option<String>,
        /// Second matrix, multiplied by amalgamation.
        #[arg(long)]
        with: Option<String>,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Markov function, torus angles and admissibility of a triple.
    MarkovCheck {
        #[command(flatten)]
        common: Common,
        /// `[A, B, C]`
        #[arg(long)]
        seed: String,
    },
    /// Word-indexed mutation tree.
    MarkovTree {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        seed: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Skip triples already seen earlier in breadth-first order.
        #[arg(long)]
        dedup: bool,
    },
    /// Fibonacci branch with one slot frozen: recurrence against mutation.
    MarkovFib {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        seed: String,
        /// Number of terms.
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Frozen slot; defaults to the first entry equal to 1, else the first σ-fixed one.
        #[arg(long)]
        frozen: Option<usize>,
    },
    /// Rewrites the golden files (or compares them with `--check`).
    GoldenRegen {
        /// Golden directory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compare instead of writing; exit 1 on any difference.
        #[arg(long)]
        check: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Sp2Verify { .. } => "sp2-verify",
            Command::IdentitiesFuzz { .. } => "identities-fuzz",
            Command::QuantumVerify { .. } => "quantum-verify",
            Command::ClusterSquare { .. } => "cluster-square",
            Command::MarkovCheck { .. } => "markov-check",
            Command::MarkovTree { .. } => "markov-tree",
            Command::MarkovFib { .. } => "markov-fib",
            Command::GoldenRegen { .. } => "golden-regen",
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage { flag: &'static str, message: String },
    Failed(String),
}

impl CliError {
    pub(crate) fn usage(flag: &'static str, e: impl std::fmt::Display) -> Self {
        CliError::Usage { flag, message: e.to_string() }
    }
}

/// A finished report and whether the checked property held.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub ok: bool,
}

/// Runs a parsed command. Usage problems come back as `Err`.
pub fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    commands::execute(cmd)
}

/// Renders a report the way the binary prints it.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// Parses `args` (including the program name), runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprint!("{e}");
            print!("{}", render(&json!({ "error": "usage", "message": e.kind().to_string() })));
            return 2;
        }
    };
    let name = cli.command.name();
    let (report, code) = match execute(&cli.command) {
        Ok(o) => (o.report, if o.ok { 0 } else { 1 }),
        Err(CliError::Usage { flag, message }) => {
            eprintln!("error: {flag}: {message}");
            (json!({ "command": name, "error": "usage", "flag": flag, "message": message }), 2)
        }
        Err(CliError::Failed(message)) => {
            eprintln!("error: {message}");
            (json!({ "command": name, "error": "failed", "message": message, "ok": false }), 1)
        }
    };
    let text = render(&report);
    print!("{text}");
    if let Some(path) = output_path(&cli.command) {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("error: --out {}: {e}", path.display());
            return 2;
        }
    }
    code
}

fn output_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::Sp2Verify { common, .. }
        | Command::IdentitiesFuzz { common, .. }
        | Command::QuantumVerify { common, .. }
        | Command::ClusterSquare { common, .. }
        | Command::MarkovCheck { common, .. }
        | Command::MarkovTree { common, .. }
        | Command::MarkovFib { common, .. } => common.out.as_ref(),
        Command::GoldenRegen { .. } => None,
    }
}
