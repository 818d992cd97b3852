use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semidec::decompose::Mode;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "semidec",
    version,
    about = "Decompose finitely generated commutative semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the JSON report to PATH, or to stdout when PATH is omitted or `-`.
    #[arg(long, global = true, num_args = 0..=1, default_missing_value = "-", value_name = "PATH")]
    pub json: Option<PathBuf>,

    /// Leave wall-clock timings out of the report.
    #[arg(long, global = true)]
    pub no_timings: bool,
}

#[derive(Debug, Clone, Args)]
pub struct Input {
    /// Generator matrix in `.mat` format (generators are the columns).
    pub mat: PathBuf,

    /// Moduli for the last rows of the matrix.
    #[arg(long, value_name = "FILE")]
    pub moduli: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Split the semigroup into irreducible summands.
    Decompose {
        #[command(flatten)]
        input: Input,
        /// Diagonalize the kernel lattice (exact) or the generator matrix (sufficient only).
        #[arg(long, default_value = "kernel", value_parser = parse_mode)]
        mode: Mode,
    },
    /// Minimal Markov basis with degree multiplicities and Betti degrees.
    Markov {
        #[command(flatten)]
        input: Input,
        /// Compute per irreducible summand and reassemble (default).
        #[arg(long, conflicts_with = "whole")]
        per_block: bool,
        /// Compute on the whole presentation.
        #[arg(long)]
        whole: bool,
    },
    /// Uniqueness, complete-intersection and gluing verdicts; all three when none is selected.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        unique: bool,
        #[arg(long)]
        ci: bool,
        #[arg(long)]
        gluing: bool,
    },
    /// The fiber over a degree and one of its simplicial complexes.
    Fiber {
        #[command(flatten)]
        input: Input,
        /// Degree vector, entries separated by spaces or commas.
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
        #[arg(long, value_enum, default_value = "nabla")]
        complex: ComplexKind,
    },
    /// Monomial parametrization through a nice generating system.
    Reparam {
        #[command(flatten)]
        input: Input,
    },
    /// Time the Markov basis computed per summand against the whole presentation.
    Bench {
        #[command(flatten)]
        input: Input,
        /// Runs per path; the best time is reported.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        repeat: u32,
        /// Seconds allowed for each whole-presentation run.
        #[arg(long, default_value_t = 300.0)]
        timeout: f64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Decompose { .. } => "decompose",
            Command::Markov { .. } => "markov",
            Command::Check { .. } => "check",
            Command::Fiber { .. } => "fiber",
            Command::Reparam { .. } => "reparam",
            Command::Bench { .. } => "bench",
        }
    }

    pub fn input(&self) -> &Input {
        match self {
            Command::Decompose { input, .. }
            | Command::Markov { input, .. }
            | Command::Check { input, .. }
            | Command::Fiber { input, .. }
            | Command::Reparam { input }
            | Command::Bench { input, .. } => input,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComplexKind {
    Nabla,
    Delta,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}
