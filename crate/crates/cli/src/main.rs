//! `holoprime`: verification suites, ad-hoc prime and complete-prime checks,
//! and the MP lower-bound search.
//!
//! Exit codes: 0 when everything checked passes, 1 on a verification
//! failure, 2 on bad usage or unreadable input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "holoprime", version, about = "Exact prime and complete-prime checks for G₂ and Spin(7) forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Group {
    G2,
    Spin7,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    G2,
    Spin7,
    R5,
    Koszul,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PrimeMode {
    /// `E ∩ ω¹∧Λ^{k−1} = 0`; a certificate only with `--transitive`.
    Invariant,
    /// Seeded search for a non-prime element.
    Witness,
    /// Multi-start minimisation of the smallest singular value.
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LambdaMode {
    /// `λ = ω¹`.
    Invariant,
    /// `--samples` seeded random covectors.
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Greedy,
    Randomized,
}

#[derive(clap::Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the invariant components of one degree with bases.
    Decompose {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Print each check id with the statement it verifies, then exit.
        #[arg(long)]
        claim_map: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check primeness of a subspace given as JSON.
    CheckPrime {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "invariant")]
        mode: PrimeMode,
        /// Assert that a group preserving the subspace is transitive on the sphere.
        #[arg(long)]
        transitive: bool,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the type I complex of E, or the type II complex of (F, E).
    CheckCompletePrime {
        #[arg(long)]
        e: PathBuf,
        #[arg(long)]
        f: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "invariant")]
        lambda: LambdaMode,
        /// Explicit covector as comma-separated rationals; overrides `--lambda`.
        #[arg(long, allow_hyphen_values = true)]
        covector: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search for a large prime subspace of Λ²(ℝⁿ).
    MpSearch {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "greedy")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Re-verify an MP certificate exactly.
    MpReplay {
        certificate: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
