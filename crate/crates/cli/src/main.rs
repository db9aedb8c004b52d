mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Invariants, exhaustive verification, and proof replay for Hamiltonicity
/// of 1-tough (P2 u kP1)-free graphs.
///
/// Exit status: 0 on success, 2 when a counterexample or failed check is
/// found, 1 on usage or resource errors. Set HAMFORBID_MAX_N to raise the
/// size caps of the exact routines.
#[derive(Debug, Parser)]
#[command(name = "hamforbid", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connectivity, toughness, freeness, alpha_e and mu_j of each graph.
    Invariants(InvariantsArgs),
    /// Filter a corpus by a hypothesis and decide every graph that passes.
    Verify(VerifyArgs),
    /// Replay the structural argument on a non-Hamiltonian graph.
    Replay(ReplayArgs),
    /// Seeded random trials of the independent-set and exterior-component statements.
    Lemmas(LemmasArgs),
    /// Encode an edge list as graph6.
    Encode(EncodeArgs),
    /// Decode graph6 records into edge lists.
    Decode(DecodeArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Emit JSON instead of a table.
    #[arg(long)]
    pub json: bool,
    /// Seed for randomized work; always echoed in the output.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// One graph6 record.
    #[arg(long)]
    pub graph6: Option<String>,
    /// File of graph6 records, one per line.
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[command(flatten)]
    pub input: Input,
    /// Largest k for freeness; mu is reported for 2..=k+1.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
#[group(id = "corpus", required = true, multiple = false, args = ["graph6", "file", "exhaustive_n"])]
pub struct VerifyArgs {
    /// One graph6 record.
    #[arg(long)]
    pub graph6: Option<String>,
    /// File of graph6 records, one per line.
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
    /// Every labeled graph on 1..=N vertices.
    #[arg(long)]
    pub exhaustive_n: Option<usize>,
    #[arg(long)]
    pub k: usize,
    /// thm-main, cor-tough, cor-essential, xcheck-connectivity or xcheck-min-degree.
    #[arg(long, default_value = "thm-main")]
    pub hypothesis: String,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Keep going after a counterexample.
    #[arg(long)]
    pub no_abort: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub k: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct LemmasArgs {
    /// Precondition-satisfying trials per statement.
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    /// Number of vertices.
    #[arg(long)]
    pub n: usize,
    /// Comma-separated edges such as 0-1,1-2.
    #[arg(long, default_value = "")]
    pub edges: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    #[command(flatten)]
    pub input: Input,
    #[command(flatten)]
    pub common: Common,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    match commands::run(cli.command) {
        Ok(code) => code.into(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
