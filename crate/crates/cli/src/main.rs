//! `cherednik`: classify, count, enumerate and brute-force check
//! lowest-weight modules of the rational Cherednik algebra of `G(r,1,n)`.
//!
//! Exit codes: 0 success, 1 a check came back negative (oracle
//! disagreement, rejected certificate, failed batch line), 2 bad input,
//! 3 internal consistency failure, 4 refused (precondition not met).

mod certificate;
mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{run, Failure};

#[derive(Parser, Debug)]
#[command(name = "cherednik", version, about = "Diagonalizable and unitary modules for G(r,1,n) Cherednik algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Shape and parameter shared by most commands.
#[derive(Args, Debug, Clone)]
pub struct CaseArgs {
    /// Number of components of the multipartition.
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// Multipartition, e.g. "[2,1],[1]".
    #[arg(long)]
    pub shape: Option<String>,
    /// The parameter c0 as p/q.
    #[arg(long, allow_hyphen_values = true)]
    pub c0: Option<String>,
    /// Comma list d_1..d_{r-1} (d_0 derived) or d_0..d_{r-1}.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Diagonalizability and unitarity verdicts with certificates (JSON).
    Classify {
        #[command(flatten)]
        case: CaseArgs,
        /// Re-validate a document previously written by `classify`.
        #[arg(long, value_name = "FILE", conflicts_with_all = ["shape", "c0", "d"])]
        check_certificate: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graded dimension of L (or of its invariants) as "d,a_d" rows.
    Character {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 4)]
        max_degree: u64,
        /// Count W-invariants instead of the whole module.
        #[arg(long)]
        invariants: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The eigenbasis labels (P,Q) of L up to a degree, one JSON object per line.
    Gamma {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 4)]
        max_degree: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force the truncated standard module and compare with the classifier.
    Oracle {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Also check this many random parameters for the same shape.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Seed for `--samples`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verdicts over a (c0, d0) grid for r = 2, with d1 = -d0, as CSV.
    Locus {
        /// Multipartition with two components.
        #[arg(long)]
        shape: String,
        /// "c0:lo:hi:step;d0:lo:hi:step".
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one command per line of a file; failures are reported per line.
    Batch {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
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
    match run(&cli.command) {
        Ok(status) => ExitCode::from(status),
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
