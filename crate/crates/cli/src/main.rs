//! `flownet`: experiment driver and edge-list tools.
//!
//! Exit codes: 0 success, 2 configuration or terminal error, 3 I/O or
//! malformed input, 4 disconnected input.

mod commands;
mod error;
mod files;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{analyze, flow_stats, rgp_eval, sparsify};
use error::CliResult;

#[derive(Debug, Parser)]
#[command(name = "flownet", version, about = "Resistor-network experiments and sparsification")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every subcommand.
#[derive(Debug, clap::Args)]
pub struct Global {
    /// Master seed; every trial derives its own seed from it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Monte-Carlo trials per grid point.
    #[arg(long, global = true, default_value_t = 50)]
    pub trials: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Simulated and predicted flow-subgraph sizes on ER graphs (CSV).
    FlowStats(flow_stats::FlowStatsArgs),
    /// RGP and Fiedler reconstructions of random baselines (CSV).
    RgpEval(rgp_eval::RgpEvalArgs),
    /// Sparsify an edge list with RGP; writes an edge list and metrics JSON.
    Sparsify(sparsify::SparsifyArgs),
    /// Resistance, power and flow subgraph of one terminal pair (JSON).
    Analyze(analyze::AnalyzeArgs),
}

fn run(cli: &Cli) -> CliResult<()> {
    let out = cli.global.out.as_deref();
    match &cli.command {
        Command::FlowStats(a) => files::emit(out, &flow_stats::run(&cli.global, a)?),
        Command::RgpEval(a) => files::emit(out, &rgp_eval::run(&cli.global, a)?),
        Command::Sparsify(a) => sparsify::run(&cli.global, a),
        Command::Analyze(a) => analyze::run(&cli.global, a),
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on its own for unparsable arguments
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("flownet: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
