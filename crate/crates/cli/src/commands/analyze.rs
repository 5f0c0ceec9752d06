//! Single-pair circuit analysis of an edge list.

use std::path::PathBuf;

use clap::Args;
use flownet::analytics::decompose_backbone;
use flownet::{extract_flow_subgraph, laplacian_bundle, power_dissipation, solve_unit_flow};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::files::{emit, read_graph};
use crate::Global;

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Edge-list file to analyze.
    pub input: PathBuf,
    /// Node where the unit current enters.
    #[arg(long)]
    pub source: usize,
    /// Node where the unit current leaves.
    #[arg(long)]
    pub dest: usize,
}

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub nodes: usize,
    pub links: usize,
    pub source: usize,
    pub dest: usize,
    pub omega: f64,
    /// `Σ y_l² r_l`.
    pub power_link_sum: f64,
    /// `ω_ij` for a unit current.
    pub power_resistance: f64,
    pub flow_nodes: usize,
    pub flow_links: usize,
    pub backbone_nodes: usize,
    pub giant_component_nodes: usize,
}

pub fn run(global: &Global, args: &AnalyzeArgs) -> CliResult<()> {
    let g = read_graph(&args.input)?;
    let n = g.node_count();
    for node in [args.source, args.dest] {
        if node >= n {
            return Err(CliError::Config(format!("terminal {node} is out of range for {n} nodes")));
        }
    }
    if args.source == args.dest {
        return Err(CliError::Config("source and destination must differ".into()));
    }
    if !g.is_connected() {
        return Err(CliError::Disconnected(args.input.display().to_string()));
    }
    let bundle = laplacian_bundle(&g)?;
    let sol = solve_unit_flow(&bundle, &g, args.source, args.dest)?;
    let power = power_dissipation(&sol, &g);
    let fs = extract_flow_subgraph(&sol, &g);
    let backbone = decompose_backbone(&g);
    let record = Analysis {
        nodes: n,
        links: g.link_count(),
        source: args.source,
        dest: args.dest,
        omega: sol.terminal_voltage(),
        power_link_sum: power.per_link_sum,
        power_resistance: power.via_resistance,
        flow_nodes: fs.node_count(),
        flow_links: fs.link_count(),
        backbone_nodes: backbone.backbone_nodes.len(),
        giant_component_nodes: backbone.giant_component.len(),
    };
    let json = serde_json::to_string_pretty(&record).expect("flat numeric record") + "\n";
    emit(global.out.as_deref(), &json)
}
