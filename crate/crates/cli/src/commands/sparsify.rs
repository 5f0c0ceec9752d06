//! RGP as a sparsifier: the demand is the input graph's own resistance.

use std::path::{Path, PathBuf};

use clap::Args;
use flownet::inverse::{evaluate, rgp, DemandMatrix};
use flownet::io::write_edge_list;
use flownet::resistance_matrix;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::files::{emit, read_graph};
use crate::Global;

#[derive(Debug, Args)]
pub struct SparsifyArgs {
    /// Edge-list file to sparsify.
    pub input: PathBuf,
    /// Metrics JSON path; defaults to `<out>.metrics.json`, or stderr when
    /// the edge list goes to stdout.
    #[arg(long)]
    pub metrics: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct SparsifyMetrics {
    pub additional_links_normalized: f64,
    pub common_link_ratio: f64,
    pub relative_norm: f64,
    pub baseline_links: usize,
    pub result_links: usize,
    pub common_links: usize,
    pub removed_links: usize,
    pub alpha: f64,
}

fn metrics_path(out: Option<&Path>, explicit: Option<&Path>) -> Option<PathBuf> {
    explicit.map(Path::to_path_buf).or_else(|| {
        out.map(|o| {
            let mut s = o.as_os_str().to_owned();
            s.push(".metrics.json");
            PathBuf::from(s)
        })
    })
}

pub fn run(global: &Global, args: &SparsifyArgs) -> CliResult<()> {
    let g = read_graph(&args.input)?;
    if !g.is_connected() {
        return Err(CliError::Disconnected(args.input.display().to_string()));
    }
    if g.node_count() < 2 {
        return Err(CliError::Config("sparsify needs at least two nodes".into()));
    }
    let d = DemandMatrix::from_resistance(&resistance_matrix(&g)?)?;
    let (h, trace) = rgp(&d)?;
    let m = evaluate(&d, &g, &h)?;
    let record = SparsifyMetrics {
        additional_links_normalized: m.additional_links_normalized,
        common_link_ratio: m.common_link_ratio,
        relative_norm: m.relative_norm,
        baseline_links: m.baseline_links,
        result_links: m.result_links,
        common_links: m.common_links,
        removed_links: trace.removed_links.len(),
        alpha: trace.alpha,
    };
    let json = serde_json::to_string_pretty(&record).expect("flat numeric record") + "\n";

    emit(global.out.as_deref(), &write_edge_list(&h))?;
    match metrics_path(global.out.as_deref(), args.metrics.as_deref()) {
        Some(p) => emit(Some(&p), &json),
        None => {
            eprint!("{json}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metrics_next_to_output() {
        assert_eq!(
            metrics_path(Some(Path::new("a/h.txt")), None),
            Some(PathBuf::from("a/h.txt.metrics.json"))
        );
        assert_eq!(
            metrics_path(Some(Path::new("h.txt")), Some(Path::new("m.json"))),
            Some(PathBuf::from("m.json"))
        );
        assert_eq!(metrics_path(None, None), None);
    }
}
