//! RGP and the exact Fiedler reconstruction on random baselines.

use std::time::Instant;

use clap::{Args, ValueEnum};
use flownet::inverse::{evaluate, fiedler_reconstruct, rgp, DemandMatrix, IerpMetrics};
use flownet::{derive_seed, resistance_matrix, EnsembleSpec, WeightModel, WeightedGraph};
use rayon::prelude::*;

use crate::error::{CliError, CliResult};
use crate::format::{sig6, Csv};
use crate::Global;

pub const COLUMNS: [&str; 8] = [
    "method",
    "n",
    "p_or_tree",
    "trial",
    "additional_links_norm",
    "common_link_ratio",
    "relative_norm",
    "runtime_ms",
];

/// Redraws allowed per trial while looking for a connected ER baseline.
const MAX_REDRAWS: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Baseline {
    Tree,
    Er,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Rgp,
    Fiedler,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Rgp => "rgp",
            Method::Fiedler => "fiedler",
        }
    }
}

#[derive(Debug, Args)]
pub struct RgpEvalArgs {
    #[arg(long, value_enum, default_value = "tree")]
    pub baseline: Baseline,
    /// Graph sizes, comma separated.
    #[arg(long = "n", value_delimiter = ',', default_values_t = [10, 20, 30])]
    pub n: Vec<usize>,
    /// Link probabilities of ER baselines, comma separated.
    #[arg(long = "p", value_delimiter = ',', default_values_t = [0.3, 0.5, 0.7])]
    pub p: Vec<f64>,
    /// Weight law; defaults to int:1:10 for trees and uniform for ER.
    #[arg(long)]
    pub weights: Option<WeightModel>,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Method::Rgp, Method::Fiedler])]
    pub methods: Vec<Method>,
    /// Leave runtime_ms empty so that output is byte-reproducible.
    #[arg(long)]
    pub omit_timing: bool,
}

struct Row {
    method: Method,
    metrics: Option<IerpMetrics>,
    runtime_ms: f64,
}

fn connected_baseline(spec: &EnsembleSpec) -> CliResult<WeightedGraph> {
    for attempt in 0..MAX_REDRAWS {
        let g = spec.for_trial(attempt).sample()?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(CliError::Config(format!(
        "no connected baseline in {MAX_REDRAWS} draws at n = {}; raise p",
        spec.n
    )))
}

fn run_trial(spec: &EnsembleSpec, methods: &[Method]) -> CliResult<Vec<Row>> {
    let g = connected_baseline(spec)?;
    let d = DemandMatrix::from_resistance(&resistance_matrix(&g)?)?;
    let mut rows = Vec::new();
    for &method in methods {
        let start = Instant::now();
        let result = match method {
            Method::Rgp => rgp(&d).map(|(h, _)| h),
            Method::Fiedler => fiedler_reconstruct(&d),
        };
        let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
        // an unrealizable reconstruction is a result, reported as nan metrics
        let metrics = match result {
            Ok(h) => Some(evaluate(&d, &g, &h)?),
            Err(_) => None,
        };
        rows.push(Row {
            method,
            metrics,
            runtime_ms,
        });
    }
    Ok(rows)
}

pub fn run(global: &Global, args: &RgpEvalArgs) -> CliResult<String> {
    if global.trials == 0 {
        return Err(CliError::Config("trials must be at least 1".into()));
    }
    if args.n.is_empty() || args.methods.is_empty() {
        return Err(CliError::Config("the n and methods lists must be non-empty".into()));
    }
    if let Some(&n) = args.n.iter().find(|&&n| n < 2) {
        return Err(CliError::Config(format!("n = {n} is too small")));
    }
    let weights = args.weights.unwrap_or(match args.baseline {
        Baseline::Tree => WeightModel::IntegerUniform { lo: 1, hi: 10 },
        Baseline::Er => WeightModel::Uniform01,
    });
    let settings: Vec<Option<f64>> = match args.baseline {
        Baseline::Tree => vec![None],
        Baseline::Er => {
            if args.p.is_empty() {
                return Err(CliError::Config("the p list must be non-empty".into()));
            }
            if let Some(&p) = args.p.iter().find(|&&p| !(p > 0.0 && p <= 1.0)) {
                return Err(CliError::Config(format!("p = {p} is outside (0, 1]")));
            }
            args.p.iter().map(|&p| Some(p)).collect()
        }
    };

    let mut csv = Csv::new(&COLUMNS);
    for &n in &args.n {
        for &setting in &settings {
            let (spec, label) = match setting {
                None => (EnsembleSpec::tree(n, weights, derive_seed(global.seed, n as u64)), "tree".to_string()),
                Some(p) => (
                    EnsembleSpec::er(n, p, weights, derive_seed(derive_seed(global.seed, n as u64), p.to_bits())),
                    sig6(p),
                ),
            };
            let trials: Vec<Vec<Row>> = (0..global.trials as u64)
                .into_par_iter()
                .map(|t| run_trial(&spec.for_trial(t), &args.methods))
                .collect::<CliResult<_>>()?;
            for (t, rows) in trials.iter().enumerate() {
                for row in rows {
                    let (add, ratio, norm) = match &row.metrics {
                        Some(m) => (m.additional_links_normalized, m.common_link_ratio, m.relative_norm),
                        None => (f64::NAN, f64::NAN, f64::NAN),
                    };
                    csv.row(&[
                        row.method.name().to_string(),
                        n.to_string(),
                        label.clone(),
                        t.to_string(),
                        sig6(add),
                        sig6(ratio),
                        sig6(norm),
                        if args.omit_timing { String::new() } else { sig6(row.runtime_ms) },
                    ]);
                }
            }
        }
    }
    Ok(csv.into_string())
}
