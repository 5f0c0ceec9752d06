//! Monte-Carlo flow-subgraph sizes on ER graphs against the predictions.

use clap::Args;
use flownet::analytics::{equipotential_link_bound, predict, simulate_flow_fractions, FlowMethod};
use flownet::laplacian::MAX_DENSE_NODES;
use flownet::{derive_seed, EnsembleSpec, WeightModel};

use crate::error::{CliError, CliResult};
use crate::format::{sig6, Csv};
use crate::Global;

pub const COLUMNS: [&str; 11] = [
    "n",
    "mean_degree",
    "weight_model",
    "trials",
    "sim_rho_n",
    "sim_rho_n_std",
    "sim_rho_l",
    "sim_rho_l_std",
    "pred_rho_n",
    "pred_rho_l",
    "pred_bound_rho_l",
];

/// Size used by the opt-in large sweep.
pub const LARGE_N: usize = 10_000;

#[derive(Debug, Args)]
pub struct FlowStatsArgs {
    /// Graph sizes, comma separated.
    #[arg(long = "n", value_delimiter = ',', default_values_t = [50, 200, 1000])]
    pub n: Vec<usize>,
    /// Expected degrees E[D], comma separated.
    #[arg(
        long = "mean-degree",
        value_delimiter = ',',
        default_values_t = [0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0, 8.0, 10.0]
    )]
    pub mean_degree: Vec<f64>,
    /// Link weight law: identical[:w], uniform, exp:<mean> or int:<lo>:<hi>.
    #[arg(long, default_value = "identical")]
    pub weights: WeightModel,
    /// Terminal pairs sampled per graph.
    #[arg(long, default_value_t = 20)]
    pub pairs: usize,
    /// Add n = 10000 to the grid and allow sizes above the dense limit,
    /// which use the block-structure flow subgraph.
    #[arg(long)]
    pub large: bool,
}

/// Sample mean and standard deviation (n − 1 denominator; 0 for one value).
fn mean_std(xs: &[f64]) -> (f64, f64) {
    let k = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / k;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (k - 1.0);
    (mean, var.sqrt())
}

pub fn run(global: &Global, args: &FlowStatsArgs) -> CliResult<String> {
    let mut grid = args.n.clone();
    if args.large && !grid.contains(&LARGE_N) {
        grid.push(LARGE_N);
    }
    if grid.is_empty() || args.mean_degree.is_empty() {
        return Err(CliError::Config("the n and mean-degree lists must be non-empty".into()));
    }
    if global.trials == 0 || args.pairs == 0 {
        return Err(CliError::Config("trials and pairs must be at least 1".into()));
    }
    for &n in &grid {
        if n < 2 {
            return Err(CliError::Config(format!("n = {n} is too small")));
        }
        if n > MAX_DENSE_NODES && !args.large {
            return Err(CliError::Config(format!(
                "n = {n} exceeds the dense limit {MAX_DENSE_NODES}; pass --large to opt in"
            )));
        }
    }
    if grid.iter().any(|&n| n > MAX_DENSE_NODES) {
        eprintln!(
            "warning: sizes above {MAX_DENSE_NODES} are beyond desk scale. Their flow subgraphs come \
             from the block structure, which is exact for continuous weights and only an upper bound \
             for identical weights. Expect tens of minutes for a full grid at {} trials.",
            global.trials
        );
    }

    let mut csv = Csv::new(&COLUMNS);
    for &n in &grid {
        for &lambda in &args.mean_degree {
            let p = lambda / (n as f64 - 1.0);
            if !(lambda > 0.0) || p > 1.0 {
                return Err(CliError::Config(format!("E[D] = {lambda} is not realizable with n = {n}")));
            }
            let method = if n > MAX_DENSE_NODES {
                FlowMethod::Structural
            } else {
                FlowMethod::Electrical
            };
            let seed = derive_seed(derive_seed(global.seed, n as u64), lambda.to_bits());
            let spec = EnsembleSpec::er(n, p, args.weights, seed);
            let runs = simulate_flow_fractions(&spec, global.trials, args.pairs, method)?;
            let rho_n: Vec<f64> = runs.iter().map(|r| r.mean_rho_n).collect();
            let rho_l: Vec<f64> = runs.iter().map(|r| r.mean_rho_l).collect();
            let (sim_n, sim_n_std) = mean_std(&rho_n);
            let (sim_l, sim_l_std) = mean_std(&rho_l);
            let pred = predict(lambda)?;
            let bound = equipotential_link_bound(n, p)?;
            csv.row(&[
                n.to_string(),
                sig6(lambda),
                args.weights.to_string(),
                global.trials.to_string(),
                sig6(sim_n),
                sig6(sim_n_std),
                sig6(sim_l),
                sig6(sim_l_std),
                sig6(pred.expected_node_fraction),
                sig6(pred.expected_link_fraction),
                sig6(bound),
            ]);
        }
    }
    Ok(csv.into_string())
}
