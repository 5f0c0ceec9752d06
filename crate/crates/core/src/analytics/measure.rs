//! Monte-Carlo measurement of flow-subgraph sizes on concrete graphs.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};

use rand::Rng;
use rayon::prelude::*;

use crate::analytics::blocks::BlockDecomposition;
use crate::ensembles::{rng_from_seed, EnsembleSpec};
use crate::error::{Error, Result};
use crate::flow::{extract_flow_subgraph, FactoredNetwork};
use crate::graph::WeightedGraph;

/// How the flow subgraph of a pair is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FlowMethod {
    /// Solve the circuit and keep links above the zero-current threshold.
    #[default]
    Electrical,
    /// Union of biconnected blocks between the terminals. Exact for
    /// i.i.d. continuous weights, an upper bound for identical weights.
    Structural,
}

/// Mean relative flow-subgraph sizes over a set of terminal pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowFractions {
    /// Mean of `|N(G*_ij)| / n`.
    pub mean_rho_n: f64,
    /// Mean of `|L(G*_ij)| / L`; zero for a graph without links.
    pub mean_rho_l: f64,
    /// The unordered pairs `(i, j)`, `i < j`, that were averaged.
    pub pairs: Vec<(usize, usize)>,
}

/// Draws ordered pairs `i ≠ j` uniformly and keeps the first `count`
/// distinct unordered ones, in draw order.
pub fn sample_pairs<R: Rng + ?Sized>(n: usize, count: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let total = n * n.saturating_sub(1) / 2;
    let count = count.min(total);
    let mut seen = BTreeSet::new();
    let mut pairs = Vec::with_capacity(count);
    while pairs.len() < count {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        if seen.insert(key) {
            pairs.push(key);
        }
    }
    pairs
}

pub fn measure_flow_fractions(
    g: &WeightedGraph,
    pair_count: usize,
    seed: u64,
) -> Result<FlowFractions> {
    measure_flow_fractions_with(g, pair_count, seed, FlowMethod::Electrical)
}

/// Pairs in different components score zero; pairs inside a small
/// component score their actual (small) flow subgraph.
pub fn measure_flow_fractions_with(
    g: &WeightedGraph,
    pair_count: usize,
    seed: u64,
    method: FlowMethod,
) -> Result<FlowFractions> {
    if pair_count == 0 {
        return Err(Error::InvalidArgument("pair_count must be at least 1"));
    }
    let n = g.node_count();
    if n < 2 {
        return Err(Error::InvalidArgument("need at least two nodes to form a pair"));
    }
    let mut rng = rng_from_seed(seed);
    let pairs = sample_pairs(n, pair_count, &mut rng);
    let sizes: Vec<(usize, usize)> = match method {
        FlowMethod::Electrical => electrical_sizes(g, &pairs)?,
        FlowMethod::Structural => {
            let blocks = BlockDecomposition::new(g);
            pairs
                .iter()
                .map(|&(i, j)| {
                    let fs = blocks.structural_flow_subgraph(i, j);
                    (fs.node_count(), fs.link_count())
                })
                .collect()
        }
    };
    let links = g.link_count();
    let k = pairs.len() as f64;
    let mean_rho_n = sizes.iter().map(|&(a, _)| a as f64 / n as f64).sum::<f64>() / k;
    let mean_rho_l = if links == 0 {
        0.0
    } else {
        sizes.iter().map(|&(_, b)| b as f64 / links as f64).sum::<f64>() / k
    };
    Ok(FlowFractions {
        mean_rho_n,
        mean_rho_l,
        pairs,
    })
}

/// Node and link counts of each pair's flow subgraph, factorizing each
/// touched component once.
fn electrical_sizes(g: &WeightedGraph, pairs: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let comps = g.components();
    let mut local = vec![0usize; g.node_count()];
    let mut networks: HashMap<usize, FactoredNetwork> = HashMap::new();
    let mut out = Vec::with_capacity(pairs.len());
    for &(i, j) in pairs {
        let c = comps.labels[i];
        if comps.labels[j] != c {
            out.push((0, 0));
            continue;
        }
        let net = match networks.entry(c) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => {
                let members = comps.members(c);
                for (k, &v) in members.iter().enumerate() {
                    local[v] = k;
                }
                let (sub, _) = g.induced_subgraph(&members);
                e.insert(FactoredNetwork::new(sub)?)
            }
        };
        let sol = net.solve(local[i], local[j])?;
        let fs = extract_flow_subgraph(&sol, net.graph());
        out.push((fs.node_count(), fs.link_count()));
    }
    Ok(out)
}

/// Flow fractions for `trials` independent samples of `spec`, one entry
/// per trial in trial order. Trials run in parallel; trial `t` samples its
/// graph from `spec.for_trial(t)` and its pairs from a seed derived from
/// that.
pub fn simulate_flow_fractions(
    spec: &EnsembleSpec,
    trials: usize,
    pair_count: usize,
    method: FlowMethod,
) -> Result<Vec<FlowFractions>> {
    (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let trial = spec.for_trial(t);
            let g = trial.sample()?;
            measure_flow_fractions_with(&g, pair_count, !trial.seed, method)
        })
        .collect()
}
