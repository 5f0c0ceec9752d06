//! Unit-current flows between a source and a destination node.
//!
//! A unit current enters at the source and leaves at the destination. The
//! nodal potentials (mean-zero gauge) are `v = Q†(e_i − e_j)` and the current
//! on link `l = m∼n` (stored with `m < n`) is `y_l = w_l (v_m − v_n)`.
//! Links that carry no current are exactly the links joining equipotential
//! nodes; the rest form the flow subgraph.

use std::collections::BTreeSet;

use faer::linalg::solvers::Llt;
use faer::prelude::Solve;
use faer::{Mat, Side};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::laplacian::LaplacianBundle;
use crate::tolerance::ZERO_CURRENT_REL;

/// Potentials and link currents for one unit-current injection.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowSolution {
    pub source: usize,
    pub destination: usize,
    /// Volts, averaging to zero.
    pub potentials: Vec<f64>,
    /// Amperes per link, positive in the `i → j` direction of the stored link.
    pub currents: Vec<f64>,
}

impl FlowSolution {
    fn from_potentials(g: &WeightedGraph, source: usize, destination: usize, potentials: Vec<f64>) -> Self {
        let currents = g
            .links()
            .iter()
            .map(|l| l.weight * (potentials[l.i] - potentials[l.j]))
            .collect();
        FlowSolution {
            source,
            destination,
            potentials,
            currents,
        }
    }

    /// Net current leaving each node through its links. Kirchhoff's law makes
    /// this `+1` at the source, `−1` at the destination and 0 elsewhere.
    pub fn net_outflow(&self, g: &WeightedGraph) -> Vec<f64> {
        let mut out = vec![0.0; g.node_count()];
        for (l, y) in g.links().iter().zip(&self.currents) {
            out[l.i] += y;
            out[l.j] -= y;
        }
        out
    }

    /// Largest deviation from Kirchhoff's current law.
    pub fn kirchhoff_residual(&self, g: &WeightedGraph) -> f64 {
        self.net_outflow(g)
            .iter()
            .enumerate()
            .map(|(v, x)| {
                let injected = if v == self.source {
                    1.0
                } else if v == self.destination {
                    -1.0
                } else {
                    0.0
                };
                (x - injected).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Largest deviation from `v_i − v_j = r_ij y_ij` over all links.
    pub fn ohm_residual(&self, g: &WeightedGraph) -> f64 {
        g.links()
            .iter()
            .zip(&self.currents)
            .map(|(l, y)| {
                (self.potentials[l.i] - self.potentials[l.j] - l.resistance() * y).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Potential drop between the terminals, which for a unit current is the
    /// effective resistance `ω_ij`.
    pub fn terminal_voltage(&self) -> f64 {
        self.potentials[self.source] - self.potentials[self.destination]
    }

    pub fn max_current(&self) -> f64 {
        self.currents.iter().fold(0.0, |m, y| m.max(y.abs()))
    }
}

fn check_terminals(n: usize, i: usize, j: usize) -> Result<()> {
    for node in [i, j] {
        if node >= n {
            return Err(Error::IndexOutOfRange { node, n });
        }
    }
    if i == j {
        return Err(Error::SameTerminal(i));
    }
    Ok(())
}

/// Solves the unit-current flow from `i` to `j` using the bundle's
/// pseudoinverse: `v = Q† e_i − Q† e_j`.
pub fn solve_unit_flow(
    bundle: &LaplacianBundle,
    g: &WeightedGraph,
    i: usize,
    j: usize,
) -> Result<FlowSolution> {
    let n = g.node_count();
    if bundle.node_count() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: bundle.node_count(),
        });
    }
    check_terminals(n, i, j)?;
    let p = bundle.pseudoinverse()?;
    let potentials = (0..n).map(|k| p[(k, i)] - p[(k, j)]).collect();
    Ok(FlowSolution::from_potentials(g, i, j, potentials))
}

/// Power dissipated by a unit current, computed two ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerDissipation {
    /// `Σ_l y_l² r_l`.
    pub per_link_sum: f64,
    /// `I² ω_ij` with `I = 1`.
    pub via_resistance: f64,
}

pub fn power_dissipation(sol: &FlowSolution, g: &WeightedGraph) -> PowerDissipation {
    let per_link_sum = g
        .links()
        .iter()
        .zip(&sol.currents)
        .map(|(l, y)| y * y * l.resistance())
        .sum();
    PowerDissipation {
        per_link_sum,
        via_resistance: sol.terminal_voltage(),
    }
}

/// Nodes and links carrying nonzero current for one terminal pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowSubgraph {
    pub source: usize,
    pub destination: usize,
    pub nodes: BTreeSet<usize>,
    /// Link indices into the parent graph.
    pub links: BTreeSet<usize>,
}

impl FlowSubgraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }
}

/// Flow subgraph with the default relative zero-current threshold.
pub fn extract_flow_subgraph(sol: &FlowSolution, g: &WeightedGraph) -> FlowSubgraph {
    extract_flow_subgraph_with_tol(sol, g, ZERO_CURRENT_REL * sol.max_current())
}

/// Flow subgraph keeping links with `|y_l| > tol`.
pub fn extract_flow_subgraph_with_tol(
    sol: &FlowSolution,
    g: &WeightedGraph,
    tol: f64,
) -> FlowSubgraph {
    let mut nodes = BTreeSet::new();
    let mut links = BTreeSet::new();
    for (id, (l, y)) in g.links().iter().zip(&sol.currents).enumerate() {
        if y.abs() > tol {
            links.insert(id);
            nodes.insert(l.i);
            nodes.insert(l.j);
        }
    }
    FlowSubgraph {
        source: sol.source,
        destination: sol.destination,
        nodes,
        links,
    }
}

/// Links of the parent graph whose endpoints both lie in a flow subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateLinkSet {
    pub links: BTreeSet<usize>,
}

pub fn candidate_links(fs: &FlowSubgraph, g: &WeightedGraph) -> CandidateLinkSet {
    let links = g
        .links()
        .iter()
        .enumerate()
        .filter(|(_, l)| fs.nodes.contains(&l.i) && fs.nodes.contains(&l.j))
        .map(|(id, _)| id)
        .collect();
    CandidateLinkSet { links }
}

/// A connected network with its grounded Laplacian factorized once, for
/// many terminal-pair solves without forming the dense pseudoinverse.
///
/// The last node is grounded; the reduced Laplacian is positive definite
/// and factorized by Cholesky. Potentials are shifted to mean zero after
/// each solve so results agree with [`solve_unit_flow`].
pub struct FactoredNetwork {
    graph: WeightedGraph,
    llt: Option<Llt<f64>>,
}

impl FactoredNetwork {
    pub fn new(graph: WeightedGraph) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = graph.node_count();
        let llt = if n >= 2 {
            let m = n - 1;
            let mut q = Mat::<f64>::zeros(m, m);
            for l in graph.links() {
                if l.i < m {
                    q[(l.i, l.i)] += l.weight;
                }
                if l.j < m {
                    q[(l.j, l.j)] += l.weight;
                }
                if l.j < m {
                    q[(l.i, l.j)] -= l.weight;
                    q[(l.j, l.i)] -= l.weight;
                }
            }
            Some(q.llt(Side::Lower).map_err(|_| Error::Disconnected)?)
        } else {
            None
        };
        Ok(FactoredNetwork { graph, llt })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn solve(&self, i: usize, j: usize) -> Result<FlowSolution> {
        let n = self.graph.node_count();
        check_terminals(n, i, j)?;
        let llt = self.llt.as_ref().expect("n >= 2 when terminals are distinct");
        let m = n - 1;
        let mut rhs = Mat::<f64>::zeros(m, 1);
        if i < m {
            rhs[(i, 0)] += 1.0;
        }
        if j < m {
            rhs[(j, 0)] -= 1.0;
        }
        let x = llt.solve(&rhs);
        let mut potentials: Vec<f64> = (0..m).map(|k| x[(k, 0)]).collect();
        potentials.push(0.0);
        let mean = potentials.iter().sum::<f64>() / n as f64;
        for v in &mut potentials {
            *v -= mean;
        }
        Ok(FlowSolution::from_potentials(&self.graph, i, j, potentials))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::laplacian::laplacian_bundle;

    fn triangle() -> WeightedGraph {
        build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap()
    }

    /// Square 0-1-3-2-0 with a bridge 1∼2; balanced for terminals (0, 3).
    fn wheatstone() -> WeightedGraph {
        build_graph(
            4,
            [(0, 1, 1.0), (1, 3, 1.0), (3, 2, 1.0), (2, 0, 1.0), (1, 2, 1.0)],
        )
        .unwrap()
    }

    fn solve(g: &WeightedGraph, i: usize, j: usize) -> FlowSolution {
        solve_unit_flow(&laplacian_bundle(g).unwrap(), g, i, j).unwrap()
    }

    #[test]
    fn series_path() {
        let g = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let sol = solve(&g, 0, 2);
        for (v, want) in sol.potentials.iter().zip([1.0, 0.0, -1.0]) {
            assert!((v - want).abs() < 1e-12);
        }
        for y in &sol.currents {
            assert!((y - 1.0).abs() < 1e-12);
        }
        let p = power_dissipation(&sol, &g);
        assert!((p.per_link_sum - 2.0).abs() < 1e-12);
        assert!((p.via_resistance - 2.0).abs() < 1e-12);
    }

    #[test]
    fn current_divider() {
        let g = triangle();
        let sol = solve(&g, 0, 1);
        let y01 = sol.currents[g.link_index(0, 1).unwrap()];
        let y12 = sol.currents[g.link_index(1, 2).unwrap()];
        let y02 = sol.currents[g.link_index(0, 2).unwrap()];
        assert!((y01 - 2.0 / 3.0).abs() < 1e-12);
        assert!((y02 - 1.0 / 3.0).abs() < 1e-12);
        // stored as 1→2, so the 2→1 current is negative
        assert!((y12 + 1.0 / 3.0).abs() < 1e-12);
        let p = power_dissipation(&sol, &g);
        assert!((p.per_link_sum - 2.0 / 3.0).abs() < 1e-12);
        assert!((p.via_resistance - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn single_half_weight_link() {
        let g = build_graph(2, [(0, 1, 0.5)]).unwrap();
        let p = power_dissipation(&solve(&g, 0, 1), &g);
        assert!((p.per_link_sum - 2.0).abs() < 1e-12);
        assert!((p.via_resistance - 2.0).abs() < 1e-12);
    }

    #[test]
    fn balanced_bridge_carries_nothing() {
        let g = wheatstone();
        let sol = solve(&g, 0, 3);
        let bridge = g.link_index(1, 2).unwrap();
        assert!(sol.currents[bridge].abs() < 1e-12);
        let fs = extract_flow_subgraph(&sol, &g);
        assert_eq!(fs.link_count(), 4);
        assert_eq!(fs.node_count(), 4);
        assert!(!fs.links.contains(&bridge));
        let cand = candidate_links(&fs, &g);
        assert_eq!(cand.links.len(), 5);
        assert!(fs.links.is_subset(&cand.links));
    }

    #[test]
    fn tree_flow_is_the_path() {
        // 0-1-2-3 with a side branch 1-4-5
        let g = build_graph(
            6,
            [(0, 1, 2.0), (1, 2, 1.0), (2, 3, 0.5), (1, 4, 1.0), (4, 5, 3.0)],
        )
        .unwrap();
        let fs = extract_flow_subgraph(&solve(&g, 0, 3), &g);
        assert_eq!(fs.nodes, BTreeSet::from([0, 1, 2, 3]));
        assert_eq!(fs.link_count(), 3);
        assert_eq!(candidate_links(&fs, &g).links, fs.links);
    }

    #[test]
    fn complete_graph_flow_size() {
        let n = 6;
        let mut links = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                links.push((i, j, 1.0));
            }
        }
        let g = build_graph(n, links).unwrap();
        let b = laplacian_bundle(&g).unwrap();
        for (i, j) in [(0, 1), (2, 5), (4, 3)] {
            let fs = extract_flow_subgraph(&solve_unit_flow(&b, &g, i, j).unwrap(), &g);
            assert_eq!(fs.link_count(), 1 + 2 * (n - 2));
        }
    }

    #[test]
    fn terminal_errors() {
        let g = triangle();
        let b = laplacian_bundle(&g).unwrap();
        assert_eq!(solve_unit_flow(&b, &g, 1, 1), Err(Error::SameTerminal(1)));
        assert!(matches!(
            solve_unit_flow(&b, &g, 0, 7),
            Err(Error::IndexOutOfRange { .. })
        ));
        let split = build_graph(3, [(0, 1, 1.0)]).unwrap();
        let b = laplacian_bundle(&split).unwrap();
        assert_eq!(solve_unit_flow(&b, &split, 0, 1), Err(Error::Disconnected));
    }

    #[test]
    fn reversing_terminals_negates() {
        let g = wheatstone();
        let a = solve(&g, 0, 1);
        let b = solve(&g, 1, 0);
        for (x, y) in a.potentials.iter().zip(&b.potentials) {
            assert_eq!(*x, -*y);
        }
        for (x, y) in a.currents.iter().zip(&b.currents) {
            assert_eq!(*x, -*y);
        }
    }

    #[test]
    fn factored_network_matches_pseudoinverse_route() {
        let g = build_graph(
            5,
            [(0, 1, 0.3), (1, 2, 1.7), (2, 3, 0.9), (3, 4, 2.2), (0, 4, 0.4), (1, 3, 1.1)],
        )
        .unwrap();
        let b = laplacian_bundle(&g).unwrap();
        let f = FactoredNetwork::new(g.clone()).unwrap();
        for (i, j) in [(0, 4), (4, 0), (2, 3), (1, 4)] {
            let a = solve_unit_flow(&b, &g, i, j).unwrap();
            let c = f.solve(i, j).unwrap();
            for (x, y) in a.potentials.iter().zip(&c.potentials) {
                assert!((x - y).abs() < 1e-12);
            }
            assert!(c.kirchhoff_residual(&g) < 1e-12);
        }
    }
}
