//! Resistor Gap Pruning: start from the complete graph with resistances
//! equal to the demand and greedily drop the link that looks most
//! redundant, as long as the L1 gap `‖D − Ω‖` keeps shrinking.
//!
//! Removing link `l = i∼j` of weight `w` is a rank-one downdate of the
//! Laplacian, `Q' = Q − w bbᵀ` with `b = e_i − e_j`. Since `b ⟂ u`,
//!
//! ```text
//! Q'† = Q† + w/(1 − w ω_ij) · (Q† b)(Q† b)ᵀ
//! ```
//!
//! and `1 − w ω_ij` vanishes exactly when `l` is a bridge.

use faer::{Mat, MatRef};

use crate::error::{Error, Result};
use crate::graph::{build_graph, WeightedGraph};
use crate::inverse::demand::DemandMatrix;
use crate::laplacian::{deflated_pseudoinverse, LaplacianBundle};
use crate::tolerance::BRIDGE_TOL;

/// Relative slack for treating two scores as tied.
const TIE_REL: f64 = 1e-10;
/// `ε` must drop below `ε′ (1 − IMPROVE_REL)` to count as an improvement.
const IMPROVE_REL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RgpOptions {
    /// Maintain `Q†` by rank-one downdates instead of refactorizing.
    pub incremental: bool,
    /// With `incremental`, refactorize from scratch after this many
    /// removals to bound drift.
    pub refresh_interval: usize,
}

impl Default for RgpOptions {
    fn default() -> Self {
        RgpOptions {
            incremental: true,
            refresh_interval: 50,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RgpTrace {
    /// Links that stayed removed, in removal order.
    pub removed_links: Vec<(usize, usize)>,
    /// The final, non-improving removal that was undone.
    pub restored_link: Option<(usize, usize)>,
    /// `ε` of the initial complete graph, then one entry per attempted
    /// removal. Infinite when the attempted removal was a bridge.
    pub epsilon_history: Vec<f64>,
    pub alpha: f64,
    pub final_graph: WeightedGraph,
}

pub fn rgp(d: &DemandMatrix) -> Result<(WeightedGraph, RgpTrace)> {
    rgp_with(d, RgpOptions::default())
}

pub fn rgp_with(d: &DemandMatrix, opts: RgpOptions) -> Result<(WeightedGraph, RgpTrace)> {
    let n = d.node_count();
    if n < 2 {
        return Err(Error::DegenerateDemand);
    }
    let mut state = State::complete(d);
    let mut p = deflated_pseudoinverse(state.laplacian().as_ref())?;
    let mut omega = omega_of(p.as_ref());
    let mut eps = l1(d, &omega);
    let mut history = vec![eps];
    let mut removed = Vec::new();
    let mut since_refresh = 0usize;

    let restored = loop {
        let eps_prev = eps;
        let (i, j) = state.best_link(d, &omega);
        state.present[i * n + j] = false;
        state.present[j * n + i] = false;

        let next = if opts.incremental {
            let w = state.w[i * n + j];
            let bridge_gap = 1.0 - w * (p[(i, i)] + p[(j, j)] - 2.0 * p[(i, j)]);
            if bridge_gap <= BRIDGE_TOL {
                None
            } else {
                since_refresh += 1;
                if opts.refresh_interval > 0 && since_refresh >= opts.refresh_interval {
                    since_refresh = 0;
                    Some(deflated_pseudoinverse(state.laplacian().as_ref())?)
                } else {
                    Some(downdate(p.as_ref(), i, j, w / bridge_gap))
                }
            }
        } else if state.connected() {
            Some(deflated_pseudoinverse(state.laplacian().as_ref())?)
        } else {
            None
        };

        match next {
            None => {
                history.push(f64::INFINITY);
                break (i, j);
            }
            Some(p_next) => {
                let omega_next = omega_of(p_next.as_ref());
                eps = l1(d, &omega_next);
                history.push(eps);
                if eps < eps_prev * (1.0 - IMPROVE_REL) {
                    removed.push((i, j));
                    p = p_next;
                    omega = omega_next;
                } else {
                    break (i, j);
                }
            }
        }
    };
    // undo the last removal; `p` and `omega` still describe that graph
    let (i, j) = restored;
    state.present[i * n + j] = true;
    state.present[j * n + i] = true;

    let mut sum = 0.0;
    for a in 0..n {
        for b in a + 1..n {
            sum += d.get(a, b) / omega[(a, b)];
        }
    }
    let alpha = sum / (n * (n - 1) / 2) as f64;
    let graph = state.graph(1.0 / alpha)?;
    let trace = RgpTrace {
        removed_links: removed,
        restored_link: Some(restored),
        epsilon_history: history,
        alpha,
        final_graph: graph.clone(),
    };
    Ok((graph, trace))
}

/// Removes link `i∼j` of weight `w` from a bundle by a rank-one downdate.
pub fn rank_one_remove(
    bundle: &LaplacianBundle,
    i: usize,
    j: usize,
    w: f64,
) -> Result<LaplacianBundle> {
    let q = bundle.laplacian();
    let n = q.nrows();
    for node in [i, j] {
        if node >= n {
            return Err(Error::IndexOutOfRange { node, n });
        }
    }
    if i == j {
        return Err(Error::SelfLoop(i));
    }
    if !(w > 0.0) || (q[(i, j)] + w).abs() > 1e-12 * w.max(1.0) {
        return Err(Error::MissingLink(i.min(j), i.max(j)));
    }
    let p = bundle.pseudoinverse()?;
    let gap = 1.0 - w * (p[(i, i)] + p[(j, j)] - 2.0 * p[(i, j)]);
    if gap <= BRIDGE_TOL {
        return Err(Error::BridgeRemoval {
            i: i.min(j),
            j: i.max(j),
        });
    }
    let mut laplacian = q.to_owned();
    laplacian[(i, j)] += w;
    laplacian[(j, i)] += w;
    laplacian[(i, i)] -= w;
    laplacian[(j, j)] -= w;
    Ok(LaplacianBundle::from_parts(laplacian, downdate(p, i, j, w / gap)))
}

/// `P + c xxᵀ` with `x = P(e_i − e_j)`.
fn downdate(p: MatRef<'_, f64>, i: usize, j: usize, c: f64) -> Mat<f64> {
    let n = p.nrows();
    let x: Vec<f64> = (0..n).map(|k| p[(k, i)] - p[(k, j)]).collect();
    Mat::from_fn(n, n, |a, b| p[(a, b)] + c * x[a] * x[b])
}

fn omega_of(p: MatRef<'_, f64>) -> Mat<f64> {
    let n = p.nrows();
    Mat::from_fn(n, n, |i, j| {
        if i == j {
            0.0
        } else {
            p[(i, i)] + p[(j, j)] - 2.0 * p[(i, j)]
        }
    })
}

fn l1(d: &DemandMatrix, omega: &Mat<f64>) -> f64 {
    let n = d.node_count();
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += (d.get(i, j) - omega[(i, j)]).abs();
        }
    }
    2.0 * sum
}

/// Link set of the evolving graph; weights stay fixed at `1/d_ij`.
struct State {
    n: usize,
    w: Vec<f64>,
    present: Vec<bool>,
}

impl State {
    fn complete(d: &DemandMatrix) -> Self {
        let n = d.node_count();
        let mut w = vec![0.0; n * n];
        let mut present = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    w[i * n + j] = 1.0 / d.get(i, j);
                    present[i * n + j] = true;
                }
            }
        }
        State { n, w, present }
    }

    fn laplacian(&self) -> Mat<f64> {
        let n = self.n;
        let mut q = Mat::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                if self.present[i * n + j] {
                    let w = self.w[i * n + j];
                    q[(i, j)] -= w;
                    q[(j, i)] -= w;
                    q[(i, i)] += w;
                    q[(j, j)] += w;
                }
            }
        }
        q
    }

    fn connected(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in 0..n {
                if self.present[v * n + u] && !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    /// Argmax of `Γ_ij = (1/ω_ij − w_ij)(d_ij − ω_ij)` over present links;
    /// near-ties go to the lexicographically smallest pair.
    fn best_link(&self, d: &DemandMatrix, omega: &Mat<f64>) -> (usize, usize) {
        let n = self.n;
        let mut scores = Vec::new();
        let mut top = f64::NEG_INFINITY;
        for i in 0..n {
            for j in i + 1..n {
                if self.present[i * n + j] {
                    let o = omega[(i, j)];
                    let g = (1.0 / o - self.w[i * n + j]) * (d.get(i, j) - o);
                    top = top.max(g);
                    scores.push((i, j, g));
                }
            }
        }
        let cut = top - TIE_REL * top.abs();
        scores
            .into_iter()
            .find(|&(_, _, g)| g >= cut)
            .map(|(i, j, _)| (i, j))
            .expect("the graph always keeps at least one link")
    }

    fn graph(&self, scale: f64) -> Result<WeightedGraph> {
        let n = self.n;
        let mut links = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.present[i * n + j] {
                    links.push((i, j, self.w[i * n + j] * scale));
                }
            }
        }
        build_graph(n, links)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laplacian::{laplacian_bundle, resistance_matrix};

    #[test]
    fn equilateral_demand_gives_unit_triangle() {
        let d = DemandMatrix::from_fn(3, |_, _| 2.0 / 3.0).unwrap();
        let (g, trace) = rgp(&d).unwrap();
        assert_eq!(g.link_count(), 3);
        for l in g.links() {
            assert!((l.weight - 1.0).abs() < 1e-12);
        }
        assert!(trace.removed_links.is_empty());
        assert_eq!(trace.restored_link, Some((0, 1)));
        assert!((trace.alpha - 1.5).abs() < 1e-12);
        assert!((trace.epsilon_history[0] - 4.0 / 3.0).abs() < 1e-12);
        assert!(trace.epsilon_history[1] >= trace.epsilon_history[0]);
    }

    #[test]
    fn two_nodes_only_scale() {
        let d = DemandMatrix::from_fn(2, |_, _| 2.0).unwrap();
        let (g, trace) = rgp(&d).unwrap();
        assert_eq!(g.link_count(), 1);
        assert!((g.links()[0].weight - 0.5).abs() < 1e-14);
        assert_eq!(trace.epsilon_history[1], f64::INFINITY);
        assert!((trace.alpha - 1.0).abs() < 1e-14);
    }

    #[test]
    fn path_demand_recovers_the_path() {
        let d = DemandMatrix::from_fn(4, |i, j| (j - i) as f64).unwrap();
        let (g, trace) = rgp(&d).unwrap();
        assert_eq!(g.link_count(), 3);
        for k in 0..3 {
            assert!((g.weight(k, k + 1).unwrap() - 1.0).abs() < 1e-9);
        }
        assert_eq!(trace.removed_links.len(), 3);
        let h = &trace.epsilon_history;
        for k in 1..h.len() - 1 {
            assert!(h[k] < h[k - 1]);
        }
    }

    #[test]
    fn rank_one_matches_recomputation_on_triangle() {
        let g = crate::graph::build_graph(3, [(0, 1, 1.0), (1, 2, 2.0), (0, 2, 0.5)]).unwrap();
        let b = laplacian_bundle(&g).unwrap();
        let up = rank_one_remove(&b, 1, 2, 2.0).unwrap();
        let fresh = laplacian_bundle(&g.without_link(g.link_index(1, 2).unwrap())).unwrap();
        let (a, f) = (up.pseudoinverse().unwrap(), fresh.pseudoinverse().unwrap());
        for r in 0..3 {
            for c in 0..3 {
                assert!((a[(r, c)] - f[(r, c)]).abs() < 1e-10);
                assert!((up.laplacian()[(r, c)] - fresh.laplacian()[(r, c)]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn rank_one_rejects_bridges_and_missing_links() {
        let tree = crate::graph::build_graph(3, [(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let b = laplacian_bundle(&tree).unwrap();
        assert_eq!(
            rank_one_remove(&b, 0, 1, 1.0).unwrap_err(),
            Error::BridgeRemoval { i: 0, j: 1 }
        );
        assert_eq!(
            rank_one_remove(&b, 0, 2, 1.0).unwrap_err(),
            Error::MissingLink(0, 2)
        );
    }

    #[test]
    fn k5_minus_a_link() {
        let mut links = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                links.push((a, b, 1.0));
            }
        }
        let g = crate::graph::build_graph(5, links).unwrap();
        let b = laplacian_bundle(&g).unwrap();
        assert!((b.pair_resistance(0, 1).unwrap() - 0.4).abs() < 1e-12);
        // parallel law: 1/ω' = 1/ω − 1/r = 5/2 − 1
        let up = rank_one_remove(&b, 0, 1, 1.0).unwrap();
        assert!((up.pair_resistance(0, 1).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        let fresh = resistance_matrix(&g.without_link(0)).unwrap();
        assert!((fresh.get(0, 1) - 2.0 / 3.0).abs() < 1e-12);
    }
}
