//! Closed-form and fixed-point predictions for the size of flow subgraphs in
//! random graphs.
//!
//! A node reached along a random link has at least one further neighbor in
//! the backbone with probability `p_b`, the nontrivial root of
//!
//! ```text
//! p_b = 1 − φ_{D'}(1 − p_b)          (general degree law)
//! p_b = 1 − exp(−E[D] p_b)           (Erdős–Rényi, sparse limit)
//! ```
//!
//! The ER equation has the closed form `p_b = 1 + W₀(−E[D] e^{−E[D]}) / E[D]`.
//! The backbone (2-core of the giant component) then covers a fraction
//! `b = 1 − φ_D(1 − p_b) − p_b φ'_D(1 − p_b)` of the nodes, and to leading
//! order a random terminal pair has a flow subgraph spanning `b p_b²` of the
//! nodes and `p_b⁴` of the links.

use crate::analytics::lambert::lambert_w0;
use crate::degree::DegreeModel;
use crate::error::{Error, Result};

const FIXED_POINT_TOL: f64 = 1e-13;
const MAX_FIXED_POINT_ITER: usize = 10_000;
const MAX_NEWTON_ITER: usize = 100;
/// Fixed points at or below this are the trivial root.
const TRIVIAL_ROOT: f64 = 1e-12;

/// Largest root in `[0, 1]` of `p = 1 − exp(−E[D] p)`.
///
/// Iterates `p ← 1 − exp(−E[D] p)` from `p = 1`. The iterate decreases
/// monotonically onto the root; the last iterate is polished with Newton
/// steps on `p − 1 + exp(−E[D] p)`, which also finishes the job when the
/// contraction is too slow for the iteration cap (mean degree just above 1).
pub fn solve_pb_fixed_point(mean_degree: f64) -> Result<f64> {
    if !(mean_degree >= 0.0) || !mean_degree.is_finite() {
        return Err(Error::DomainError(mean_degree));
    }
    if mean_degree <= 1.0 {
        return Ok(0.0);
    }
    let lambda = mean_degree;
    let mut p = 1.0f64;
    for _ in 0..MAX_FIXED_POINT_ITER {
        let next = 1.0 - (-lambda * p).exp();
        let delta = (next - p).abs();
        p = next;
        if delta < FIXED_POINT_TOL {
            break;
        }
    }
    // f is increasing and convex to the right of the root, so Newton from
    // above converges monotonically.
    let mut converged = false;
    for _ in 0..MAX_NEWTON_ITER {
        let e = (-lambda * p).exp();
        let f = p - 1.0 + e;
        let df = 1.0 - lambda * e;
        if df <= 0.0 {
            break;
        }
        let step = f / df;
        p -= step;
        if step.abs() <= 4.0 * f64::EPSILON * p.abs() || f == 0.0 {
            converged = true;
            break;
        }
    }
    if !converged && (p - 1.0 + (-lambda * p).exp()).abs() > FIXED_POINT_TOL {
        return Err(Error::NonConvergence {
            iterations: MAX_FIXED_POINT_ITER,
        });
    }
    Ok(if p <= TRIVIAL_ROOT { 0.0 } else { p })
}

/// `p_b = 1 + W₀(−E[D] e^{−E[D]}) / E[D]`.
pub fn solve_pb_lambert(mean_degree: f64) -> Result<f64> {
    if !(mean_degree > 0.0) || !mean_degree.is_finite() {
        return Err(Error::DomainError(mean_degree));
    }
    let w = lambert_w0(-mean_degree * (-mean_degree).exp())?;
    Ok((1.0 + w / mean_degree).max(0.0))
}

/// Largest root of `p = 1 − φ_{D'}(1 − p)` for an arbitrary degree law.
pub fn solve_pb_general(model: &DegreeModel) -> Result<f64> {
    if model.mean_degree() <= 1.0 {
        // excess-degree mean is at most the degree mean for both ER laws
        return Ok(0.0);
    }
    let mut p = 1.0f64;
    for _ in 0..MAX_FIXED_POINT_ITER * 10 {
        let next = 1.0 - model.pgf(1.0 - p).phi_excess;
        let delta = (next - p).abs();
        p = next;
        if delta < FIXED_POINT_TOL {
            return Ok(if p <= TRIVIAL_ROOT { 0.0 } else { p });
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_FIXED_POINT_ITER * 10,
    })
}

/// ER backbone fraction `b = 1 − exp(−E[D] p_b)(1 + E[D] p_b)`.
pub fn backbone_fraction_er(mean_degree: f64, p_b: f64) -> f64 {
    let x = mean_degree * p_b;
    1.0 - (-x).exp() * (1.0 + x)
}

/// Backbone fraction for a general degree law,
/// `b = 1 − φ_D(1 − p_b) − p_b φ'_D(1 − p_b)`.
pub fn backbone_fraction(model: &DegreeModel, p_b: f64) -> f64 {
    let v = model.pgf(1.0 - p_b);
    1.0 - v.phi - p_b * v.phi_prime
}

/// Leading-order flow-subgraph predictions for an ER ensemble.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BackbonePrediction {
    pub mean_degree: f64,
    pub p_b: f64,
    /// Backbone fraction `b`.
    pub b: f64,
    /// Branch fraction `θ = p_b − b`.
    pub theta: f64,
    /// `E[ρ_N] ≈ b p_b²`.
    pub expected_node_fraction: f64,
    /// `E[ρ_L] ≈ p_b⁴`.
    pub expected_link_fraction: f64,
}

pub fn predict(mean_degree: f64) -> Result<BackbonePrediction> {
    let p_b = solve_pb_fixed_point(mean_degree)?;
    let b = if p_b == 0.0 {
        0.0
    } else {
        backbone_fraction_er(mean_degree, p_b)
    };
    Ok(BackbonePrediction {
        mean_degree,
        p_b,
        b,
        theta: p_b - b,
        expected_node_fraction: b * p_b * p_b,
        expected_link_fraction: p_b.powi(4),
    })
}

/// Statistics of the finite branches hanging off the backbone, viewed as
/// subcritical Galton–Watson trees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchStatistics {
    /// Extinction probability `p_T`, the root of `p_T = φ_{D'}(p_T)`.
    pub extinction_p: f64,
    /// Offspring mean from the ER specialization `ξ = E[D] p_T (1 − p_T)`.
    pub offspring_mean: f64,
    /// Offspring mean from the general form `ξ = (1 − p_T) φ'_{D'}(p_T)`.
    pub offspring_mean_general: f64,
    /// `E|T_k| = 1 / (1 − ξ)`.
    pub expected_branch_size: f64,
    /// Expected number of branches per node, `θ (1 − ξ)`.
    pub expected_branch_count_density: f64,
}

impl BranchStatistics {
    /// `|ξ_ER − ξ_general|`; zero for the Poisson law.
    pub fn offspring_discrepancy(&self) -> f64 {
        (self.offspring_mean - self.offspring_mean_general).abs()
    }
}

pub fn branch_statistics(model: &DegreeModel) -> Result<BranchStatistics> {
    let lambda = model.mean_degree();
    let p_t = if lambda <= 1.0 {
        1.0
    } else {
        let mut p = 0.0f64;
        let mut done = false;
        for _ in 0..MAX_FIXED_POINT_ITER * 10 {
            let next = model.pgf(p).phi_excess;
            let delta = (next - p).abs();
            p = next;
            if delta < FIXED_POINT_TOL {
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::NonConvergence {
                iterations: MAX_FIXED_POINT_ITER * 10,
            });
        }
        p
    };
    let xi = lambda * p_t * (1.0 - p_t);
    let xi_general = (1.0 - p_t) * model.pgf(p_t).phi_excess_prime;
    let p_b = 1.0 - p_t;
    let b = if p_b > 0.0 {
        backbone_fraction(model, p_b)
    } else {
        0.0
    };
    let theta = p_b - b;
    debug_assert!(xi < 1.0, "branches must be subcritical, got ξ = {xi}");
    Ok(BranchStatistics {
        extinction_p: p_t,
        offspring_mean: xi,
        offspring_mean_general: xi_general,
        expected_branch_size: 1.0 / (1.0 - xi),
        expected_branch_count_density: theta * (1.0 - xi),
    })
}

/// Upper bound `1 − (p² + (1 − p)²)^{n−2}` on the expected link fraction of
/// flow subgraphs in `G_p(n)` with identical weights: links whose endpoints
/// have identical neighborhoods carry no current.
pub fn equipotential_link_bound(n: usize, p: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::EmptyGraph);
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let same = p * p + (1.0 - p) * (1.0 - p);
    Ok(1.0 - same.powi((n - 2) as i32))
}
