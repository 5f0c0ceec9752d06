//! Exact inversion of an effective-resistance matrix.
//!
//! For a connected graph with Laplacian `Q̃` and resistance matrix `Ω`,
//!
//! ```text
//! 2σ² = 1 / (uᵀ Ω⁻¹ u),   p = Ω⁻¹ u / (uᵀ Ω⁻¹ u),   Q̃ = ppᵀ / σ² − 2 Ω⁻¹
//! ```
//!
//! so a demand that is some graph's `Ω` determines that graph uniquely.
//! A demand that is not realizable shows up as a positive off-diagonal
//! entry of `Q̃`, i.e. a negative link weight.

use faer::linalg::solvers::DenseSolveCore;
use faer::Mat;

use crate::error::{Error, Result};
use crate::graph::{build_graph, WeightedGraph};
use crate::inverse::demand::DemandMatrix;
use crate::laplacian::resistance_matrix;
use crate::tolerance::REALIZABILITY_TOL;

/// Relative tolerance of the resistance round trip.
pub const ROUND_TRIP_TOL: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct FiedlerIntermediate {
    pub sigma_sq: f64,
    pub p_vec: Vec<f64>,
    pub q_tilde: Mat<f64>,
}

pub fn fiedler_intermediate(d: &DemandMatrix) -> Result<FiedlerIntermediate> {
    let n = d.node_count();
    if n < 2 {
        return Err(Error::DegenerateDemand);
    }
    let lu = d.as_mat().full_piv_lu();
    let diag: Vec<f64> = (0..n).map(|k| lu.U()[(k, k)].abs()).collect();
    let max = diag.iter().cloned().fold(0.0, f64::max);
    let min = diag.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(min > n as f64 * f64::EPSILON * max) {
        return Err(Error::SingularDemand);
    }
    let inv = lu.inverse();
    let row_sums: Vec<f64> = (0..n).map(|i| (0..n).map(|j| inv[(i, j)]).sum()).collect();
    let total: f64 = row_sums.iter().sum();
    if !(total.is_finite() && total > 0.0) {
        return Err(Error::SingularDemand);
    }
    let sigma_sq = 0.5 / total;
    let p_vec: Vec<f64> = row_sums.iter().map(|s| s / total).collect();
    let q_tilde = Mat::from_fn(n, n, |i, j| {
        let raw = |a: usize, b: usize| p_vec[a] * p_vec[b] / sigma_sq - 2.0 * inv[(a, b)];
        0.5 * (raw(i, j) + raw(j, i))
    });
    Ok(FiedlerIntermediate {
        sigma_sq,
        p_vec,
        q_tilde,
    })
}

/// Graph whose effective-resistance matrix is `d`.
///
/// Off-diagonal weights `ã_ij = −q̃_ij` with `|ã_ij| ≤ REALIZABILITY_TOL ·
/// max(1, max|ã|)` are taken as absent links; anything more negative makes
/// the demand unrealizable.
pub fn fiedler_reconstruct(d: &DemandMatrix) -> Result<WeightedGraph> {
    let fi = fiedler_intermediate(d)?;
    let n = d.node_count();
    let mut scale: f64 = 1.0;
    for i in 0..n {
        for j in i + 1..n {
            scale = scale.max(fi.q_tilde[(i, j)].abs());
        }
    }
    let snap = REALIZABILITY_TOL * scale;
    let mut links = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let a = -fi.q_tilde[(i, j)];
            if a < -snap {
                return Err(Error::NotRealizable { i, j, value: a });
            }
            if a > snap {
                links.push((i, j, a));
            }
        }
    }
    let g = build_graph(n, links)?;
    let omega = resistance_matrix(&g).map_err(|e| match e {
        Error::Disconnected => Error::NotRealizable {
            i: 0,
            j: 0,
            value: 0.0,
        },
        other => other,
    })?;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let target = d.get(i, j);
            worst = worst.max((omega.get(i, j) - target).abs() / target);
        }
    }
    if worst > ROUND_TRIP_TOL {
        return Err(Error::RoundTripMismatch {
            max_rel_error: worst,
        });
    }
    Ok(g)
}
