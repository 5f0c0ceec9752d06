//! Laplacian, its Moore–Penrose pseudoinverse and the effective-resistance
//! matrix.
//!
//! For a connected graph the Laplacian `Q` has the all-ones vector as its
//! only null direction, so adding `J/n` (the projector onto it) gives an
//! invertible, positive-definite matrix, and
//!
//! ```text
//! Q† = (Q + J/n)⁻¹ − J/n
//! ```
//!
//! One Cholesky factorization produces the whole pseudoinverse.

use faer::linalg::solvers::DenseSolveCore;
use faer::{Mat, MatRef, Side};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Largest node count for which a full dense pseudoinverse is formed.
pub const MAX_DENSE_NODES: usize = 3000;

/// Laplacian `Q = Δ − A` of a weighted graph.
pub fn laplacian_matrix(g: &WeightedGraph) -> Mat<f64> {
    let n = g.node_count();
    let mut q = Mat::zeros(n, n);
    for l in g.links() {
        q[(l.i, l.j)] -= l.weight;
        q[(l.j, l.i)] -= l.weight;
        q[(l.i, l.i)] += l.weight;
        q[(l.j, l.j)] += l.weight;
    }
    q
}

/// Pseudoinverse of the Laplacian of a connected graph via the deflation
/// identity. The caller guarantees connectivity.
pub fn deflated_pseudoinverse(q: MatRef<'_, f64>) -> Result<Mat<f64>> {
    let n = q.nrows();
    let shift = 1.0 / n as f64;
    let shifted = Mat::from_fn(n, n, |i, j| q[(i, j)] + shift);
    let llt = shifted.llt(Side::Lower).map_err(|_| Error::Disconnected)?;
    let inv = llt.inverse();
    Ok(Mat::from_fn(n, n, |i, j| {
        0.5 * (inv[(i, j)] + inv[(j, i)]) - shift
    }))
}

/// Laplacian together with its pseudoinverse.
///
/// The pseudoinverse is present only for connected graphs; operations that
/// need it return [`Error::Disconnected`] otherwise.
#[derive(Debug, Clone)]
pub struct LaplacianBundle {
    laplacian: Mat<f64>,
    pseudoinverse: Option<Mat<f64>>,
}

/// Builds the Laplacian bundle. Connectivity is decided by traversal.
pub fn laplacian_bundle(g: &WeightedGraph) -> Result<LaplacianBundle> {
    let n = g.node_count();
    if n > MAX_DENSE_NODES {
        return Err(Error::TooLarge {
            n,
            limit: MAX_DENSE_NODES,
        });
    }
    let laplacian = laplacian_matrix(g);
    let pseudoinverse = if g.is_connected() {
        Some(deflated_pseudoinverse(laplacian.as_ref())?)
    } else {
        None
    };
    Ok(LaplacianBundle {
        laplacian,
        pseudoinverse,
    })
}

impl LaplacianBundle {
    pub(crate) fn from_parts(laplacian: Mat<f64>, pseudoinverse: Mat<f64>) -> Self {
        Self {
            laplacian,
            pseudoinverse: Some(pseudoinverse),
        }
    }

    pub fn node_count(&self) -> usize {
        self.laplacian.nrows()
    }

    pub fn connected(&self) -> bool {
        self.pseudoinverse.is_some()
    }

    pub fn laplacian(&self) -> MatRef<'_, f64> {
        self.laplacian.as_ref()
    }

    pub fn pseudoinverse(&self) -> Result<MatRef<'_, f64>> {
        self.pseudoinverse
            .as_ref()
            .map(|p| p.as_ref())
            .ok_or(Error::Disconnected)
    }

    /// `(e_i − e_j)ᵀ Q† (e_i − e_j)` for one pair.
    pub fn pair_resistance(&self, i: usize, j: usize) -> Result<f64> {
        let p = self.pseudoinverse()?;
        Ok(p[(i, i)] + p[(j, j)] - 2.0 * p[(i, j)])
    }
}

/// Symmetric matrix of pairwise effective resistances, in ohms.
#[derive(Debug, Clone)]
pub struct ResistanceMatrix {
    omega: Mat<f64>,
}

impl ResistanceMatrix {
    /// Wraps an already computed matrix. No validation.
    pub fn from_mat(omega: Mat<f64>) -> Self {
        Self { omega }
    }

    pub fn node_count(&self) -> usize {
        self.omega.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.omega[(i, j)]
    }

    pub fn as_mat(&self) -> MatRef<'_, f64> {
        self.omega.as_ref()
    }

    pub fn into_mat(self) -> Mat<f64> {
        self.omega
    }

    /// `Ω` scaled by `alpha`.
    pub fn scaled(&self, alpha: f64) -> ResistanceMatrix {
        ResistanceMatrix {
            omega: Mat::from_fn(self.node_count(), self.node_count(), |i, j| {
                alpha * self.omega[(i, j)]
            }),
        }
    }
}

/// `ω_ij = Q†_ii + Q†_jj − 2 Q†_ij` for every pair.
pub fn resistance_from_pseudoinverse(p: MatRef<'_, f64>) -> ResistanceMatrix {
    let n = p.nrows();
    ResistanceMatrix {
        omega: Mat::from_fn(n, n, |i, j| {
            if i == j {
                0.0
            } else {
                p[(i, i)] + p[(j, j)] - 2.0 * p[(i, j)]
            }
        }),
    }
}

pub fn effective_resistance(bundle: &LaplacianBundle) -> Result<ResistanceMatrix> {
    Ok(resistance_from_pseudoinverse(bundle.pseudoinverse()?))
}

/// Convenience: bundle plus resistance matrix for a connected graph.
pub fn resistance_matrix(g: &WeightedGraph) -> Result<ResistanceMatrix> {
    effective_resistance(&laplacian_bundle(g)?)
}

/// Effective graph resistance `R_G`, the sum of `ω_ij` over unordered pairs.
pub fn graph_resistance(omega: &ResistanceMatrix) -> f64 {
    let n = omega.node_count();
    let mut total = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            total += omega.get(i, j);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::tolerance::{ABS_TOL, REL_TOL};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn triangle_laplacian() {
        let g = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let b = laplacian_bundle(&g).unwrap();
        let q = b.laplacian();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 2.0 } else { -1.0 };
                assert_eq!(q[(i, j)], want);
            }
        }
    }

    #[test]
    fn single_link_pseudoinverse() {
        // (Q + J/2)⁻¹ − J/2 with Q = [[2,-2],[-2,2]] gives ±1/8.
        let g = build_graph(2, [(0, 1, 2.0)]).unwrap();
        let b = laplacian_bundle(&g).unwrap();
        let p = b.pseudoinverse().unwrap();
        assert!(close(p[(0, 0)], 0.125, 1e-14));
        assert!(close(p[(0, 1)], -0.125, 1e-14));
        assert!(close(p[(1, 1)], 0.125, 1e-14));
        assert_eq!(b.laplacian()[(0, 1)], -2.0);
    }

    #[test]
    fn isolated_nodes_are_disconnected() {
        let g = build_graph(2, []).unwrap();
        let b = laplacian_bundle(&g).unwrap();
        assert!(!b.connected());
        assert_eq!(effective_resistance(&b).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn single_node_is_connected() {
        let g = build_graph(1, []).unwrap();
        let b = laplacian_bundle(&g).unwrap();
        assert!(b.connected());
        assert!(b.pseudoinverse().unwrap()[(0, 0)].abs() < ABS_TOL);
    }

    #[test]
    fn series_and_parallel_values() {
        let tri = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let om = resistance_matrix(&tri).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert!(close(om.get(i, j), 2.0 / 3.0, ABS_TOL));
        }
        let path = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let om = resistance_matrix(&path).unwrap();
        assert!(close(om.get(0, 2), 2.0, ABS_TOL));
        assert!(close(om.get(0, 1), 1.0, ABS_TOL));
        assert!(close(om.get(1, 2), 1.0, ABS_TOL));
    }

    #[test]
    fn complete_graph_resistance() {
        let mut links = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                links.push((i, j, 1.0));
            }
        }
        let om = resistance_matrix(&build_graph(4, links).unwrap()).unwrap();
        for i in 0..4 {
            assert_eq!(om.get(i, i), 0.0);
            for j in 0..4 {
                if i != j {
                    assert!(close(om.get(i, j), 0.5, ABS_TOL));
                }
            }
        }
    }

    #[test]
    fn bundle_invariants() {
        let g = build_graph(
            5,
            [
                (0, 1, 0.3),
                (1, 2, 1.7),
                (2, 3, 0.9),
                (3, 4, 2.2),
                (0, 4, 0.4),
                (1, 3, 1.1),
            ],
        )
        .unwrap();
        let b = laplacian_bundle(&g).unwrap();
        let q = b.laplacian();
        let p = b.pseudoinverse().unwrap();
        let n = 5;
        for i in 0..n {
            let row: f64 = (0..n).map(|j| q[(i, j)]).sum();
            assert!(row.abs() < ABS_TOL);
            for j in 0..n {
                assert_eq!(p[(i, j)], p[(j, i)]);
                let pq: f64 = (0..n).map(|k| p[(i, k)] * q[(k, j)]).sum();
                let want = if i == j { 1.0 } else { 0.0 } - 1.0 / n as f64;
                assert!(close(pq, want, REL_TOL));
            }
        }
    }

    #[test]
    fn refuses_oversized_dense_solve() {
        let g = build_graph(MAX_DENSE_NODES + 1, []).unwrap();
        assert!(matches!(laplacian_bundle(&g), Err(Error::TooLarge { .. })));
    }
}
