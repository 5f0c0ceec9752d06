use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::inverse::demand::DemandMatrix;
use crate::laplacian::{resistance_matrix, ResistanceMatrix};

/// Mean of `d_ij / ω_ij` over unordered pairs `i < j`.
pub fn scale_alpha(d: &DemandMatrix, omega: &ResistanceMatrix) -> Result<f64> {
    let n = d.node_count();
    if omega.node_count() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: omega.node_count(),
        });
    }
    if n < 2 {
        return Err(Error::DegenerateDemand);
    }
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let w = omega.get(i, j);
            if !(w > 0.0) {
                return Err(Error::ZeroResistance { i, j });
            }
            sum += d.get(i, j) / w;
        }
    }
    Ok(sum / (n * (n - 1) / 2) as f64)
}

/// `Σ_{i≠j} |d_ij − α ω_ij|` over ordered pairs.
pub fn l1_gap(d: &DemandMatrix, omega: &ResistanceMatrix, alpha: f64) -> f64 {
    let n = d.node_count();
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += (d.get(i, j) - alpha * omega.get(i, j)).abs();
        }
    }
    2.0 * sum
}

/// `(1 / (n(n−1))) Σ_{i≠j} |d_ij − ω_ij| / d_ij`.
pub fn relative_norm(d: &DemandMatrix, omega: &ResistanceMatrix) -> f64 {
    let n = d.node_count();
    if n < 2 {
        return 0.0;
    }
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let dij = d.get(i, j);
            sum += (dij - omega.get(i, j)).abs() / dij;
        }
    }
    2.0 * sum / (n * (n - 1)) as f64
}

/// Quality of a designed graph `H` against a baseline `G` and demand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IerpMetrics {
    /// `2(L_H − L_G) / (n(n−1))`.
    pub additional_links_normalized: f64,
    /// `L_c / L_H`, the share of designed links also in the baseline.
    pub common_link_ratio: f64,
    pub relative_norm: f64,
    pub baseline_links: usize,
    pub result_links: usize,
    pub common_links: usize,
}

pub fn evaluate(
    d: &DemandMatrix,
    baseline: &WeightedGraph,
    result: &WeightedGraph,
) -> Result<IerpMetrics> {
    let n = d.node_count();
    for g in [baseline, result] {
        if g.node_count() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: g.node_count(),
            });
        }
    }
    let omega = resistance_matrix(result)?;
    let lg = baseline.link_count();
    let lh = result.link_count();
    let lc = result
        .links()
        .iter()
        .filter(|l| baseline.has_link(l.i, l.j))
        .count();
    let pairs = (n * n.saturating_sub(1)) as f64;
    Ok(IerpMetrics {
        additional_links_normalized: if pairs > 0.0 {
            2.0 * (lh as f64 - lg as f64) / pairs
        } else {
            0.0
        },
        common_link_ratio: if lh > 0 { lc as f64 / lh as f64 } else { 1.0 },
        relative_norm: relative_norm(d, &omega),
        baseline_links: lg,
        result_links: lh,
        common_links: lc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use faer::Mat;

    fn triangle() -> WeightedGraph {
        build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap()
    }

    #[test]
    fn alpha_of_constant_ratio() {
        let omega = resistance_matrix(&triangle()).unwrap();
        let d = DemandMatrix::from_fn(3, |_, _| 1.0).unwrap();
        assert!((scale_alpha(&d, &omega).unwrap() - 1.5).abs() < 1e-12);
        let scaled = DemandMatrix::from_resistance(&omega.scaled(3.0)).unwrap();
        let alpha = scale_alpha(&scaled, &omega).unwrap();
        assert!((alpha - 3.0).abs() < 1e-12);
        assert!(l1_gap(&scaled, &omega, alpha) < 1e-12);
    }

    #[test]
    fn alpha_is_arithmetic_mean() {
        let omega = ResistanceMatrix::from_mat(Mat::from_fn(3, 3, |i, j| if i == j { 0.0 } else { 1.0 }));
        // ratios 1, 2, 3 on pairs (0,1), (0,2), (1,2)
        let d = DemandMatrix::from_fn(3, |i, j| (i + j) as f64).unwrap();
        assert!((scale_alpha(&d, &omega).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn zero_resistance_is_an_error() {
        let omega = ResistanceMatrix::from_mat(Mat::zeros(2, 2));
        let d = DemandMatrix::from_fn(2, |_, _| 1.0).unwrap();
        assert!(matches!(
            scale_alpha(&d, &omega),
            Err(Error::ZeroResistance { i: 0, j: 1 })
        ));
    }

    #[test]
    fn identity_comparison() {
        let g = triangle();
        let d = DemandMatrix::from_resistance(&resistance_matrix(&g).unwrap()).unwrap();
        let m = evaluate(&d, &g, &g).unwrap();
        assert_eq!(m.additional_links_normalized, 0.0);
        assert_eq!(m.common_link_ratio, 1.0);
        assert!(m.relative_norm < 1e-12);
    }

    #[test]
    fn one_link_fewer() {
        let g = build_graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0), (0, 2, 1.0)])
            .unwrap();
        let h = g.without_link(g.link_index(0, 2).unwrap());
        let d = DemandMatrix::from_resistance(&resistance_matrix(&g).unwrap()).unwrap();
        let m = evaluate(&d, &g, &h).unwrap();
        assert!((m.additional_links_normalized + 2.0 / 12.0).abs() < 1e-15);
        assert_eq!(m.common_link_ratio, 1.0);
        assert!(m.relative_norm > 0.0);
    }

    #[test]
    fn disconnected_result_is_an_error() {
        let g = triangle();
        let h = build_graph(3, [(0, 1, 1.0)]).unwrap();
        let d = DemandMatrix::from_fn(3, |_, _| 1.0).unwrap();
        assert_eq!(evaluate(&d, &g, &h), Err(Error::Disconnected));
    }
}
