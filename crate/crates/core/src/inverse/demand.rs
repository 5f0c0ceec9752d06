use faer::{Mat, MatRef};

use crate::error::{Error, Result};
use crate::laplacian::ResistanceMatrix;

/// Relative asymmetry tolerated when validating a demand matrix.
const SYMMETRY_TOL: f64 = 1e-12;

/// Target effective resistances: symmetric, zero diagonal, strictly
/// positive off the diagonal.
#[derive(Debug, Clone)]
pub struct DemandMatrix {
    d: Mat<f64>,
}

impl DemandMatrix {
    pub fn new(d: Mat<f64>) -> Result<Self> {
        let n = d.nrows();
        if d.ncols() != n {
            return Err(Error::InvalidDemand(format!(
                "matrix is {}x{}, not square",
                n,
                d.ncols()
            )));
        }
        if n == 0 {
            return Err(Error::DegenerateDemand);
        }
        for i in 0..n {
            if d[(i, i)] != 0.0 {
                return Err(Error::InvalidDemand(format!("diagonal entry {i} is nonzero")));
            }
            for j in i + 1..n {
                let (a, b) = (d[(i, j)], d[(j, i)]);
                if !(a.is_finite() && a > 0.0 && b.is_finite() && b > 0.0) {
                    return Err(Error::InvalidDemand(format!(
                        "entry ({i}, {j}) is not a positive finite number"
                    )));
                }
                if (a - b).abs() > SYMMETRY_TOL * a.max(b) {
                    return Err(Error::InvalidDemand(format!("entry ({i}, {j}) is asymmetric")));
                }
            }
        }
        // store an exactly symmetric copy
        let sym = Mat::from_fn(n, n, |i, j| 0.5 * (d[(i, j)] + d[(j, i)]));
        Ok(DemandMatrix { d: sym })
    }

    /// Builds a demand from the upper-triangle entries `d(i, j)`, `i < j`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Result<Self> {
        Self::new(Mat::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => f(i, j),
            std::cmp::Ordering::Greater => f(j, i),
            std::cmp::Ordering::Equal => 0.0,
        }))
    }

    pub fn from_resistance(omega: &ResistanceMatrix) -> Result<Self> {
        Self::new(omega.as_mat().to_owned())
    }

    pub fn node_count(&self) -> usize {
        self.d.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[(i, j)]
    }

    pub fn as_mat(&self) -> MatRef<'_, f64> {
        self.d.as_ref()
    }

    /// Whether `d_ij ≤ d_ik + d_kj` holds on all triples up to `slack`.
    pub fn is_metric(&self, slack: f64) -> bool {
        let n = self.node_count();
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.d[(i, j)] <= self.d[(i, k)] + self.d[(k, j)] + slack))
        })
    }
}

/// Min-plus closure of `d` (Floyd–Warshall), the largest metric below it.
pub fn repair_demand(d: &DemandMatrix) -> DemandMatrix {
    let n = d.node_count();
    let mut m = d.d.clone();
    for k in 0..n {
        for i in 0..n {
            let dik = m[(i, k)];
            for j in 0..n {
                let via = dik + m[(k, j)];
                if via < m[(i, j)] {
                    m[(i, j)] = via;
                }
            }
        }
    }
    DemandMatrix { d: m }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[f64]]) -> DemandMatrix {
        let n = rows.len();
        DemandMatrix::new(Mat::from_fn(n, n, |i, j| rows[i][j])).unwrap()
    }

    #[test]
    fn repair_shortcuts_a_violation() {
        let d = from_rows(&[&[0.0, 1.0, 3.0], &[1.0, 0.0, 1.0], &[3.0, 1.0, 0.0]]);
        assert!(!d.is_metric(0.0));
        let r = repair_demand(&d);
        assert_eq!(r.get(0, 2), 2.0);
        assert_eq!(r.get(2, 0), 2.0);
        assert_eq!(r.get(0, 1), 1.0);
        assert!(r.is_metric(0.0));
    }

    #[test]
    fn metric_input_is_unchanged() {
        let d = from_rows(&[&[0.0, 1.0, 1.5], &[1.0, 0.0, 1.0], &[1.5, 1.0, 0.0]]);
        let r = repair_demand(&d);
        assert_eq!(r.as_mat(), d.as_mat());
        let eq = DemandMatrix::from_fn(5, |_, _| 0.7).unwrap();
        assert_eq!(repair_demand(&eq).as_mat(), eq.as_mat());
    }

    #[test]
    fn rejects_bad_matrices() {
        let bad_diag = Mat::from_fn(2, 2, |_, _| 1.0);
        assert!(DemandMatrix::new(bad_diag).is_err());
        let zero_off = Mat::<f64>::zeros(2, 2);
        assert!(DemandMatrix::new(zero_off).is_err());
        let asym = Mat::from_fn(2, 2, |i, j| if i == j { 0.0 } else { 1.0 + i as f64 });
        assert!(DemandMatrix::new(asym).is_err());
        assert!(matches!(
            DemandMatrix::new(Mat::zeros(0, 0)),
            Err(Error::DegenerateDemand)
        ));
    }
}
