//! Degree distributions and their probability generating functions.

use crate::error::{Error, Result};

/// Degree law of a random-graph ensemble.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DegreeModel {
    /// Erdős–Rényi `G_p(n)`: degree ~ Binomial(n − 1, p).
    ErBinomial { n: usize, p: f64 },
    /// Sparse-limit Erdős–Rényi: degree ~ Poisson(mean_degree).
    ErPoisson { mean_degree: f64 },
}

/// Values of the degree pgf `φ_D`, the excess-degree pgf `φ_{D'}` and their
/// first derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PgfValues {
    pub phi: f64,
    pub phi_excess: f64,
    pub phi_prime: f64,
    pub phi_excess_prime: f64,
}

impl DegreeModel {
    pub fn er_binomial(n: usize, p: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::EmptyGraph);
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        Ok(DegreeModel::ErBinomial { n, p })
    }

    pub fn er_poisson(mean_degree: f64) -> Self {
        DegreeModel::ErPoisson { mean_degree }
    }

    pub fn mean_degree(&self) -> f64 {
        match *self {
            DegreeModel::ErBinomial { n, p } => (n - 1) as f64 * p,
            DegreeModel::ErPoisson { mean_degree } => mean_degree,
        }
    }

    /// Evaluates the pgfs at `z ∈ [0, 1]`.
    ///
    /// The excess-degree pgf is `φ_{D'}(z) = φ'_D(z) / φ'_D(1)`. When
    /// `φ'_D(1) = 0` (no links at all) it is taken to be identically 1.
    pub fn pgf(&self, z: f64) -> PgfValues {
        match *self {
            DegreeModel::ErPoisson { mean_degree: lambda } => {
                let phi = (-lambda * (1.0 - z)).exp();
                PgfValues {
                    phi,
                    phi_excess: phi,
                    phi_prime: lambda * phi,
                    phi_excess_prime: lambda * phi,
                }
            }
            DegreeModel::ErBinomial { n, p } => {
                let base = 1.0 - p * (1.0 - z);
                let m = (n - 1) as f64;
                let phi = base.powi((n - 1) as i32);
                let phi_prime = m * p * base.powi(n as i32 - 2);
                if p == 0.0 {
                    return PgfValues {
                        phi,
                        phi_excess: 1.0,
                        phi_prime,
                        phi_excess_prime: 0.0,
                    };
                }
                let phi_excess = base.powi(n as i32 - 2);
                let phi_excess_prime = if n >= 3 {
                    (m - 1.0) * p * base.powi(n as i32 - 3)
                } else {
                    0.0
                };
                PgfValues {
                    phi,
                    phi_excess,
                    phi_prime,
                    phi_excess_prime,
                }
            }
        }
    }

    /// `Pr[D = k]`.
    pub fn degree_probability(&self, k: usize) -> f64 {
        match *self {
            DegreeModel::ErPoisson { mean_degree: lambda } => {
                if lambda == 0.0 {
                    return if k == 0 { 1.0 } else { 0.0 };
                }
                (k as f64 * lambda.ln() - lambda - ln_factorial(k)).exp()
            }
            DegreeModel::ErBinomial { n, p } => binomial_pmf(n - 1, p, k),
        }
    }

    /// `Pr[D' = k]`, the excess degree of a node reached along a random link.
    pub fn excess_probability(&self, k: usize) -> f64 {
        match *self {
            DegreeModel::ErPoisson { .. } => self.degree_probability(k),
            DegreeModel::ErBinomial { n, p } => binomial_pmf(n.saturating_sub(2), p, k),
        }
    }
}

fn ln_factorial(k: usize) -> f64 {
    (2..=k).map(|x| (x as f64).ln()).sum()
}

fn binomial_pmf(m: usize, p: f64, k: usize) -> f64 {
    if k > m {
        return 0.0;
    }
    if p == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    if p == 1.0 {
        return if k == m { 1.0 } else { 0.0 };
    }
    let ln_choose = ln_factorial(m) - ln_factorial(k) - ln_factorial(m - k);
    (ln_choose + k as f64 * p.ln() + (m - k) as f64 * (1.0 - p).ln()).exp()
}
