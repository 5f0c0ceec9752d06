//! Principal branch `W₀` of the Lambert W function on `[−1/e, ∞)`.

use std::f64::consts::E;

use crate::error::{Error, Result};

const MAX_ITER: usize = 100;
const TOL: f64 = 1e-14;
/// Arguments this far below `−1/e` are treated as the branch point.
const BRANCH_SLACK: f64 = 1e-15;

/// `W₀(x)`, the solution `w ≥ −1` of `w eʷ = x`, by Halley iteration.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::DomainError(x));
    }
    let branch = -1.0 / E;
    if x < branch - BRANCH_SLACK {
        return Err(Error::DomainError(x));
    }
    if x <= branch {
        return Ok(-1.0);
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }
    let mut w = initial_guess(x);
    for _ in 0..MAX_ITER {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        if wp1 == 0.0 {
            break;
        }
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if step.abs() <= TOL * (1.0 + w.abs()) {
            break;
        }
    }
    Ok(w.max(-1.0))
}

fn initial_guess(x: f64) -> f64 {
    if x < -0.32 {
        // series about the branch point in q = sqrt(2(ex + 1))
        let q = (2.0 * (E * x + 1.0)).max(0.0).sqrt();
        -1.0 + q - q * q / 3.0 + 11.0 / 72.0 * q * q * q
    } else if x < 3.0 {
        // Padé-style start, accurate near 0
        x * (1.0 + 4.0 / 3.0 * x) / (1.0 + 7.0 / 3.0 * x + 5.0 / 6.0 * x * x)
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    }
}
