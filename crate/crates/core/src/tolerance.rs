//! Numerical tolerances shared across the crate.

/// Absolute tolerance for identities that hold exactly in exact arithmetic.
pub const ABS_TOL: f64 = 1e-10;

/// Relative tolerance for compared matrix quantities.
pub const REL_TOL: f64 = 1e-8;

/// Kirchhoff and Ohm residual bound for a unit-current solve.
pub const FLOW_TOL: f64 = 1e-9;

/// A link current counts as zero when `|y_l| <= ZERO_CURRENT_REL * max |y|`.
pub const ZERO_CURRENT_REL: f64 = 1e-9;

/// Off-diagonal adjacency entries recovered from a demand matrix within
/// `REALIZABILITY_TOL` of zero (scaled by the largest weight when that
/// exceeds one) are rounding noise.
pub const REALIZABILITY_TOL: f64 = 1e-9;

/// A link is a bridge when `1 − w ω_ij <= BRIDGE_TOL`.
pub const BRIDGE_TOL: f64 = 1e-9;
