//! Designing a network from target effective resistances.

pub mod demand;
pub mod fiedler;
pub mod metrics;
pub mod rgp;

pub use demand::{repair_demand, DemandMatrix};
pub use fiedler::{fiedler_intermediate, fiedler_reconstruct, FiedlerIntermediate};
pub use metrics::{evaluate, l1_gap, relative_norm, scale_alpha, IerpMetrics};
pub use rgp::{rank_one_remove, rgp, rgp_with, RgpOptions, RgpTrace};
