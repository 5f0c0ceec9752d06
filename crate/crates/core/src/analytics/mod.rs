//! Flow-subgraph size theory for random graphs and its empirical
//! counterparts.

pub mod blocks;
pub mod decomposition;
pub mod lambert;
pub mod measure;
pub mod theory;

pub use blocks::BlockDecomposition;
pub use decomposition::{decompose_backbone, two_core, BackboneDecomposition};
pub use lambert::lambert_w0;
pub use measure::{
    measure_flow_fractions, measure_flow_fractions_with, sample_pairs, simulate_flow_fractions,
    FlowFractions, FlowMethod,
};
pub use theory::{
    backbone_fraction, backbone_fraction_er, branch_statistics, equipotential_link_bound, predict,
    solve_pb_fixed_point, solve_pb_general, solve_pb_lambert, BackbonePrediction,
    BranchStatistics,
};
