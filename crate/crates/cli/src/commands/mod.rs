pub mod analyze;
pub mod flow_stats;
pub mod rgp_eval;
pub mod sparsify;
