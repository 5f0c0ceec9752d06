use thiserror::Error;

/// Errors produced by graph construction, the linear-algebra kernel and the
/// analytic and inverse-design routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a graph needs at least one node")]
    EmptyGraph,

    #[error("node {node} is out of range for a graph with {n} nodes")]
    IndexOutOfRange { node: usize, n: usize },

    #[error("self-loop at node {0}")]
    SelfLoop(usize),

    #[error("duplicate link {0}-{1}")]
    DuplicateLink(usize, usize),

    #[error("link {i}-{j} has non-positive or non-finite weight {weight}")]
    NonPositiveWeight { i: usize, j: usize, weight: f64 },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("dense solve requested for {n} nodes, limit is {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("source and destination are the same node {0}")]
    SameTerminal(usize),

    #[error("expected {expected} nodes, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("probability {0} is outside the open interval (0, 1]")]
    InvalidProbability(f64),

    #[error("invalid weight model: {0}")]
    InvalidWeightModel(String),

    #[error("fixed-point iteration did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("Lambert W0 is undefined at {0}")]
    DomainError(f64),

    #[error("invalid demand matrix: {0}")]
    InvalidDemand(String),

    #[error("demand matrix needs at least two nodes")]
    DegenerateDemand,

    #[error("demand matrix is singular")]
    SingularDemand,

    #[error("demand is not graph-realizable: weight {value} on pair {i}-{j}")]
    NotRealizable { i: usize, j: usize, value: f64 },

    #[error("reconstructed graph misses the demand by {max_rel_error} (relative)")]
    RoundTripMismatch { max_rel_error: f64 },

    #[error("link {0}-{1} is not present")]
    MissingLink(usize, usize),

    #[error("removing link {i}-{j} disconnects the graph")]
    BridgeRemoval { i: usize, j: usize },

    #[error("effective resistance between {i} and {j} is zero")]
    ZeroResistance { i: usize, j: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
