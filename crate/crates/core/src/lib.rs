//! Resistor-network analysis on weighted graphs.
//!
//! A weighted graph is read as an electrical circuit: each link is a
//! resistor with conductance equal to its weight. The crate provides
//!
//! * the Laplacian, its pseudoinverse and effective resistances
//!   ([`laplacian`]), unit-current flows and flow subgraphs ([`flow`]);
//! * random Erdős–Rényi graphs and random trees ([`ensembles`]) with
//!   degree generating functions ([`degree`]);
//! * the percolation theory of flow-subgraph size and its Monte-Carlo
//!   counterpart ([`analytics`]);
//! * inverse design from target effective resistances ([`inverse`]).
//!
//! ```
//! use flownet::{build_graph, laplacian_bundle, solve_unit_flow, effective_resistance};
//!
//! let g = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])?;
//! let bundle = laplacian_bundle(&g)?;
//! let omega = effective_resistance(&bundle)?;
//! assert!((omega.get(0, 1) - 2.0 / 3.0).abs() < 1e-12);
//!
//! let flow = solve_unit_flow(&bundle, &g, 0, 1)?;
//! assert!((flow.currents[g.link_index(0, 1).unwrap()] - 2.0 / 3.0).abs() < 1e-12);
//! # Ok::<(), flownet::Error>(())
//! ```

pub mod analytics;
pub mod degree;
pub mod ensembles;
pub mod error;
pub mod flow;
pub mod graph;
pub mod inverse;
pub mod io;
pub mod laplacian;
pub mod tolerance;

pub use faer;

pub use degree::{DegreeModel, PgfValues};
pub use ensembles::{derive_seed, EnsembleSpec, GraphModel, WeightModel};
pub use error::{Error, Result};
pub use flow::{
    candidate_links, extract_flow_subgraph, extract_flow_subgraph_with_tol, power_dissipation,
    solve_unit_flow, CandidateLinkSet, FactoredNetwork, FlowSolution, FlowSubgraph,
    PowerDissipation,
};
pub use graph::{build_graph, Link, WeightedGraph};
pub use laplacian::{
    effective_resistance, laplacian_bundle, resistance_matrix, LaplacianBundle, ResistanceMatrix,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/circuits.md")]
    mod circuits {}
    #[doc = include_str!("../../../book/src/flow-subgraphs.md")]
    mod flow_subgraphs {}
    #[doc = include_str!("../../../book/src/random-graphs.md")]
    mod random_graphs {}
    #[doc = include_str!("../../../book/src/backbone.md")]
    mod backbone {}
    #[doc = include_str!("../../../book/src/inverse-design.md")]
    mod inverse_design {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
