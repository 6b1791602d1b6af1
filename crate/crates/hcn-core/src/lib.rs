//! Construction and analysis of hierarchical cubic networks HCN_n and
//! hypercubes Q_n: exact builders, explicit minimum conditional cuts, and
//! independent brute-force verification of the closed-form h-super
//! connectivity values at desk scale.
//!
//! Graphs are immutable after construction and safe for concurrent reads;
//! the search engines partition work across threads without changing any
//! reported result.

pub mod analysis;
pub mod cuts;
pub mod error;
pub mod graph;
pub mod topology;
pub mod word;

pub use analysis::{
    classical_connectivity, kappa_formula, lambda_formula, min_h_edge_cut_exact,
    min_h_vertex_cut_exact, Net, OracleOutcome, OracleStatus, SearchBudget, Verdict,
};
pub use cuts::{verify_h_cut, CutKind, CutMembers, CutSpec, VerificationReport};
pub use error::{Error, Result};
pub use graph::Graph;
pub use topology::{
    block_quotient, build_hcn, build_hypercube, crossing_edge_count, crossing_edges,
    external_neighbor, is_crossing_edge, split_hypercube, BlockQuotient, HcnVertex, MAX_NET_DIM,
};
pub use word::{word_complement, BinaryWord};
