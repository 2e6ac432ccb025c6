//! Single-pair maximum flow: network representation, a deterministic
//! blocking-flow solver, min-cut extraction, a brute-force cut oracle, and
//! DIMACS max-flow file IO.

mod dimacs;
mod dinic;
mod flow;
mod network;
mod oracle;

pub use dimacs::{read_dimacs, write_dimacs, DimacsError};
pub use flow::{
    validate_flow, BoundedValue, CutResult, FlowCheckError, FlowResult, QueryError,
};
pub use network::{Edge, FlowNetwork, NetworkError, NodeId, MAX_TOTAL_CAPACITY};
pub use oracle::{brute_force_min_cut, BRUTE_FORCE_MIN_CUT_LIMIT};
