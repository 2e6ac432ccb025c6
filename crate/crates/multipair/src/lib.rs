//! Multi-pair maximum-flow queries over a shared network: pairwise matrices,
//! global/source-rooted variants, threshold-bounded pair enumeration, and
//! Gomory–Hu trees for undirected inputs.

mod gomory_hu;
mod matrix;
mod queries;

pub use gomory_hu::{
    gh_query, gomory_hu_tree, GomoryHuTree, UndirectedError, UndirectedGraph,
};
pub use matrix::FlowMatrix;
pub use queries::{
    all_pairs_max_flow, global_max_flow, kpmf, max_local_edge_connectivity,
    single_source_max_flow, st_max_flow, MultiPairError,
};
