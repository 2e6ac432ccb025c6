use std::collections::BTreeSet;
use thiserror::Error;

use crate::network::{FlowNetwork, NodeId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QueryError {
    #[error("node {node} out of range for {node_count} nodes")]
    InvalidNode { node: NodeId, node_count: usize },
    #[error("source and sink must differ (both are {node})")]
    SourceIsSink { node: NodeId },
    #[error("instance too large for brute force: {actual} exceeds limit {limit}")]
    TooLarge { actual: usize, limit: usize },
}

/// A flow value together with the per-edge assignment realizing it.
/// `edge_flows[i]` is the flow on `net.edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowResult {
    pub value: u64,
    pub edge_flows: Vec<u64>,
}

/// An s-t cut, described by the set of nodes on the source side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub source_side: BTreeSet<NodeId>,
    pub capacity: u64,
}

/// Outcome of a flow computation that is allowed to stop early once the
/// accumulated flow passes a bound `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundedValue {
    /// The exact maximum flow value; it is ≤ the requested bound.
    Exact(u64),
    /// The maximum flow strictly exceeds the bound; augmentation stopped as
    /// soon as that was certain, so no exact value is reported.
    ExceedsK,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlowCheckError {
    #[error("edge flow vector has length {actual}, expected {expected}")]
    WrongLength { actual: usize, expected: usize },
    #[error("edge {edge} carries {flow} over capacity {capacity}")]
    OverCapacity { edge: usize, flow: u64, capacity: u64 },
    #[error("node {node} violates conservation: in {inflow}, out {outflow}")]
    NotConserved {
        node: NodeId,
        inflow: u64,
        outflow: u64,
    },
    #[error("net flow out of the source is {actual}, result claims {claimed}")]
    ValueMismatch { actual: u64, claimed: u64 },
}

/// Checks that `flow` is a feasible `source`→`sink` flow on `net` whose net
/// out-flow at the source matches the claimed value: capacity respected on
/// every edge, conservation at every node other than source and sink.
pub fn validate_flow(
    net: &FlowNetwork,
    source: NodeId,
    sink: NodeId,
    flow: &FlowResult,
) -> Result<(), FlowCheckError> {
    if flow.edge_flows.len() != net.edge_count() {
        return Err(FlowCheckError::WrongLength {
            actual: flow.edge_flows.len(),
            expected: net.edge_count(),
        });
    }
    let mut inflow = vec![0u64; net.node_count()];
    let mut outflow = vec![0u64; net.node_count()];
    for (idx, (edge, &f)) in net.edges().iter().zip(&flow.edge_flows).enumerate() {
        if f > edge.capacity {
            return Err(FlowCheckError::OverCapacity {
                edge: idx,
                flow: f,
                capacity: edge.capacity,
            });
        }
        outflow[edge.src] += f;
        inflow[edge.dst] += f;
    }
    for node in 0..net.node_count() {
        if node == source || node == sink {
            continue;
        }
        if inflow[node] != outflow[node] {
            return Err(FlowCheckError::NotConserved {
                node,
                inflow: inflow[node],
                outflow: outflow[node],
            });
        }
    }
    let actual = outflow[source].wrapping_sub(inflow[source]);
    if inflow[source] > outflow[source] || actual != flow.value {
        return Err(FlowCheckError::ValueMismatch {
            actual,
            claimed: flow.value,
        });
    }
    Ok(())
}
