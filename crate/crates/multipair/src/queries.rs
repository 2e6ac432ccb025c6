//! Multi-pair maximum-flow queries, answered by repeated single-pair runs.
//! Independent pairs are solved in parallel; results are assembled in the
//! caller's enumeration order, so output is deterministic regardless of
//! scheduling.

use rayon::prelude::*;
use thiserror::Error;

use flow_core::{BoundedValue, FlowNetwork, NodeId, QueryError};

use crate::matrix::FlowMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MultiPairError {
    #[error(transparent)]
    Query(#[from] QueryError),
    #[error("source/sink list is empty")]
    EmptySet,
    #[error("need at least two nodes, network has {node_count}")]
    TooFewNodes { node_count: usize },
    #[error("edge {edge} has capacity {capacity}, all capacities must be 1")]
    NotUnitCapacity { edge: usize, capacity: u64 },
}

fn check_ids(net: &FlowNetwork, ids: &[NodeId]) -> Result<(), MultiPairError> {
    if ids.is_empty() {
        return Err(MultiPairError::EmptySet);
    }
    for &node in ids {
        if node >= net.node_count() {
            return Err(QueryError::InvalidNode {
                node,
                node_count: net.node_count(),
            }
            .into());
        }
    }
    Ok(())
}

/// Max flow for every pair in `sources × sinks`. Cells where source and sink
/// coincide are left undefined.
pub fn st_max_flow(
    net: &FlowNetwork,
    sources: &[NodeId],
    sinks: &[NodeId],
) -> Result<FlowMatrix, MultiPairError> {
    check_ids(net, sources)?;
    check_ids(net, sinks)?;
    let values: Vec<Vec<Option<u64>>> = sources
        .par_iter()
        .map(|&s| {
            sinks
                .iter()
                .map(|&t| {
                    if s == t {
                        None
                    } else {
                        Some(net.max_flow(s, t).expect("ids pre-validated").value)
                    }
                })
                .collect()
        })
        .collect();
    Ok(FlowMatrix::new(
        sources.to_vec(),
        sinks.to_vec(),
        values,
    ))
}

/// Max flow for every ordered pair of distinct nodes.
pub fn all_pairs_max_flow(net: &FlowNetwork) -> Result<FlowMatrix, MultiPairError> {
    let all: Vec<NodeId> = (0..net.node_count()).collect();
    st_max_flow(net, &all, &all)
}

/// Max flow from `source` to every other node, indexed by node id (`None` at
/// the source itself).
pub fn single_source_max_flow(
    net: &FlowNetwork,
    source: NodeId,
) -> Result<Vec<Option<u64>>, MultiPairError> {
    check_ids(net, &[source])?;
    Ok((0..net.node_count())
        .into_par_iter()
        .map(|t| {
            if t == source {
                None
            } else {
                Some(net.max_flow(source, t).expect("ids pre-validated").value)
            }
        })
        .collect())
}

/// Largest max-flow value over all ordered pairs, with the lexicographically
/// smallest pair attaining it.
pub fn global_max_flow(net: &FlowNetwork) -> Result<(u64, (NodeId, NodeId)), MultiPairError> {
    let n = net.node_count();
    if n < 2 {
        return Err(MultiPairError::TooFewNodes { node_count: n });
    }
    let pairs: Vec<(NodeId, NodeId)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let values: Vec<u64> = pairs
        .par_iter()
        .map(|&(u, v)| net.max_flow(u, v).expect("pairs are valid").value)
        .collect();
    let mut best = 0;
    let mut arg = pairs[0];
    for (&pair, &value) in pairs.iter().zip(&values) {
        if value > best {
            best = value;
            arg = pair;
        }
    }
    Ok((best, arg))
}

/// Maximum local edge connectivity: the largest number of pairwise
/// edge-disjoint paths between any ordered node pair. On unit capacities
/// this is exactly the global max flow, so the capacities are checked.
pub fn max_local_edge_connectivity(
    net: &FlowNetwork,
) -> Result<(u64, (NodeId, NodeId)), MultiPairError> {
    for (idx, e) in net.edges().iter().enumerate() {
        if e.capacity != 1 {
            return Err(MultiPairError::NotUnitCapacity {
                edge: idx,
                capacity: e.capacity,
            });
        }
    }
    global_max_flow(net)
}

/// All ordered pairs whose max flow is at most `k`, with their exact values,
/// in lexicographic pair order. Each pair runs through the threshold-halting
/// solver, so pairs far above `k` are abandoned after `k + 1` units.
pub fn kpmf(net: &FlowNetwork, k: u64) -> Vec<(NodeId, NodeId, u64)> {
    let n = net.node_count();
    let pairs: Vec<(NodeId, NodeId)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    pairs
        .par_iter()
        .filter_map(|&(u, v)| {
            match net.max_flow_bounded(u, v, k).expect("pairs are valid") {
                BoundedValue::Exact(value) => Some((u, v, value)),
                BoundedValue::ExceedsK => None,
            }
        })
        .collect()
}
