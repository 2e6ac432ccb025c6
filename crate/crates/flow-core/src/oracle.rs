//! Exponential reference implementation used to cross-check the solver.

use crate::flow::QueryError;
use crate::network::{FlowNetwork, NodeId};

/// Node-count ceiling for [`brute_force_min_cut`]; past this the subset
/// enumeration stops being a desk-scale computation.
pub const BRUTE_FORCE_MIN_CUT_LIMIT: usize = 20;

/// Minimum s-t cut by enumerating every bipartition of the nodes with
/// `source` on one side and `sink` on the other. Deliberately shares nothing
/// with the augmenting-path solver so the two can vouch for each other.
pub fn brute_force_min_cut(
    net: &FlowNetwork,
    source: NodeId,
    sink: NodeId,
) -> Result<u64, QueryError> {
    let n = net.node_count();
    for node in [source, sink] {
        if node >= n {
            return Err(QueryError::InvalidNode {
                node,
                node_count: n,
            });
        }
    }
    if source == sink {
        return Err(QueryError::SourceIsSink { node: source });
    }
    if n > BRUTE_FORCE_MIN_CUT_LIMIT {
        return Err(QueryError::TooLarge {
            actual: n,
            limit: BRUTE_FORCE_MIN_CUT_LIMIT,
        });
    }
    let free: Vec<NodeId> = (0..n).filter(|&v| v != source && v != sink).collect();
    let mut in_source_side = vec![false; n];
    in_source_side[source] = true;
    let mut best = u64::MAX;
    for mask in 0u32..(1 << free.len()) {
        for (bit, &v) in free.iter().enumerate() {
            in_source_side[v] = mask & (1 << bit) != 0;
        }
        let crossing: u64 = net
            .edges()
            .iter()
            .filter(|e| in_source_side[e.src] && !in_source_side[e.dst])
            .map(|e| e.capacity)
            .sum();
        best = best.min(crossing);
    }
    Ok(best)
}
