use std::collections::BTreeSet;
use thiserror::Error;

pub type NodeId = usize;

/// Hard ceiling on the sum of all edge capacities. Keeping totals at or below
/// 2^62 leaves headroom so every flow value, cut capacity, and residual update
/// fits comfortably in `u64` arithmetic.
pub const MAX_TOTAL_CAPACITY: u64 = 1 << 62;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub src: NodeId,
    pub dst: NodeId,
    pub capacity: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NetworkError {
    #[error("edge {edge} endpoint {node} out of range for {node_count} nodes")]
    NodeOutOfRange {
        edge: usize,
        node: NodeId,
        node_count: usize,
    },
    #[error("edge {edge} has capacity 0; an absent edge already encodes capacity 0")]
    ZeroCapacity { edge: usize },
    #[error("total capacity exceeds 2^62")]
    CapacityOverflow,
}

/// A directed flow network with positive integer capacities.
///
/// Parallel edges are kept distinct: each `(src, dst, capacity)` triple handed
/// to [`FlowNetwork::new`] stays its own edge with its own index, and flow
/// assignments report per-edge values under the same indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    node_count: usize,
    edges: Vec<Edge>,
    out_edges: Vec<Vec<usize>>,
}

impl FlowNetwork {
    /// Builds a network over nodes `0..node_count`.
    ///
    /// Rejects endpoints out of range, zero capacities (an edge that would
    /// carry nothing is simply not listed), and total capacity above 2^62.
    pub fn new(
        node_count: usize,
        edges: impl IntoIterator<Item = (NodeId, NodeId, u64)>,
    ) -> Result<Self, NetworkError> {
        let mut out_edges = vec![Vec::new(); node_count];
        let mut edge_list = Vec::new();
        let mut total: u64 = 0;
        for (idx, (src, dst, capacity)) in edges.into_iter().enumerate() {
            for node in [src, dst] {
                if node >= node_count {
                    return Err(NetworkError::NodeOutOfRange {
                        edge: idx,
                        node,
                        node_count,
                    });
                }
            }
            if capacity == 0 {
                return Err(NetworkError::ZeroCapacity { edge: idx });
            }
            total = total
                .checked_add(capacity)
                .filter(|&t| t <= MAX_TOTAL_CAPACITY)
                .ok_or(NetworkError::CapacityOverflow)?;
            out_edges[src].push(edge_list.len());
            edge_list.push(Edge { src, dst, capacity });
        }
        Ok(FlowNetwork {
            node_count,
            edges: edge_list,
            out_edges,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Indices of the edges leaving `node`, in insertion order.
    pub fn out_edges(&self, node: NodeId) -> &[usize] {
        &self.out_edges[node]
    }

    /// Total capacity of the edges crossing from `source_side` to its
    /// complement. `source_side` must only contain valid node ids.
    pub fn cut_capacity(&self, source_side: &BTreeSet<NodeId>) -> u64 {
        debug_assert!(source_side.iter().all(|&v| v < self.node_count));
        self.edges
            .iter()
            .filter(|e| source_side.contains(&e.src) && !source_side.contains(&e.dst))
            .map(|e| e.capacity)
            .sum()
    }

    /// True iff the network has no directed cycle (Kahn's algorithm).
    pub fn is_acyclic(&self) -> bool {
        let mut in_degree = vec![0usize; self.node_count];
        for e in &self.edges {
            in_degree[e.dst] += 1;
        }
        let mut queue: Vec<NodeId> = (0..self.node_count)
            .filter(|&v| in_degree[v] == 0)
            .collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &e in &self.out_edges[v] {
                let w = self.edges[e].dst;
                in_degree[w] -= 1;
                if in_degree[w] == 0 {
                    queue.push(w);
                }
            }
        }
        seen == self.node_count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_endpoint() {
        let err = FlowNetwork::new(2, vec![(0, 2, 1)]).unwrap_err();
        assert_eq!(
            err,
            NetworkError::NodeOutOfRange {
                edge: 0,
                node: 2,
                node_count: 2
            }
        );
    }

    #[test]
    fn rejects_zero_capacity() {
        let err = FlowNetwork::new(2, vec![(0, 1, 0)]).unwrap_err();
        assert_eq!(err, NetworkError::ZeroCapacity { edge: 0 });
    }

    #[test]
    fn rejects_capacity_overflow() {
        let half = 1u64 << 61;
        assert!(FlowNetwork::new(2, vec![(0, 1, half), (1, 0, half)]).is_ok());
        let err = FlowNetwork::new(2, vec![(0, 1, half), (1, 0, half), (0, 1, 1)]).unwrap_err();
        assert_eq!(err, NetworkError::CapacityOverflow);
    }

    #[test]
    fn keeps_parallel_edges_distinct() {
        let net = FlowNetwork::new(2, vec![(0, 1, 2), (0, 1, 3)]).unwrap();
        assert_eq!(net.edge_count(), 2);
        assert_eq!(net.out_edges(0), &[0, 1]);
    }

    #[test]
    fn cut_capacity_sums_crossing_edges_only() {
        // 0 -> 1 -> 2 with a back edge 2 -> 0.
        let net = FlowNetwork::new(3, vec![(0, 1, 4), (1, 2, 7), (2, 0, 9)]).unwrap();
        let side: BTreeSet<_> = [0].into_iter().collect();
        assert_eq!(net.cut_capacity(&side), 4);
        let side: BTreeSet<_> = [0, 1].into_iter().collect();
        assert_eq!(net.cut_capacity(&side), 7);
        let side: BTreeSet<_> = [0, 1, 2].into_iter().collect();
        assert_eq!(net.cut_capacity(&side), 0);
    }

    #[test]
    fn acyclicity() {
        let dag = FlowNetwork::new(3, vec![(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap();
        assert!(dag.is_acyclic());
        let cyc = FlowNetwork::new(3, vec![(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        assert!(!cyc.is_acyclic());
        let empty = FlowNetwork::new(4, Vec::new()).unwrap();
        assert!(empty.is_acyclic());
    }
}
