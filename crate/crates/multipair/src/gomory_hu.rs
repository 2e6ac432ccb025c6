//! Gomory–Hu trees for undirected graphs, built with Gusfield's method:
//! n − 1 max-flow computations, every one on the input graph itself (no
//! contractions), which keeps the flow count easy to audit.

use std::collections::HashMap;

use thiserror::Error;

use flow_core::{FlowNetwork, NodeId, QueryError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UndirectedError {
    #[error("edge {edge} endpoint {node} out of range for {node_count} nodes")]
    NodeOutOfRange {
        edge: usize,
        node: NodeId,
        node_count: usize,
    },
    #[error("edge {edge} is a self loop on node {node}")]
    SelfLoop { edge: usize, node: NodeId },
    #[error("edge {edge} has weight 0")]
    ZeroWeight { edge: usize },
    #[error("total weight too large for a flow realization")]
    WeightOverflow,
    #[error("arc ({src}, {dst}, {capacity}) has no matching reverse arc; the network is directed")]
    NotUndirected {
        src: NodeId,
        dst: NodeId,
        capacity: u64,
    },
}

/// An undirected weighted graph. Its flow semantics are given by the
/// directed realization: one arc in each direction per edge, each carrying
/// the full edge weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    node_count: usize,
    edges: Vec<(NodeId, NodeId, u64)>,
}

impl UndirectedGraph {
    pub fn new(
        node_count: usize,
        edges: impl IntoIterator<Item = (NodeId, NodeId, u64)>,
    ) -> Result<Self, UndirectedError> {
        let edges: Vec<_> = edges.into_iter().collect();
        let mut total: u64 = 0;
        for (idx, &(u, v, w)) in edges.iter().enumerate() {
            for node in [u, v] {
                if node >= node_count {
                    return Err(UndirectedError::NodeOutOfRange {
                        edge: idx,
                        node,
                        node_count,
                    });
                }
            }
            if u == v {
                return Err(UndirectedError::SelfLoop { edge: idx, node: u });
            }
            if w == 0 {
                return Err(UndirectedError::ZeroWeight { edge: idx });
            }
            total = total
                .checked_add(w)
                .filter(|&t| t <= flow_core::MAX_TOTAL_CAPACITY / 2)
                .ok_or(UndirectedError::WeightOverflow)?;
        }
        Ok(UndirectedGraph { node_count, edges })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[(NodeId, NodeId, u64)] {
        &self.edges
    }

    /// The directed realization: arcs `2i` (forward) and `2i + 1` (backward)
    /// for undirected edge `i`.
    pub fn to_flow_network(&self) -> FlowNetwork {
        let arcs = self
            .edges
            .iter()
            .flat_map(|&(u, v, w)| [(u, v, w), (v, u, w)]);
        FlowNetwork::new(self.node_count, arcs)
            .expect("validated at construction")
    }

    /// Max flow between two nodes under the undirected semantics.
    pub fn max_flow(&self, u: NodeId, v: NodeId) -> Result<u64, QueryError> {
        Ok(self.to_flow_network().max_flow(u, v)?.value)
    }

    /// Reads an undirected graph back out of a directed network, requiring
    /// every arc to pair up with a reverse arc of equal capacity. Undirected
    /// edges are emitted in the order of their forward (`src < dst`) arcs.
    pub fn from_flow_network(net: &FlowNetwork) -> Result<Self, UndirectedError> {
        let mut count: HashMap<(NodeId, NodeId, u64), usize> = HashMap::new();
        for (idx, e) in net.edges().iter().enumerate() {
            if e.src == e.dst {
                return Err(UndirectedError::SelfLoop {
                    edge: idx,
                    node: e.src,
                });
            }
            *count.entry((e.src, e.dst, e.capacity)).or_default() += 1;
        }
        for (&(u, v, w), &k) in &count {
            if count.get(&(v, u, w)).copied().unwrap_or(0) != k {
                return Err(UndirectedError::NotUndirected {
                    src: u,
                    dst: v,
                    capacity: w,
                });
            }
        }
        let edges: Vec<_> = net
            .edges()
            .iter()
            .filter(|e| e.src < e.dst)
            .map(|e| (e.src, e.dst, e.capacity))
            .collect();
        UndirectedGraph::new(net.node_count(), edges)
    }
}

/// Equivalent-flow tree: `gh_query(u, v)` equals the undirected max flow
/// between u and v for every pair. Rooted at node 0; `parent[0] == 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GomoryHuTree {
    parent: Vec<NodeId>,
    weight: Vec<u64>,
    depth: Vec<usize>,
    flow_computations: usize,
}

impl GomoryHuTree {
    pub fn parent(&self) -> &[NodeId] {
        &self.parent
    }

    /// `weight[i]` is the flow value between `i` and `parent[i]`
    /// (meaningless at the root).
    pub fn weight(&self) -> &[u64] {
        &self.weight
    }

    /// How many max-flow computations the construction spent; always
    /// `node_count - 1` (0 for the empty and single-node graphs).
    pub fn flow_computations(&self) -> usize {
        self.flow_computations
    }
}

pub fn gomory_hu_tree(graph: &UndirectedGraph) -> GomoryHuTree {
    let n = graph.node_count();
    let mut parent = vec![0 as NodeId; n];
    let mut weight = vec![0u64; n];
    let mut flow_computations = 0;
    if n > 0 {
        let net = graph.to_flow_network();
        for i in 1..n {
            let cut = net
                .min_cut(i, parent[i])
                .expect("i and parent[i] are distinct valid nodes");
            flow_computations += 1;
            weight[i] = cut.capacity;
            // Nodes still attached to the same parent move under i when they
            // land on i's side of the cut.
            for j in (i + 1)..n {
                if parent[j] == parent[i] && cut.source_side.contains(&j) {
                    parent[j] = i;
                }
            }
        }
    }
    // parent[i] < i for every non-root node, so depths resolve in one pass.
    let mut depth = vec![0usize; n];
    for i in 1..n {
        depth[i] = depth[parent[i]] + 1;
    }
    GomoryHuTree {
        parent,
        weight,
        depth,
        flow_computations,
    }
}

/// Minimum edge weight on the tree path between `u` and `v`, which equals
/// their max flow in the graph the tree was built from.
pub fn gh_query(tree: &GomoryHuTree, u: NodeId, v: NodeId) -> Result<u64, QueryError> {
    let n = tree.parent.len();
    for node in [u, v] {
        if node >= n {
            return Err(QueryError::InvalidNode {
                node,
                node_count: n,
            });
        }
    }
    if u == v {
        return Err(QueryError::SourceIsSink { node: u });
    }
    let (mut a, mut b) = (u, v);
    let mut min_weight = u64::MAX;
    while a != b {
        if tree.depth[a] >= tree.depth[b] {
            min_weight = min_weight.min(tree.weight[a]);
            a = tree.parent[a];
        } else {
            min_weight = min_weight.min(tree.weight[b]);
            b = tree.parent[b];
        }
    }
    Ok(min_weight)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_tree() {
        // 0-1 (1), 1-2 (2), 0-2 (3): flows are f(0,1)=3, f(0,2)=4, f(1,2)=3.
        let g = UndirectedGraph::new(3, vec![(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        let tree = gomory_hu_tree(&g);
        assert_eq!(tree.flow_computations(), 2);
        assert_eq!(gh_query(&tree, 0, 1).unwrap(), 3);
        assert_eq!(gh_query(&tree, 0, 2).unwrap(), 4);
        assert_eq!(gh_query(&tree, 1, 2).unwrap(), 3);
        assert_eq!(gh_query(&tree, 2, 1).unwrap(), 3);
    }

    #[test]
    fn disconnected_pairs_have_weight_zero() {
        let g = UndirectedGraph::new(4, vec![(0, 1, 5), (2, 3, 7)]).unwrap();
        let tree = gomory_hu_tree(&g);
        assert_eq!(tree.flow_computations(), 3);
        assert_eq!(gh_query(&tree, 0, 1).unwrap(), 5);
        assert_eq!(gh_query(&tree, 2, 3).unwrap(), 7);
        assert_eq!(gh_query(&tree, 0, 3).unwrap(), 0);
    }

    #[test]
    fn query_validation() {
        let g = UndirectedGraph::new(2, vec![(0, 1, 1)]).unwrap();
        let tree = gomory_hu_tree(&g);
        assert_eq!(
            gh_query(&tree, 0, 0).unwrap_err(),
            QueryError::SourceIsSink { node: 0 }
        );
        assert_eq!(
            gh_query(&tree, 0, 2).unwrap_err(),
            QueryError::InvalidNode {
                node: 2,
                node_count: 2
            }
        );
    }

    #[test]
    fn single_node_and_empty_graphs() {
        let tree = gomory_hu_tree(&UndirectedGraph::new(1, Vec::new()).unwrap());
        assert_eq!(tree.flow_computations(), 0);
        let tree = gomory_hu_tree(&UndirectedGraph::new(0, Vec::new()).unwrap());
        assert_eq!(tree.flow_computations(), 0);
    }

    #[test]
    fn realization_round_trip() {
        let g = UndirectedGraph::new(3, vec![(0, 1, 4), (1, 2, 2)]).unwrap();
        let net = g.to_flow_network();
        assert_eq!(net.edge_count(), 4);
        let back = UndirectedGraph::from_flow_network(&net).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn rejects_directed_networks() {
        let net = FlowNetwork::new(2, vec![(0, 1, 3)]).unwrap();
        assert!(matches!(
            UndirectedGraph::from_flow_network(&net).unwrap_err(),
            UndirectedError::NotUndirected { .. }
        ));
        // Reverse arc present but with a different capacity: still directed.
        let net = FlowNetwork::new(2, vec![(0, 1, 3), (1, 0, 2)]).unwrap();
        assert!(matches!(
            UndirectedGraph::from_flow_network(&net).unwrap_err(),
            UndirectedError::NotUndirected { .. }
        ));
    }

    #[test]
    fn rejects_bad_undirected_edges() {
        assert!(matches!(
            UndirectedGraph::new(2, vec![(0, 0, 1)]).unwrap_err(),
            UndirectedError::SelfLoop { .. }
        ));
        assert!(matches!(
            UndirectedGraph::new(2, vec![(0, 1, 0)]).unwrap_err(),
            UndirectedError::ZeroWeight { .. }
        ));
        assert!(matches!(
            UndirectedGraph::new(2, vec![(0, 3, 1)]).unwrap_err(),
            UndirectedError::NodeOutOfRange { .. }
        ));
    }
}
