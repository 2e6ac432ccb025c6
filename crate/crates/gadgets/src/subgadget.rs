//! Extraction of the single-(α, β, γ) slice of the unit-capacity gadget.

use crate::build::{GadgetError, GadgetGraph, GadgetVariant, Role};
use flow_core::{FlowNetwork, NodeId};

/// The subnetwork of a unit-capacity gadget induced on one α node, one β
/// family, and one γ node, with back-references into the full gadget.
#[derive(Debug, Clone)]
pub struct SubGadget {
    pub net: FlowNetwork,
    /// The α node, renumbered into the subnetwork.
    pub source: NodeId,
    /// The γ node, renumbered into the subnetwork.
    pub sink: NodeId,
    /// `node_ids[v]` is the full-gadget id of subnetwork node v (ascending).
    pub node_ids: Vec<NodeId>,
    /// `edge_ids[j]` is the full-gadget index of subnetwork edge j
    /// (ascending, so edge order matches the full gadget's).
    pub edge_ids: Vec<usize>,
}

/// Cuts the (α, β, γ) slice out of a unit-capacity gadget. The subnetwork
/// keeps the full gadget's relative node order and edge order.
pub fn subgadget(
    g: &GadgetGraph,
    alpha: usize,
    beta: usize,
    gamma: usize,
) -> Result<SubGadget, GadgetError> {
    if g.variant != GadgetVariant::Uncap {
        return Err(GadgetError::WrongVariant {
            expected: GadgetVariant::Uncap,
            actual: g.variant,
        });
    }
    for (block, index, count) in [
        (0, alpha, g.alpha_count()),
        (1, beta, g.beta_count()),
        (2, gamma, g.gamma_count()),
    ] {
        if index >= count {
            return Err(GadgetError::AssignmentOutOfRange {
                block,
                index,
                count,
            });
        }
    }
    let p = g.p.expect("uncap gadget stores p");
    let m = g.clause_count();

    // Full-gadget ids, ascending: α < every family node < γ by layout.
    let mut node_ids = Vec::with_capacity(2 * m + p + 2);
    node_ids.push(g.alpha_node(alpha));
    for clause in 0..m {
        node_ids.push(g.node_id(Role::BetaLeft { beta, clause }));
    }
    for clause in 0..m {
        node_ids.push(g.node_id(Role::BetaRight { beta, clause }));
    }
    node_ids.push(g.node_id(Role::BetaHub { beta }));
    for lane in 1..p {
        node_ids.push(g.node_id(Role::BetaHubLane { beta, lane }));
    }
    node_ids.push(g.gamma_node(gamma));
    debug_assert!(node_ids.windows(2).all(|w| w[0] < w[1]));

    let sub_index = |full: NodeId| node_ids.binary_search(&full).ok();
    let mut edges = Vec::new();
    let mut edge_ids = Vec::new();
    for (j, edge) in g.net.edges().iter().enumerate() {
        if let (Some(src), Some(dst)) = (sub_index(edge.src), sub_index(edge.dst)) {
            edges.push((src, dst, edge.capacity));
            edge_ids.push(j);
        }
    }
    let net = FlowNetwork::new(node_ids.len(), edges)
        .expect("induced subnetwork of a valid gadget is valid");
    Ok(SubGadget {
        net,
        source: 0,
        sink: node_ids.len() - 1,
        node_ids,
        edge_ids,
    })
}
