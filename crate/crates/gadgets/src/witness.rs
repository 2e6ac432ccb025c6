//! Explicit witness flows and cuts for the gadget constructions.
//!
//! These build the objects the correctness arguments promise — a concrete
//! flow of the claimed value, or a concrete cut of the claimed capacity —
//! so tests can machine-check them with the generic flow validators instead
//! of trusting the solver.

use crate::build::{GadgetError, GadgetGraph, GadgetVariant, Role};
use crate::subgadget::subgadget;
use flow_core::{FlowResult, NodeId};
use std::collections::{BTreeSet, HashMap};

fn check_index(g: &GadgetGraph, block: usize, index: usize) -> Result<(), GadgetError> {
    let count = g.partition.assignment_count(block);
    if index >= count {
        return Err(GadgetError::AssignmentOutOfRange {
            block,
            index,
            count,
        });
    }
    Ok(())
}

fn expect_variant(g: &GadgetGraph, expected: GadgetVariant) -> Result<(), GadgetError> {
    if g.variant != expected {
        return Err(GadgetError::WrongVariant {
            expected,
            actual: g.variant,
        });
    }
    Ok(())
}

/// Clause satisfaction rows for fixed assignments of each block.
fn sat_row(g: &GadgetGraph, block: usize, index: usize) -> Vec<bool> {
    let pa = g.partition.assignment(block, index);
    g.formula
        .clauses()
        .iter()
        .map(|c| pa.satisfies(c))
        .collect()
}

/// Edge index lookup by endpoint pair. Both gadget variants and the
/// subgadget have at most one edge per ordered node pair.
fn edge_lookup(net: &flow_core::FlowNetwork) -> HashMap<(NodeId, NodeId), usize> {
    let mut map = HashMap::with_capacity(net.edge_count());
    for (j, e) in net.edges().iter().enumerate() {
        let prev = map.insert((e.src, e.dst), j);
        debug_assert!(prev.is_none(), "parallel edge between {} and {}", e.src, e.dst);
    }
    map
}

/// Builds the explicit flow of value |I| + min(m − |I|, p − 1) through the
/// (α, β, γ) slice of a unit-capacity gadget, where I is a largest set of
/// jointly-unsatisfied clauses of size at most m − p + 1.
///
/// The flow routes one unit per clause of I straight through its entry
/// node, then rations up to p − 1 more units of surplus through the
/// collector lanes. Its value matches the slice's exact max flow.
pub fn witness_flow_uncap(
    g: &GadgetGraph,
    alpha: usize,
    beta: usize,
    gamma: usize,
) -> Result<FlowResult, GadgetError> {
    expect_variant(g, GadgetVariant::Uncap)?;
    check_index(g, 0, alpha)?;
    check_index(g, 1, beta)?;
    check_index(g, 2, gamma)?;
    let p = g.p.expect("uncap gadget stores p");
    let m = g.clause_count();
    let asat = sat_row(g, 0, alpha);
    let bsat = sat_row(g, 1, beta);
    let gsat = sat_row(g, 2, gamma);

    let jointly_unsat: Vec<usize> = (0..m)
        .filter(|&i| !asat[i] && !bsat[i] && !gsat[i])
        .collect();
    let chosen = jointly_unsat.len().min(m - p + 1);
    let in_i: BTreeSet<usize> = jointly_unsat[..chosen].iter().copied().collect();
    // Surplus clauses, routed through the collector: first those neither α
    // nor β satisfies (they enter via their entry node), then the rest
    // (which enter via their forwarding node directly).
    let via_left: Vec<usize> = (0..m)
        .filter(|i| !in_i.contains(i) && !asat[*i] && !bsat[*i])
        .collect();
    let via_right: Vec<usize> = (0..m)
        .filter(|i| !in_i.contains(i) && (asat[*i] || bsat[*i]))
        .collect();

    let sub = subgadget(g, alpha, beta, gamma)?;
    let lookup = edge_lookup(&sub.net);
    let sub_id = |role: Role| -> NodeId {
        sub.node_ids
            .binary_search(&g.node_id(role))
            .expect("slice contains all roles of its own family")
    };
    let left = |i: usize| sub_id(Role::BetaLeft { beta, clause: i });
    let right = |i: usize| sub_id(Role::BetaRight { beta, clause: i });
    let hub = sub_id(Role::BetaHub { beta });
    let lane = |j: usize| sub_id(Role::BetaHubLane { beta, lane: j });

    let mut flows = vec![0u64; sub.net.edge_count()];
    let mut ship = |path: &[NodeId]| {
        for w in path.windows(2) {
            flows[lookup[&(w[0], w[1])]] += 1;
        }
    };
    for &i in &in_i {
        ship(&[sub.source, left(i), sub.sink]);
    }
    let mut next_lane = 1;
    for &i in &via_left {
        if next_lane > p - 1 {
            break;
        }
        ship(&[sub.source, left(i), right(i), hub, lane(next_lane), sub.sink]);
        next_lane += 1;
    }
    for &i in &via_right {
        if next_lane > p - 1 {
            break;
        }
        ship(&[sub.source, right(i), hub, lane(next_lane), sub.sink]);
        next_lane += 1;
    }

    let value = (chosen + (m - chosen).min(p - 1)) as u64;
    Ok(FlowResult {
        value,
        edge_flows: flows,
    })
}

/// Builds the explicit flow of value 2^|U₂|·m from α to γ in a
/// block-capacity gadget, defined whenever every completion β leaves the
/// triple (α, β, γ) satisfying at most p − 1 clauses.
///
/// Per β the flow pushes one unit per clause of a fixed (m − p + 1)-sized
/// jointly-unsatisfied set through that β's unit lane, and the remaining
/// p − 1 units through the collector and the global hub — so each
/// collector→hub edge carries exactly p − 1 units.
pub fn witness_flow_cap(
    g: &GadgetGraph,
    alpha: usize,
    gamma: usize,
) -> Result<FlowResult, GadgetError> {
    expect_variant(g, GadgetVariant::Cap)?;
    check_index(g, 0, alpha)?;
    check_index(g, 2, gamma)?;
    let p = g.p.expect("cap gadget stores p");
    let m = g.clause_count();
    let asat = sat_row(g, 0, alpha);
    let gsat = sat_row(g, 2, gamma);

    let lookup = edge_lookup(&g.net);
    let mut flows = vec![0u64; g.net.edge_count()];
    let ship = |flows: &mut Vec<u64>, path: &[NodeId]| {
        for w in path.windows(2) {
            flows[lookup[&(w[0], w[1])]] += 1;
        }
    };
    let alpha_node = g.alpha_node(alpha);
    let gamma_node = g.gamma_node(gamma);

    for beta in 0..g.beta_count() {
        let bsat = sat_row(g, 1, beta);
        let jointly_unsat: Vec<usize> = (0..m)
            .filter(|&i| !asat[i] && !bsat[i] && !gsat[i])
            .collect();
        if jointly_unsat.len() < m - p + 1 {
            return Err(GadgetError::TripleSatisfiesTooMany {
                alpha,
                beta,
                gamma,
                satisfied: m - jointly_unsat.len(),
                limit: p - 1,
            });
        }
        let in_i: BTreeSet<usize> = jointly_unsat[..m - p + 1].iter().copied().collect();
        for i in 0..m {
            if in_i.contains(&i) {
                ship(
                    &mut flows,
                    &[
                        alpha_node,
                        g.node_id(Role::ClauseUnsat { clause: i }),
                        g.node_id(Role::BetaLeft { beta, clause: i }),
                        g.node_id(Role::BetaRight { beta, clause: i }),
                        g.node_id(Role::ClauseOut { clause: i }),
                        gamma_node,
                    ],
                );
            } else if !asat[i] {
                ship(
                    &mut flows,
                    &[
                        alpha_node,
                        g.node_id(Role::ClauseUnsat { clause: i }),
                        g.node_id(Role::BetaLeft { beta, clause: i }),
                        g.node_id(Role::BetaMid { beta, clause: i }),
                        g.node_id(Role::BetaHub { beta }),
                        g.node_id(Role::Hub),
                        gamma_node,
                    ],
                );
            } else {
                ship(
                    &mut flows,
                    &[
                        alpha_node,
                        g.node_id(Role::ClauseSat { clause: i }),
                        g.node_id(Role::BetaMid { beta, clause: i }),
                        g.node_id(Role::BetaHub { beta }),
                        g.node_id(Role::Hub),
                        gamma_node,
                    ],
                );
            }
        }
    }
    let value = (g.beta_count() * m) as u64;
    Ok(FlowResult {
        value,
        edge_flows: flows,
    })
}

/// Builds an explicit α→γ cut of capacity 2^|U₂|·m − sat(Φ) + p − 1 in a
/// block-capacity gadget from a full assignment Φ satisfying at least p
/// clauses. Since sat(Φ) ≥ p, the capacity is at most the decision
/// threshold 2^|U₂|·m − 1.
///
/// The source side keeps Φ's α node, the entry node matching Φ on each
/// clause, Φ's whole β family except lanes that must pay, every clause exit
/// Φ's γ part satisfies, and every γ node other than Φ's.
pub fn witness_cut_cap(
    g: &GadgetGraph,
    phi: &[bool],
) -> Result<BTreeSet<NodeId>, GadgetError> {
    expect_variant(g, GadgetVariant::Cap)?;
    if phi.len() != g.formula.num_vars() as usize {
        return Err(GadgetError::AssignmentLength {
            got: phi.len(),
            expected: g.formula.num_vars() as usize,
        });
    }
    let p = g.p.expect("cap gadget stores p");
    let satisfied = g.formula.satisfied_count(phi);
    if satisfied < p {
        return Err(GadgetError::NotEnoughSatisfied { satisfied, p });
    }
    let [ai, bi, gi] = g.partition.decompose(phi);
    let m = g.clause_count();
    let asat = sat_row(g, 0, ai);
    let bsat = sat_row(g, 1, bi);
    let gsat = sat_row(g, 2, gi);

    let mut side = BTreeSet::new();
    side.insert(g.alpha_node(ai));
    side.insert(g.node_id(Role::BetaHub { beta: bi }));
    for i in 0..m {
        if asat[i] {
            side.insert(g.node_id(Role::ClauseSat { clause: i }));
        } else {
            side.insert(g.node_id(Role::ClauseUnsat { clause: i }));
        }
        side.insert(g.node_id(Role::BetaMid { beta: bi, clause: i }));
        if gsat[i] {
            side.insert(g.node_id(Role::ClauseOut { clause: i }));
            side.insert(g.node_id(Role::BetaLeft { beta: bi, clause: i }));
            side.insert(g.node_id(Role::BetaRight { beta: bi, clause: i }));
        } else if bsat[i] {
            side.insert(g.node_id(Role::BetaLeft { beta: bi, clause: i }));
        }
    }
    for other in 0..g.gamma_count() {
        if other != gi {
            side.insert(g.gamma_node(other));
        }
    }
    Ok(side)
}

/// Builds the cut certifying the bounded-pair property: in either
/// assignment-pair gadget, every (α, γ) max flow is bounded by a capacity
/// independent of which pair is queried, so bounded-flow enumeration over
/// all pairs stays cheap.
///
/// For the unit-capacity variant the source side is α plus every entry
/// node; for the block-capacity variant it is α plus every shared clause
/// entry, every entry node, and every middle node. All cut edges have
/// capacity one.
pub fn witness_cut_kpmf(
    g: &GadgetGraph,
    variant: GadgetVariant,
    alpha: usize,
    gamma: usize,
) -> Result<BTreeSet<NodeId>, GadgetError> {
    if variant == GadgetVariant::Mlec || g.variant != variant {
        return Err(GadgetError::WrongVariant {
            expected: variant,
            actual: g.variant,
        });
    }
    check_index(g, 0, alpha)?;
    check_index(g, 2, gamma)?;
    let m = g.clause_count();
    let mut side = BTreeSet::new();
    side.insert(g.alpha_node(alpha));
    match variant {
        GadgetVariant::Uncap => {
            for beta in 0..g.beta_count() {
                for clause in 0..m {
                    side.insert(g.node_id(Role::BetaLeft { beta, clause }));
                }
            }
        }
        GadgetVariant::Cap => {
            for clause in 0..m {
                side.insert(g.node_id(Role::ClauseSat { clause }));
                side.insert(g.node_id(Role::ClauseUnsat { clause }));
            }
            for beta in 0..g.beta_count() {
                for clause in 0..m {
                    side.insert(g.node_id(Role::BetaLeft { beta, clause }));
                    side.insert(g.node_id(Role::BetaMid { beta, clause }));
                }
            }
        }
        GadgetVariant::Mlec => unreachable!(),
    }
    Ok(side)
}
