//! Flow-network gadget builders.
//!
//! Each builder turns a CNF formula plus a variable partition into a flow
//! network whose max-flow values between assignment nodes answer questions
//! of the form "can the middle block be completed so that at least p clauses
//! hold?". Node identities are tracked by a `Role` table so tests and tools
//! can reason about the structure, and every edge carries a two-color tag
//! that records which side of the construction it belongs to.

use crate::cnf::CnfFormula;
use crate::partition::{Partition, PartitionError, MAX_BLOCK_SIZE};
use flow_core::{FlowNetwork, NetworkError, NodeId};
use thiserror::Error;

/// Which construction a gadget graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetVariant {
    /// Unit capacities everywhere; per-β rationing lanes.
    Uncap,
    /// Shared per-clause entry/exit nodes with block-sized capacities.
    Cap,
    /// Two-block, unit-capacity construction queried for local edge
    /// connectivity.
    Mlec,
}

impl GadgetVariant {
    pub fn label(self) -> &'static str {
        match self {
            GadgetVariant::Uncap => "uncap",
            GadgetVariant::Cap => "cap",
            GadgetVariant::Mlec => "mlec",
        }
    }
}

/// Structural identity of a gadget node. `index` fields are assignment
/// indices into the corresponding partition block; `clause` fields are
/// 0-based clause positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// First-block assignment node (flow source side).
    Alpha { index: usize },
    /// Third-block assignment node (flow sink side).
    Gamma { index: usize },
    /// Per-(β, clause) entry node; carries flow for clauses the chosen
    /// triple leaves unsatisfied.
    BetaLeft { beta: usize, clause: usize },
    /// Per-(β, clause) node that forwards surplus flow to the β collector.
    BetaRight { beta: usize, clause: usize },
    /// Per-(β, clause) middle node between the entry and the collector
    /// (capacitated variant only).
    BetaMid { beta: usize, clause: usize },
    /// Per-β collector for surplus flow.
    BetaHub { beta: usize },
    /// One of the p−1 rationing lanes under a β collector (uncapacitated
    /// variant only); lanes are numbered 1..=p−1.
    BetaHubLane { beta: usize, lane: usize },
    /// Per-clause entry shared by every α that satisfies the clause
    /// (capacitated variant only).
    ClauseSat { clause: usize },
    /// Per-clause entry shared by every α that misses the clause
    /// (capacitated variant only).
    ClauseUnsat { clause: usize },
    /// Per-clause exit collector in front of the γ layer (capacitated
    /// variant only).
    ClauseOut { clause: usize },
    /// Global rationing hub between the β collectors and the γ layer
    /// (capacitated variant, p ≥ 2 only).
    Hub,
    /// Second-block assignment node (connectivity variant sink side).
    Beta { index: usize },
    /// Clause node on the α-satisfies / β-satisfies lane (connectivity
    /// variant only).
    ClauseSatSat { clause: usize },
    /// Clause node on the α-satisfies / β-misses lane.
    ClauseSatUnsat { clause: usize },
    /// Clause node on the α-misses / β-satisfies lane.
    ClauseUnsatSat { clause: usize },
}

/// Two-color edge tag: `Blue` edges belong to the "clause still open" side
/// of a construction, `Red` edges to the "clause already satisfied" side
/// and the rationing machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeColor {
    Blue,
    Red,
}

impl EdgeColor {
    pub fn label(self) -> &'static str {
        match self {
            EdgeColor::Blue => "blue",
            EdgeColor::Red => "red",
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GadgetError {
    #[error("target p = {p} must satisfy 1 <= p <= {clause_count} (clause count)")]
    BadP { p: usize, clause_count: usize },
    #[error("block {block} has {size} variables, limit is {MAX_BLOCK_SIZE}")]
    BlockTooLarge { block: usize, size: usize },
    #[error("partition covers {partition_vars} variables, formula has {formula_vars}")]
    VarMismatch {
        partition_vars: u32,
        formula_vars: u32,
    },
    #[error("operation needs a {expected:?} gadget, got {actual:?}")]
    WrongVariant {
        expected: GadgetVariant,
        actual: GadgetVariant,
    },
    #[error("assignment index {index} out of range for block {block} (count {count})")]
    AssignmentOutOfRange {
        block: usize,
        index: usize,
        count: usize,
    },
    #[error(
        "assignment ({alpha}, {beta}, {gamma}) satisfies {satisfied} clauses, \
         but the witness flow needs every completion to satisfy at most {limit}"
    )]
    TripleSatisfiesTooMany {
        alpha: usize,
        beta: usize,
        gamma: usize,
        satisfied: usize,
        limit: usize,
    },
    #[error("assignment satisfies {satisfied} clauses, cut witness needs at least {p}")]
    NotEnoughSatisfied { satisfied: usize, p: usize },
    #[error("assignment has {got} values, formula has {expected} variables")]
    AssignmentLength { got: usize, expected: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Network(#[from] NetworkError),
}

/// A built gadget: the flow network plus everything needed to interpret it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub net: FlowNetwork,
    /// Role of node v is `roles[v]`; this is a bijection onto the layout.
    pub roles: Vec<Role>,
    /// Color of edge j is `colors[j]`.
    pub colors: Vec<EdgeColor>,
    pub variant: GadgetVariant,
    /// Clause threshold the gadget was built for (None for `Mlec`).
    pub p: Option<usize>,
    pub partition: Partition,
    pub formula: CnfFormula,
}

impl GadgetGraph {
    pub fn clause_count(&self) -> usize {
        self.formula.clause_count()
    }

    pub fn alpha_count(&self) -> usize {
        self.partition.assignment_count(0)
    }

    pub fn beta_count(&self) -> usize {
        self.partition.assignment_count(1)
    }

    pub fn gamma_count(&self) -> usize {
        self.partition.assignment_count(2)
    }

    /// Node id of a role under this gadget's layout. Panics on roles that do
    /// not exist in the gadget (wrong variant, index out of range).
    pub fn node_id(&self, role: Role) -> NodeId {
        let m = self.clause_count();
        let a_count = self.alpha_count();
        let b_count = self.beta_count();
        let g_count = self.gamma_count();
        match self.variant {
            GadgetVariant::Uncap => {
                let p = self.p.expect("uncap gadget stores p");
                let family = 2 * m + p;
                let beta_base = |b: usize| a_count + b * family;
                match role {
                    Role::Alpha { index } if index < a_count => index,
                    Role::BetaLeft { beta, clause } if beta < b_count && clause < m => {
                        beta_base(beta) + clause
                    }
                    Role::BetaRight { beta, clause } if beta < b_count && clause < m => {
                        beta_base(beta) + m + clause
                    }
                    Role::BetaHub { beta } if beta < b_count => beta_base(beta) + 2 * m,
                    Role::BetaHubLane { beta, lane }
                        if beta < b_count && lane >= 1 && lane < p =>
                    {
                        beta_base(beta) + 2 * m + lane
                    }
                    Role::Gamma { index } if index < g_count => {
                        a_count + b_count * family + index
                    }
                    _ => panic!("role {role:?} not present in this gadget"),
                }
            }
            GadgetVariant::Cap => {
                let p = self.p.expect("cap gadget stores p");
                let family = 3 * m + 1;
                let beta_base = |b: usize| a_count + b * family;
                let clause_base = a_count + b_count * family + g_count;
                match role {
                    Role::Alpha { index } if index < a_count => index,
                    Role::BetaLeft { beta, clause } if beta < b_count && clause < m => {
                        beta_base(beta) + clause
                    }
                    Role::BetaMid { beta, clause } if beta < b_count && clause < m => {
                        beta_base(beta) + m + clause
                    }
                    Role::BetaRight { beta, clause } if beta < b_count && clause < m => {
                        beta_base(beta) + 2 * m + clause
                    }
                    Role::BetaHub { beta } if beta < b_count => beta_base(beta) + 3 * m,
                    Role::Gamma { index } if index < g_count => {
                        a_count + b_count * family + index
                    }
                    Role::ClauseSat { clause } if clause < m => clause_base + 2 * clause,
                    Role::ClauseUnsat { clause } if clause < m => clause_base + 2 * clause + 1,
                    Role::ClauseOut { clause } if clause < m => clause_base + 2 * m + clause,
                    Role::Hub if p >= 2 => clause_base + 3 * m,
                    _ => panic!("role {role:?} not present in this gadget"),
                }
            }
            GadgetVariant::Mlec => match role {
                Role::Alpha { index } if index < a_count => index,
                Role::Beta { index } if index < b_count => a_count + index,
                Role::ClauseSatSat { clause } if clause < m => a_count + b_count + 3 * clause,
                Role::ClauseSatUnsat { clause } if clause < m => {
                    a_count + b_count + 3 * clause + 1
                }
                Role::ClauseUnsatSat { clause } if clause < m => {
                    a_count + b_count + 3 * clause + 2
                }
                _ => panic!("role {role:?} not present in this gadget"),
            },
        }
    }

    pub fn alpha_node(&self, index: usize) -> NodeId {
        self.node_id(Role::Alpha { index })
    }

    pub fn gamma_node(&self, index: usize) -> NodeId {
        self.node_id(Role::Gamma { index })
    }

    /// Second-block assignment node (connectivity variant only).
    pub fn beta_node(&self, index: usize) -> NodeId {
        self.node_id(Role::Beta { index })
    }

    pub fn alpha_nodes(&self) -> Vec<NodeId> {
        (0..self.alpha_count()).map(|i| self.alpha_node(i)).collect()
    }

    pub fn gamma_nodes(&self) -> Vec<NodeId> {
        (0..self.gamma_count()).map(|i| self.gamma_node(i)).collect()
    }

    pub fn beta_nodes(&self) -> Vec<NodeId> {
        (0..self.beta_count()).map(|i| self.beta_node(i)).collect()
    }

    /// Decision threshold for the assignment-pair queries: a pair (α, γ) can
    /// be completed to satisfy ≥ p clauses iff its max flow is at most
    /// 2^|U₂|·m − 1. Not defined for the connectivity variant.
    pub fn threshold(&self) -> Option<u64> {
        match self.variant {
            GadgetVariant::Uncap | GadgetVariant::Cap => {
                Some(self.beta_count() as u64 * self.clause_count() as u64 - 1)
            }
            GadgetVariant::Mlec => None,
        }
    }
}

/// Per-assignment clause satisfaction table for one block:
/// `table[index][clause]`.
pub(crate) fn block_sat_table(formula: &CnfFormula, partition: &Partition, block: usize) -> Vec<Vec<bool>> {
    (0..partition.assignment_count(block))
        .map(|index| {
            let pa = partition.assignment(block, index);
            formula
                .clauses()
                .iter()
                .map(|clause| pa.satisfies(clause))
                .collect()
        })
        .collect()
}

fn check_inputs(
    formula: &CnfFormula,
    partition: &Partition,
    p: Option<usize>,
) -> Result<(), GadgetError> {
    if partition.num_vars() != formula.num_vars() {
        return Err(GadgetError::VarMismatch {
            partition_vars: partition.num_vars(),
            formula_vars: formula.num_vars(),
        });
    }
    for (block, size) in partition.sizes().into_iter().enumerate() {
        if size > MAX_BLOCK_SIZE {
            return Err(GadgetError::BlockTooLarge { block, size });
        }
    }
    if let Some(p) = p {
        if p == 0 || p > formula.clause_count() {
            return Err(GadgetError::BadP {
                p,
                clause_count: formula.clause_count(),
            });
        }
    }
    Ok(())
}

/// Builds the unit-capacity gadget for (formula, partition, p).
///
/// Layout: α nodes first, then per-β families (m entry nodes, m forwarding
/// nodes, the collector, p−1 lanes), then γ nodes. All edges have capacity
/// one. For every (α, β, γ) the max flow from α to γ inside the β family is
/// m exactly when the triple can be completed no further — i.e. it equals
/// min(m, (m − s) + (p − 1)) where s counts clauses the triple satisfies.
pub fn build_uncap_gadget(
    formula: &CnfFormula,
    partition: &Partition,
    p: usize,
) -> Result<GadgetGraph, GadgetError> {
    check_inputs(formula, partition, Some(p))?;
    let m = formula.clause_count();
    let a_count = partition.assignment_count(0);
    let b_count = partition.assignment_count(1);
    let g_count = partition.assignment_count(2);
    let family = 2 * m + p;
    let beta_base = |b: usize| a_count + b * family;
    let beta_left = |b: usize, i: usize| beta_base(b) + i;
    let beta_right = |b: usize, i: usize| beta_base(b) + m + i;
    let beta_hub = |b: usize| beta_base(b) + 2 * m;
    let beta_hub_lane = |b: usize, j: usize| beta_base(b) + 2 * m + j;
    let gamma_node = |g: usize| a_count + b_count * family + g;

    let mut roles = Vec::with_capacity(a_count + b_count * family + g_count);
    for index in 0..a_count {
        roles.push(Role::Alpha { index });
    }
    for beta in 0..b_count {
        for clause in 0..m {
            roles.push(Role::BetaLeft { beta, clause });
        }
        for clause in 0..m {
            roles.push(Role::BetaRight { beta, clause });
        }
        roles.push(Role::BetaHub { beta });
        for lane in 1..p {
            roles.push(Role::BetaHubLane { beta, lane });
        }
    }
    for index in 0..g_count {
        roles.push(Role::Gamma { index });
    }
    let node_count = roles.len();

    let asat = block_sat_table(formula, partition, 0);
    let bsat = block_sat_table(formula, partition, 1);
    let gsat = block_sat_table(formula, partition, 2);

    let mut edges: Vec<(NodeId, NodeId, u64)> = Vec::new();
    let mut colors: Vec<EdgeColor> = Vec::new();
    let push = |edges: &mut Vec<(NodeId, NodeId, u64)>,
                    colors: &mut Vec<EdgeColor>,
                    src: NodeId,
                    dst: NodeId,
                    color: EdgeColor| {
        edges.push((src, dst, 1));
        colors.push(color);
    };

    // Entry edges: α reaches the entry node of a clause neither α nor β
    // satisfies, and the forwarding node otherwise.
    for a in 0..a_count {
        for b in 0..b_count {
            for i in 0..m {
                if !asat[a][i] && !bsat[b][i] {
                    push(&mut edges, &mut colors, a, beta_left(b, i), EdgeColor::Blue);
                } else {
                    push(&mut edges, &mut colors, a, beta_right(b, i), EdgeColor::Red);
                }
            }
        }
    }
    // Entry nodes reach every γ that leaves the clause unsatisfied.
    for b in 0..b_count {
        for g in 0..g_count {
            for i in 0..m {
                if !gsat[g][i] {
                    push(
                        &mut edges,
                        &mut colors,
                        beta_left(b, i),
                        gamma_node(g),
                        EdgeColor::Blue,
                    );
                }
            }
        }
    }
    // Rationing lanes reach every γ.
    for b in 0..b_count {
        for g in 0..g_count {
            for j in 1..p {
                push(
                    &mut edges,
                    &mut colors,
                    beta_hub_lane(b, j),
                    gamma_node(g),
                    EdgeColor::Red,
                );
            }
        }
    }
    // Internal family wiring: entry → forwarding → collector.
    for b in 0..b_count {
        for i in 0..m {
            push(
                &mut edges,
                &mut colors,
                beta_left(b, i),
                beta_right(b, i),
                EdgeColor::Red,
            );
            push(
                &mut edges,
                &mut colors,
                beta_right(b, i),
                beta_hub(b),
                EdgeColor::Red,
            );
        }
    }
    // Collector → lanes.
    for b in 0..b_count {
        for j in 1..p {
            push(
                &mut edges,
                &mut colors,
                beta_hub(b),
                beta_hub_lane(b, j),
                EdgeColor::Red,
            );
        }
    }

    let net = FlowNetwork::new(node_count, edges)?;
    Ok(GadgetGraph {
        net,
        roles,
        colors,
        variant: GadgetVariant::Uncap,
        p: Some(p),
        partition: partition.clone(),
        formula: formula.clone(),
    })
}

/// Builds the block-capacity gadget for (formula, partition, p).
///
/// Layout: α nodes, per-β families (entry, middle, forwarding node per
/// clause plus a collector), γ nodes, then shared per-clause nodes (a
/// satisfied-entry/missed-entry pair per clause, an exit collector per
/// clause) and — when p ≥ 2 — one global hub. Writing B = 2^|U₂|, the α
/// entry edges and clause exits carry capacity B, collector→hub edges carry
/// p−1, hub→γ edges carry B·(p−1), and everything inside a β family is a
/// unit edge.
pub fn build_cap_gadget(
    formula: &CnfFormula,
    partition: &Partition,
    p: usize,
) -> Result<GadgetGraph, GadgetError> {
    check_inputs(formula, partition, Some(p))?;
    let m = formula.clause_count();
    let a_count = partition.assignment_count(0);
    let b_count = partition.assignment_count(1);
    let g_count = partition.assignment_count(2);
    let block_cap = b_count as u64;
    let family = 3 * m + 1;
    let beta_base = |b: usize| a_count + b * family;
    let beta_left = |b: usize, i: usize| beta_base(b) + i;
    let beta_mid = |b: usize, i: usize| beta_base(b) + m + i;
    let beta_right = |b: usize, i: usize| beta_base(b) + 2 * m + i;
    let beta_hub = |b: usize| beta_base(b) + 3 * m;
    let gamma_node = |g: usize| a_count + b_count * family + g;
    let clause_base = a_count + b_count * family + g_count;
    let clause_sat = |i: usize| clause_base + 2 * i;
    let clause_unsat = |i: usize| clause_base + 2 * i + 1;
    let clause_out = |i: usize| clause_base + 2 * m + i;
    let hub = clause_base + 3 * m;

    let mut roles = Vec::new();
    for index in 0..a_count {
        roles.push(Role::Alpha { index });
    }
    for beta in 0..b_count {
        for clause in 0..m {
            roles.push(Role::BetaLeft { beta, clause });
        }
        for clause in 0..m {
            roles.push(Role::BetaMid { beta, clause });
        }
        for clause in 0..m {
            roles.push(Role::BetaRight { beta, clause });
        }
        roles.push(Role::BetaHub { beta });
    }
    for index in 0..g_count {
        roles.push(Role::Gamma { index });
    }
    for clause in 0..m {
        roles.push(Role::ClauseSat { clause });
        roles.push(Role::ClauseUnsat { clause });
    }
    for clause in 0..m {
        roles.push(Role::ClauseOut { clause });
    }
    if p >= 2 {
        roles.push(Role::Hub);
    }
    let node_count = roles.len();

    let asat = block_sat_table(formula, partition, 0);
    let bsat = block_sat_table(formula, partition, 1);
    let gsat = block_sat_table(formula, partition, 2);

    let mut edges: Vec<(NodeId, NodeId, u64)> = Vec::new();
    let mut colors: Vec<EdgeColor> = Vec::new();
    let push = |edges: &mut Vec<(NodeId, NodeId, u64)>,
                    colors: &mut Vec<EdgeColor>,
                    src: NodeId,
                    dst: NodeId,
                    cap: u64,
                    color: EdgeColor| {
        edges.push((src, dst, cap));
        colors.push(color);
    };

    // α entry edges into the shared per-clause nodes.
    for a in 0..a_count {
        for i in 0..m {
            if asat[a][i] {
                push(
                    &mut edges,
                    &mut colors,
                    a,
                    clause_sat(i),
                    block_cap,
                    EdgeColor::Red,
                );
            } else {
                push(
                    &mut edges,
                    &mut colors,
                    a,
                    clause_unsat(i),
                    block_cap,
                    EdgeColor::Blue,
                );
            }
        }
    }
    // Per-(β, clause) wiring.
    for b in 0..b_count {
        for i in 0..m {
            push(
                &mut edges,
                &mut colors,
                clause_sat(i),
                beta_mid(b, i),
                1,
                EdgeColor::Red,
            );
            push(
                &mut edges,
                &mut colors,
                clause_unsat(i),
                beta_left(b, i),
                1,
                EdgeColor::Blue,
            );
            if !bsat[b][i] {
                push(
                    &mut edges,
                    &mut colors,
                    beta_left(b, i),
                    beta_right(b, i),
                    1,
                    EdgeColor::Blue,
                );
            }
            push(
                &mut edges,
                &mut colors,
                beta_left(b, i),
                beta_mid(b, i),
                1,
                EdgeColor::Red,
            );
            push(
                &mut edges,
                &mut colors,
                beta_mid(b, i),
                beta_hub(b),
                1,
                EdgeColor::Red,
            );
            push(
                &mut edges,
                &mut colors,
                beta_right(b, i),
                clause_out(i),
                1,
                EdgeColor::Blue,
            );
        }
    }
    // Rationing through the global hub (only meaningful for p ≥ 2; for
    // p = 1 the collectors must absorb nothing and have no outlet).
    if p >= 2 {
        for b in 0..b_count {
            push(
                &mut edges,
                &mut colors,
                beta_hub(b),
                hub,
                (p - 1) as u64,
                EdgeColor::Red,
            );
        }
        for g in 0..g_count {
            push(
                &mut edges,
                &mut colors,
                hub,
                gamma_node(g),
                block_cap * (p - 1) as u64,
                EdgeColor::Red,
            );
        }
    }
    // Clause exits toward the γ layer.
    for g in 0..g_count {
        for i in 0..m {
            if !gsat[g][i] {
                push(
                    &mut edges,
                    &mut colors,
                    clause_out(i),
                    gamma_node(g),
                    block_cap,
                    EdgeColor::Blue,
                );
            }
        }
    }

    let net = FlowNetwork::new(node_count, edges)?;
    Ok(GadgetGraph {
        net,
        roles,
        colors,
        variant: GadgetVariant::Cap,
        p: Some(p),
        partition: partition.clone(),
        formula: formula.clone(),
    })
}

/// Builds the two-block, unit-capacity gadget whose maximum local edge
/// connectivity between an α node and a β node equals the number of clauses
/// the combined assignment satisfies.
///
/// The variables are split into halves internally (first ⌈n/2⌉ versus the
/// rest). Each clause contributes three nodes, one per way it can be
/// satisfied: by both halves, by the first only, or by the second only.
pub fn build_mlec_gadget(formula: &CnfFormula) -> Result<GadgetGraph, GadgetError> {
    let partition = Partition::halves(formula.num_vars());
    check_inputs(formula, &partition, None)?;
    let m = formula.clause_count();
    let a_count = partition.assignment_count(0);
    let b_count = partition.assignment_count(1);
    let clause_ss = |i: usize| a_count + b_count + 3 * i;
    let clause_su = |i: usize| a_count + b_count + 3 * i + 1;
    let clause_us = |i: usize| a_count + b_count + 3 * i + 2;

    let mut roles = Vec::new();
    for index in 0..a_count {
        roles.push(Role::Alpha { index });
    }
    for index in 0..b_count {
        roles.push(Role::Beta { index });
    }
    for clause in 0..m {
        roles.push(Role::ClauseSatSat { clause });
        roles.push(Role::ClauseSatUnsat { clause });
        roles.push(Role::ClauseUnsatSat { clause });
    }
    let node_count = roles.len();

    let asat = block_sat_table(formula, &partition, 0);
    let bsat = block_sat_table(formula, &partition, 1);

    let mut edges: Vec<(NodeId, NodeId, u64)> = Vec::new();
    let mut colors: Vec<EdgeColor> = Vec::new();
    // α side: a satisfying α reaches both lanes it could share with β; a
    // missing α reaches only the lane where β alone satisfies the clause.
    for a in 0..a_count {
        for i in 0..m {
            if asat[a][i] {
                edges.push((a, clause_ss(i), 1));
                colors.push(EdgeColor::Red);
                edges.push((a, clause_su(i), 1));
                colors.push(EdgeColor::Red);
            } else {
                edges.push((a, clause_us(i), 1));
                colors.push(EdgeColor::Blue);
            }
        }
    }
    // β side, mirrored.
    for b in 0..b_count {
        for i in 0..m {
            if bsat[b][i] {
                edges.push((clause_ss(i), a_count + b, 1));
                colors.push(EdgeColor::Red);
                edges.push((clause_us(i), a_count + b, 1));
                colors.push(EdgeColor::Red);
            } else {
                edges.push((clause_su(i), a_count + b, 1));
                colors.push(EdgeColor::Blue);
            }
        }
    }

    let net = FlowNetwork::new(node_count, edges)?;
    Ok(GadgetGraph {
        net,
        roles,
        colors,
        variant: GadgetVariant::Mlec,
        p: None,
        partition,
        formula: formula.clone(),
    })
}
