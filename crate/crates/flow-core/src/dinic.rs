//! Blocking-flow maximum flow (Dinic's algorithm).
//!
//! Chosen over Edmonds–Karp and push–relabel because the level-graph phases
//! give near-linear behavior on the short, layered networks this workspace
//! mostly runs on (reduction gadgets are shallow DAGs), while staying simple
//! enough to keep fully deterministic: BFS and DFS both visit edges in
//! insertion order, so tie-breaking — and therefore every reported flow
//! assignment and cut — is reproducible run to run.

use std::collections::{BTreeSet, VecDeque};

use crate::flow::{BoundedValue, CutResult, FlowResult, QueryError};
use crate::network::{FlowNetwork, NodeId};

const UNREACHED: u32 = u32::MAX;

/// Residual graph in a flat arena: original edge `j` becomes the forward arc
/// `2j` and the reverse arc `2j + 1`, so `arc ^ 1` is always the partner and
/// the flow shipped on edge `j` can be read back as `cap[2j + 1]`.
struct Residual {
    to: Vec<u32>,
    cap: Vec<u64>,
    adj: Vec<Vec<u32>>,
    level: Vec<u32>,
    iter: Vec<usize>,
}

impl Residual {
    fn new(net: &FlowNetwork) -> Self {
        let n = net.node_count();
        let mut to = Vec::with_capacity(net.edge_count() * 2);
        let mut cap = Vec::with_capacity(net.edge_count() * 2);
        let mut adj = vec![Vec::new(); n];
        for (j, e) in net.edges().iter().enumerate() {
            adj[e.src].push((2 * j) as u32);
            adj[e.dst].push((2 * j + 1) as u32);
            to.push(e.dst as u32);
            to.push(e.src as u32);
            cap.push(e.capacity);
            cap.push(0);
        }
        Residual {
            to,
            cap,
            adj,
            level: vec![UNREACHED; n],
            iter: vec![0; n],
        }
    }

    /// Rebuilds the level graph. Returns false once the sink is unreachable.
    fn bfs(&mut self, source: NodeId, sink: NodeId) -> bool {
        self.level.fill(UNREACHED);
        self.level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &arc in &self.adj[u] {
                let v = self.to[arc as usize] as usize;
                if self.cap[arc as usize] > 0 && self.level[v] == UNREACHED {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[sink] != UNREACHED
    }

    /// Pushes one augmenting path along the level graph, returning its amount
    /// (0 when the current level graph is exhausted).
    fn augment(&mut self, source: NodeId, sink: NodeId) -> u64 {
        let mut path: Vec<u32> = Vec::new();
        let mut node = source;
        loop {
            if node == sink {
                let amount = path
                    .iter()
                    .map(|&arc| self.cap[arc as usize])
                    .min()
                    .expect("source != sink, so the path is nonempty");
                for &arc in &path {
                    self.cap[arc as usize] -= amount;
                    self.cap[(arc ^ 1) as usize] += amount;
                }
                return amount;
            }
            let mut advanced = false;
            while self.iter[node] < self.adj[node].len() {
                let arc = self.adj[node][self.iter[node]];
                let v = self.to[arc as usize] as usize;
                if self.cap[arc as usize] > 0 && self.level[v] == self.level[node] + 1 {
                    path.push(arc);
                    node = v;
                    advanced = true;
                    break;
                }
                self.iter[node] += 1;
            }
            if !advanced {
                match path.pop() {
                    None => return 0,
                    Some(arc) => {
                        node = self.to[(arc ^ 1) as usize] as usize;
                        // Skip the arc that led into the dead end.
                        self.iter[node] += 1;
                    }
                }
            }
        }
    }

    /// Runs phases until done, or until the total strictly exceeds `bound`.
    /// Returns `(total, exceeded)`.
    fn run(&mut self, source: NodeId, sink: NodeId, bound: u64) -> (u64, bool) {
        let mut total: u64 = 0;
        while self.bfs(source, sink) {
            self.iter.fill(0);
            loop {
                let pushed = self.augment(source, sink);
                if pushed == 0 {
                    break;
                }
                total += pushed;
                if total > bound {
                    return (total, true);
                }
            }
        }
        (total, false)
    }

    fn edge_flows(&self, edge_count: usize) -> Vec<u64> {
        (0..edge_count).map(|j| self.cap[2 * j + 1]).collect()
    }

    /// Nodes reachable from `source` through positive residual capacity.
    fn reachable(&self, source: NodeId) -> BTreeSet<NodeId> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for &arc in &self.adj[u] {
                let v = self.to[arc as usize] as usize;
                if self.cap[arc as usize] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        (0..self.adj.len()).filter(|&v| seen[v]).collect()
    }
}

fn check_pair(net: &FlowNetwork, source: NodeId, sink: NodeId) -> Result<(), QueryError> {
    for node in [source, sink] {
        if node >= net.node_count() {
            return Err(QueryError::InvalidNode {
                node,
                node_count: net.node_count(),
            });
        }
    }
    if source == sink {
        return Err(QueryError::SourceIsSink { node: source });
    }
    Ok(())
}

impl FlowNetwork {
    /// Maximum `source`→`sink` flow with a realizing per-edge assignment.
    pub fn max_flow(&self, source: NodeId, sink: NodeId) -> Result<FlowResult, QueryError> {
        check_pair(self, source, sink)?;
        let mut residual = Residual::new(self);
        let (value, _) = residual.run(source, sink, u64::MAX);
        Ok(FlowResult {
            value,
            edge_flows: residual.edge_flows(self.edge_count()),
        })
    }

    /// Like [`FlowNetwork::max_flow`], but halts as soon as the accumulated
    /// flow strictly exceeds `k`. Useful when only the comparison against a
    /// threshold matters: networks whose value is far above `k` cost only
    /// `k + 1` units of augmentation instead of a full run.
    pub fn max_flow_bounded(
        &self,
        source: NodeId,
        sink: NodeId,
        k: u64,
    ) -> Result<BoundedValue, QueryError> {
        check_pair(self, source, sink)?;
        let mut residual = Residual::new(self);
        let (value, exceeded) = residual.run(source, sink, k);
        Ok(if exceeded {
            BoundedValue::ExceedsK
        } else {
            BoundedValue::Exact(value)
        })
    }

    /// Minimum `source`→`sink` cut: the residual-reachable side of a maximum
    /// flow. Its capacity always equals the max-flow value.
    pub fn min_cut(&self, source: NodeId, sink: NodeId) -> Result<CutResult, QueryError> {
        check_pair(self, source, sink)?;
        let mut residual = Residual::new(self);
        let (value, _) = residual.run(source, sink, u64::MAX);
        let source_side = residual.reachable(source);
        debug_assert!(!source_side.contains(&sink));
        debug_assert_eq!(self.cut_capacity(&source_side), value);
        Ok(CutResult {
            source_side,
            capacity: value,
        })
    }
}
