use flow_core::NodeId;

/// Pairwise flow values between a list of sources and a list of sinks.
/// `values[i][j]` is the max flow from `sources[i]` to `sinks[j]`, `None`
/// where the two coincide (a node has no flow value to itself).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowMatrix {
    sources: Vec<NodeId>,
    sinks: Vec<NodeId>,
    values: Vec<Vec<Option<u64>>>,
}

impl FlowMatrix {
    pub(crate) fn new(
        sources: Vec<NodeId>,
        sinks: Vec<NodeId>,
        values: Vec<Vec<Option<u64>>>,
    ) -> Self {
        debug_assert_eq!(values.len(), sources.len());
        debug_assert!(values.iter().all(|row| row.len() == sinks.len()));
        FlowMatrix {
            sources,
            sinks,
            values,
        }
    }

    pub fn sources(&self) -> &[NodeId] {
        &self.sources
    }

    pub fn sinks(&self) -> &[NodeId] {
        &self.sinks
    }

    /// Value at row `i`, column `j` (positions in the source/sink lists).
    pub fn value_at(&self, i: usize, j: usize) -> Option<u64> {
        self.values[i][j]
    }

    /// Flow value for a (source id, sink id) pair, if both are present.
    pub fn get(&self, source: NodeId, sink: NodeId) -> Option<u64> {
        let i = self.sources.iter().position(|&s| s == source)?;
        let j = self.sinks.iter().position(|&t| t == sink)?;
        self.values[i][j]
    }

    /// Renders the matrix as CSV: first row the sink ids, first column the
    /// source ids, `-` on diagonal cells. `id_offset` shifts the printed ids
    /// (pass 1 to print 1-based ids for DIMACS-facing output, 0 for raw).
    pub fn to_csv(&self, id_offset: usize) -> String {
        let mut out = String::new();
        for &t in &self.sinks {
            out.push(',');
            out.push_str(&(t + id_offset).to_string());
        }
        out.push('\n');
        for (i, &s) in self.sources.iter().enumerate() {
            out.push_str(&(s + id_offset).to_string());
            for cell in &self.values[i] {
                out.push(',');
                match cell {
                    Some(v) => out.push_str(&v.to_string()),
                    None => out.push('-'),
                }
            }
            out.push('\n');
        }
        out
    }
}
