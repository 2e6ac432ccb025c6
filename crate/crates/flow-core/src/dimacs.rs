//! DIMACS max-flow file format.
//!
//! ```text
//! c optional comments
//! p max <node-count> <edge-count>
//! a <src> <dst> <capacity>
//! ```
//!
//! Node ids are 1-based in files and 0-based in memory. The writer emits a
//! canonical form (problem line, then one `a` line per edge in edge order)
//! and the reader accepts exactly the grammar above, so write → read → write
//! reproduces the bytes.

use thiserror::Error;

use crate::network::{FlowNetwork, NetworkError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid network: {0}")]
    Network(#[from] NetworkError),
}

fn parse_error(line: usize, message: impl Into<String>) -> DimacsError {
    DimacsError::Parse {
        line,
        message: message.into(),
    }
}

pub fn write_dimacs(net: &FlowNetwork) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "p max {} {}\n",
        net.node_count(),
        net.edge_count()
    ));
    for e in net.edges() {
        out.push_str(&format!("a {} {} {}\n", e.src + 1, e.dst + 1, e.capacity));
    }
    out
}

pub fn read_dimacs(input: &str) -> Result<FlowNetwork, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, u64)> = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_error(lineno, "duplicate problem line"));
                }
                if tokens.next() != Some("max") {
                    return Err(parse_error(lineno, "problem line must read 'p max <n> <m>'"));
                }
                let n = parse_count(&mut tokens, lineno, "node count")?;
                let m = parse_count(&mut tokens, lineno, "edge count")?;
                expect_end(&mut tokens, lineno)?;
                header = Some((n, m));
            }
            Some("a") => {
                let (n, _) = header
                    .ok_or_else(|| parse_error(lineno, "arc line before problem line"))?;
                let src = parse_node(&mut tokens, lineno, n)?;
                let dst = parse_node(&mut tokens, lineno, n)?;
                let capacity: u64 = tokens
                    .next()
                    .ok_or_else(|| parse_error(lineno, "arc line missing capacity"))?
                    .parse()
                    .map_err(|_| parse_error(lineno, "capacity is not a u64"))?;
                expect_end(&mut tokens, lineno)?;
                edges.push((src, dst, capacity));
            }
            Some(other) => {
                return Err(parse_error(
                    lineno,
                    format!("unknown line type {other:?}"),
                ));
            }
        }
    }
    let (node_count, edge_count) =
        header.ok_or_else(|| parse_error(input.lines().count(), "missing problem line"))?;
    if edges.len() != edge_count {
        return Err(parse_error(
            input.lines().count(),
            format!(
                "problem line promises {edge_count} arcs, found {}",
                edges.len()
            ),
        ));
    }
    Ok(FlowNetwork::new(node_count, edges)?)
}

fn parse_count(
    tokens: &mut std::str::SplitWhitespace,
    lineno: usize,
    what: &str,
) -> Result<usize, DimacsError> {
    tokens
        .next()
        .ok_or_else(|| parse_error(lineno, format!("missing {what}")))?
        .parse()
        .map_err(|_| parse_error(lineno, format!("{what} is not a number")))
}

fn parse_node(
    tokens: &mut std::str::SplitWhitespace,
    lineno: usize,
    node_count: usize,
) -> Result<usize, DimacsError> {
    let id: usize = tokens
        .next()
        .ok_or_else(|| parse_error(lineno, "arc line missing a node id"))?
        .parse()
        .map_err(|_| parse_error(lineno, "node id is not a number"))?;
    if id == 0 || id > node_count {
        return Err(parse_error(
            lineno,
            format!("node id {id} outside 1..={node_count}"),
        ));
    }
    Ok(id - 1)
}

fn expect_end(
    tokens: &mut std::str::SplitWhitespace,
    lineno: usize,
) -> Result<(), DimacsError> {
    match tokens.next() {
        None => Ok(()),
        Some(extra) => Err(parse_error(
            lineno,
            format!("unexpected trailing token {extra:?}"),
        )),
    }
}
