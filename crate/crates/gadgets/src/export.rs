//! Gadget file format: a DIMACS max-flow body annotated with comment lines
//! that record the construction metadata (variant, threshold, partition
//! blocks, node roles, edge colors), so a gadget can be rebuilt elsewhere
//! and compared structurally.
//!
//! Layout of a gadget file:
//!
//! ```text
//! p max <nodes> <edges>
//! c variant <uncap|cap|mlec>
//! c p <threshold>              (absent for mlec)
//! c target_a <num>/<den>
//! c target_b <num>/<den>
//! c block1 [vars...]
//! c block2 [vars...]
//! c block3 [vars...]
//! c role <node> <label> [args...]   (one per node, 1-based ids)
//! c color <edge> <blue|red>         (one per edge, 1-based ordinals)
//! a <src> <dst> <capacity>          (one per edge, 1-based ids)
//! ```

use crate::build::{EdgeColor, GadgetGraph, GadgetVariant, Role};
use crate::partition::{Partition, Rational};
use flow_core::FlowNetwork;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GadgetFileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Network(#[from] flow_core::NetworkError),
    #[error(transparent)]
    Partition(#[from] crate::partition::PartitionError),
}

/// The parsed contents of a gadget file. Holds the same structural data as
/// a built `GadgetGraph` minus the formula, which the file does not record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetFile {
    pub net: FlowNetwork,
    pub roles: Vec<Role>,
    pub colors: Vec<EdgeColor>,
    pub variant: GadgetVariant,
    pub p: Option<usize>,
    pub partition: Partition,
}

impl GadgetFile {
    /// True iff the file describes exactly this gadget's structure.
    pub fn matches(&self, g: &GadgetGraph) -> bool {
        self.net == g.net
            && self.roles == g.roles
            && self.colors == g.colors
            && self.variant == g.variant
            && self.p == g.p
            && self.partition == g.partition
    }
}

fn role_label(role: Role) -> String {
    match role {
        Role::Alpha { index } => format!("alpha {index}"),
        Role::Gamma { index } => format!("gamma {index}"),
        Role::Beta { index } => format!("beta {index}"),
        Role::BetaLeft { beta, clause } => format!("beta_left {beta} {}", clause + 1),
        Role::BetaRight { beta, clause } => format!("beta_right {beta} {}", clause + 1),
        Role::BetaMid { beta, clause } => format!("beta_mid {beta} {}", clause + 1),
        Role::BetaHub { beta } => format!("beta_hub {beta}"),
        Role::BetaHubLane { beta, lane } => format!("beta_hub_lane {beta} {lane}"),
        Role::ClauseSat { clause } => format!("clause_sat {}", clause + 1),
        Role::ClauseUnsat { clause } => format!("clause_unsat {}", clause + 1),
        Role::ClauseOut { clause } => format!("clause_out {}", clause + 1),
        Role::Hub => "hub".to_string(),
        Role::ClauseSatSat { clause } => format!("clause_ss {}", clause + 1),
        Role::ClauseSatUnsat { clause } => format!("clause_su {}", clause + 1),
        Role::ClauseUnsatSat { clause } => format!("clause_us {}", clause + 1),
    }
}

fn parse_role(tokens: &[&str]) -> Option<Role> {
    let index = |t: &str| t.parse::<usize>().ok();
    let clause = |t: &str| t.parse::<usize>().ok().filter(|&c| c >= 1).map(|c| c - 1);
    match tokens {
        ["alpha", i] => Some(Role::Alpha { index: index(i)? }),
        ["gamma", i] => Some(Role::Gamma { index: index(i)? }),
        ["beta", i] => Some(Role::Beta { index: index(i)? }),
        ["beta_left", b, c] => Some(Role::BetaLeft {
            beta: index(b)?,
            clause: clause(c)?,
        }),
        ["beta_right", b, c] => Some(Role::BetaRight {
            beta: index(b)?,
            clause: clause(c)?,
        }),
        ["beta_mid", b, c] => Some(Role::BetaMid {
            beta: index(b)?,
            clause: clause(c)?,
        }),
        ["beta_hub", b] => Some(Role::BetaHub { beta: index(b)? }),
        ["beta_hub_lane", b, l] => Some(Role::BetaHubLane {
            beta: index(b)?,
            lane: index(l)?,
        }),
        ["clause_sat", c] => Some(Role::ClauseSat { clause: clause(c)? }),
        ["clause_unsat", c] => Some(Role::ClauseUnsat { clause: clause(c)? }),
        ["clause_out", c] => Some(Role::ClauseOut { clause: clause(c)? }),
        ["hub"] => Some(Role::Hub),
        ["clause_ss", c] => Some(Role::ClauseSatSat { clause: clause(c)? }),
        ["clause_su", c] => Some(Role::ClauseSatUnsat { clause: clause(c)? }),
        ["clause_us", c] => Some(Role::ClauseUnsatSat { clause: clause(c)? }),
        _ => None,
    }
}

/// Renders a gadget to its canonical file text.
pub fn write_gadget(g: &GadgetGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "p max {} {}",
        g.net.node_count(),
        g.net.edge_count()
    );
    let _ = writeln!(out, "c variant {}", g.variant.label());
    if let Some(p) = g.p {
        let _ = writeln!(out, "c p {p}");
    }
    let (a, b) = g.partition.targets();
    let _ = writeln!(out, "c target_a {}/{}", a.numer(), a.denom());
    let _ = writeln!(out, "c target_b {}/{}", b.numer(), b.denom());
    for (block, name) in [(0, "block1"), (1, "block2"), (2, "block3")] {
        let mut line = format!("c {name}");
        for var in g.partition.block(block) {
            let _ = write!(line, " {var}");
        }
        out.push_str(&line);
        out.push('\n');
    }
    for (v, &role) in g.roles.iter().enumerate() {
        let _ = writeln!(out, "c role {} {}", v + 1, role_label(role));
    }
    for (j, &color) in g.colors.iter().enumerate() {
        let _ = writeln!(out, "c color {} {}", j + 1, color.label());
    }
    for edge in g.net.edges() {
        let _ = writeln!(out, "a {} {} {}", edge.src + 1, edge.dst + 1, edge.capacity);
    }
    out
}

/// Parses a gadget file, validating that the metadata is complete: a
/// variant, a full node→role bijection, one color per edge, a partition
/// covering its variables, and a threshold exactly when the variant needs
/// one.
pub fn read_gadget(input: &str) -> Result<GadgetFile, GadgetFileError> {
    let err = |line: usize, message: &str| GadgetFileError::Parse {
        line,
        message: message.to_string(),
    };
    let mut header: Option<(usize, usize)> = None;
    let mut variant: Option<GadgetVariant> = None;
    let mut p: Option<usize> = None;
    let mut target_a: Option<Rational> = None;
    let mut target_b: Option<Rational> = None;
    let mut blocks: [Option<Vec<u32>>; 3] = [None, None, None];
    let mut roles: Vec<Option<Role>> = Vec::new();
    let mut colors: Vec<Option<EdgeColor>> = Vec::new();
    let mut arcs: Vec<(usize, usize, u64)> = Vec::new();

    let parse_ratio = |line: usize, token: &str| -> Result<Rational, GadgetFileError> {
        let (num, den) = token
            .split_once('/')
            .ok_or_else(|| err(line, "target must be <num>/<den>"))?;
        let num: i64 = num.parse().map_err(|_| err(line, "bad target numerator"))?;
        let den: i64 = den.parse().map_err(|_| err(line, "bad target denominator"))?;
        if den == 0 {
            return Err(err(line, "target denominator is zero"));
        }
        Ok(Rational::new(num, den))
    };

    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.split_first() {
            None => continue,
            Some((&"p", rest)) => {
                if header.is_some() {
                    return Err(err(lineno, "duplicate problem line"));
                }
                match rest {
                    [kind, n, m] if *kind == "max" => {
                        let n: usize = n.parse().map_err(|_| err(lineno, "bad node count"))?;
                        let m: usize = m.parse().map_err(|_| err(lineno, "bad edge count"))?;
                        header = Some((n, m));
                        roles = vec![None; n];
                        colors = vec![None; m];
                    }
                    _ => return Err(err(lineno, "problem line must read 'p max <n> <m>'")),
                }
            }
            Some((&"c", rest)) => {
                let (n, m) = header.ok_or_else(|| err(lineno, "metadata before problem line"))?;
                match rest.split_first() {
                    Some((&"variant", [label])) => {
                        variant = Some(match *label {
                            "uncap" => GadgetVariant::Uncap,
                            "cap" => GadgetVariant::Cap,
                            "mlec" => GadgetVariant::Mlec,
                            _ => return Err(err(lineno, "unknown variant")),
                        });
                    }
                    Some((&"p", [value])) => {
                        p = Some(value.parse().map_err(|_| err(lineno, "bad threshold"))?);
                    }
                    Some((&"target_a", [value])) => target_a = Some(parse_ratio(lineno, value)?),
                    Some((&"target_b", [value])) => target_b = Some(parse_ratio(lineno, value)?),
                    Some((&"block1", vars)) | Some((&"block2", vars)) | Some((&"block3", vars)) => {
                        let slot = match rest[0] {
                            "block1" => 0,
                            "block2" => 1,
                            _ => 2,
                        };
                        if blocks[slot].is_some() {
                            return Err(err(lineno, "duplicate block line"));
                        }
                        let parsed: Result<Vec<u32>, _> =
                            vars.iter().map(|v| v.parse::<u32>()).collect();
                        blocks[slot] =
                            Some(parsed.map_err(|_| err(lineno, "bad block variable"))?);
                    }
                    Some((&"role", [node, label @ ..])) => {
                        let node: usize =
                            node.parse().map_err(|_| err(lineno, "bad role node id"))?;
                        if node == 0 || node > n {
                            return Err(err(lineno, "role node id out of range"));
                        }
                        if roles[node - 1].is_some() {
                            return Err(err(lineno, "node has two roles"));
                        }
                        roles[node - 1] = Some(
                            parse_role(label).ok_or_else(|| err(lineno, "unknown role label"))?,
                        );
                    }
                    Some((&"color", [edge, label])) => {
                        let edge: usize =
                            edge.parse().map_err(|_| err(lineno, "bad color edge id"))?;
                        if edge == 0 || edge > m {
                            return Err(err(lineno, "color edge id out of range"));
                        }
                        if colors[edge - 1].is_some() {
                            return Err(err(lineno, "edge has two colors"));
                        }
                        colors[edge - 1] = Some(match *label {
                            "blue" => EdgeColor::Blue,
                            "red" => EdgeColor::Red,
                            _ => return Err(err(lineno, "unknown color")),
                        });
                    }
                    _ => continue, // free-form comment
                }
            }
            Some((&"a", rest)) => {
                let (n, _) = header.ok_or_else(|| err(lineno, "arc before problem line"))?;
                match rest {
                    [src, dst, cap] => {
                        let src: usize = src.parse().map_err(|_| err(lineno, "bad arc source"))?;
                        let dst: usize = dst.parse().map_err(|_| err(lineno, "bad arc target"))?;
                        let cap: u64 =
                            cap.parse().map_err(|_| err(lineno, "bad arc capacity"))?;
                        if src == 0 || src > n || dst == 0 || dst > n {
                            return Err(err(lineno, "arc endpoint out of range"));
                        }
                        arcs.push((src - 1, dst - 1, cap));
                    }
                    _ => return Err(err(lineno, "arc line must read 'a <src> <dst> <cap>'")),
                }
            }
            Some(_) => return Err(err(lineno, "unknown line type")),
        }
    }

    let total_lines = input.lines().count();
    let fail = |message: &str| err(total_lines, message);
    let (n, m) = header.ok_or_else(|| fail("missing problem line"))?;
    if arcs.len() != m {
        return Err(GadgetFileError::Parse {
            line: total_lines,
            message: format!("problem line promises {m} arcs, found {}", arcs.len()),
        });
    }
    let variant = variant.ok_or_else(|| fail("missing variant line"))?;
    match variant {
        GadgetVariant::Uncap | GadgetVariant::Cap => {
            if p.is_none() {
                return Err(fail("variant requires a threshold line"));
            }
        }
        GadgetVariant::Mlec => {
            if p.is_some() {
                return Err(fail("mlec gadget must not carry a threshold"));
            }
        }
    }
    let roles: Vec<Role> = roles
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| fail(&format!("node {} has no role", v + 1))))
        .collect::<Result<_, _>>()?;
    let colors: Vec<EdgeColor> = colors
        .into_iter()
        .enumerate()
        .map(|(j, c)| c.ok_or_else(|| fail(&format!("edge {} has no color", j + 1))))
        .collect::<Result<_, _>>()?;
    let [b1, b2, b3] = blocks;
    let b1 = b1.ok_or_else(|| fail("missing block1 line"))?;
    let b2 = b2.ok_or_else(|| fail("missing block2 line"))?;
    let b3 = b3.ok_or_else(|| fail("missing block3 line"))?;
    let num_vars = (b1.len() + b2.len() + b3.len()) as u32;
    let target_a = target_a.ok_or_else(|| fail("missing target_a line"))?;
    let target_b = target_b.ok_or_else(|| fail("missing target_b line"))?;
    let partition = Partition::from_parts(num_vars, [b1, b2, b3], target_a, target_b)?;
    let net = FlowNetwork::new(n, arcs)?;
    Ok(GadgetFile {
        net,
        roles,
        colors,
        variant,
        p,
        partition,
    })
}
