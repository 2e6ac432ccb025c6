//! MAX-SAT decision and optimization through flow queries on the gadgets.

use crate::oracle::MaxSatResult;
use flow_core::BoundedValue;
use gadgets::{
    build_cap_gadget, build_mlec_gadget, build_uncap_gadget, subgadget, CnfFormula, GadgetError,
    GadgetGraph, GadgetVariant, Partition,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DriverError {
    #[error("formula has {num_vars} variables, brute force handles at most {limit}")]
    TooManyVariables { num_vars: u32, limit: u32 },
    #[error("driver needs a pairwise construction, got {variant:?}")]
    UnsupportedVariant { variant: GadgetVariant },
    #[error("flow answers disagree with direct evaluation: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Query(#[from] flow_core::QueryError),
    #[error(transparent)]
    MultiPair(#[from] multipair::MultiPairError),
}

/// Work counters threaded through the driver entry points.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct DriverStats {
    pub gadgets_built: u64,
    pub flow_queries: u64,
}

/// How `max_sat_via_flow` walks the candidate thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Binary search over p (the decision is monotone in p).
    Binary,
    /// Ascending scan stopping at the first failing p.
    Linear,
}

pub(crate) fn build_pair_gadget(
    formula: &CnfFormula,
    partition: &Partition,
    p: usize,
    variant: GadgetVariant,
    stats: &mut DriverStats,
) -> Result<GadgetGraph, DriverError> {
    let g = match variant {
        GadgetVariant::Uncap => build_uncap_gadget(formula, partition, p)?,
        GadgetVariant::Cap => build_cap_gadget(formula, partition, p)?,
        GadgetVariant::Mlec => return Err(DriverError::UnsupportedVariant { variant }),
    };
    stats.gadgets_built += 1;
    Ok(g)
}

/// Decides whether some assignment extending a first-block/third-block pair
/// satisfies at least p clauses, by scanning the pairwise flow values
/// against the gadget threshold. Returns the decision and, when true, the
/// lexicographically smallest (α, γ) index pair proving it.
pub fn decide_threshold(
    formula: &CnfFormula,
    partition: &Partition,
    p: usize,
    variant: GadgetVariant,
    stats: &mut DriverStats,
) -> Result<(bool, Option<(usize, usize)>), DriverError> {
    let g = build_pair_gadget(formula, partition, p, variant, stats)?;
    let threshold = g.threshold().expect("pairwise gadgets define a threshold");
    for a in 0..g.alpha_count() {
        for c in 0..g.gamma_count() {
            stats.flow_queries += 1;
            let bounded = g
                .net
                .max_flow_bounded(g.alpha_node(a), g.gamma_node(c), threshold)?;
            if let BoundedValue::Exact(_) = bounded {
                return Ok((true, Some((a, c))));
            }
        }
    }
    Ok((false, None))
}

/// Computes MAX-SAT for the formula by searching over thresholds with
/// `decide_threshold` and recovering a witness assignment from the last
/// satisfying pair.
pub fn max_sat_via_flow(
    formula: &CnfFormula,
    partition: &Partition,
    variant: GadgetVariant,
    mode: SearchMode,
    stats: &mut DriverStats,
) -> Result<MaxSatResult, DriverError> {
    let m = formula.clause_count();
    let trivial = MaxSatResult {
        best: 0,
        witness: vec![false; formula.num_vars() as usize],
    };
    if m == 0 {
        return Ok(trivial);
    }
    // Largest p whose decision holds; monotone because an assignment
    // satisfying ≥ p clauses also satisfies ≥ p − 1.
    let mut found: Option<(usize, (usize, usize))> = None;
    match mode {
        SearchMode::Linear => {
            for p in 1..=m {
                let (ok, pair) = decide_threshold(formula, partition, p, variant, stats)?;
                if !ok {
                    break;
                }
                found = Some((p, pair.expect("positive decision carries a pair")));
            }
        }
        SearchMode::Binary => {
            let (mut lo, mut hi) = (1usize, m);
            while lo <= hi {
                let mid = lo + (hi - lo) / 2;
                let (ok, pair) = decide_threshold(formula, partition, mid, variant, stats)?;
                if ok {
                    found = Some((mid, pair.expect("positive decision carries a pair")));
                    lo = mid + 1;
                } else {
                    hi = mid - 1; // mid ≥ lo ≥ 1, no underflow
                }
            }
        }
    }
    let Some((best, (alpha, gamma))) = found else {
        return Ok(trivial);
    };
    let beta = recover_triple(formula, partition, best, alpha, gamma, variant, stats)?;
    let witness = partition.compose([alpha, beta, gamma]);
    if formula.satisfied_count(&witness) < best {
        return Err(DriverError::Inconsistent(format!(
            "recovered witness satisfies fewer than {best} clauses"
        )));
    }
    Ok(MaxSatResult { best, witness })
}

/// Completes a satisfying (α, γ) pair to a full triple reaching p satisfied
/// clauses, returning the middle-block index β. The unit-capacity variant
/// locates the completion by slice flow queries and cross-checks it
/// directly; the block-capacity variant scans completions directly.
pub fn recover_triple(
    formula: &CnfFormula,
    partition: &Partition,
    p: usize,
    alpha: usize,
    gamma: usize,
    variant: GadgetVariant,
    stats: &mut DriverStats,
) -> Result<usize, DriverError> {
    match variant {
        GadgetVariant::Uncap => {
            let g = build_pair_gadget(formula, partition, p, variant, stats)?;
            let m = formula.clause_count();
            for b in 0..g.beta_count() {
                let sub = subgadget(&g, alpha, b, gamma)?;
                stats.flow_queries += 1;
                let value = sub.net.max_flow(sub.source, sub.sink)?.value;
                if value < m as u64 {
                    let full = partition.compose([alpha, b, gamma]);
                    if formula.satisfied_count(&full) < p {
                        return Err(DriverError::Inconsistent(format!(
                            "family {b} flow {value} promises ≥ {p} satisfied clauses, \
                             direct count disagrees"
                        )));
                    }
                    return Ok(b);
                }
            }
            Err(DriverError::Inconsistent(format!(
                "pair ({alpha}, {gamma}) was decided satisfiable at p = {p}, \
                 but no completion certifies it"
            )))
        }
        GadgetVariant::Cap => {
            for b in 0..partition.assignment_count(1) {
                let full = partition.compose([alpha, b, gamma]);
                if formula.satisfied_count(&full) >= p {
                    return Ok(b);
                }
            }
            Err(DriverError::Inconsistent(format!(
                "pair ({alpha}, {gamma}) was decided satisfiable at p = {p}, \
                 but no completion certifies it"
            )))
        }
        GadgetVariant::Mlec => Err(DriverError::UnsupportedVariant { variant }),
    }
}

/// Computes MAX-SAT through the two-block connectivity gadget: the answer
/// is the largest (α, β) flow value, and the maximizing pair composes into
/// a witness assignment.
pub fn mlec_max_sat(
    formula: &CnfFormula,
    stats: &mut DriverStats,
) -> Result<MaxSatResult, DriverError> {
    let g = build_mlec_gadget(formula)?;
    stats.gadgets_built += 1;
    let alphas = g.alpha_nodes();
    let betas = g.beta_nodes();
    let matrix = multipair::st_max_flow(&g.net, &alphas, &betas)?;
    stats.flow_queries += (alphas.len() * betas.len()) as u64;
    let mut best = 0u64;
    let mut arg = (0usize, 0usize);
    for i in 0..alphas.len() {
        for j in 0..betas.len() {
            let value = matrix
                .value_at(i, j)
                .expect("assignment node sets are disjoint");
            if value > best {
                best = value;
                arg = (i, j);
            }
        }
    }
    let witness = g.partition.compose([arg.0, arg.1, 0]);
    Ok(MaxSatResult {
        best: best as usize,
        witness,
    })
}
