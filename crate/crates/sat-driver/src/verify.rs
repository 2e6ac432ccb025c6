//! End-to-end verification of the threshold correspondence.
//!
//! For every threshold p, the flow-side decision must match the brute-force
//! oracle, and an explicit witness object must certify the answer: a cut at
//! or below the threshold (or a sub-threshold family flow) when the oracle
//! says yes, and a validated above-threshold flow for every assignment pair
//! when it says no.

use crate::driver::{build_pair_gadget, decide_threshold, DriverError, DriverStats};
use crate::oracle::brute_force_max_sat;
use flow_core::{validate_flow, FlowResult};
use gadgets::{
    subgadget, witness_cut_cap, witness_flow_cap, witness_flow_uncap, CnfFormula, GadgetVariant,
    Partition,
};
use std::fmt;

/// Outcome of one threshold check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdRecord {
    pub p: usize,
    /// Flow-side decision: some (α, γ) flow is at or below the threshold.
    pub flow_says: bool,
    /// Oracle decision: brute-force MAX-SAT reaches p.
    pub oracle_says: bool,
    /// Whether the explicit witness object for the oracle's answer checked
    /// out (feasible flow of the right value, or separating cut within the
    /// capacity bound).
    pub witness_ok: bool,
    /// Failure detail when a witness check did not pass.
    pub note: Option<String>,
}

impl ThresholdRecord {
    pub fn agrees(&self) -> bool {
        self.flow_says == self.oracle_says && self.witness_ok
    }
}

/// Verification transcript for one (formula, partition, variant) triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub variant: GadgetVariant,
    pub oracle_best: usize,
    pub records: Vec<ThresholdRecord>,
    pub stats: DriverStats,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.agrees())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        for r in &self.records {
            write!(
                f,
                "p={} flow={} oracle={} witness={} {}",
                r.p,
                yn(r.flow_says),
                yn(r.oracle_says),
                if r.witness_ok { "ok" } else { "fail" },
                if r.agrees() { "AGREE" } else { "DISAGREE" }
            )?;
            if let Some(note) = &r.note {
                write!(f, " ({note})")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Runs the full threshold sweep for one formula, partition, and pairwise
/// construction, checking flow decisions and witness objects against the
/// brute-force oracle.
pub fn verify_lemma(
    formula: &CnfFormula,
    partition: &Partition,
    variant: GadgetVariant,
) -> Result<VerificationReport, DriverError> {
    if variant == GadgetVariant::Mlec {
        return Err(DriverError::UnsupportedVariant { variant });
    }
    let oracle = brute_force_max_sat(formula)?;
    let mut stats = DriverStats::default();
    let mut records = Vec::with_capacity(formula.clause_count());
    for p in 1..=formula.clause_count() {
        let (flow_says, _) = decide_threshold(formula, partition, p, variant, &mut stats)?;
        let oracle_says = oracle.best >= p;
        let (witness_ok, note) = match check_witness(
            formula,
            partition,
            p,
            variant,
            oracle_says,
            &oracle.witness,
            &mut stats,
        ) {
            Ok(()) => (true, None),
            Err(message) => (false, Some(message)),
        };
        records.push(ThresholdRecord {
            p,
            flow_says,
            oracle_says,
            witness_ok,
            note,
        });
    }
    Ok(VerificationReport {
        variant,
        oracle_best: oracle.best,
        records,
        stats,
    })
}

/// Machine-checks the witness object for one threshold answer. Solver-free:
/// flows are checked with the generic flow validator and cuts by direct
/// capacity counting.
fn check_witness(
    formula: &CnfFormula,
    partition: &Partition,
    p: usize,
    variant: GadgetVariant,
    oracle_says: bool,
    phi: &[bool],
    stats: &mut DriverStats,
) -> Result<(), String> {
    let g =
        build_pair_gadget(formula, partition, p, variant, stats).map_err(|e| e.to_string())?;
    let threshold = g.threshold().expect("pairwise gadgets define a threshold");
    let m = formula.clause_count();
    if oracle_says {
        // Φ satisfies ≥ p clauses; certify its own (α, γ) pair.
        match variant {
            GadgetVariant::Cap => {
                let side = witness_cut_cap(&g, phi).map_err(|e| e.to_string())?;
                let [ai, _, gi] = partition.decompose(phi);
                if !side.contains(&g.alpha_node(ai)) {
                    return Err("cut does not contain its source".to_string());
                }
                if side.contains(&g.gamma_node(gi)) {
                    return Err("cut contains its sink".to_string());
                }
                let capacity = g.net.cut_capacity(&side);
                let satisfied = formula.satisfied_count(phi) as u64;
                let expected = g.beta_count() as u64 * m as u64 - satisfied + p as u64 - 1;
                if capacity != expected {
                    return Err(format!("cut capacity {capacity}, expected {expected}"));
                }
                if capacity > threshold {
                    return Err(format!(
                        "cut capacity {capacity} exceeds threshold {threshold}"
                    ));
                }
                Ok(())
            }
            GadgetVariant::Uncap => {
                let [ai, bi, gi] = partition.decompose(phi);
                let satisfied = formula.satisfied_count(phi);
                let flow = witness_flow_uncap(&g, ai, bi, gi).map_err(|e| e.to_string())?;
                let sub = subgadget(&g, ai, bi, gi).map_err(|e| e.to_string())?;
                validate_flow(&sub.net, sub.source, sub.sink, &flow)
                    .map_err(|e| format!("family flow invalid: {e}"))?;
                let expected = (m - satisfied + p - 1) as u64;
                if flow.value != expected {
                    return Err(format!("family flow {}, expected {expected}", flow.value));
                }
                if flow.value >= m as u64 {
                    return Err(format!(
                        "family flow {} does not drop below the clause count",
                        flow.value
                    ));
                }
                Ok(())
            }
            GadgetVariant::Mlec => unreachable!("rejected before the sweep"),
        }
    } else {
        // No completion of any pair reaches p; certify every pair with an
        // explicit flow strictly above the threshold.
        for a in 0..g.alpha_count() {
            for c in 0..g.gamma_count() {
                let flow = match variant {
                    GadgetVariant::Cap => witness_flow_cap(&g, a, c)
                        .map_err(|e| format!("pair ({a}, {c}): {e}"))?,
                    GadgetVariant::Uncap => {
                        // One witness per family, merged into a full-gadget
                        // flow.
                        let mut merged = vec![0u64; g.net.edge_count()];
                        let mut total = 0u64;
                        for b in 0..g.beta_count() {
                            let family = witness_flow_uncap(&g, a, b, c)
                                .map_err(|e| format!("triple ({a}, {b}, {c}): {e}"))?;
                            if family.value != m as u64 {
                                return Err(format!(
                                    "triple ({a}, {b}, {c}): family flow {} below {m}",
                                    family.value
                                ));
                            }
                            let sub = subgadget(&g, a, b, c).map_err(|e| e.to_string())?;
                            for (j, &v) in family.edge_flows.iter().enumerate() {
                                merged[sub.edge_ids[j]] += v;
                            }
                            total += family.value;
                        }
                        FlowResult {
                            value: total,
                            edge_flows: merged,
                        }
                    }
                    GadgetVariant::Mlec => unreachable!("rejected before the sweep"),
                };
                validate_flow(&g.net, g.alpha_node(a), g.gamma_node(c), &flow)
                    .map_err(|e| format!("pair ({a}, {c}): flow invalid: {e}"))?;
                if flow.value <= threshold {
                    return Err(format!(
                        "pair ({a}, {c}): witness flow {} not above threshold {threshold}",
                        flow.value
                    ));
                }
            }
        }
        Ok(())
    }
}
