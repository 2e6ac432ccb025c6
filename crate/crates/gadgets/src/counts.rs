//! Closed-form node and edge counts for the gadget constructions.
//!
//! These are computed directly from the formula and partition, without
//! building any graph, so tests can check the builders against an
//! independent code path.

use crate::build::block_sat_table;
use crate::cnf::CnfFormula;
use crate::partition::Partition;

/// Node and edge counts of the unit-capacity gadget.
///
/// Nodes: A + B·(2m + p) + G, writing A = 2^|U₁|, B = 2^|U₂|, G = 2^|U₃|.
/// Edges: one α entry edge per (α, β, clause), one entry→γ edge per
/// (β, γ, clause-γ-misses), (p−1) lane→γ edges per (β, γ), 2m internal
/// family edges per β, and p−1 collector→lane edges per β.
pub fn uncap_counts(formula: &CnfFormula, partition: &Partition, p: usize) -> (u64, u64) {
    let m = formula.clause_count() as u64;
    let p = p as u64;
    let a = partition.assignment_count(0) as u64;
    let b = partition.assignment_count(1) as u64;
    let g = partition.assignment_count(2) as u64;
    let gamma_misses: u64 = gamma_miss_total(formula, partition);
    let nodes = a + b * (2 * m + p) + g;
    let edges = a * b * m + b * gamma_misses + b * g * (p - 1) + 2 * b * m + b * (p - 1);
    (nodes, edges)
}

/// Node and edge counts of the block-capacity gadget.
///
/// Nodes: A + B·(3m + 1) + G + 3m, plus one hub when p ≥ 2.
/// Edges: one α entry per (α, clause); five fixed unit edges per
/// (β, clause) plus one more when β misses the clause; B collector→hub and
/// G hub→γ edges when p ≥ 2; one clause exit per (γ, clause-γ-misses).
pub fn cap_counts(formula: &CnfFormula, partition: &Partition, p: usize) -> (u64, u64) {
    let m = formula.clause_count() as u64;
    let a = partition.assignment_count(0) as u64;
    let b = partition.assignment_count(1) as u64;
    let g = partition.assignment_count(2) as u64;
    let beta_misses: u64 = block_sat_table(formula, partition, 1)
        .iter()
        .map(|row| row.iter().filter(|&&sat| !sat).count() as u64)
        .sum();
    let gamma_misses = gamma_miss_total(formula, partition);
    let hub = if p >= 2 { 1 } else { 0 };
    let nodes = a + b * (3 * m + 1) + g + 3 * m + hub;
    let edges = a * m + 5 * b * m + beta_misses + hub * (b + g) + gamma_misses;
    (nodes, edges)
}

/// Node and edge counts of the two-block connectivity gadget (which splits
/// the variables into halves internally).
///
/// Nodes: A + B + 3m. Edges: each α has one edge per clause it misses and
/// two per clause it satisfies; likewise each β.
pub fn mlec_counts(formula: &CnfFormula) -> (u64, u64) {
    let partition = Partition::halves(formula.num_vars());
    let m = formula.clause_count() as u64;
    let a = partition.assignment_count(0) as u64;
    let b = partition.assignment_count(1) as u64;
    let alpha_sats: u64 = block_sat_table(formula, &partition, 0)
        .iter()
        .map(|row| row.iter().filter(|&&sat| sat).count() as u64)
        .sum();
    let beta_sats: u64 = block_sat_table(formula, &partition, 1)
        .iter()
        .map(|row| row.iter().filter(|&&sat| sat).count() as u64)
        .sum();
    let nodes = a + b + 3 * m;
    let edges = a * m + alpha_sats + b * m + beta_sats;
    (nodes, edges)
}

/// Σ over clauses of the number of third-block assignments missing them.
fn gamma_miss_total(formula: &CnfFormula, partition: &Partition) -> u64 {
    block_sat_table(formula, partition, 2)
        .iter()
        .map(|row| row.iter().filter(|&&sat| !sat).count() as u64)
        .sum()
}
