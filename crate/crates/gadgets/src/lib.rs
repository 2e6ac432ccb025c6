//! Flow-network encodings of partial-assignment satisfaction questions.
//!
//! Given a CNF formula and a three-way split of its variables, the builders
//! here produce flow networks in which a max-flow query between two
//! assignment nodes decides whether the middle block can be completed so
//! that at least p clauses hold. Three constructions are provided: a
//! unit-capacity network with per-completion rationing lanes, a compressed
//! network with block-sized capacities, and a two-block network whose local
//! edge connectivity counts satisfied clauses directly.
//!
//! Alongside the builders live the supporting pieces: CNF and partition
//! types, closed-form size formulas, single-triple slices, explicit witness
//! flows and cuts for the correctness arguments, and an annotated file
//! format for moving gadgets between tools.

mod build;
mod cnf;
pub mod counts;
mod export;
mod partition;
mod subgadget;
mod witness;

pub use build::{
    build_cap_gadget, build_mlec_gadget, build_uncap_gadget, EdgeColor, GadgetError, GadgetGraph,
    GadgetVariant, Role,
};
pub use cnf::{read_cnf, write_cnf, Clause, CnfError, CnfFormula, Literal};
pub use export::{read_gadget, write_gadget, GadgetFile, GadgetFileError};
pub use partition::{
    plan_partition, Partition, PartitionError, PartitionPlan, PartialAssignment, Rational,
    MAX_BLOCK_SIZE,
};
pub use subgadget::{subgadget, SubGadget};
pub use witness::{witness_cut_cap, witness_cut_kpmf, witness_flow_cap, witness_flow_uncap};
