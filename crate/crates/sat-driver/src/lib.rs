//! MAX-SAT solving and verification on top of the flow gadget constructions.
//!
//! The driver answers "can at least p clauses be satisfied?" by running
//! threshold-bounded max-flow queries over a pairwise gadget, lifts that
//! decision procedure to full MAX-SAT via monotone search, and recovers a
//! concrete satisfying assignment from the flow structure. Everything is
//! cross-checked against a brute-force oracle and explicit witness objects
//! by [`verify_lemma`].

mod driver;
mod oracle;
mod verify;

pub use driver::{
    decide_threshold, max_sat_via_flow, mlec_max_sat, recover_triple, DriverError, DriverStats,
    SearchMode,
};
pub use oracle::{brute_force_max_sat, MaxSatResult, BRUTE_FORCE_VAR_LIMIT};
pub use verify::{verify_lemma, ThresholdRecord, VerificationReport};
