//! Brute-force MAX-SAT reference oracle.

use crate::DriverError;
use gadgets::CnfFormula;

/// Largest variable count the exhaustive oracle accepts (2^24 assignments).
pub const BRUTE_FORCE_VAR_LIMIT: u32 = 24;

/// Result of a MAX-SAT computation: the best satisfied-clause count and an
/// assignment achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxSatResult {
    pub best: usize,
    pub witness: Vec<bool>,
}

/// Enumerates every assignment and keeps the first maximizer, taking
/// variable 1 as the least-significant bit of the enumeration order.
pub fn brute_force_max_sat(formula: &CnfFormula) -> Result<MaxSatResult, DriverError> {
    let n = formula.num_vars();
    if n > BRUTE_FORCE_VAR_LIMIT {
        return Err(DriverError::TooManyVariables {
            num_vars: n,
            limit: BRUTE_FORCE_VAR_LIMIT,
        });
    }
    let mut best = 0usize;
    let mut witness: Vec<bool> = vec![false; n as usize];
    let mut assignment = vec![false; n as usize];
    for mask in 0u64..(1u64 << n) {
        for (v, slot) in assignment.iter_mut().enumerate() {
            *slot = (mask >> v) & 1 == 1;
        }
        let satisfied = formula.satisfied_count(&assignment);
        if mask == 0 || satisfied > best {
            best = satisfied;
            witness.copy_from_slice(&assignment);
        }
    }
    Ok(MaxSatResult { best, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gadgets::{Clause, Literal};

    fn lit(code: i64) -> Literal {
        Literal::from_dimacs(code).unwrap()
    }

    #[test]
    fn contradictory_units_leave_one_unsatisfied() {
        let f = CnfFormula::new(
            2,
            vec![
                Clause::new([lit(1)]),
                Clause::new([lit(-1)]),
                Clause::new([lit(2)]),
            ],
        )
        .unwrap();
        let result = brute_force_max_sat(&f).unwrap();
        assert_eq!(result.best, 2);
        assert_eq!(f.satisfied_count(&result.witness), 2);
    }

    #[test]
    fn witness_is_first_maximizer() {
        // Both x₁ values satisfy the tautology; the all-false assignment
        // comes first in enumeration order.
        let f = CnfFormula::new(1, vec![Clause::new([lit(1), lit(-1)])]).unwrap();
        let result = brute_force_max_sat(&f).unwrap();
        assert_eq!(result.best, 1);
        assert_eq!(result.witness, vec![false]);
    }

    #[test]
    fn empty_clause_never_satisfied() {
        let f = CnfFormula::new(1, vec![Clause::new([]), Clause::new([lit(1)])]).unwrap();
        let result = brute_force_max_sat(&f).unwrap();
        assert_eq!(result.best, 1);
    }

    #[test]
    fn no_clauses_means_best_zero() {
        let f = CnfFormula::new(3, vec![]).unwrap();
        let result = brute_force_max_sat(&f).unwrap();
        assert_eq!(result.best, 0);
        assert_eq!(result.witness, vec![false; 3]);
    }

    #[test]
    fn variable_limit_is_enforced() {
        let f = CnfFormula::new(25, vec![Clause::new([lit(1)])]).unwrap();
        assert!(matches!(
            brute_force_max_sat(&f).unwrap_err(),
            DriverError::TooManyVariables { num_vars: 25, .. }
        ));
    }
}
