//! CNF formulas and the DIMACS CNF file format.

use thiserror::Error;

/// A signed variable occurrence. Variables are numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: u32,
    pub positive: bool,
}

impl Literal {
    pub fn positive(var: u32) -> Literal {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn negative(var: u32) -> Literal {
        Literal {
            var,
            positive: false,
        }
    }

    /// Signed-integer encoding: `x₃ ↦ 3`, `¬x₃ ↦ -3`.
    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    pub fn from_dimacs(code: i64) -> Option<Literal> {
        if code == 0 || code.unsigned_abs() > u32::MAX as u64 {
            return None;
        }
        Some(Literal {
            var: code.unsigned_abs() as u32,
            positive: code > 0,
        })
    }

    /// Truth value under a full assignment (`assignment[var - 1]`).
    pub fn evaluate(self, assignment: &[bool]) -> bool {
        assignment[(self.var - 1) as usize] == self.positive
    }
}

/// A disjunction of literals, stored sorted and deduplicated. A clause may
/// contain a literal and its negation; it is then tautological (every full
/// assignment satisfies it) but still a legal clause.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Clause {
        let mut literals: Vec<Literal> = literals.into_iter().collect();
        literals.sort();
        literals.dedup();
        Clause { literals }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn width(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn is_tautological(&self) -> bool {
        self.literals
            .windows(2)
            .any(|w| w[0].var == w[1].var && w[0].positive != w[1].positive)
    }

    /// True iff some literal is true under the full assignment.
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.literals.iter().any(|lit| lit.evaluate(assignment))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CnfError {
    #[error("formula needs at least one variable")]
    NoVariables,
    #[error("literal uses variable {var}, valid range is 1..={num_vars}")]
    VarOutOfRange { var: u32, num_vars: u32 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A CNF formula: `num_vars` variables (numbered 1..=num_vars) and a clause
/// list. Duplicate clauses are kept; order is preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<CnfFormula, CnfError> {
        if num_vars == 0 {
            return Err(CnfError::NoVariables);
        }
        for clause in &clauses {
            for lit in clause.literals() {
                if lit.var == 0 || lit.var > num_vars {
                    return Err(CnfError::VarOutOfRange {
                        var: lit.var,
                        num_vars,
                    });
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Number of clauses a full assignment satisfies.
    pub fn satisfied_count(&self, assignment: &[bool]) -> usize {
        debug_assert_eq!(assignment.len(), self.num_vars as usize);
        self.clauses
            .iter()
            .filter(|c| c.evaluate(assignment))
            .count()
    }
}

/// Canonical DIMACS CNF text: problem line, then one line per clause with
/// its literals in sorted order, 0-terminated.
pub fn write_cnf(formula: &CnfFormula) -> String {
    let mut out = format!(
        "p cnf {} {}\n",
        formula.num_vars(),
        formula.clause_count()
    );
    for clause in formula.clauses() {
        for lit in clause.literals() {
            out.push_str(&lit.to_dimacs().to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

pub fn read_cnf(input: &str) -> Result<CnfFormula, CnfError> {
    let parse_err = |line: usize, message: &str| CnfError::Parse {
        line,
        message: message.to_string(),
    };
    let mut header: Option<(u32, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        let mut tokens = line.split_whitespace().peekable();
        match tokens.peek() {
            None | Some(&"c") => continue,
            Some(&"p") => {
                tokens.next();
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                if tokens.next() != Some("cnf") {
                    return Err(parse_err(lineno, "problem line must read 'p cnf <vars> <clauses>'"));
                }
                let vars: u32 = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "bad variable count"))?;
                let count: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "bad clause count"))?;
                if tokens.next().is_some() {
                    return Err(parse_err(lineno, "trailing tokens on problem line"));
                }
                header = Some((vars, count));
            }
            Some(_) => {
                if header.is_none() {
                    return Err(parse_err(lineno, "clause before problem line"));
                }
                for token in tokens {
                    let code: i64 = token
                        .parse()
                        .map_err(|_| parse_err(lineno, "literal is not an integer"))?;
                    if code == 0 {
                        clauses.push(Clause::new(current.drain(..)));
                    } else {
                        current.push(
                            Literal::from_dimacs(code)
                                .ok_or_else(|| parse_err(lineno, "literal out of range"))?,
                        );
                    }
                }
            }
        }
    }
    let line_count = input.lines().count();
    if !current.is_empty() {
        return Err(parse_err(line_count, "unterminated clause (missing 0)"));
    }
    let (num_vars, clause_count) =
        header.ok_or_else(|| parse_err(line_count, "missing problem line"))?;
    if clauses.len() != clause_count {
        return Err(CnfError::Parse {
            line: line_count,
            message: format!(
                "problem line promises {clause_count} clauses, found {}",
                clauses.len()
            ),
        });
    }
    CnfFormula::new(num_vars, clauses)
}
