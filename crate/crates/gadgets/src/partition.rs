//! Three-way variable partitions and partial assignments over one block.
//!
//! A partition splits the variables 1..=n into ordered blocks (U₁, U₂, U₃).
//! Block sizes come from a pair of rational split coefficients: the planner
//! computes target fractions a = c₁/(1 + c₁ + c₂) and b = c₂/(1 + c₁ + c₂)
//! exactly, gives U₁ exactly ⌊a·n⌋ variables, U₃ exactly ⌊b·n⌋, and puts the
//! rest in U₂. Because a + b < 1, the middle block is never empty for n ≥ 1.

use crate::cnf::Clause;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub type Rational = Ratio<i64>;

/// Largest block size the gadget builders accept (per block, so one block
/// contributes at most 2^20 assignment nodes).
pub const MAX_BLOCK_SIZE: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("split coefficient {name} = {value} lies outside [0, 1]")]
    CoefficientRange { name: &'static str, value: Rational },
    #[error("variable {var} is {problem} (blocks must partition 1..={num_vars})")]
    NotAPartition {
        var: u32,
        num_vars: u32,
        problem: &'static str,
    },
    #[error("plan sizes {sizes:?} sum to {total}, expected {num_vars}")]
    SizeMismatch {
        sizes: [usize; 3],
        total: usize,
        num_vars: u32,
    },
}

/// Output of the split planner: exact rational targets plus the realized
/// integer block sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPlan {
    pub sizes: [usize; 3],
    pub a: Rational,
    pub b: Rational,
}

/// Computes block sizes for splitting `num_vars` variables with coefficients
/// c₁, c₂ ∈ [0, 1]: targets a = c₁/(1+c₁+c₂) and b = c₂/(1+c₁+c₂), realized
/// as |U₁| = ⌊a·n⌋, |U₃| = ⌊b·n⌋, |U₂| = n − |U₁| − |U₃|.
pub fn plan_partition(
    c1: Rational,
    c2: Rational,
    num_vars: u32,
) -> Result<PartitionPlan, PartitionError> {
    for (name, value) in [("c1", c1), ("c2", c2)] {
        if value < Rational::zero() || value > Rational::one() {
            return Err(PartitionError::CoefficientRange { name, value });
        }
    }
    let denom = Rational::one() + c1 + c2;
    let a = c1 / denom;
    let b = c2 / denom;
    let n = Rational::from_integer(num_vars as i64);
    let u1 = (a * n).floor().to_integer() as usize;
    let u3 = (b * n).floor().to_integer() as usize;
    let u2 = num_vars as usize - u1 - u3;
    Ok(PartitionPlan {
        sizes: [u1, u2, u3],
        a,
        b,
    })
}

/// An ordered partition of 1..=num_vars into three blocks, each stored
/// sorted ascending, together with the rational targets it realizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    num_vars: u32,
    blocks: [Vec<u32>; 3],
    a: Rational,
    b: Rational,
}

impl Partition {
    /// Builds a partition from explicit blocks. Targets are recorded as the
    /// realized fractions |U₁|/n and |U₃|/n.
    pub fn new(
        num_vars: u32,
        u1: Vec<u32>,
        u2: Vec<u32>,
        u3: Vec<u32>,
    ) -> Result<Partition, PartitionError> {
        let n = Rational::from_integer(num_vars as i64);
        let a = Rational::from_integer(u1.len() as i64) / n;
        let b = Rational::from_integer(u3.len() as i64) / n;
        Partition::from_parts(num_vars, [u1, u2, u3], a, b)
    }

    /// Builds a partition from explicit blocks and explicit rational targets.
    pub fn from_parts(
        num_vars: u32,
        blocks: [Vec<u32>; 3],
        a: Rational,
        b: Rational,
    ) -> Result<Partition, PartitionError> {
        let mut blocks = blocks;
        for block in &mut blocks {
            block.sort_unstable();
        }
        let mut seen = vec![false; num_vars as usize];
        for block in &blocks {
            for &var in block {
                if var == 0 || var > num_vars {
                    return Err(PartitionError::NotAPartition {
                        var,
                        num_vars,
                        problem: "out of range",
                    });
                }
                if seen[(var - 1) as usize] {
                    return Err(PartitionError::NotAPartition {
                        var,
                        num_vars,
                        problem: "assigned to two blocks",
                    });
                }
                seen[(var - 1) as usize] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(PartitionError::NotAPartition {
                var: missing as u32 + 1,
                num_vars,
                problem: "missing from every block",
            });
        }
        Ok(Partition {
            num_vars,
            blocks,
            a,
            b,
        })
    }

    /// Assigns 1..=num_vars to the blocks in consecutive runs following the
    /// plan's sizes: U₁ gets the lowest-numbered variables, then U₂, then U₃.
    pub fn contiguous(num_vars: u32, plan: &PartitionPlan) -> Result<Partition, PartitionError> {
        let total: usize = plan.sizes.iter().sum();
        if total != num_vars as usize {
            return Err(PartitionError::SizeMismatch {
                sizes: plan.sizes,
                total,
                num_vars,
            });
        }
        let vars: Vec<u32> = (1..=num_vars).collect();
        let (u1, rest) = vars.split_at(plan.sizes[0]);
        let (u2, u3) = rest.split_at(plan.sizes[1]);
        Partition::from_parts(
            num_vars,
            [u1.to_vec(), u2.to_vec(), u3.to_vec()],
            plan.a,
            plan.b,
        )
    }

    /// Like `contiguous` but distributes variables by a seeded shuffle, so
    /// the same seed always produces the same partition.
    pub fn shuffled(
        num_vars: u32,
        plan: &PartitionPlan,
        seed: u64,
    ) -> Result<Partition, PartitionError> {
        let total: usize = plan.sizes.iter().sum();
        if total != num_vars as usize {
            return Err(PartitionError::SizeMismatch {
                sizes: plan.sizes,
                total,
                num_vars,
            });
        }
        let mut vars: Vec<u32> = (1..=num_vars).collect();
        vars.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let (u1, rest) = vars.split_at(plan.sizes[0]);
        let (u2, u3) = rest.split_at(plan.sizes[1]);
        Partition::from_parts(
            num_vars,
            [u1.to_vec(), u2.to_vec(), u3.to_vec()],
            plan.a,
            plan.b,
        )
    }

    /// Two-block split used by the edge-connectivity construction: U₁ gets
    /// the first ⌈n/2⌉ variables, U₂ the rest, U₃ stays empty.
    pub fn halves(num_vars: u32) -> Partition {
        let first = (num_vars as usize).div_ceil(2);
        let vars: Vec<u32> = (1..=num_vars).collect();
        let (u1, u2) = vars.split_at(first);
        Partition::new(num_vars, u1.to_vec(), u2.to_vec(), Vec::new())
            .expect("consecutive halves always form a partition")
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn block(&self, index: usize) -> &[u32] {
        &self.blocks[index]
    }

    pub fn sizes(&self) -> [usize; 3] {
        [
            self.blocks[0].len(),
            self.blocks[1].len(),
            self.blocks[2].len(),
        ]
    }

    /// The rational fractions (a, b) this partition was planned for.
    pub fn targets(&self) -> (Rational, Rational) {
        (self.a, self.b)
    }

    /// Number of assignments to the given block: 2^|block|.
    pub fn assignment_count(&self, block: usize) -> usize {
        let len = self.blocks[block].len();
        assert!(len < usize::BITS as usize, "block too large to enumerate");
        1usize << len
    }

    /// The `index`-th assignment to the given block; bit j of `index` is the
    /// value of the block's j-th variable (ascending order).
    pub fn assignment(&self, block: usize, index: usize) -> PartialAssignment {
        assert!(index < self.assignment_count(block));
        PartialAssignment {
            vars: self.blocks[block].clone(),
            bits: index as u64,
        }
    }

    /// Combines one assignment index per block into a full assignment.
    pub fn compose(&self, indices: [usize; 3]) -> Vec<bool> {
        let mut values = vec![false; self.num_vars as usize];
        for (block, &index) in self.blocks.iter().zip(indices.iter()) {
            assert!(block.len() < usize::BITS as usize && (index >> block.len()) == 0);
            for (j, &var) in block.iter().enumerate() {
                values[(var - 1) as usize] = (index >> j) & 1 == 1;
            }
        }
        values
    }

    /// Splits a full assignment into one assignment index per block.
    pub fn decompose(&self, assignment: &[bool]) -> [usize; 3] {
        assert_eq!(assignment.len(), self.num_vars as usize);
        let mut indices = [0usize; 3];
        for (block, slot) in self.blocks.iter().zip(indices.iter_mut()) {
            for (j, &var) in block.iter().enumerate() {
                if assignment[(var - 1) as usize] {
                    *slot |= 1 << j;
                }
            }
        }
        indices
    }
}

/// An assignment to a subset of the variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialAssignment {
    vars: Vec<u32>,
    bits: u64,
}

impl PartialAssignment {
    pub fn vars(&self) -> &[u32] {
        &self.vars
    }

    pub fn index(&self) -> usize {
        self.bits as usize
    }

    /// Value of `var`, or None if this assignment does not cover it.
    pub fn value(&self, var: u32) -> Option<bool> {
        self.vars
            .binary_search(&var)
            .ok()
            .map(|j| (self.bits >> j) & 1 == 1)
    }

    /// True iff some literal of the clause is made true by this partial
    /// assignment (unassigned variables cannot satisfy a literal).
    pub fn satisfies(&self, clause: &Clause) -> bool {
        clause
            .literals()
            .iter()
            .any(|lit| self.value(lit.var) == Some(lit.positive))
    }
}
