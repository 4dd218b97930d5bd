//! Clifford semigroups as semilattices of groups, the kernel–trace
//! description of congruences on inverse semigroups, and the solutions
//! that are invariant on, or fix, the idempotents.

mod fixed;
mod invariant;
mod pairs;
mod structure;

pub use fixed::{e_fixed_kernel, glue_e_fixed, Epsilon, EpsilonMap, GluedSolution, GluingData};
pub use invariant::{
    construct_e_invariant, e_invariant_isomorphic, extract_e_invariant_data, EInvariantData, IdempotentReading,
};
pub use pairs::{congruence_from_pair, is_congruence_pair, kernel_and_trace, CongruencePairData};
pub use structure::{canonical_clifford_solutions, clifford_structure, invariance_flags, CanonicalSolutions, CliffordStructure, InvarianceFlags, PhiMap};

use thiserror::Error;

use crate::semigroup::SemigroupError;
use crate::solution::PeError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliffordError {
    #[error("the semigroup is not a Clifford semigroup")]
    NotClifford,
    #[error("the semigroup is not an inverse semigroup")]
    NotInverse,
    #[error("not a congruence pair: {0}")]
    NotCongruencePair(String),
    #[error("the relation is not a congruence")]
    NotACongruence,
    #[error("the quotient by ρ is not a group")]
    QuotientNotGroup,
    #[error("bad representatives: {0}")]
    BadRepresentatives(String),
    #[error("μ(xy) ≠ μ(x)μ(x)⁻¹μ(xy) at x={0}, y={1}")]
    MuConditionFailed(usize, usize),
    #[error("gluing condition {condition} fails at e={e}, f={f}, h={h}, x={x}, y={y}")]
    CompatibilityFailed {
        condition: usize,
        e: usize,
        f: usize,
        h: usize,
        x: usize,
        y: usize,
    },
    #[error("bad gluing data: {0}")]
    BadGluingData(String),
    #[error("hypothesis fails: {0}")]
    HypothesisFailed(String),
    #[error("the solution is not invariant on the idempotents")]
    NotEInvariant,
    #[error("theorem check failed: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Solution(#[from] PeError),
}
