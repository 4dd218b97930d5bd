//! Explicit recipes producing pentagon solutions. Every output is
//! re-verified against both axioms before it is returned.

mod elementary;
mod factorization;
mod groups;
mod matched;

pub use elementary::{endo_solution, idempotent_endomorphisms, left_zero_group_solution, lyubashenko};
pub use factorization::{exact_factorization_solutions, FactorizationSolutions};
pub use groups::{
    all_group_quotient_solutions, extract_group_data, group_quotient_solution, kashaev_sergeev, kac_takesaki,
    GroupSolutionData,
};
pub use matched::{
    check_matched_quadruple, matched_product, matched_product_map, worked_example_case, worked_example_quadruple,
    MatchedQuadruple, MatchedVerdict, MatchedViolation, MATCHED_IDENTITIES,
};

use thiserror::Error;

use crate::semigroup::SemigroupError;
use crate::solution::PeError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("precondition fails: {0}")]
    PreconditionFailed(String),
    #[error("γ is not a semigroup endomorphism: γ({0}·{1}) ≠ γ({0})·γ({1})")]
    NotEndomorphism(usize, usize),
    #[error("γ is not idempotent: γ(γ({0})) ≠ γ({0})")]
    NotIdempotentMap(usize),
    #[error("σ^(σ(i)+1) ≠ σ^i at i = {0} (1-indexed)")]
    SigmaConditionFailed(usize),
    #[error("σ is not a permutation of the index set")]
    NotAPermutation,
    #[error("element {element} has {count} factorizations through H·K")]
    NotExactFactorization { element: usize, count: usize },
    #[error("{0:?} is not a subgroup")]
    NotASubgroup(Vec<usize>),
    #[error("x ∗ y = μ(x)⁻¹μ(xy) leaves X, or X is not closed, at x={0}, y={1}")]
    ClosureFailed(usize, usize),
    #[error("μ(x ∗ y) ≠ λ(x)μ(y) at x={0}, y={1}")]
    CocycleFailed(usize, usize),
    #[error("bad representative system: {0}")]
    BadRepresentativeSystem(String),
    #[error("the semigroup is not a group")]
    NotAGroup,
    #[error("the quadruple is not matched: {0}")]
    NotMatched(String),
    #[error("theorem check failed: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Solution(#[from] PeError),
}
