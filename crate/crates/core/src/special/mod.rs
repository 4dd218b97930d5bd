//! Involutive, idempotent, commutative and cocommutative solutions:
//! structure theorems turned into constructions, decompositions and
//! exhaustive checks.

mod commutativity;
mod idempotent;
mod involutive;
mod report;

pub use commutativity::{commutativity_characterizations, CommutativityReport};
pub use idempotent::{
    construct_idempotent_central, extract_idempotent_central, idempotent_theta_checks, monoid_theta_checks,
    theta1_homomorphism_data, IdempotentClassificationData, Theta1Data,
};
pub use involutive::{
    count_involutive, decompose_involutive, ext_sigma, reassemble, retract, retract_with_classes, t_a,
    InvolutiveDecomposition,
};
pub use report::{Check, Report};

use thiserror::Error;

use crate::semigroup::SemigroupError;
use crate::solution::PeError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecialError {
    #[error("the solution is not involutive")]
    NotInvolutive,
    #[error("the solution is not idempotent")]
    NotIdempotent,
    #[error("the semigroup is not a monoid")]
    NotMonoid,
    #[error("the idempotents are not central")]
    IdempotentsNotCentral,
    #[error("not an elementary abelian 2-group")]
    NotElementaryAbelian2Group,
    #[error("bad σ: {0}")]
    BadSigma(String),
    #[error("retract is not well defined: {0}")]
    NotWellDefined(String),
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("condition {index} fails at {witnesses:?}")]
    ConditionFailed { index: usize, witnesses: Vec<usize> },
    #[error("theorem check failed: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Solution(#[from] PeError),
}
