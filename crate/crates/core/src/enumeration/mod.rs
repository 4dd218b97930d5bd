//! Exhaustive search: semigroups of small order, pentagon solutions on a
//! given semigroup, and non-isomorphic censuses with on-disk catalogs.

mod census;
mod search;
mod semigroups;
mod solutions;

pub use census::{census, write_catalog, CatalogEntry, CensusReport, SemigroupRow};
pub use semigroups::{
    classes_by_pairwise_isomorphism, enumerate_semigroups, enumerate_semigroups_long, enumerate_semigroups_with,
    naive_semigroups, Dedupe, MAX_LONG_SEMIGROUP_ORDER, MAX_SEMIGROUP_ORDER,
};
pub use solutions::{enumerate_solutions, naive_solutions, parallel_partition, SearchFilter, FILTER_NAMES};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("the carrier must be non-empty")]
    EmptyCarrier,
    #[error("order {order} is beyond the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("order {0} needs a restrictive filter (involutive, idempotent, bijective or cocommutative)")]
    FilterTooWeak(usize),
    #[error("unknown filter {0:?}")]
    UnknownFilter(String),
    #[error("at least one worker is required")]
    NoWorkers,
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}
