//! Finite semigroups as Cayley tables: validation, structural analysis,
//! canonical forms, congruences, and the group-theoretic helpers the
//! solution theory relies on.

mod canonical;
mod congruence;
mod facts;
mod group;
mod map;
pub mod named;
mod table;

pub use canonical::{
    canonical_form, canonical_form_up_to_anti, permutations, tables_isomorphic, MAX_CANONICAL_ORDER,
};
pub use congruence::{
    congruences_by_joins, enumerate_congruences, principal_congruence, set_partitions, Congruence,
    PARTITION_SCAN_MAX,
};
pub use facts::{analyze, LeftGroupWitness, SemigroupFacts};
pub use group::{coset_representative_systems, normal_subgroups, Group, RepresentativeSystem};
pub use map::ElementMap;
pub use table::{validate_table, CayleyTable, MAX_ORDER};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("the carrier must be non-empty")]
    EmptyCarrier,
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("table shape mismatch: expected {expected} entries, found {found} (row {row:?})")]
    Shape {
        expected: usize,
        row: Option<usize>,
        found: usize,
    },
    #[error("entry table[{row}][{col}] = {value} is out of range")]
    OutOfRangeEntry { row: usize, col: usize, value: usize },
    #[error("not associative: ({0}·{1})·{2} ≠ {0}·({1}·{2})")]
    NotAssociative(usize, usize, usize),
    #[error("canonicalization scans all relabelings and is limited to order {MAX_CANONICAL_ORDER}, got {0}")]
    CanonicalizationTooLarge(usize),
    #[error("the semigroup is not a group")]
    NotAGroup,
    #[error("{0:?} is not a normal subgroup")]
    NotNormal(Vec<usize>),
    #[error("{0:?} is not closed under the product")]
    NotClosed(Vec<usize>),
    #[error("the partition is not compatible with the product")]
    NotACongruence,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_tables() -> Vec<CayleyTable> {
        let mut v: Vec<CayleyTable> = vec![
            named::cyclic_group(3),
            named::clifford_monoid_m(),
            named::idempotent_example_monoid(),
            named::null_semigroup(3),
            named::left_zero(3),
            named::right_zero(2).direct_product(&named::cyclic_group(2)),
            named::klein_four(),
            named::symmetric_group_3(),
        ];
        v.push(named::semilattice_two().direct_product(&named::cyclic_group(2)));
        v
    }

    proptest! {
        #[test]
        fn canonical_form_is_relabeling_invariant(idx in 0usize..9, seed in any::<u64>()) {
            let t = &small_tables()[idx];
            let n = t.order();
            let mut image: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                image.swap(i, (s >> 33) as usize % (i + 1));
            }
            let relabeled = t.relabel(&ElementMap::new(image).unwrap());
            let (c1, _) = canonical_form(t).unwrap();
            let (c2, w) = canonical_form(&relabeled).unwrap();
            prop_assert_eq!(&c1, &c2);
            prop_assert_eq!(relabeled.relabel(&w), c2.clone());
            prop_assert_eq!(canonical_form(&c2).unwrap().0, c2);
        }

        #[test]
        fn analyze_flags_are_consistent(idx in 0usize..9) {
            let f = analyze(&small_tables()[idx]);
            if f.is_group {
                prop_assert!(f.is_monoid && f.is_cancellative && f.is_inverse && f.is_clifford);
            }
            prop_assert_eq!(f.identity.is_some(), f.is_monoid);
            if f.is_clifford {
                prop_assert!(f.is_inverse);
            }
            prop_assert_eq!(f.inverses.is_some(), f.is_inverse);
        }
    }
}
