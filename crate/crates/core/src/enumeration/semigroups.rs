use std::collections::BTreeSet;

use crate::semigroup::{canonical_form, canonical_form_up_to_anti, CayleyTable};

use super::search::{search, Problem, Status, UNSET};
use super::EnumerationError;

/// Largest order enumerated by default.
pub const MAX_SEMIGROUP_ORDER: usize = 4;
/// Largest order reachable through [`enumerate_semigroups_long`].
pub const MAX_LONG_SEMIGROUP_ORDER: usize = 5;

/// How enumerated tables are deduplicated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedupe {
    /// Every labeled table.
    Labeled,
    /// One canonical representative per isomorphism class.
    Iso,
    /// One representative per class of isomorphism or anti-isomorphism.
    IsoOrAnti,
}

/// All semigroups of order `n ≤ 4`, sorted by cell bytes. With
/// `up_to_iso`, each class is represented by its canonical form.
pub fn enumerate_semigroups(n: usize, up_to_iso: bool) -> Result<Vec<CayleyTable>, EnumerationError> {
    let mode = if up_to_iso { Dedupe::Iso } else { Dedupe::Labeled };
    enumerate_semigroups_with(n, mode, MAX_SEMIGROUP_ORDER)
}

/// Like [`enumerate_semigroups`] but also accepts order 5, which takes a
/// while.
pub fn enumerate_semigroups_long(n: usize, mode: Dedupe) -> Result<Vec<CayleyTable>, EnumerationError> {
    enumerate_semigroups_with(n, mode, MAX_LONG_SEMIGROUP_ORDER)
}

pub fn enumerate_semigroups_with(n: usize, mode: Dedupe, max: usize) -> Result<Vec<CayleyTable>, EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::EmptyCarrier);
    }
    if n > max {
        return Err(EnumerationError::OrderTooLarge { order: n, max });
    }
    let labeled = labeled_tables(n);
    Ok(match mode {
        Dedupe::Labeled => labeled,
        Dedupe::Iso => labeled
            .iter()
            .map(|t| canonical_form(t).expect("small order").0)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
        Dedupe::IsoOrAnti => labeled
            .iter()
            .map(|t| canonical_form_up_to_anti(t).expect("small order"))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
    })
}

/// Associativity instance `(x, y, z)`.
type Triple = (u8, u8, u8);

fn labeled_tables(n: usize) -> Vec<CayleyTable> {
    let mut instances = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let trigger = (x * n + y).max(y * n + z);
                instances.push((trigger, (x as u8, y as u8, z as u8)));
            }
        }
    }
    let problem = Problem {
        cells: n * n,
        domain: n,
        instances,
    };
    let eval = |&(x, y, z): &Triple, t: &[u8]| {
        let (x, y, z) = (x as usize, y as usize, z as usize);
        let xy = t[x * n + y] as usize;
        let yz = t[y * n + z] as usize;
        let left = t[xy * n + z];
        if left == UNSET {
            return Status::Pending(xy * n + z);
        }
        let right = t[x * n + yz];
        if right == UNSET {
            return Status::Pending(x * n + yz);
        }
        if left == right {
            Status::Holds
        } else {
            Status::Fails
        }
    };
    let mut out = Vec::new();
    search(&problem, &eval, &[], n * n, &mut |cells| {
        out.push(CayleyTable::from_cells(n, cells.to_vec()).expect("search only emits associative tables"));
    });
    out
}

/// Scans all `n^(n²)` tables. Independent oracle for small `n`.
pub fn naive_semigroups(n: usize) -> Vec<CayleyTable> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .filter_map(|mut code| {
            let mut t = vec![0u8; cells];
            for c in t.iter_mut().rev() {
                *c = (code % n) as u8;
                code /= n;
            }
            CayleyTable::from_cells(n, t).ok()
        })
        .collect()
}

/// Isomorphism classes by pairwise comparison against earlier
/// representatives, without canonical forms.
pub fn classes_by_pairwise_isomorphism(tables: &[CayleyTable]) -> usize {
    let mut reps: Vec<&CayleyTable> = Vec::new();
    for t in tables {
        let iso = |r: &&CayleyTable| {
            crate::semigroup::permutations(t.order()).any(|p| t.relabel(&p) == **r)
        };
        if !reps.iter().any(iso) {
            reps.push(t);
        }
    }
    reps.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_by_order() {
        let labeled: Vec<usize> = (1..=3).map(|n| enumerate_semigroups(n, false).unwrap().len()).collect();
        assert_eq!(labeled, vec![1, 8, 113]);
        let iso: Vec<usize> = (1..=3).map(|n| enumerate_semigroups(n, true).unwrap().len()).collect();
        assert_eq!(iso, vec![1, 5, 24]);
        let anti: Vec<usize> = (1..=3)
            .map(|n| enumerate_semigroups_long(n, Dedupe::IsoOrAnti).unwrap().len())
            .collect();
        assert_eq!(anti, vec![1, 4, 18]);
    }

    #[test]
    fn backtracking_matches_naive_scan() {
        for n in 1..=3 {
            assert_eq!(enumerate_semigroups(n, false).unwrap(), naive_semigroups(n));
        }
    }

    #[test]
    fn pairwise_oracle_agrees_with_canonical_forms() {
        for n in 1..=3 {
            let all = naive_semigroups(n);
            assert_eq!(classes_by_pairwise_isomorphism(&all), enumerate_semigroups(n, true).unwrap().len());
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(enumerate_semigroups(5, true), Err(EnumerationError::OrderTooLarge { .. })));
        assert!(matches!(enumerate_semigroups(0, true), Err(EnumerationError::EmptyCarrier)));
    }
}
