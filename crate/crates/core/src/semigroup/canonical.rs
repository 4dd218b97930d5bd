use itertools::Itertools;

use super::{CayleyTable, ElementMap, SemigroupError};

/// Canonicalization scans all `n!` relabelings; beyond this it refuses.
pub const MAX_CANONICAL_ORDER: usize = 7;

/// All permutations of `{0..n-1}` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = ElementMap> {
    (0..n)
        .permutations(n)
        .map(|p| ElementMap::new(p).expect("permutation is in range"))
}

/// Lexicographically minimal relabeled table, plus a relabeling that reaches it.
///
/// When several relabelings reach the minimum, the lexicographically first
/// permutation is returned.
pub fn canonical_form(table: &CayleyTable) -> Result<(CayleyTable, ElementMap), SemigroupError> {
    let n = table.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(SemigroupError::CanonicalizationTooLarge(n));
    }
    let mut best: Option<(Vec<u8>, ElementMap)> = None;
    let mut buf = vec![0u8; n * n];
    for perm in permutations(n) {
        relabel_into(table, &perm, &mut buf);
        if best.as_ref().is_none_or(|(b, _)| buf < *b) {
            best = Some((buf.clone(), perm));
        }
    }
    let (cells, perm) = best.expect("at least one permutation");
    Ok((CayleyTable::from_cells_unchecked(n, cells), perm))
}

fn relabel_into(table: &CayleyTable, perm: &ElementMap, buf: &mut [u8]) {
    let n = table.order();
    for x in 0..n {
        for y in 0..n {
            buf[perm.apply(x) * n + perm.apply(y)] = perm.apply(table.mul(x, y)) as u8;
        }
    }
}

/// Isomorphism test through canonical forms.
pub fn tables_isomorphic(a: &CayleyTable, b: &CayleyTable) -> Result<bool, SemigroupError> {
    if a.order() != b.order() {
        return Ok(false);
    }
    Ok(canonical_form(a)?.0 == canonical_form(b)?.0)
}

/// Canonical key for a semigroup up to isomorphism or anti-isomorphism.
pub fn canonical_form_up_to_anti(table: &CayleyTable) -> Result<CayleyTable, SemigroupError> {
    let a = canonical_form(table)?.0;
    let b = canonical_form(&table.opposite())?.0;
    Ok(a.min(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;

    #[test]
    fn z2_relabelings_agree() {
        let z2 = named::cyclic_group(2);
        let swapped = z2.relabel(&ElementMap::new(vec![1, 0]).unwrap());
        assert_eq!(canonical_form(&z2).unwrap().0, canonical_form(&swapped).unwrap().0);
    }

    #[test]
    fn left_and_right_zero_differ() {
        let lz = named::left_zero(2);
        let rz = named::right_zero(2);
        assert_ne!(canonical_form(&lz).unwrap().0, canonical_form(&rz).unwrap().0);
        assert_eq!(canonical_form_up_to_anti(&lz).unwrap(), canonical_form_up_to_anti(&rz).unwrap());
    }

    #[test]
    fn witness_reaches_canonical_table() {
        let s3 = named::symmetric_group_3();
        let (canon, perm) = canonical_form(&s3).unwrap();
        assert_eq!(s3.relabel(&perm), canon);
        let (again, _) = canonical_form(&canon).unwrap();
        assert_eq!(again, canon);
    }

    #[test]
    fn refuses_large_orders() {
        let z8 = named::cyclic_group(8);
        assert_eq!(canonical_form(&z8).unwrap_err(), SemigroupError::CanonicalizationTooLarge(8));
    }

    #[test]
    fn self_is_accepted_by_identity() {
        let m = named::clifford_monoid_m();
        assert_eq!(m.relabel(&ElementMap::identity(3)), m);
    }
}
