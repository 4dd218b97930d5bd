use itertools::Itertools;

use super::{CayleyTable, ElementMap, SemigroupError};

/// A finite group: a table known to have an identity and inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    table: CayleyTable,
    identity: usize,
    inverse: Vec<usize>,
}

impl Group {
    pub fn new(table: CayleyTable) -> Result<Self, SemigroupError> {
        let identity = table.identity().ok_or(SemigroupError::NotAGroup)?;
        let inverse = table
            .elements()
            .map(|x| {
                table
                    .elements()
                    .find(|&y| table.mul(x, y) == identity && table.mul(y, x) == identity)
            })
            .collect::<Option<Vec<_>>>()
            .ok_or(SemigroupError::NotAGroup)?;
        Ok(Group { table, identity, inverse })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table.mul(x, y)
    }

    #[inline]
    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    /// Smallest `k ≥ 1` with `x^k = 1` for every `x`.
    pub fn exponent(&self) -> usize {
        let element_order = |x: usize| {
            let mut k = 1;
            let mut y = x;
            while y != self.identity {
                y = self.mul(y, x);
                k += 1;
            }
            k
        };
        self.table
            .elements()
            .map(element_order)
            .fold(1, |acc, k| acc / gcd(acc, k) * k)
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        !set.is_empty()
            && set.contains(&self.identity)
            && self.table.is_closed(set)
            && set.iter().all(|&x| set.contains(&self.inverse(x)))
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        self.is_subgroup(set)
            && self.table.elements().all(|g| {
                set.iter()
                    .all(|&k| set.contains(&self.mul(self.mul(g, k), self.inverse(g))))
            })
    }

    /// Smallest subgroup containing `gens`, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[self.identity] = true;
        let mut elems = vec![self.identity];
        let mut i = 0;
        for &g in gens {
            if !member[g] {
                member[g] = true;
                elems.push(g);
            }
        }
        while i < elems.len() {
            let x = elems[i];
            for j in 0..elems.len() {
                for p in [self.mul(x, elems[j]), self.mul(elems[j], x)] {
                    if !member[p] {
                        member[p] = true;
                        elems.push(p);
                    }
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// All subgroups, each sorted; the list is sorted by (size, elements).
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found = vec![self.closure(&[])];
        let mut frontier = found.clone();
        while let Some(h) = frontier.pop() {
            for g in self.table.elements() {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let k = self.closure(&gens);
                if !found.contains(&k) {
                    found.push(k.clone());
                    frontier.push(k);
                }
            }
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        found
    }

    pub fn normal_subgroups(&self) -> Vec<Vec<usize>> {
        self.subgroups().into_iter().filter(|k| self.is_normal(k)).collect()
    }

    /// Right cosets `Kx`, each sorted, ordered by their least element.
    pub fn right_cosets(&self, k: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut cosets = Vec::new();
        for x in self.table.elements() {
            if seen[x] {
                continue;
            }
            let mut c: Vec<usize> = k.iter().map(|&a| self.mul(a, x)).collect();
            c.sort_unstable();
            c.iter().for_each(|&y| seen[y] = true);
            cosets.push(c);
        }
        cosets
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All normal subgroups of the group given by `table`.
pub fn normal_subgroups(table: &CayleyTable) -> Result<Vec<Vec<usize>>, SemigroupError> {
    Ok(Group::new(table.clone())?.normal_subgroups())
}

/// One choice of coset representatives and the induced selector `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentativeSystem {
    /// Sorted representatives, one per coset.
    pub representatives: Vec<usize>,
    /// `mu(x)` is the representative of the coset `Kx`.
    pub mu: ElementMap,
}

/// Every system of representatives of `G/K`; there are `|K|^[G:K]` of them.
pub fn coset_representative_systems(
    group: &Group,
    kernel: &[usize],
) -> Result<impl Iterator<Item = RepresentativeSystem>, SemigroupError> {
    if !group.is_normal(kernel) {
        return Err(SemigroupError::NotNormal(kernel.to_vec()));
    }
    let cosets = group.right_cosets(kernel);
    let n = group.order();
    let mut coset_of = vec![0; n];
    for (i, c) in cosets.iter().enumerate() {
        c.iter().for_each(|&x| coset_of[x] = i);
    }
    Ok(cosets
        .clone()
        .into_iter()
        .multi_cartesian_product()
        .map(move |choice| {
            let mu = ElementMap::from_fn(n, |x| choice[coset_of[x]]).expect("in range");
            let mut representatives = choice;
            representatives.sort_unstable();
            RepresentativeSystem { representatives, mu }
        }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;

    fn group(t: CayleyTable) -> Group {
        Group::new(t).unwrap()
    }

    #[test]
    fn normal_subgroups_of_small_groups() {
        assert_eq!(normal_subgroups(&named::cyclic_group(2)).unwrap(), vec![vec![0], vec![0, 1]]);
        let s3 = normal_subgroups(&named::symmetric_group_3()).unwrap();
        assert_eq!(s3.len(), 3);
        assert_eq!(s3[1], named::alternating_group_3_elements());
        assert_eq!(normal_subgroups(&named::klein_four()).unwrap().len(), 5);
        assert_eq!(
            normal_subgroups(&named::left_zero(2)).unwrap_err(),
            SemigroupError::NotAGroup
        );
    }

    #[test]
    fn subgroups_oracle_matches_subset_scan() {
        // Closure-based subgroup lattice against a scan of all subsets.
        for t in [named::symmetric_group_3(), named::cyclic_group(6), named::klein_four()] {
            let g = group(t);
            let n = g.order();
            let mut brute: Vec<Vec<usize>> = (1u32..(1 << n))
                .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect::<Vec<_>>())
                .filter(|s| g.is_subgroup(s))
                .collect();
            brute.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            assert_eq!(g.subgroups(), brute);
        }
    }

    #[test]
    fn representative_system_counts() {
        let z2 = group(named::cyclic_group(2));
        let trivial: Vec<_> = coset_representative_systems(&z2, &[0]).unwrap().collect();
        assert_eq!(trivial.len(), 1);
        assert!(trivial[0].mu.is_identity());
        assert_eq!(coset_representative_systems(&z2, &[0, 1]).unwrap().count(), 2);
        let z4 = group(named::cyclic_group(4));
        let systems: Vec<_> = coset_representative_systems(&z4, &[0, 2]).unwrap().collect();
        assert_eq!(systems.len(), 4);
        for sys in &systems {
            for x in 0..4 {
                let r = sys.mu.apply(x);
                assert!(sys.representatives.contains(&r));
                assert!([0, 2].iter().any(|&k| z4.mul(k, x) == r));
            }
        }
        let s3 = group(named::symmetric_group_3());
        assert!(matches!(
            coset_representative_systems(&s3, &[0, 1]).err(),
            Some(SemigroupError::NotNormal(_))
        ));
    }

    #[test]
    fn exponent() {
        assert_eq!(group(named::klein_four()).exponent(), 2);
        assert_eq!(group(named::cyclic_group(6)).exponent(), 6);
        assert_eq!(group(named::symmetric_group_3()).exponent(), 6);
        assert_eq!(group(named::cyclic_group(1)).exponent(), 1);
    }
}
