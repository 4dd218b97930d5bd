use serde::Serialize;

use super::{CayleyTable, Group};

/// Structural facts about a finite semigroup, each computed from its definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupFacts {
    pub idempotents: Vec<usize>,
    pub identity: Option<usize>,
    pub is_monoid: bool,
    pub is_group: bool,
    pub is_commutative: bool,
    pub is_cancellative: bool,
    pub is_inverse: bool,
    pub is_clifford: bool,
    pub is_left_zero: bool,
    pub is_left_group: bool,
    /// `inverses[x]` is the unique inverse of `x`, present iff the semigroup is inverse.
    pub inverses: Option<Vec<usize>>,
    /// Present iff the semigroup is a left group.
    pub left_group: Option<LeftGroupWitness>,
}

/// An explicit isomorphism `S ≅ L × G` with `L` left-zero and `G` a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeftGroupWitness {
    /// Elements of `S` forming the left-zero factor (the idempotents).
    pub left_zero: Vec<usize>,
    /// Elements of the subgroup `e₀S` of `S`; `group[0]` is its identity `e₀`.
    pub group: Vec<usize>,
    /// The group `e₀S`, relabeled so that `group[i]` becomes `i`.
    #[serde(skip)]
    pub group_table: CayleyTable,
    /// `coords[x] = (i, j)` means `x` corresponds to `(left_zero[i], group[j])`.
    pub coords: Vec<(usize, usize)>,
}

impl LeftGroupWitness {
    /// The element of `S` with coordinates `(i, j)`.
    pub fn element_at(&self, i: usize, j: usize) -> usize {
        self.coords
            .iter()
            .position(|&c| c == (i, j))
            .expect("coordinates are a bijection")
    }
}

/// Computes every structural flag of a semigroup.
pub fn analyze(s: &CayleyTable) -> SemigroupFacts {
    let n = s.order();
    let idempotents = s.idempotents();
    let identity = s.identity();
    let is_commutative = s.is_commutative();
    let left_cancel = (0..n).all(|a| {
        (0..n).all(|x| (0..x).all(|y| s.mul(a, x) != s.mul(a, y)))
    });
    let right_cancel = (0..n).all(|a| {
        (0..n).all(|x| (0..x).all(|y| s.mul(x, a) != s.mul(y, a)))
    });
    let is_group = Group::new(s.clone()).is_ok();

    let inverses = unique_inverses(s);
    let is_inverse = inverses.is_some();
    let is_clifford = is_inverse
        && idempotents
            .iter()
            .all(|&e| (0..n).all(|x| s.mul(e, x) == s.mul(x, e)));
    let is_left_zero = (0..n).all(|x| (0..n).all(|y| s.mul(x, y) == x));
    let left_group = left_group_witness(s, &idempotents);

    SemigroupFacts {
        is_monoid: identity.is_some(),
        identity,
        is_group,
        is_commutative,
        is_cancellative: left_cancel && right_cancel,
        is_inverse,
        is_clifford,
        is_left_zero,
        is_left_group: left_group.is_some(),
        inverses,
        left_group,
        idempotents,
    }
}

fn unique_inverses(s: &CayleyTable) -> Option<Vec<usize>> {
    let n = s.order();
    (0..n)
        .map(|x| {
            let mut candidates = (0..n).filter(|&y| s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y);
            match (candidates.next(), candidates.next()) {
                (Some(y), None) => Some(y),
                _ => None,
            }
        })
        .collect()
}

/// Left groups are exactly the semigroups whose idempotents form a left-zero
/// band of right identities and where `e₀S` is a group for one idempotent `e₀`.
/// The isomorphism is built and then checked on every pair.
fn left_group_witness(s: &CayleyTable, idempotents: &[usize]) -> Option<LeftGroupWitness> {
    let n = s.order();
    let &e0 = idempotents.first()?;
    let right_identities = idempotents.iter().all(|&e| (0..n).all(|x| s.mul(x, e) == x));
    if !right_identities {
        return None;
    }
    let mut group: Vec<usize> = (0..n).map(|x| s.mul(e0, x)).collect();
    group.sort_unstable();
    group.dedup();
    let pos = group.iter().position(|&g| g == e0)?;
    group.swap(0, pos);
    group[1..].sort_unstable();
    let group_table = s.restrict(&group).ok()?;
    let g = Group::new(group_table.clone()).ok()?;
    if g.identity() != 0 {
        return None;
    }
    let local = |x: usize| group.iter().position(|&y| y == x);
    let mut coords = Vec::with_capacity(n);
    for x in 0..n {
        let gx = local(s.mul(e0, x))?;
        let f = s.mul(x, group[g.inverse(gx)]);
        let i = idempotents.iter().position(|&e| e == f)?;
        coords.push((i, gx));
    }
    let mut seen = vec![false; idempotents.len() * group.len()];
    for &(i, j) in &coords {
        let slot = &mut seen[i * group.len() + j];
        if *slot {
            return None;
        }
        *slot = true;
    }
    if seen.iter().any(|&b| !b) {
        return None;
    }
    let homomorphic = (0..n).all(|x| {
        (0..n).all(|y| {
            let (i, a) = coords[x];
            let (_, b) = coords[y];
            coords[s.mul(x, y)] == (i, g.mul(a, b))
        })
    });
    homomorphic.then(|| LeftGroupWitness {
        left_zero: idempotents.to_vec(),
        group,
        group_table,
        coords,
    })
}
