use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{CayleyTable, SemigroupError};

/// Up to this order congruences are found by scanning every set partition.
pub const PARTITION_SCAN_MAX: usize = 6;

/// An equivalence relation on `{0..n-1}` stored as class indices.
///
/// Class indices are normalized so that classes are numbered in order of
/// their least element; two equal relations therefore compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Congruence {
    classes: Vec<usize>,
}

impl Congruence {
    /// Normalizes arbitrary class labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let classes = labels
            .iter()
            .map(|l| {
                let next = remap.len();
                *remap.entry(*l).or_insert(next)
            })
            .collect();
        Congruence { classes }
    }

    pub fn from_relation(n: usize, related: impl Fn(usize, usize) -> bool) -> Option<Self> {
        let mut labels = vec![usize::MAX; n];
        let mut next = 0;
        for a in 0..n {
            if labels[a] != usize::MAX {
                continue;
            }
            for b in a..n {
                if related(a, b) {
                    if labels[b] != usize::MAX {
                        return None;
                    }
                    labels[b] = next;
                }
            }
            if labels[a] == usize::MAX {
                return None;
            }
            next += 1;
        }
        let c = Congruence { classes: labels };
        // Reject relations that are not equivalences.
        (0..n)
            .all(|a| (0..n).all(|b| related(a, b) == c.related(a, b)))
            .then_some(c)
    }

    pub fn identity(n: usize) -> Self {
        Congruence { classes: (0..n).collect() }
    }

    pub fn universal(n: usize) -> Self {
        Congruence { classes: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.classes[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.iter().max().map_or(0, |m| m + 1)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.classes[a] == self.classes[b]
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_classes()];
        for (x, &c) in self.classes.iter().enumerate() {
            blocks[c].push(x);
        }
        blocks
    }

    pub fn is_compatible(&self, table: &CayleyTable) -> bool {
        let n = table.order();
        let reps: Vec<usize> = self.blocks().iter().map(|b| b[0]).collect();
        (0..n).all(|x| {
            let rx = reps[self.class_of(x)];
            (0..n).all(|y| {
                let ry = reps[self.class_of(y)];
                self.related(table.mul(x, y), table.mul(rx, ry))
            })
        })
    }

    /// The quotient semigroup on class indices.
    pub fn quotient(&self, table: &CayleyTable) -> Result<CayleyTable, SemigroupError> {
        if !self.is_compatible(table) {
            return Err(SemigroupError::NotACongruence);
        }
        let reps: Vec<usize> = self.blocks().iter().map(|b| b[0]).collect();
        let k = reps.len();
        CayleyTable::from_fn(k, |a, b| self.class_of(table.mul(reps[a], reps[b])))
    }

    /// Smallest equivalence containing both relations.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let n = self.len();
        let mut uf = UnionFind::new(n);
        for x in 0..n {
            uf.union(x, self.blocks()[self.class_of(x)][0]);
            uf.union(x, other.blocks()[other.class_of(x)][0]);
        }
        uf.into_congruence()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    fn into_congruence(mut self) -> Congruence {
        let labels: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Congruence::from_labels(&labels)
    }
}

/// Congruence generated by identifying `a` and `b`.
pub fn principal_congruence(table: &CayleyTable, a: usize, b: usize) -> Congruence {
    let n = table.order();
    let mut uf = UnionFind::new(n);
    uf.union(a, b);
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                if uf.find(x) != uf.find(y) {
                    continue;
                }
                for s in 0..n {
                    changed |= uf.union(table.mul(s, x), table.mul(s, y));
                    changed |= uf.union(table.mul(x, s), table.mul(y, s));
                }
            }
        }
        if !changed {
            break;
        }
    }
    uf.into_congruence()
}

/// All set partitions of `{0..n-1}` as restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Congruence> {
    fn go(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Congruence>) {
        if prefix.len() == n {
            out.push(Congruence { classes: prefix.clone() });
            return;
        }
        let limit = if prefix.is_empty() { 0 } else { max + 1 };
        for c in 0..=limit {
            prefix.push(c);
            go(prefix, max.max(c), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

/// Every congruence of `table`, sorted.
///
/// Orders up to [`PARTITION_SCAN_MAX`] scan all set partitions; larger
/// orders close the principal congruences under joins.
pub fn enumerate_congruences(table: &CayleyTable) -> Vec<Congruence> {
    if table.order() <= PARTITION_SCAN_MAX {
        set_partitions(table.order())
            .into_iter()
            .filter(|c| c.is_compatible(table))
            .collect()
    } else {
        congruences_by_joins(table)
    }
}

/// Join-closure of principal congruences. Exact for any order.
pub fn congruences_by_joins(table: &CayleyTable) -> Vec<Congruence> {
    let n = table.order();
    let mut found: BTreeSet<Congruence> = BTreeSet::new();
    found.insert(Congruence::identity(n));
    let principal: BTreeSet<Congruence> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .map(|(a, b)| principal_congruence(table, a, b))
        .collect();
    let mut frontier: Vec<Congruence> = principal.iter().cloned().collect();
    found.extend(principal.iter().cloned());
    while let Some(c) = frontier.pop() {
        for p in &principal {
            let j = c.join(p);
            if found.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    found.into_iter().collect()
}
