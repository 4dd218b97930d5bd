use serde::{Deserialize, Serialize};

use super::{ElementMap, SemigroupError};

/// Largest carrier a table can hold; entries are stored as bytes.
pub const MAX_ORDER: usize = 255;

/// A finite semigroup on `{0, .., n-1}` given by its multiplication table.
///
/// Construction always goes through associativity checking, so every value
/// of this type is a semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    order: usize,
    cells: Vec<u8>,
}

/// Checks shape, range and associativity of a raw table.
///
/// The reported associativity witness is the lexicographically first
/// triple `(x, y, z)` with `(xy)z != x(yz)`.
pub fn validate_table(order: usize, raw: &[Vec<usize>]) -> Result<CayleyTable, SemigroupError> {
    if order == 0 {
        return Err(SemigroupError::EmptyCarrier);
    }
    if order > MAX_ORDER {
        return Err(SemigroupError::OrderTooLarge(order));
    }
    if raw.len() != order {
        return Err(SemigroupError::Shape {
            expected: order,
            row: None,
            found: raw.len(),
        });
    }
    let mut cells = Vec::with_capacity(order * order);
    for (x, row) in raw.iter().enumerate() {
        if row.len() != order {
            return Err(SemigroupError::Shape {
                expected: order,
                row: Some(x),
                found: row.len(),
            });
        }
        for (y, &v) in row.iter().enumerate() {
            if v >= order {
                return Err(SemigroupError::OutOfRangeEntry { row: x, col: y, value: v });
            }
            cells.push(v as u8);
        }
    }
    CayleyTable::from_cells(order, cells)
}

impl CayleyTable {
    /// Builds a table from a flat row-major cell vector, checking associativity.
    pub fn from_cells(order: usize, cells: Vec<u8>) -> Result<Self, SemigroupError> {
        if order == 0 {
            return Err(SemigroupError::EmptyCarrier);
        }
        if order > MAX_ORDER {
            return Err(SemigroupError::OrderTooLarge(order));
        }
        if cells.len() != order * order {
            return Err(SemigroupError::Shape {
                expected: order * order,
                row: None,
                found: cells.len(),
            });
        }
        if let Some((i, &v)) = cells.iter().enumerate().find(|(_, &v)| v as usize >= order) {
            return Err(SemigroupError::OutOfRangeEntry {
                row: i / order,
                col: i % order,
                value: v as usize,
            });
        }
        let table = CayleyTable { order, cells };
        match table.first_non_associative_triple() {
            Some((x, y, z)) => Err(SemigroupError::NotAssociative(x, y, z)),
            None => Ok(table),
        }
    }

    /// Builds a table from a product function.
    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self, SemigroupError> {
        let mut cells = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let v = mul(x, y);
                if v >= order {
                    return Err(SemigroupError::OutOfRangeEntry { row: x, col: y, value: v });
                }
                cells.push(v as u8);
            }
        }
        Self::from_cells(order, cells)
    }

    /// Caller guarantees associativity (used by enumerators that already checked it).
    pub(crate) fn from_cells_unchecked(order: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), order * order);
        CayleyTable { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y] as usize
    }

    /// Row-major cells, `cells()[x * n + y] == x * y`.
    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.order)
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    fn first_non_associative_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Relabels elements along `perm`: the new table satisfies
    /// `new[p(x)][p(y)] = p(x * y)`.
    pub fn relabel(&self, perm: &ElementMap) -> CayleyTable {
        let n = self.order;
        assert_eq!(perm.len(), n, "relabeling must act on the carrier");
        let mut cells = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[perm.apply(x) * n + perm.apply(y)] = perm.apply(self.mul(x, y)) as u8;
            }
        }
        CayleyTable { order: n, cells }
    }

    /// The opposite semigroup `x *' y = y * x`.
    pub fn opposite(&self) -> CayleyTable {
        let n = self.order;
        let cells = (0..n * n).map(|i| self.cells[(i % n) * n + i / n]).collect();
        CayleyTable { order: n, cells }
    }

    /// Direct product; the pair `(a, u)` is stored as `a * |T| + u`.
    pub fn direct_product(&self, other: &CayleyTable) -> CayleyTable {
        let (n, m) = (self.order, other.order);
        let mut cells = Vec::with_capacity(n * m * n * m);
        for p in 0..n * m {
            for q in 0..n * m {
                let a = self.mul(p / m, q / m);
                let u = other.mul(p % m, q % m);
                cells.push((a * m + u) as u8);
            }
        }
        CayleyTable { order: n * m, cells }
    }

    pub fn is_closed(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        subset.iter().for_each(|&x| member[x] = true);
        subset
            .iter()
            .all(|&x| subset.iter().all(|&y| member[self.mul(x, y)]))
    }

    /// The subsemigroup on `elems`, relabeled so that `elems[i]` becomes `i`.
    pub fn restrict(&self, elems: &[usize]) -> Result<CayleyTable, SemigroupError> {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i;
        }
        let k = elems.len();
        let mut cells = Vec::with_capacity(k * k);
        for &x in elems {
            for &y in elems {
                let p = pos[self.mul(x, y)];
                if p == usize::MAX {
                    return Err(SemigroupError::NotClosed(elems.to_vec()));
                }
                cells.push(p as u8);
            }
        }
        Ok(CayleyTable::from_cells_unchecked(k, cells))
    }

    pub fn is_homomorphism(&self, map: &ElementMap) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| map.apply(self.mul(x, y)) == self.mul(map.apply(x), map.apply(y))))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    pub fn identity(&self) -> Option<usize> {
        self.elements()
            .find(|&e| self.elements().all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// All automorphisms, in lexicographic order of their image vectors.
    pub fn automorphisms(&self) -> Vec<ElementMap> {
        super::canonical::permutations(self.order)
            .filter(|p| self.relabel(p) == *self)
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl Serialize for CayleyTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TableRepr {
            order: self.order,
            table: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CayleyTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = TableRepr::deserialize(deserializer)?;
        validate_table(repr.order, &repr.table).map_err(serde::de::Error::custom)
    }
}
