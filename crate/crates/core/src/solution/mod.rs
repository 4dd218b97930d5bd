//! Pentagon solutions `s(x, y) = (xy, θ_x(y))`: representation, axiom
//! checking, property classification, opposites and isomorphism.

mod iso;
mod pair_map;
mod properties;

pub use iso::{solution_canonical_form, solution_key, solution_key_up_to_flip, solutions_isomorphic};
pub use pair_map::{pentagon_direct_check, pentagon_witness, Leg, PairMap, PENTAGON_LHS, PENTAGON_RHS};
pub use properties::{
    classify_properties, opposite, qybe_check, PropertyReport, QybeConvention, COCOMMUTATIVE_WORDS,
    COMMUTATIVE_WORDS,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::semigroup::{CayleyTable, ElementMap, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PeError {
    #[error("semigroup has order {table} but theta has order {theta}")]
    OrderMismatch { table: usize, theta: usize },
    #[error("theta has the wrong shape: expected {expected} entries, found {found}")]
    ThetaShape { expected: usize, found: usize },
    #[error("theta[{x}][{y}] = {value} is out of range")]
    ThetaOutOfRange { x: usize, y: usize, value: usize },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("(P1) fails at x={0}, y={1}, z={2}: θ_x(y)·θ_xy(z) ≠ θ_x(yz)")]
    P1Violation(usize, usize, usize),
    #[error("(P2) fails at x={0}, y={1}, w={2}: θ_θx(y)(θ_xy(w)) ≠ θ_y(w)")]
    P2Violation(usize, usize, usize),
    #[error("the map s is not a bijection of X × X")]
    NotBijective,
    #[error("the first component of the map is not an associative product: {0}")]
    NotProductShaped(SemigroupError),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// The family `θ_x`, stored row-major: `cells[x * n + y] = θ_x(y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaFamily {
    order: usize,
    cells: Vec<u8>,
}

impl ThetaFamily {
    pub fn from_cells(order: usize, cells: Vec<u8>) -> Result<Self, PeError> {
        if cells.len() != order * order {
            return Err(PeError::ThetaShape {
                expected: order * order,
                found: cells.len(),
            });
        }
        if let Some(i) = cells.iter().position(|&v| v as usize >= order) {
            return Err(PeError::ThetaOutOfRange {
                x: i / order,
                y: i % order,
                value: cells[i] as usize,
            });
        }
        Ok(ThetaFamily { order, cells })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, PeError> {
        let order = rows.len();
        let mut cells = Vec::with_capacity(order * order);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(PeError::ThetaShape {
                    expected: order * order,
                    found: x * order + row.len(),
                });
            }
            for (y, &v) in row.iter().enumerate() {
                if v >= order || v > u8::MAX as usize {
                    return Err(PeError::ThetaOutOfRange { x, y, value: v });
                }
                cells.push(v as u8);
            }
        }
        Ok(ThetaFamily { order, cells })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, PeError> {
        let cells = (0..order * order).map(|i| f(i / order, i % order)).collect::<Vec<_>>();
        if let Some(i) = cells.iter().position(|&v| v >= order) {
            return Err(PeError::ThetaOutOfRange {
                x: i / order,
                y: i % order,
                value: cells[i],
            });
        }
        Ok(ThetaFamily {
            order,
            cells: cells.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// `θ_x = maps[x]`.
    pub fn from_maps(maps: &[ElementMap]) -> Result<Self, PeError> {
        Self::from_fn(maps.len(), |x, y| maps[x].apply(y))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn at(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y] as usize
    }

    pub fn map(&self, x: usize) -> ElementMap {
        ElementMap::from_fn(self.order, |y| self.at(x, y)).expect("in range")
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.order.max(1))
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// `θ'_{p(x)}(p(y)) = p(θ_x(y))`.
    pub fn relabel(&self, perm: &ElementMap) -> ThetaFamily {
        let n = self.order;
        let mut cells = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[perm.apply(x) * n + perm.apply(y)] = perm.apply(self.at(x, y)) as u8;
            }
        }
        ThetaFamily { order: n, cells }
    }
}

/// A verified pentagon solution. Values are only produced by
/// [`verify_solution`] (or internally after an equivalent check).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeSolution {
    semigroup: CayleyTable,
    theta: ThetaFamily,
}

impl PeSolution {
    pub(crate) fn new_unchecked(semigroup: CayleyTable, theta: ThetaFamily) -> Self {
        debug_assert_eq!(semigroup.order(), theta.order());
        PeSolution { semigroup, theta }
    }

    /// Verifies `θ` given as a closure.
    pub fn from_fn(semigroup: &CayleyTable, theta: impl Fn(usize, usize) -> usize) -> Result<Self, PeError> {
        let theta = ThetaFamily::from_fn(semigroup.order(), theta)?;
        verify_solution(semigroup, &theta)
    }

    pub fn semigroup(&self) -> &CayleyTable {
        &self.semigroup
    }

    pub fn theta(&self) -> &ThetaFamily {
        &self.theta
    }

    pub fn order(&self) -> usize {
        self.semigroup.order()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.semigroup.mul(x, y)
    }

    #[inline]
    pub fn theta_at(&self, x: usize, y: usize) -> usize {
        self.theta.at(x, y)
    }

    pub fn theta_map(&self, x: usize) -> ElementMap {
        self.theta.map(x)
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.mul(x, y), self.theta_at(x, y))
    }

    pub fn to_pair_map(&self) -> PairMap {
        PairMap::from_fn(self.order(), |x, y| self.apply(x, y))
    }

    pub fn relabel(&self, perm: &ElementMap) -> PeSolution {
        PeSolution {
            semigroup: self.semigroup.relabel(perm),
            theta: self.theta.relabel(perm),
        }
    }

    /// `s × t` on the direct product; `(a, u)` is stored as `a * |T| + u`.
    pub fn direct_product(&self, other: &PeSolution) -> PeSolution {
        let m = other.order();
        let semigroup = self.semigroup.direct_product(&other.semigroup);
        let theta = ThetaFamily::from_fn(semigroup.order(), |p, q| {
            self.theta_at(p / m, q / m) * m + other.theta_at(p % m, q % m)
        })
        .expect("in range");
        PeSolution { semigroup, theta }
    }

    /// Table bytes followed by theta bytes.
    pub fn key_bytes(&self) -> Vec<u8> {
        let mut k = self.semigroup.cells().to_vec();
        k.extend_from_slice(self.theta.cells());
        k
    }

    /// Re-checks both axioms.
    pub fn reverify(&self) -> Result<(), PeError> {
        verify_solution(&self.semigroup, &self.theta).map(|_| ())
    }
}

/// Checks (P2) and then (P1), each in lexicographic order of the witness.
pub fn verify_solution(semigroup: &CayleyTable, theta: &ThetaFamily) -> Result<PeSolution, PeError> {
    if let Some(v) = first_violation(semigroup, theta) {
        return Err(v);
    }
    Ok(PeSolution::new_unchecked(semigroup.clone(), theta.clone()))
}

fn first_violation(s: &CayleyTable, theta: &ThetaFamily) -> Option<PeError> {
    let n = s.order();
    if theta.order() != n {
        return Some(PeError::OrderMismatch {
            table: n,
            theta: theta.order(),
        });
    }
    for x in 0..n {
        for y in 0..n {
            let t = theta.at(x, y);
            let xy = s.mul(x, y);
            for w in 0..n {
                if theta.at(t, theta.at(xy, w)) != theta.at(y, w) {
                    return Some(PeError::P2Violation(x, y, w));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let t = theta.at(x, y);
            let xy = s.mul(x, y);
            for z in 0..n {
                if s.mul(t, theta.at(xy, z)) != theta.at(x, s.mul(y, z)) {
                    return Some(PeError::P1Violation(x, y, z));
                }
            }
        }
    }
    None
}

#[derive(Serialize, Deserialize)]
struct SolutionRepr {
    order: usize,
    table: Vec<Vec<usize>>,
    theta: Vec<Vec<usize>>,
}

impl Serialize for PeSolution {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SolutionRepr {
            order: self.order(),
            table: self.semigroup.rows(),
            theta: self.theta.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PeSolution {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SolutionRepr::deserialize(deserializer)?;
        let table = crate::semigroup::validate_table(repr.order, &repr.table).map_err(serde::de::Error::custom)?;
        let theta = ThetaFamily::from_rows(&repr.theta).map_err(serde::de::Error::custom)?;
        verify_solution(&table, &theta).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;

    #[test]
    fn kac_takesaki_on_z2() {
        let z2 = named::cyclic_group(2);
        let s = PeSolution::from_fn(&z2, |_, y| y).unwrap();
        assert_eq!(s.apply(1, 1), (0, 1));
    }

    #[test]
    fn null_semigroup_swap_solution() {
        // θ_0 = id, θ_a = θ_b = (a b) on the null semigroup {0, a, b}.
        let null = named::null_semigroup(3);
        let swap = [0, 2, 1];
        let s = PeSolution::from_fn(&null, |x, y| if x == 0 { y } else { swap[y] }).unwrap();
        let r = classify_properties(&s).unwrap();
        assert!(r.idempotent && r.non_degenerate);
    }

    #[test]
    fn p2_is_reported_before_p1() {
        let z2 = named::cyclic_group(2);
        let theta = ThetaFamily::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(verify_solution(&z2, &theta), Err(PeError::P2Violation(1, 0, 1)));
        // (P1) fails too, first at (0, 1, 1).
        let t = |x: usize, y: usize| theta.at(x, y);
        assert_ne!(z2.mul(t(0, 1), t(1, 1)), t(0, z2.mul(1, 1)));
    }

    #[test]
    fn mismatched_orders_and_ranges() {
        let z2 = named::cyclic_group(2);
        let theta = ThetaFamily::from_fn(3, |_, y| y).unwrap();
        assert_eq!(
            verify_solution(&z2, &theta),
            Err(PeError::OrderMismatch { table: 2, theta: 3 })
        );
        assert_eq!(
            ThetaFamily::from_rows(&[vec![0, 2], vec![0, 0]]),
            Err(PeError::ThetaOutOfRange { x: 0, y: 1, value: 2 })
        );
    }

    #[test]
    fn json_round_trip() {
        let s = PeSolution::from_fn(&named::cyclic_group(3), |_, y| y).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"order":3,"table":[[0,1,2],[1,2,0],[2,0,1]],"theta":[[0,1,2],[0,1,2],[0,1,2]]}"#);
        let back: PeSolution = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        let bad = r#"{"order":2,"table":[[0,1],[1,0]],"theta":[[0,1],[0,0]]}"#;
        assert!(serde_json::from_str::<PeSolution>(bad).is_err());
    }

    #[test]
    fn axioms_match_direct_pentagon_at_order_two() {
        for cells in 0u32..16 {
            let table: Vec<u8> = (0..4).map(|i| ((cells >> i) & 1) as u8).collect();
            let Ok(t) = CayleyTable::from_cells(2, table) else { continue };
            for th in 0u32..16 {
                let theta = ThetaFamily::from_cells(2, (0..4).map(|i| ((th >> i) & 1) as u8).collect()).unwrap();
                let map = PairMap::from_fn(2, |x, y| (t.mul(x, y), theta.at(x, y)));
                assert_eq!(verify_solution(&t, &theta).is_ok(), pentagon_direct_check(&map));
            }
        }
    }
}
