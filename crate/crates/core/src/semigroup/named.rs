//! Small semigroups with fixed, documented labelings.
//!
//! Monoids always put their identity at `0`. The labelings here are the ones
//! used by the shipped JSON data files and by the examples.

use super::CayleyTable;

fn table(order: usize, mul: impl Fn(usize, usize) -> usize) -> CayleyTable {
    CayleyTable::from_fn(order, mul).expect("named tables are associative")
}

/// `Z_n` written additively: `x · y = (x + y) mod n`.
pub fn cyclic_group(n: usize) -> CayleyTable {
    table(n, |x, y| (x + y) % n)
}

/// `(Z_2)^rank` with elements as bit vectors and `x · y = x xor y`.
pub fn elementary_abelian_2(rank: u32) -> CayleyTable {
    table(1 << rank, |x, y| x ^ y)
}

/// `Z_2 × Z_2` as bit vectors `{0, 1, 2, 3}` under xor.
pub fn klein_four() -> CayleyTable {
    elementary_abelian_2(2)
}

/// The permutations of `{0, 1, 2}` in lexicographic order of their images.
pub const S3_ELEMENTS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// `S_3` labeled by [`S3_ELEMENTS`]; the product is composition
/// `(αβ)(i) = α(β(i))`. Element `0` is the identity; `1`, `2`, `5` are the
/// transpositions.
pub fn symmetric_group_3() -> CayleyTable {
    let index = |p: [usize; 3]| S3_ELEMENTS.iter().position(|&q| q == p).unwrap();
    table(6, |a, b| {
        let (pa, pb) = (S3_ELEMENTS[a], S3_ELEMENTS[b]);
        index([pa[pb[0]], pa[pb[1]], pa[pb[2]]])
    })
}

/// `A_3` inside [`symmetric_group_3`].
pub fn alternating_group_3_elements() -> Vec<usize> {
    vec![0, 3, 4]
}

/// Sign of the [`symmetric_group_3`] element with the given label.
pub fn s3_sign(a: usize) -> i8 {
    if alternating_group_3_elements().contains(&a) {
        1
    } else {
        -1
    }
}

/// `x · y = x`.
pub fn left_zero(n: usize) -> CayleyTable {
    table(n, |x, _| x)
}

/// `x · y = y`.
pub fn right_zero(n: usize) -> CayleyTable {
    table(n, |_, y| y)
}

/// `x · y = 0`.
pub fn null_semigroup(n: usize) -> CayleyTable {
    table(n, |_, _| 0)
}

/// The semilattice `{e, f}` with `ef = f`: `e = 0`, `f = 1`.
pub fn semilattice_two() -> CayleyTable {
    table(2, |x, y| x.max(y))
}

/// The commutative Clifford monoid `{1, x, y}` with `x² = x`, `y² = x`,
/// `xy = y`. Labels: `1 = 0`, `x = 1`, `y = 2`.
pub fn clifford_monoid_m() -> CayleyTable {
    const T: [[usize; 3]; 3] = [[0, 1, 2], [1, 1, 2], [2, 2, 1]];
    table(3, |a, b| T[a][b])
}

/// The commutative monoid `{1, a, b}` with `a² = a`, `ab = a`, `b² = 1`.
/// Labels: `1 = 0`, `a = 1`, `b = 2`.
pub fn idempotent_example_monoid() -> CayleyTable {
    const T: [[usize; 3]; 3] = [[0, 1, 2], [1, 1, 1], [2, 1, 0]];
    table(3, |a, b| T[a][b])
}

/// The commutative idempotent monoid `S = {1_S, x, y}` with `xy = y`.
/// Labels: `1_S = 0`, `x = 1`, `y = 2`.
pub fn matched_example_s() -> CayleyTable {
    const T: [[usize; 3]; 3] = [[0, 1, 2], [1, 1, 2], [2, 2, 2]];
    table(3, |a, b| T[a][b])
}

/// The idempotent monoid `T = {1_T, z}`. Labels: `1_T = 0`, `z = 1`.
pub fn matched_example_t() -> CayleyTable {
    semilattice_two()
}

/// Every group used by the group-classification checks, with a name.
pub fn small_groups() -> Vec<(&'static str, CayleyTable)> {
    vec![
        ("Z1", cyclic_group(1)),
        ("Z2", cyclic_group(2)),
        ("Z3", cyclic_group(3)),
        ("Z4", cyclic_group(4)),
        ("Z2xZ2", klein_four()),
        ("Z5", cyclic_group(5)),
        ("Z6", cyclic_group(6)),
        ("S3", symmetric_group_3()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::Group;

    #[test]
    fn s3_is_a_nonabelian_group() {
        let s3 = symmetric_group_3();
        let g = Group::new(s3.clone()).unwrap();
        assert_eq!(g.identity(), 0);
        assert!(!s3.is_commutative());
        assert!(g.is_normal(&alternating_group_3_elements()));
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(s3_sign(s3.mul(a, b)), s3_sign(a) * s3_sign(b));
            }
        }
    }

    #[test]
    fn documented_monoids() {
        assert_eq!(clifford_monoid_m().identity(), Some(0));
        assert_eq!(idempotent_example_monoid().identity(), Some(0));
        assert_eq!(matched_example_s().identity(), Some(0));
        assert_eq!(matched_example_t().identity(), Some(0));
    }
}
