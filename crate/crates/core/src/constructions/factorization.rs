use serde::Serialize;

use crate::semigroup::{analyze, CayleyTable, Group};
use crate::solution::{verify_solution, PeError, PeSolution, ThetaFamily};

use super::ConstructionError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationSolutions {
    pub s: PeSolution,
    pub r: PeSolution,
    /// Whether `r = τ s τ` holds for this factorization.
    pub r_equals_flip_s: bool,
}

/// The two solutions attached to an exact factorization `G = HK`:
/// `s(x, y) = (p₂(y p₁(x)⁻¹) x, y p₁(x)⁻¹)` and
/// `r(x, y) = (x p₁(p₂(x)⁻¹ y), p₂(x)⁻¹ y)`.
pub fn exact_factorization_solutions(
    g: &Group,
    h: &[usize],
    k: &[usize],
) -> Result<FactorizationSolutions, ConstructionError> {
    for sub in [h, k] {
        if !g.is_subgroup(sub) {
            return Err(ConstructionError::NotASubgroup(sub.to_vec()));
        }
    }
    let n = g.order();
    let mut p1 = vec![usize::MAX; n];
    let mut p2 = vec![usize::MAX; n];
    let mut count = vec![0; n];
    for &a in h {
        for &b in k {
            let x = g.mul(a, b);
            count[x] += 1;
            p1[x] = a;
            p2[x] = b;
        }
    }
    if let Some(x) = (0..n).find(|&x| count[x] != 1) {
        return Err(ConstructionError::NotExactFactorization { element: x, count: count[x] });
    }
    let inv = |x| g.inverse(x);
    let s = package(n, |x, y| {
        let t = g.mul(y, inv(p1[x]));
        (g.mul(p2[t], x), t)
    })?;
    let r = package(n, |x, y| {
        let t = g.mul(inv(p2[x]), y);
        (g.mul(x, p1[t]), t)
    })?;
    for (name, sol) in [("s", &s), ("r", &r)] {
        if !sol.to_pair_map().is_bijective() {
            return Err(ConstructionError::TheoremViolation(format!("{name} is not bijective")));
        }
        if !analyze(sol.semigroup()).is_left_group {
            return Err(ConstructionError::TheoremViolation(format!(
                "the product of {name} is not a left group"
            )));
        }
    }
    let r_equals_flip_s = r.to_pair_map() == s.to_pair_map().flip_conjugate();
    Ok(FactorizationSolutions { s, r, r_equals_flip_s })
}

fn package(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Result<PeSolution, ConstructionError> {
    let table = CayleyTable::from_fn(n, |x, y| f(x, y).0).map_err(PeError::NotProductShaped)?;
    let theta = ThetaFamily::from_fn(n, |x, y| f(x, y).1)?;
    Ok(verify_solution(&table, &theta)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;

    #[test]
    fn z6_as_z2_times_z3() {
        let z6 = Group::new(named::cyclic_group(6)).unwrap();
        let f = exact_factorization_solutions(&z6, &[0, 3], &[0, 2, 4]).unwrap();
        assert!(f.s.to_pair_map().is_bijective() && f.r.to_pair_map().is_bijective());
    }

    #[test]
    fn trivial_factor() {
        let z2 = Group::new(named::cyclic_group(2)).unwrap();
        let f = exact_factorization_solutions(&z2, &[0, 1], &[0]).unwrap();
        assert_eq!(f.s.semigroup(), &named::left_zero(2));
        assert_eq!(f.s.apply(1, 0), (1, 1));
        assert_eq!(f.r, crate::constructions::kac_takesaki(z2.table()));
    }

    #[test]
    fn non_exact_is_rejected() {
        let z4 = Group::new(named::cyclic_group(4)).unwrap();
        assert_eq!(
            exact_factorization_solutions(&z4, &[0, 2], &[0, 2]),
            Err(ConstructionError::NotExactFactorization { element: 0, count: 2 })
        );
        assert_eq!(
            exact_factorization_solutions(&z4, &[0, 1], &[0]),
            Err(ConstructionError::NotASubgroup(vec![0, 1]))
        );
    }
}
