use crate::semigroup::{CayleyTable, ElementMap, Group};
use crate::solution::{classify_properties, PeError, PeSolution};

use super::ConstructionError;

/// `s(x, y) = (f(x), g(y))` on `{0..n-1}` with product `x·y = f(x)`.
pub fn lyubashenko(n: usize, f: &ElementMap, g: &ElementMap) -> Result<PeSolution, ConstructionError> {
    if f.len() != n || g.len() != n {
        return Err(ConstructionError::PreconditionFailed("f and g must act on the carrier".into()));
    }
    if f.compose(f) != *f {
        return Err(ConstructionError::PreconditionFailed("f² = f".into()));
    }
    if g.compose(g) != *g {
        return Err(ConstructionError::PreconditionFailed("g² = g".into()));
    }
    if f.compose(g) != g.compose(f) {
        return Err(ConstructionError::PreconditionFailed("fg = gf".into()));
    }
    let table = CayleyTable::from_fn(n, |x, _| f.apply(x))?;
    let s = PeSolution::from_fn(&table, |_, y| g.apply(y))?;
    if !classify_properties(&s)?.idempotent {
        return Err(PeError::InternalInconsistency("Lyubashenko-type map is not idempotent".into()).into());
    }
    Ok(s)
}

/// `s(x, y) = (xy, γ(y))` for an idempotent endomorphism `γ`.
pub fn endo_solution(s: &CayleyTable, gamma: &ElementMap) -> Result<PeSolution, ConstructionError> {
    let n = s.order();
    if gamma.len() != n {
        return Err(ConstructionError::PreconditionFailed("γ must act on the carrier".into()));
    }
    for x in 0..n {
        for y in 0..n {
            if gamma.apply(s.mul(x, y)) != s.mul(gamma.apply(x), gamma.apply(y)) {
                return Err(ConstructionError::NotEndomorphism(x, y));
            }
        }
    }
    if let Some(x) = (0..n).find(|&x| gamma.apply(gamma.apply(x)) != gamma.apply(x)) {
        return Err(ConstructionError::NotIdempotentMap(x));
    }
    let sol = PeSolution::from_fn(s, |_, y| gamma.apply(y))?;
    if classify_properties(&sol)?.non_degenerate != gamma.is_identity() {
        return Err(PeError::InternalInconsistency("non-degenerate ⇔ γ = id fails".into()).into());
    }
    Ok(sol)
}

/// Every idempotent endomorphism of `s`, in lexicographic order.
pub fn idempotent_endomorphisms(s: &CayleyTable) -> Vec<ElementMap> {
    let n = s.order();
    (0..n.pow(n as u32))
        .filter_map(|mut code| {
            let mut image = vec![0; n];
            for v in image.iter_mut().rev() {
                *v = code % n;
                code /= n;
            }
            let g = ElementMap::new(image)?;
            (s.is_homomorphism(&g) && g.compose(&g) == g).then_some(g)
        })
        .collect()
}

/// The bijective solution on `E × G`, `E = {1..n}`:
/// `s((i, a), (j, b)) = ((i, ab), (σ^i(j), b))`.
///
/// Indices are 0-based in storage: `(i, a)` is stored as `i * |G| + a` and
/// stands for the 1-based index `i + 1`, so the exponent of `σ` is `i + 1`.
pub fn left_zero_group_solution(g: &Group, sigma: &ElementMap) -> Result<PeSolution, ConstructionError> {
    let n = sigma.len();
    if n == 0 || !sigma.is_bijective() {
        return Err(ConstructionError::NotAPermutation);
    }
    // σ^{σ(i)+1} = σ^i with 1-based i: σ(i) is σ[i0] + 1.
    for i0 in 0..n {
        if sigma.power(sigma.apply(i0) + 2) != sigma.power(i0 + 1) {
            return Err(ConstructionError::SigmaConditionFailed(i0 + 1));
        }
    }
    let m = g.order();
    let table = CayleyTable::from_fn(n * m, |p, q| (p / m) * m + g.mul(p % m, q % m))?;
    let powers: Vec<ElementMap> = (0..n).map(|i0| sigma.power(i0 + 1)).collect();
    let s = PeSolution::from_fn(&table, |p, q| powers[p / m].apply(q / m) * m + q % m)?;
    let report = classify_properties(&s)?;
    if !report.bijective {
        return Err(PeError::InternalInconsistency("left-zero × group solution is not bijective".into()).into());
    }
    let predicted = g.exponent() <= 2 && sigma.compose(sigma).is_identity();
    if report.involutive != predicted {
        return Err(PeError::InternalInconsistency(format!(
            "involutive is {} but exponent ≤ 2 ∧ σ² = id is {predicted}",
            report.involutive
        ))
        .into());
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;

    fn map(v: &[usize]) -> ElementMap {
        ElementMap::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lyubashenko_examples() {
        let id = ElementMap::identity(2);
        let s = lyubashenko(2, &id, &id).unwrap();
        assert_eq!(s.apply(1, 0), (1, 0));
        let c = ElementMap::constant(3, 0);
        let z = lyubashenko(3, &c, &c).unwrap();
        assert_eq!(z.apply(2, 1), (0, 0));
        assert_eq!(
            lyubashenko(2, &id, &map(&[1, 0])),
            Err(ConstructionError::PreconditionFailed("g² = g".into()))
        );
        assert_eq!(
            lyubashenko(3, &map(&[0, 0, 2]), &map(&[1, 1, 1])),
            Err(ConstructionError::PreconditionFailed("fg = gf".into()))
        );
    }

    #[test]
    fn endo_examples() {
        let m = named::clifford_monoid_m();
        let s = endo_solution(&m, &map(&[1, 1, 2])).unwrap();
        assert_eq!(s.apply(0, 0), (0, 1));
        let z2 = named::cyclic_group(2);
        let c = endo_solution(&z2, &ElementMap::constant(2, 0)).unwrap();
        assert_eq!(c.apply(1, 1), (0, 0));
        assert_eq!(endo_solution(&z2, &map(&[1, 1])), Err(ConstructionError::NotEndomorphism(0, 0)));
        assert_eq!(idempotent_endomorphisms(&z2).len(), 2);
    }

    #[test]
    fn left_zero_group_examples() {
        let z2 = Group::new(named::cyclic_group(2)).unwrap();
        let z3 = Group::new(named::cyclic_group(3)).unwrap();
        let one = left_zero_group_solution(&z2, &ElementMap::identity(1)).unwrap();
        assert!(classify_properties(&one).unwrap().involutive);
        let swap = map(&[1, 0]);
        let s = left_zero_group_solution(&z2, &swap).unwrap();
        assert!(classify_properties(&s).unwrap().involutive);
        let t = left_zero_group_solution(&z3, &swap).unwrap();
        let r = classify_properties(&t).unwrap();
        assert!(r.bijective && !r.involutive);
        // A 3-cycle breaks the exponent condition at i = 1: σ³ = id ≠ σ.
        assert_eq!(
            left_zero_group_solution(&z2, &map(&[1, 2, 0])),
            Err(ConstructionError::SigmaConditionFailed(1))
        );
    }
}
