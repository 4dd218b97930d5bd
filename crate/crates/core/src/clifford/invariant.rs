use serde::Serialize;

use crate::semigroup::{analyze, permutations, CayleyTable, Congruence, ElementMap, MAX_CANONICAL_ORDER};
use crate::solution::{solutions_isomorphic, PeError, PeSolution};

use super::{clifford_structure, congruence_from_pair, invariance_flags, CliffordError, CongruencePairData};

fn quotient_is_group(s: &CayleyTable, rho: &Congruence) -> Result<bool, CliffordError> {
    if rho.len() != s.order() || !rho.is_compatible(s) {
        return Err(CliffordError::NotACongruence);
    }
    Ok(analyze(&rho.quotient(s)?).is_group)
}

/// `s(x, y) = (xy, μ(x)⁻¹μ(xy))` for a congruence `ρ` with group quotient,
/// a system `R` of `ρ`-class representatives and `μ: X → R` choosing the
/// representative of each class.
pub fn construct_e_invariant(
    s: &CayleyTable,
    rho: &Congruence,
    representatives: &[usize],
    mu: &ElementMap,
) -> Result<PeSolution, CliffordError> {
    let st = clifford_structure(s)?;
    if !quotient_is_group(s, rho)? {
        return Err(CliffordError::QuotientNotGroup);
    }
    let n = s.order();
    let bad = |m: String| Err(CliffordError::BadRepresentatives(m));
    let mut classes: Vec<usize> = representatives.iter().map(|&r| rho.class_of(r)).collect();
    classes.sort_unstable();
    classes.dedup();
    if representatives.iter().any(|&r| r >= n)
        || classes.len() != representatives.len()
        || classes.len() != rho.num_classes()
    {
        return bad(format!("{representatives:?} is not one element per class"));
    }
    if mu.len() != n {
        return bad(format!("μ has {} entries for {n} elements", mu.len()));
    }
    for x in 0..n {
        let m = mu.apply(x);
        if !representatives.contains(&m) || !rho.related(m, x) {
            return bad(format!("μ({x}) = {m} is not the representative of the class of {x}"));
        }
    }
    for x in 0..n {
        for y in 0..n {
            let (mx, mxy) = (mu.apply(x), mu.apply(s.mul(x, y)));
            if s.mul(s.mul(mx, st.inverse(mx)), mxy) != mxy {
                return Err(CliffordError::MuConditionFailed(x, y));
            }
        }
    }
    let sol = PeSolution::from_fn(s, |x, y| {
        let mx = mu.apply(x);
        s.mul(st.inverse(mx), mu.apply(s.mul(x, y)))
    })?;
    if !invariance_flags(&sol).e_invariant {
        return Err(CliffordError::TheoremViolation("constructed solution is not E(X)-invariant".into()));
    }
    Ok(sol)
}

/// What a single idempotent `e` says about the solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotentReading {
    pub idempotent: usize,
    /// `θ_e` as a map.
    pub theta_e: Vec<usize>,
    /// `θ_e(X)`, sorted.
    pub image: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EInvariantData {
    pub pair: CongruencePairData,
    pub congruence: Congruence,
    pub quotient_order: usize,
    /// One reading per idempotent; each has been checked against the
    /// reconstruction formula.
    pub readings: Vec<IdempotentReading>,
    /// Whether every `θ_e` is the same map.
    pub theta_e_agree: bool,
}

/// Recovers `(K, τ) = ({x : θ_e(x) ∈ E for all e}, E × E)`, the
/// congruence `ρ`, and for each idempotent `e` checks that `θ_e(X)` is a
/// representative system with `θ_x(y) = θ_e(x)⁻¹θ_e(xy)`.
pub fn extract_e_invariant_data(sol: &PeSolution) -> Result<EInvariantData, CliffordError> {
    let s = sol.semigroup();
    let st = clifford_structure(s)?;
    if !invariance_flags(sol).e_invariant {
        return Err(CliffordError::NotEInvariant);
    }
    let n = s.order();
    let es = st.idempotents.clone();
    let kernel: Vec<usize> = (0..n)
        .filter(|&x| es.iter().all(|&e| es.contains(&sol.theta_at(e, x))))
        .collect();
    let pair = CongruencePairData { kernel, trace: vec![es.clone()] };
    let rho = congruence_from_pair(s, &pair)
        .map_err(|e| CliffordError::TheoremViolation(format!("recovered pair: {e}")))?;
    if !quotient_is_group(s, &rho)? {
        return Err(CliffordError::TheoremViolation("X/ρ is not a group".into()));
    }
    let violation = |m: String| Err(CliffordError::TheoremViolation(m));
    let mut readings = Vec::with_capacity(es.len());
    for &e in &es {
        let theta_e: Vec<usize> = (0..n).map(|x| sol.theta_at(e, x)).collect();
        let mut image = theta_e.clone();
        image.sort_unstable();
        image.dedup();
        let mut classes: Vec<usize> = image.iter().map(|&r| rho.class_of(r)).collect();
        classes.dedup();
        if classes.len() != image.len() || classes.len() != rho.num_classes() {
            return violation(format!("θ_{e}(X) = {image:?} is not a representative system"));
        }
        for x in 0..n {
            if !rho.related(theta_e[x], x) {
                return violation(format!("θ_{e}({x}) is not ρ-related to {x}"));
            }
            for y in 0..n {
                let (tx, txy) = (theta_e[x], theta_e[s.mul(x, y)]);
                if s.mul(st.inverse(tx), txy) != sol.theta_at(x, y) {
                    return violation(format!("θ_{x}({y}) ≠ θ_{e}({x})⁻¹θ_{e}({x}{y})"));
                }
                if s.mul(s.mul(tx, st.inverse(tx)), txy) != txy {
                    return violation(format!("θ_{e} fails the μ-condition at ({x}, {y})"));
                }
            }
        }
        readings.push(IdempotentReading { idempotent: e, theta_e, image });
    }
    let theta_e_agree = readings.windows(2).all(|w| w[0].theta_e == w[1].theta_e);
    Ok(EInvariantData {
        pair,
        quotient_order: rho.num_classes(),
        congruence: rho,
        readings,
        theta_e_agree,
    })
}

/// A semigroup isomorphism `ψ` with `ψ θ_e = η_ψ(e) ψ` for every
/// idempotent `e`, cross-checked against the general isomorphism search.
pub fn e_invariant_isomorphic(a: &PeSolution, b: &PeSolution) -> Result<Option<ElementMap>, CliffordError> {
    for sol in [a, b] {
        clifford_structure(sol.semigroup())?;
        if !invariance_flags(sol).e_invariant {
            return Err(CliffordError::NotEInvariant);
        }
    }
    let n = a.order();
    if b.order() != n {
        return Ok(None);
    }
    if n > MAX_CANONICAL_ORDER {
        return Err(PeError::from(crate::semigroup::SemigroupError::CanonicalizationTooLarge(n)).into());
    }
    let es = a.semigroup().idempotents();
    let found = permutations(n).find(|p| {
        a.semigroup().relabel(p) == *b.semigroup()
            && es
                .iter()
                .all(|&e| (0..n).all(|x| p.apply(a.theta_at(e, x)) == b.theta_at(p.apply(e), p.apply(x))))
    });
    let general = solutions_isomorphic(a, b);
    if found.is_some() != general.is_some() {
        return Err(CliffordError::TheoremViolation(format!(
            "idempotent criterion says {} but the general search says {}",
            found.is_some(),
            general.is_some()
        )));
    }
    if let Some(p) = &found {
        if a.relabel(p) != *b {
            return Err(CliffordError::TheoremViolation("ψ does not intertwine the solutions".into()));
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::endo_solution;
    use crate::semigroup::named;

    fn m_example() -> (CayleyTable, Congruence) {
        (named::clifford_monoid_m(), Congruence::from_labels(&[0, 0, 1]))
    }

    #[test]
    fn construct_on_m() {
        let (m, rho) = m_example();
        let mu = ElementMap::new(vec![1, 1, 2]).unwrap();
        let s = construct_e_invariant(&m, &rho, &[1, 2], &mu).unwrap();
        assert_eq!(s, endo_solution(&m, &mu).unwrap());
        let mu2 = ElementMap::new(vec![0, 0, 2]).unwrap();
        assert_eq!(construct_e_invariant(&m, &rho, &[0, 2], &mu2), Err(CliffordError::MuConditionFailed(2, 2)));
        let whole = Congruence::identity(3);
        assert_eq!(
            construct_e_invariant(&m, &whole, &[0, 1, 2], &ElementMap::identity(3)),
            Err(CliffordError::QuotientNotGroup)
        );
    }

    #[test]
    fn extract_on_m() {
        let m = named::clifford_monoid_m();
        let s = endo_solution(&m, &ElementMap::new(vec![1, 1, 2]).unwrap()).unwrap();
        let d = extract_e_invariant_data(&s).unwrap();
        assert_eq!(d.pair.kernel, vec![0, 1]);
        assert_eq!(d.quotient_order, 2);
        assert!(d.theta_e_agree);
        assert_eq!(d.readings[0].image, vec![1, 2]);
    }

    #[test]
    fn extract_then_construct_round_trip_on_groups() {
        for g in [named::cyclic_group(4), named::symmetric_group_3(), named::klein_four()] {
            for th in crate::enumeration::enumerate_solutions(&g, &crate::enumeration::SearchFilter::none()) {
                let s = crate::solution::verify_solution(&g, &th).unwrap();
                let d = extract_e_invariant_data(&s).unwrap();
                let r = &d.readings[0];
                let mu = ElementMap::new(r.theta_e.clone()).unwrap();
                assert_eq!(construct_e_invariant(&g, &d.congruence, &r.image, &mu).unwrap(), s);
            }
        }
    }

    #[test]
    fn isomorphism_criterion() {
        let z3 = named::cyclic_group(3);
        let a = PeSolution::from_fn(&z3, |_, y| y).unwrap();
        let b = PeSolution::from_fn(&z3, |_, _| 0).unwrap();
        assert!(e_invariant_isomorphic(&a, &a).unwrap().is_some());
        assert!(e_invariant_isomorphic(&a, &b).unwrap().is_none());
    }

    #[test]
    fn constant_solutions_have_full_kernel() {
        let m = named::clifford_monoid_m();
        for e in [0, 1] {
            let s = PeSolution::from_fn(&m, |_, _| e).unwrap();
            let d = extract_e_invariant_data(&s).unwrap();
            assert_eq!(d.pair.kernel, vec![0, 1, 2]);
            assert_eq!(d.quotient_order, 1);
        }
        let e1 = PeSolution::from_fn(&m, |_, _| 0).unwrap();
        let ex = PeSolution::from_fn(&m, |_, _| 1).unwrap();
        assert!(e_invariant_isomorphic(&e1, &ex).unwrap().is_none());
    }

    #[test]
    fn representative_choices_related_by_automorphism() {
        // Z2 × Z2 with K = {0, 1}: the two transversals {0, 2} and {0, 3}
        // are exchanged by the automorphism swapping 2 and 3.
        let v = named::klein_four();
        let rho = Congruence::from_labels(&[0, 0, 1, 1]);
        let a = construct_e_invariant(&v, &rho, &[0, 2], &ElementMap::new(vec![0, 0, 2, 2]).unwrap()).unwrap();
        let b = construct_e_invariant(&v, &rho, &[0, 3], &ElementMap::new(vec![0, 0, 3, 3]).unwrap()).unwrap();
        let psi = e_invariant_isomorphic(&a, &b).unwrap().unwrap();
        assert_eq!(a.relabel(&psi), b);
    }
}
