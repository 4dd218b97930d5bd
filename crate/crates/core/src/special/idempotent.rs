use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::semigroup::{CayleyTable, Congruence, ElementMap};
use crate::solution::{classify_properties, PeSolution};

use super::report::{tuples, Report};
use super::SpecialError;

fn monoid_identity(t: &CayleyTable) -> Result<usize, SpecialError> {
    t.identity().ok_or(SpecialError::NotMonoid)
}

fn require_idempotent(s: &PeSolution) -> Result<(), SpecialError> {
    if classify_properties(s)?.idempotent {
        Ok(())
    } else {
        Err(SpecialError::NotIdempotent)
    }
}

fn require_central_idempotents(t: &CayleyTable) -> Result<(), SpecialError> {
    let central = t.idempotents().iter().all(|&e| t.elements().all(|x| t.mul(e, x) == t.mul(x, e)));
    if central {
        Ok(())
    } else {
        Err(SpecialError::IdempotentsNotCentral)
    }
}

/// The four identities every solution on a monoid satisfies.
pub fn monoid_theta_checks(s: &PeSolution) -> Result<Report, SpecialError> {
    let t = s.semigroup();
    let one = monoid_identity(t)?;
    let n = s.order();
    let idem = |x: usize| t.mul(x, x) == x;
    let th = |x: usize, y: usize| s.theta_at(x, y);
    let mut r = Report::new();
    r.check("θ_x(1) ∈ E(M)", tuples(n, 1), |v| idem(th(v[0], one)));
    r.check("θ_1 = θ_{θ_x(1)} θ_x", tuples(n, 2), |v| th(one, v[1]) == th(th(v[0], one), th(v[0], v[1])));
    let base = th(one, one);
    r.check("θ_1(x) ∈ θ_1(1)M", tuples(n, 1), |v| (0..n).any(|m| t.mul(base, m) == th(one, v[0])));
    r.check("θ_x = θ_{θ_1(x)} θ_x", tuples(n, 2), |v| th(v[0], v[1]) == th(th(one, v[0]), th(v[0], v[1])));
    Ok(r)
}

/// Items a–g over `Xe` and `eX` for every idempotent `e`, the two
/// element-wise idempotency identities, and on monoids the four
/// consequences for `θ_1`.
pub fn idempotent_theta_checks(s: &PeSolution) -> Result<Report, SpecialError> {
    require_idempotent(s)?;
    let t = s.semigroup();
    let n = s.order();
    let es = t.idempotents();
    let m = |x: usize, y: usize| t.mul(x, y);
    let th = |x: usize, y: usize| s.theta_at(x, y);
    let idem = |x: usize| m(x, x) == x;
    let is_idem = |v: &[usize]| es.contains(&v[0]);
    let in_xe = |x: usize, e: usize| m(x, e) == x;
    let in_ex = |x: usize, e: usize| m(e, x) == x;
    let idempotent_map = |x: usize| (0..n).all(|y| th(x, th(x, y)) == th(x, y));

    let mut r = Report::new();
    r.check("xyθ_x(y) = xy", tuples(n, 2), |v| m(m(v[0], v[1]), th(v[0], v[1])) == m(v[0], v[1]));
    r.check("θ_{xy}θ_x(y) = θ_x(y)", tuples(n, 2), |v| th(m(v[0], v[1]), th(v[0], v[1])) == th(v[0], v[1]));
    let t2 = || tuples(n, 2).filter(|v| is_idem(v));
    let t3 = || tuples(n, 3).filter(|v| is_idem(v));
    // v = [e, x, ...]
    r.check("a. x ∈ Xe ⇒ x ∈ Xθ_x(e)", t2(), |v| !in_xe(v[1], v[0]) || in_xe(v[1], th(v[1], v[0])));
    r.check("b. x ∈ Xe ⇒ θ_y(x) ∈ Xθ_x(e)", t3(), |v| {
        !in_xe(v[1], v[0]) || in_xe(th(v[2], v[1]), th(v[1], v[0]))
    });
    r.check("c. x ∈ Xe ⇒ θ_e = θ_e θ_x", t3(), |v| {
        !in_xe(v[1], v[0]) || th(v[0], v[2]) == th(v[0], th(v[1], v[2]))
    });
    r.check("d. x ∈ eX ⇒ θ_e(x) ∈ E(X)", t2(), |v| !in_ex(v[1], v[0]) || idem(th(v[0], v[1])));
    r.check("e. x ∈ eX ⇒ x ∈ Xθ_e(x)", t2(), |v| !in_ex(v[1], v[0]) || in_xe(v[1], th(v[0], v[1])));
    r.check("f. x ∈ eX ⇒ θ_y(x) ∈ Xθ_e(x)", t3(), |v| {
        !in_ex(v[1], v[0]) || in_xe(th(v[2], v[1]), th(v[0], v[1]))
    });
    r.check("g. x ∈ eX ⇒ θ_x idempotent", t2(), |v| !in_ex(v[1], v[0]) || idempotent_map(v[1]));
    if let Some(one) = t.identity() {
        r.check("θ_1(x) ∈ E(M)", tuples(n, 1), |v| idem(th(one, v[0])));
        r.check("θ_1(1) = 1", [vec![one]], |v| th(v[0], v[0]) == v[0]);
        r.check("θ_x = θ_{θ_1(x)}", tuples(n, 2), |v| th(v[0], v[1]) == th(th(one, v[0]), v[1]));
        r.check("θ_1 = θ_1 θ_x", tuples(n, 2), |v| th(one, v[1]) == th(one, th(v[0], v[1])));
        r.check("θ_x idempotent", tuples(n, 1), |v| idempotent_map(v[0]));
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theta1Data {
    /// `θ_1`.
    pub mu: ElementMap,
    pub kernel: Congruence,
    /// `θ_1(M)`, sorted.
    pub image: Vec<usize>,
}

/// `θ_1` as an idempotent monoid homomorphism into `E(M)`, its kernel,
/// and the two facts about representatives, each verified.
pub fn theta1_homomorphism_data(s: &PeSolution) -> Result<Theta1Data, SpecialError> {
    let t = s.semigroup();
    let one = monoid_identity(t)?;
    require_central_idempotents(t)?;
    require_idempotent(s)?;
    let n = s.order();
    let mu = s.theta_map(one);
    let violation = |m: String| Err(SpecialError::TheoremViolation(m));
    if mu.apply(one) != one || (0..n).any(|x| (0..n).any(|y| mu.apply(t.mul(x, y)) != t.mul(mu.apply(x), mu.apply(y)))) {
        return violation("θ_1 is not a monoid homomorphism".into());
    }
    if !mu.is_idempotent() || (0..n).any(|x| !t.idempotents().contains(&mu.apply(x))) {
        return violation("θ_1 is not an idempotent map into E(M)".into());
    }
    let kernel = Congruence::from_labels(mu.image());
    let image = mu.range_set();
    let mut classes: Vec<usize> = image.iter().map(|&e| kernel.class_of(e)).collect();
    classes.dedup();
    if classes.len() != kernel.num_classes() {
        return violation("θ_1(M) is not a representative system of M/ker θ_1".into());
    }
    if let Some((x, y)) = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| !kernel.related(s.theta_at(x, y), y))
    {
        return violation(format!("(θ_{x}({y}), {y}) ∉ ker θ_1"));
    }
    Ok(Theta1Data { mu, kernel, image })
}

/// `μ` together with `θ_e` for every `e` in the image of `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentClassificationData {
    pub mu: ElementMap,
    pub thetas: BTreeMap<usize, ElementMap>,
}

/// `s(x, y) = (xy, θ_{μ(x)}(y))` on a monoid with central idempotents.
/// Condition 0 collects the hypotheses on `μ`; conditions 1–3 are the
/// three identities on the family, in order.
pub fn construct_idempotent_central(
    m: &CayleyTable,
    data: &IdempotentClassificationData,
) -> Result<PeSolution, SpecialError> {
    let one = monoid_identity(m)?;
    require_central_idempotents(m)?;
    let n = m.order();
    let fail = |index: usize, witnesses: Vec<usize>| Err(SpecialError::ConditionFailed { index, witnesses });
    let mu = &data.mu;
    if mu.len() != n || data.thetas.values().any(|t| t.len() != n) {
        return fail(0, vec![]);
    }
    let es = m.idempotents();
    for x in 0..n {
        if !es.contains(&mu.apply(x)) || mu.apply(mu.apply(x)) != mu.apply(x) || m.mul(x, mu.apply(x)) != x {
            return fail(0, vec![x]);
        }
        for y in 0..n {
            if mu.apply(m.mul(x, y)) != m.mul(mu.apply(x), mu.apply(y)) {
                return fail(0, vec![x, y]);
            }
        }
    }
    if mu.apply(one) != one {
        return fail(0, vec![one]);
    }
    let image = mu.range_set();
    if data.thetas.keys().copied().collect::<Vec<_>>() != image || data.thetas[&one] != *mu {
        return fail(0, image);
    }
    let th = |e: usize, x: usize| data.thetas[&e].apply(x);
    for &e in &image {
        for &f in &image {
            if let Some(z) = (0..n).find(|&z| th(e, z) != th(e, th(m.mul(e, f), z))) {
                return fail(1, vec![e, f, z]);
            }
        }
        for x in 0..n {
            let h = mu.apply(m.mul(e, x));
            if let Some(y) = (0..n).find(|&y| th(e, m.mul(x, y)) != m.mul(th(e, x), th(h, y))) {
                return fail(2, vec![e, x, y]);
            }
            let j = mu.apply(x);
            if th(m.mul(e, j), th(e, x)) != th(e, x) {
                return fail(3, vec![e, x]);
            }
        }
    }
    let s = PeSolution::from_fn(m, |x, y| th(mu.apply(x), y))
        .map_err(|e| SpecialError::TheoremViolation(format!("constructed map is not a solution: {e}")))?;
    require_idempotent(&s).map_err(|_| SpecialError::TheoremViolation("constructed solution is not idempotent".into()))?;
    Ok(s)
}

/// Reads `μ = θ_1` and `{θ_e : e ∈ im μ}` off an idempotent solution and
/// rebuilds it.
pub fn extract_idempotent_central(s: &PeSolution) -> Result<IdempotentClassificationData, SpecialError> {
    let t = s.semigroup();
    let one = monoid_identity(t)?;
    require_central_idempotents(t)?;
    require_idempotent(s)?;
    let mu = s.theta_map(one);
    let thetas = mu.range_set().into_iter().map(|e| (e, s.theta_map(e))).collect();
    let data = IdempotentClassificationData { mu, thetas };
    let rebuilt = construct_idempotent_central(t, &data)
        .map_err(|e| SpecialError::TheoremViolation(format!("extracted data is rejected: {e}")))?;
    if rebuilt != *s {
        return Err(SpecialError::TheoremViolation("extracted data rebuilds a different solution".into()));
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{kac_takesaki, lyubashenko};
    use crate::semigroup::named;

    fn m() -> CayleyTable {
        named::idempotent_example_monoid()
    }

    /// The three idempotent solutions on `{1, a, b}` = `{0, 1, 2}`.
    fn catalogue() -> [PeSolution; 3] {
        let m = m();
        let gamma = [0, 1, 0];
        [
            PeSolution::from_fn(&m, |_, _| 0).unwrap(),
            PeSolution::from_fn(&m, |_, y| gamma[y]).unwrap(),
            PeSolution::from_fn(&m, |x, y| if y == 2 && x != 1 { 0 } else { y }).unwrap(),
        ]
    }

    #[test]
    fn example_solutions_pass_every_check() {
        for s in catalogue() {
            let r = idempotent_theta_checks(&s).unwrap();
            assert!(r.all_hold, "{r:?}");
            assert!(monoid_theta_checks(&s).unwrap().all_hold);
            let d = extract_idempotent_central(&s).unwrap();
            assert_eq!(construct_idempotent_central(&m(), &d).unwrap(), s);
        }
        let l = lyubashenko(3, &ElementMap::constant(3, 1), &ElementMap::constant(3, 1)).unwrap();
        assert!(idempotent_theta_checks(&l).unwrap().all_hold);
        assert!(monoid_theta_checks(&kac_takesaki(&named::cyclic_group(2))).unwrap().all_hold);
    }

    #[test]
    fn theta1_examples() {
        let [s, r, t] = catalogue();
        let d = theta1_homomorphism_data(&r).unwrap();
        assert_eq!(d.mu.image(), &[0, 1, 0]);
        assert_eq!(d.kernel.blocks(), vec![vec![0, 2], vec![1]]);
        assert_eq!(theta1_homomorphism_data(&s).unwrap().kernel.num_classes(), 1);
        assert_eq!(theta1_homomorphism_data(&t).unwrap().mu.apply(2), 0);
    }

    #[test]
    fn groups_have_only_the_constant_identity() {
        let z3 = named::cyclic_group(3);
        let data = IdempotentClassificationData {
            mu: ElementMap::constant(3, 0),
            thetas: BTreeMap::from([(0, ElementMap::constant(3, 0))]),
        };
        assert_eq!(construct_idempotent_central(&z3, &data).unwrap(), PeSolution::from_fn(&z3, |_, _| 0).unwrap());
        let bad = IdempotentClassificationData {
            mu: ElementMap::identity(3),
            thetas: BTreeMap::from([(0, ElementMap::identity(3))]),
        };
        assert_eq!(
            construct_idempotent_central(&z3, &bad),
            Err(SpecialError::ConditionFailed { index: 0, witnesses: vec![1] })
        );
        let trivial = named::cyclic_group(1);
        let d = IdempotentClassificationData {
            mu: ElementMap::identity(1),
            thetas: BTreeMap::from([(0, ElementMap::identity(1))]),
        };
        assert_eq!(construct_idempotent_central(&trivial, &d).unwrap().apply(0, 0), (0, 0));
    }

    #[test]
    fn rejects_non_monoids_and_non_idempotent() {
        let l = PeSolution::from_fn(&named::left_zero(2), |_, y| y).unwrap();
        assert_eq!(monoid_theta_checks(&l), Err(SpecialError::NotMonoid));
        let kt3 = kac_takesaki(&named::cyclic_group(3));
        assert_eq!(idempotent_theta_checks(&kt3), Err(SpecialError::NotIdempotent));
    }
}
