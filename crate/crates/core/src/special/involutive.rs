use serde::Serialize;

use crate::constructions::kac_takesaki;
use crate::semigroup::{analyze, named, CayleyTable, Congruence, ElementMap, Group};
use crate::solution::{classify_properties, solutions_isomorphic, PeSolution};

use super::SpecialError;

fn require_involutive(s: &PeSolution) -> Result<(), SpecialError> {
    if classify_properties(s)?.involutive {
        Ok(())
    } else {
        Err(SpecialError::NotInvolutive)
    }
}

fn elementary_abelian(a: &CayleyTable) -> Result<Group, SpecialError> {
    let g = Group::new(a.clone()).map_err(|_| SpecialError::NotElementaryAbelian2Group)?;
    if g.exponent() > 2 {
        return Err(SpecialError::NotElementaryAbelian2Group);
    }
    Ok(g)
}

/// The retract together with the classes of `x ~ y ⟺ θ_x = θ_y`.
pub fn retract_with_classes(s: &PeSolution) -> Result<(PeSolution, Congruence), SpecialError> {
    require_involutive(s)?;
    let n = s.order();
    let table = s.semigroup();
    let labels: Vec<usize> = (0..n)
        .map(|x| (0..=x).find(|&y| s.theta_map(y) == s.theta_map(x)).expect("x ~ x"))
        .collect();
    let classes = Congruence::from_labels(&labels);
    if !classes.is_compatible(table) {
        return Err(SpecialError::NotWellDefined("~ is not a congruence".into()));
    }
    let q = classes.quotient(table)?;
    let k = q.order();
    if (0..k).any(|a| (0..k).any(|b| q.mul(a, b) != a)) {
        return Err(SpecialError::NotWellDefined("X/~ is not left-zero".into()));
    }
    let reps: Vec<usize> = classes.blocks().iter().map(|b| b[0]).collect();
    let bar = |c: usize, d: usize| classes.class_of(s.theta_at(reps[c], reps[d]));
    for x in 0..n {
        for y in 0..n {
            if classes.class_of(s.theta_at(x, y)) != bar(classes.class_of(x), classes.class_of(y)) {
                return Err(SpecialError::NotWellDefined(format!("θ̄ depends on representatives at ({x}, {y})")));
            }
        }
    }
    let ret = PeSolution::from_fn(&q, bar).map_err(|e| SpecialError::NotWellDefined(e.to_string()))?;
    require_involutive(&ret).map_err(|_| SpecialError::TheoremViolation("Ret(s) is not involutive".into()))?;
    if (0..k).any(|c| (0..c).any(|d| ret.theta_map(c) == ret.theta_map(d))) {
        return Err(SpecialError::TheoremViolation("Ret(s) is not irretractable".into()));
    }
    Ok((ret, classes))
}

/// `Ret(s)` on `X/~` with `x ~ y ⟺ θ_x = θ_y`; classes are numbered by
/// least element.
pub fn retract(s: &PeSolution) -> Result<PeSolution, SpecialError> {
    retract_with_classes(s).map(|(r, _)| r)
}

/// `t_A(x, y) = (x, x + y)` on `A` with the left-zero product.
pub fn t_a(a: &CayleyTable) -> Result<PeSolution, SpecialError> {
    let g = elementary_abelian(a)?;
    let n = g.order();
    let t = PeSolution::from_fn(&named::left_zero(n), |x, y| g.mul(x, y))?;
    require_involutive(&t).map_err(|_| SpecialError::TheoremViolation("t_A is not involutive".into()))?;
    if retract(&t)?.order() != n {
        return Err(SpecialError::TheoremViolation("t_A is not irretractable".into()));
    }
    Ok(t)
}

/// `((x, a), (y, b)) ↦ ((x, a), (σ_{a+b}σ_b⁻¹(y), a + b))` on `X × A`, with
/// `(x, a)` stored as `x·|A| + a`.
pub fn ext_sigma(a: &CayleyTable, x_size: usize, sigma: &[ElementMap]) -> Result<PeSolution, SpecialError> {
    let g = elementary_abelian(a)?;
    let m = g.order();
    if x_size == 0 {
        return Err(SpecialError::BadSigma("X must be non-empty".into()));
    }
    if sigma.len() != m {
        return Err(SpecialError::BadSigma(format!("{} permutations for |A| = {m}", sigma.len())));
    }
    let inverses: Vec<ElementMap> = sigma
        .iter()
        .enumerate()
        .map(|(i, p)| {
            (p.len() == x_size)
                .then(|| p.inverse())
                .flatten()
                .ok_or_else(|| SpecialError::BadSigma(format!("σ_{i} is not a permutation of X")))
        })
        .collect::<Result<_, _>>()?;
    let s = PeSolution::from_fn(&named::left_zero(x_size * m), |p, q| {
        let (a, (y, b)) = (p % m, (q / m, q % m));
        let ab = g.mul(a, b);
        sigma[ab].apply(inverses[b].apply(y)) * m + ab
    })?;
    require_involutive(&s).map_err(|_| SpecialError::TheoremViolation("extension is not involutive".into()))?;
    Ok(s)
}

/// An identification of the carrier with `X × A × G` under which the
/// solution is `Ext^σ_X(t_A) × s_G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutiveDecomposition {
    pub x_size: usize,
    /// `A = (Z_2)^a_rank`, elements as bit vectors under xor.
    pub a_rank: u32,
    pub g: CayleyTable,
    /// `σ_a` for each `a ∈ A`.
    pub sigma: Vec<ElementMap>,
    /// `(x, a, g)`, stored as `(x·|A| + a)·|G| + g`, maps to `witness[..]`.
    pub witness: ElementMap,
}

/// Rebuilds `Ext^σ_X(t_A) × s_G` and transports it along the witness.
pub fn reassemble(d: &InvolutiveDecomposition) -> Result<PeSolution, SpecialError> {
    let ext = ext_sigma(&named::elementary_abelian_2(d.a_rank), d.x_size, &d.sigma)?;
    Ok(ext.direct_product(&kac_takesaki(&d.g)).relabel(&d.witness))
}

fn failed(m: impl Into<String>) -> SpecialError {
    SpecialError::DecompositionFailed(m.into())
}

/// Splits the carrier as a left group `L × G`, reads `s = s_L × s_G`,
/// matches `Ret(s_L)` with `t_A` and fits `σ` with `σ_0 = id`.
pub fn decompose_involutive(s: &PeSolution) -> Result<InvolutiveDecomposition, SpecialError> {
    require_involutive(s)?;
    let lg = analyze(s.semigroup())
        .left_group
        .ok_or_else(|| failed("the carrier is not a left group"))?;
    let g = Group::new(lg.group_table.clone()).map_err(|_| failed("the group factor is not a group"))?;
    if g.exponent() > 2 {
        return Err(failed("the group factor has exponent above 2"));
    }
    let (l, m) = (lg.left_zero.len(), g.order());
    let mut theta_l = vec![vec![0; l]; l];
    for x in 0..s.order() {
        for y in 0..s.order() {
            let ((i, _), (k, j)) = (lg.coords[x], lg.coords[y]);
            let (p, q) = lg.coords[s.theta_at(x, y)];
            if q != j {
                return Err(failed(format!("θ_{x}({y}) moves the group coordinate")));
            }
            if lg.coords[x].1 == 0 && j == 0 {
                theta_l[i][k] = p;
            }
        }
    }
    for x in 0..s.order() {
        for y in 0..s.order() {
            let ((i, _), (k, _)) = (lg.coords[x], lg.coords[y]);
            if lg.coords[s.theta_at(x, y)].0 != theta_l[i][k] {
                return Err(failed(format!("θ_{x}({y}) does not factor through the left-zero part")));
            }
        }
    }
    let s_l = PeSolution::from_fn(&named::left_zero(l), |i, k| theta_l[i][k])?;
    let (ret, classes) = retract_with_classes(&s_l)?;
    let r = ret.order();
    if !r.is_power_of_two() {
        return Err(failed(format!("the retract has order {r}")));
    }
    let a_rank = r.trailing_zeros();
    let t = t_a(&named::elementary_abelian_2(a_rank))?;
    let psi = solutions_isomorphic(&t, &ret).ok_or_else(|| failed("Ret(s) is not isomorphic to t_A"))?;
    let blocks = classes.blocks();
    let x_size = blocks[0].len();
    if blocks.iter().any(|b| b.len() != x_size) {
        return Err(failed("retract classes have different sizes"));
    }
    // members[a][ξ]: the ξ-th element of L with A-coordinate a.
    let members: Vec<&Vec<usize>> = (0..r).map(|a| &blocks[psi.apply(a)]).collect();
    let x_of = |i: usize| members.iter().find_map(|b| b.iter().position(|&v| v == i)).expect("covered");
    let sigma: Vec<ElementMap> = (0..r)
        .map(|a| ElementMap::new((0..x_size).map(|xi| x_of(theta_l[members[a][0]][members[0][xi]])).collect()))
        .collect::<Option<_>>()
        .ok_or_else(|| failed("σ is out of range"))?;
    let mut image = Vec::with_capacity(s.order());
    for xi in 0..x_size {
        for block in &members {
            for j in 0..m {
                image.push(lg.element_at(block[xi], j));
            }
        }
    }
    let witness = ElementMap::new(image).ok_or_else(|| failed("witness out of range"))?;
    let d = InvolutiveDecomposition { x_size, a_rank, g: lg.group_table.clone(), sigma, witness };
    if reassemble(&d)? != *s {
        return Err(failed("reassembly does not reproduce the solution"));
    }
    if solutions_isomorphic(&retract(s)?, &t).is_none() {
        return Err(failed("Ret(s) is not isomorphic to t_A"));
    }
    Ok(d)
}

/// Isomorphism classes of involutive solutions on a set of size
/// `N = 2^n(2m + 1)`: `C(n + 2, 2)`. `None` for the empty set.
pub fn count_involutive(size: u64) -> Option<u64> {
    (size > 0).then(|| {
        let n = u64::from(size.trailing_zeros());
        (n + 2) * (n + 1) / 2
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kt2() -> PeSolution {
        kac_takesaki(&named::cyclic_group(2))
    }

    #[test]
    fn retract_examples() {
        let t = t_a(&named::cyclic_group(2)).unwrap();
        assert_eq!(retract(&t).unwrap(), t);
        assert_eq!(retract(&kt2()).unwrap().order(), 1);
        let id = PeSolution::from_fn(&named::left_zero(2), |_, y| y).unwrap();
        assert_eq!(retract(&id).unwrap().order(), 1);
        let nonzero = PeSolution::from_fn(&named::cyclic_group(3), |_, y| y).unwrap();
        assert_eq!(retract(&nonzero), Err(SpecialError::NotInvolutive));
    }

    #[test]
    fn t_a_examples() {
        let t = t_a(&named::cyclic_group(2)).unwrap();
        assert_eq!(t.apply(1, 1), (1, 0));
        let v = t_a(&named::klein_four()).unwrap();
        assert_eq!(retract(&v).unwrap().order(), 4);
        assert_eq!(t_a(&named::cyclic_group(3)), Err(SpecialError::NotElementaryAbelian2Group));
    }

    #[test]
    fn ext_sigma_examples() {
        let id2 = ElementMap::identity(2);
        let swap = ElementMap::new(vec![1, 0]).unwrap();
        let z2 = named::cyclic_group(2);
        let single = ext_sigma(&z2, 1, &[ElementMap::identity(1), ElementMap::identity(1)]).unwrap();
        assert_eq!(single, t_a(&z2).unwrap());
        let trivial = ext_sigma(&named::cyclic_group(1), 2, std::slice::from_ref(&id2)).unwrap();
        assert_eq!(trivial, PeSolution::from_fn(&named::left_zero(2), |_, y| y).unwrap());
        let e = ext_sigma(&z2, 2, &[id2.clone(), swap]).unwrap();
        assert!(classify_properties(&e).unwrap().involutive);
        assert!(matches!(ext_sigma(&z2, 2, &[id2]), Err(SpecialError::BadSigma(_))));
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose_involutive(&kt2()).unwrap();
        assert_eq!((d.x_size, d.a_rank, d.g.order()), (1, 0, 2));
        let d = decompose_involutive(&t_a(&named::cyclic_group(2)).unwrap()).unwrap();
        assert_eq!((d.x_size, d.a_rank, d.g.order()), (1, 1, 1));
        let id = PeSolution::from_fn(&named::left_zero(2), |_, y| y).unwrap();
        let d = decompose_involutive(&id).unwrap();
        assert_eq!((d.x_size, d.a_rank, d.g.order()), (2, 0, 1));
    }

    #[test]
    fn decomposition_reassembles_products() {
        let z2 = named::cyclic_group(2);
        let swap = ElementMap::new(vec![1, 0]).unwrap();
        let e = ext_sigma(&z2, 2, &[ElementMap::identity(2), swap]).unwrap();
        let s = e.direct_product(&kt2());
        let d = decompose_involutive(&s).unwrap();
        assert_eq!((d.x_size, d.a_rank, d.g.order()), (2, 1, 2));
        assert_eq!(reassemble(&d).unwrap(), s);
    }

    #[test]
    fn counts() {
        assert_eq!(count_involutive(3), Some(1));
        assert_eq!(count_involutive(4), Some(6));
        assert_eq!(count_involutive(2), Some(3));
        assert_eq!(count_involutive(64), Some(28));
        assert_eq!(count_involutive(0), None);
    }
}
