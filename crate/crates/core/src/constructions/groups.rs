use serde::{Deserialize, Serialize};

use crate::semigroup::{coset_representative_systems, CayleyTable, ElementMap, Group};
use crate::solution::{PeError, PeSolution};

use super::ConstructionError;

/// `s(x, y) = (xy, y)` on any semigroup.
pub fn kac_takesaki(s: &CayleyTable) -> PeSolution {
    PeSolution::from_fn(s, |_, y| y).expect("(xy, y) satisfies both axioms")
}

/// A normal subgroup `K`, a system of representatives `R` of `G/K`, and
/// the selector `μ(x) ∈ Kx ∩ R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSolutionData {
    pub kernel: Vec<usize>,
    pub representatives: Vec<usize>,
    pub mu: ElementMap,
}

fn check_data(g: &Group, d: &GroupSolutionData) -> Result<(), String> {
    let n = g.order();
    if d.mu.len() != n {
        return Err("μ must act on G".into());
    }
    if !g.is_normal(&d.kernel) {
        return Err(format!("{:?} is not a normal subgroup", d.kernel));
    }
    for coset in g.right_cosets(&d.kernel) {
        let hits = coset.iter().filter(|x| d.representatives.contains(x)).count();
        if hits != 1 {
            return Err(format!("R meets the coset {coset:?} {hits} times"));
        }
    }
    if d.representatives.iter().any(|&r| r >= n) {
        return Err("R has an element outside G".into());
    }
    for x in 0..n {
        let m = d.mu.apply(x);
        if !d.representatives.contains(&m) {
            return Err(format!("μ({x}) = {m} is not in R"));
        }
        // μ(x) ∈ Kx ⇔ μ(x)x⁻¹ ∈ K.
        if !d.kernel.contains(&g.mul(m, g.inverse(x))) {
            return Err(format!("μ({x}) = {m} is not in Kx"));
        }
    }
    Ok(())
}

/// `θ_x(y) = μ(x)⁻¹ μ(xy)`.
pub fn group_quotient_solution(g: &Group, data: &GroupSolutionData) -> Result<PeSolution, ConstructionError> {
    check_data(g, data).map_err(ConstructionError::BadRepresentativeSystem)?;
    let mu = |x: usize| data.mu.apply(x);
    Ok(PeSolution::from_fn(g.table(), |x, y| g.mul(g.inverse(mu(x)), mu(g.mul(x, y))))?)
}

/// Every normal subgroup paired with every representative system.
pub fn all_group_quotient_solutions(g: &Group) -> Result<Vec<(GroupSolutionData, PeSolution)>, ConstructionError> {
    let mut out = Vec::new();
    for k in g.normal_subgroups() {
        for sys in coset_representative_systems(g, &k)? {
            let data = GroupSolutionData {
                kernel: k.clone(),
                representatives: sys.representatives,
                mu: sys.mu,
            };
            let s = group_quotient_solution(g, &data)?;
            out.push((data, s));
        }
    }
    Ok(out)
}

/// Reads `K = {x : θ₁(x) = 1}`, `R = θ₁(G)` and `μ = θ₁` off a solution on
/// a group and checks every claim of the classification, including the
/// round trip back to `s`.
pub fn extract_group_data(s: &PeSolution) -> Result<GroupSolutionData, ConstructionError> {
    let g = Group::new(s.semigroup().clone()).map_err(|_| ConstructionError::NotAGroup)?;
    let one = g.identity();
    let n = g.order();
    let kernel: Vec<usize> = (0..n).filter(|&x| s.theta_at(one, x) == one).collect();
    let mut representatives: Vec<usize> = (0..n).map(|x| s.theta_at(one, x)).collect();
    representatives.sort_unstable();
    representatives.dedup();
    let data = GroupSolutionData {
        kernel,
        representatives,
        mu: s.theta_map(one),
    };
    check_data(&g, &data).map_err(ConstructionError::TheoremViolation)?;
    for x in 0..n {
        for y in 0..n {
            let rebuilt = g.mul(g.inverse(s.theta_at(one, x)), s.theta_at(one, g.mul(x, y)));
            if s.theta_at(x, y) != rebuilt {
                return Err(ConstructionError::TheoremViolation(format!(
                    "θ_{x}({y}) ≠ θ₁({x})⁻¹θ₁({x}{y})"
                )));
            }
        }
    }
    if group_quotient_solution(&g, &data)? != *s {
        return Err(ConstructionError::TheoremViolation("round trip does not reproduce s".into()));
    }
    Ok(data)
}

/// `s(x, y) = (xy, x ∗ y)` with `x ∗ y = μ(x)⁻¹μ(xy)` on a subsemigroup
/// `X ⊆ G`. `lambda[i]`, `mu[i]` are the images of `carrier[i]`; the result
/// lives on `{0..|X|-1}` with `i` standing for `carrier[i]`.
pub fn kashaev_sergeev(
    g: &Group,
    carrier: &[usize],
    lambda: &[usize],
    mu: &[usize],
) -> Result<PeSolution, ConstructionError> {
    let k = carrier.len();
    if k == 0 || lambda.len() != k || mu.len() != k {
        return Err(ConstructionError::PreconditionFailed("λ and μ must be given on every element of X".into()));
    }
    if lambda.iter().chain(mu).chain(carrier).any(|&v| v >= g.order()) {
        return Err(ConstructionError::PreconditionFailed("values must lie in G".into()));
    }
    let pos = |v: usize| carrier.iter().position(|&c| c == v);
    let mut star = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            let (x, y) = (carrier[i], carrier[j]);
            let xy = pos(g.mul(x, y)).ok_or(ConstructionError::ClosureFailed(x, y))?;
            let v = g.mul(g.inverse(mu[i]), mu[xy]);
            let p = pos(v).ok_or(ConstructionError::ClosureFailed(x, y))?;
            if mu[p] != g.mul(lambda[i], mu[j]) {
                return Err(ConstructionError::CocycleFailed(x, y));
            }
            star[i * k + j] = p;
        }
    }
    let table = g.table().restrict(carrier)?;
    PeSolution::from_fn(&table, |i, j| star[i * k + j])
        .map_err(|e| PeError::InternalInconsistency(format!("Kashaev–Sergeev output fails: {e}")).into())
}
