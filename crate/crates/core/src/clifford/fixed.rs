use serde::{Deserialize, Serialize};

use crate::semigroup::CayleyTable;
use crate::solution::PeSolution;

use super::{clifford_structure, invariance_flags, CliffordError, CliffordStructure};

/// One explicitly chosen `ε_{e,f}: G_e → G_f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonMap {
    pub from: usize,
    pub to: usize,
    /// Images of the elements of `G_from` in increasing order.
    pub images: Vec<usize>,
}

/// The maps `ε_{e,f}`. Pairs not listed default to `φ_{e,f}` when
/// `e ≥ f` and to the constant map onto `f` otherwise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Epsilon {
    #[serde(default)]
    pub maps: Vec<EpsilonMap>,
}

impl Epsilon {
    /// `maps[i][j][k]` is `ε_{e_i,e_j}` applied to the `k`-th element of `G_{e_i}`.
    fn resolve(&self, st: &CliffordStructure) -> Result<Vec<Vec<Vec<usize>>>, CliffordError> {
        let bad = |m: String| Err(CliffordError::BadGluingData(m));
        let k = st.idempotents.len();
        let mut out = vec![vec![Vec::new(); k]; k];
        for i in 0..k {
            for j in 0..k {
                let f = st.idempotents[j];
                out[i][j] = if st.leq[j][i] {
                    st.groups[i].iter().map(|&x| st.phi_apply(f, x)).collect()
                } else {
                    vec![f; st.groups[i].len()]
                };
            }
        }
        for m in &self.maps {
            let (Some(i), Some(j)) = (st.index_of_idempotent(m.from), st.index_of_idempotent(m.to)) else {
                return bad(format!("ε_{},{} does not name two idempotents", m.from, m.to));
            };
            if m.images.len() != st.groups[i].len() || !m.images.iter().all(|y| st.groups[j].contains(y)) {
                return bad(format!("ε_{},{} is not a map G_{} → G_{}", m.from, m.to, m.from, m.to));
            }
            if st.leq[j][i] && m.images != out[i][j] {
                return bad(format!("ε_{},{} must equal φ since {} ≥ {}", m.from, m.to, m.from, m.to));
            }
            out[i][j] = m.images.clone();
        }
        Ok(out)
    }
}

/// The per-group solutions and the resolved `ε` maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingData {
    pub structure: CliffordStructure,
    /// `components[i]` lives on `structure.group_table(i)`.
    pub components: Vec<PeSolution>,
    epsilon: Vec<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedSolution {
    pub solution: PeSolution,
    pub data: GluingData,
}

impl GluingData {
    /// `ε_{e,f}(x)` for idempotents `e, f` and `x ∈ G_e`.
    pub fn epsilon(&self, e: usize, f: usize, x: usize) -> usize {
        let st = &self.structure;
        let i = st.index_of_idempotent(e).expect("idempotent");
        let j = st.index_of_idempotent(f).expect("idempotent");
        self.epsilon[i][j][st.local_index(x)]
    }

    /// `θ^[e]_x(y)` in carrier labels, for `x, y ∈ G_e`.
    pub fn component_theta(&self, x: usize, y: usize) -> usize {
        let st = &self.structure;
        let i = st.component[x];
        st.groups[i][self.components[i].theta_at(st.local_index(x), st.local_index(y))]
    }
}

/// `θ_x(y) = θ^[f]_{ε_{e,f}(x)}(y)` for `x ∈ G_e`, `y ∈ G_f`, after checking
/// both compatibility conditions for every `e, f, h, x, y`.
pub fn glue_e_fixed(s: &CayleyTable, components: &[PeSolution], epsilon: &Epsilon) -> Result<GluedSolution, CliffordError> {
    let st = clifford_structure(s)?;
    let k = st.idempotents.len();
    if components.len() != k {
        return Err(CliffordError::BadGluingData(format!("{} components for {k} groups", components.len())));
    }
    for (i, c) in components.iter().enumerate() {
        if *c.semigroup() != st.group_table(i) {
            return Err(CliffordError::BadGluingData(format!(
                "component {i} does not live on G_{}",
                st.idempotents[i]
            )));
        }
    }
    let eps = epsilon.resolve(&st)?;
    let glued = GluingData {
        structure: st,
        components: components.to_vec(),
        epsilon: eps,
    };
    let st = &glued.structure;
    let theta_h = |x: usize, y: usize| glued.component_theta(x, y);
    for (ei, ge) in st.groups.iter().enumerate() {
        for (fi, gf) in st.groups.iter().enumerate() {
            let ef = s.mul(st.idempotents[ei], st.idempotents[fi]);
            for &x in ge {
                for &y in gf {
                    for (hi, gh) in st.groups.iter().enumerate() {
                        let (e, f, h) = (st.idempotents[ei], st.idempotents[fi], st.idempotents[hi]);
                        let fail = |condition| CliffordError::CompatibilityFailed { condition, e, f, h, x, y };
                        let lhs = glued.epsilon(ef, h, s.mul(x, y));
                        let rhs = s.mul(glued.epsilon(e, h, x), glued.epsilon(f, h, y));
                        if !gh.iter().all(|&z| theta_h(lhs, z) == theta_h(rhs, z)) {
                            return Err(fail(1));
                        }
                        let left = glued.epsilon(f, h, theta_h(glued.epsilon(e, f, x), y));
                        let right = theta_h(glued.epsilon(e, h, x), glued.epsilon(f, h, y));
                        if left != right {
                            return Err(fail(2));
                        }
                    }
                }
            }
        }
    }
    let solution = PeSolution::from_fn(s, |x, y| {
        let (e, f) = (st.idempotent_of(x), st.idempotent_of(y));
        theta_h(glued.epsilon(e, f, x), y)
    })
    .map_err(|e| CliffordError::TheoremViolation(format!("glued map is not a solution: {e}")))?;
    if !invariance_flags(&solution).e_fixed {
        return Err(CliffordError::TheoremViolation("glued solution is not E(X)-fixed".into()));
    }
    Ok(GluedSolution { solution, data: glued })
}

/// `{a : θ_e(a) = aa⁻¹ for every idempotent e ≤ aa⁻¹}`, checked equal to
/// the union of `K_e = {a ∈ G_e : θ^[e]_e(a) = e}`.
pub fn e_fixed_kernel(glued: &GluedSolution) -> Result<Vec<usize>, CliffordError> {
    let g = &glued.data;
    let st = &g.structure;
    for &e in &st.idempotents {
        for &f in &st.idempotents {
            if st.le(e, f) && g.epsilon(e, f, e) != f {
                return Err(CliffordError::HypothesisFailed(format!("ε_{e},{f}({e}) ≠ {f}")));
            }
        }
    }
    let s = &glued.solution;
    let n = s.order();
    let direct: Vec<usize> = (0..n)
        .filter(|&a| {
            let aa = st.idempotent_of(a);
            st.idempotents.iter().filter(|&&e| st.le(e, aa)).all(|&e| s.theta_at(e, a) == aa)
        })
        .collect();
    let union: Vec<usize> = (0..n)
        .filter(|&a| {
            let e = st.idempotent_of(a);
            g.component_theta(e, a) == e
        })
        .collect();
    if direct != union {
        return Err(CliffordError::TheoremViolation(format!(
            "kernel {direct:?} differs from the union of group kernels {union:?}"
        )));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;
    use crate::solution::PeSolution;

    fn m() -> CayleyTable {
        named::clifford_monoid_m()
    }

    fn parts(z2_theta: impl Fn(usize, usize) -> usize) -> Vec<PeSolution> {
        let st = clifford_structure(&m()).unwrap();
        vec![
            PeSolution::from_fn(&st.group_table(0), |_, y| y).unwrap(),
            PeSolution::from_fn(&st.group_table(1), z2_theta).unwrap(),
        ]
    }

    #[test]
    fn kac_takesaki_components_give_identity() {
        let g = glue_e_fixed(&m(), &parts(|_, y| y), &Epsilon::default()).unwrap();
        assert_eq!(g.solution, PeSolution::from_fn(&m(), |_, y| y).unwrap());
        assert_eq!(e_fixed_kernel(&g).unwrap(), vec![0, 1]);
    }

    #[test]
    fn constant_components_give_f() {
        let g = glue_e_fixed(&m(), &parts(|_, _| 0), &Epsilon::default()).unwrap();
        let st = &g.data.structure;
        assert_eq!(g.solution, PeSolution::from_fn(&m(), |_, y| st.idempotent_of(y)).unwrap());
        assert_eq!(e_fixed_kernel(&g).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn bad_epsilon() {
        let eps = Epsilon { maps: vec![EpsilonMap { from: 0, to: 1, images: vec![2] }] };
        assert!(matches!(glue_e_fixed(&m(), &parts(|_, y| y), &eps), Err(CliffordError::BadGluingData(_))));
        let eps = Epsilon { maps: vec![EpsilonMap { from: 1, to: 0, images: vec![0, 0] }] };
        let g = glue_e_fixed(&m(), &parts(|_, y| y), &eps).unwrap();
        assert!(invariance_flags(&g.solution).e_fixed);
    }

    #[test]
    fn endomorphism_family_glues_to_gamma_f() {
        // {e, f} × Z2 with f < e and φ an isomorphism G_e → G_f, so
        // φγ^[e] = γ^[f]φ forces both γ to agree.
        let t = named::semilattice_two().direct_product(&named::cyclic_group(2));
        let st = clifford_structure(&t).unwrap();
        let gammas: [fn(usize) -> usize; 2] = [|y| y, |_| 0];
        for (ge, gf) in [(0, 0), (1, 1)] {
            let comps: Vec<PeSolution> = [ge, gf]
                .iter()
                .enumerate()
                .map(|(i, &g)| PeSolution::from_fn(&st.group_table(i), |_, y| gammas[g](y)).unwrap())
                .collect();
            let glued = glue_e_fixed(&t, &comps, &Epsilon::default()).unwrap();
            let expected = PeSolution::from_fn(&t, |_, y| {
                let i = st.component[y];
                st.groups[i][gammas[[ge, gf][i]](st.local_index(y))]
            })
            .unwrap();
            assert_eq!(glued.solution, expected);
            e_fixed_kernel(&glued).unwrap();
        }
        for pick in [[0, 1], [1, 0]] {
            let comps: Vec<PeSolution> = pick
                .iter()
                .enumerate()
                .map(|(i, &g)| PeSolution::from_fn(&st.group_table(i), |_, y| gammas[g](y)).unwrap())
                .collect();
            assert!(matches!(
                glue_e_fixed(&t, &comps, &Epsilon::default()),
                Err(CliffordError::CompatibilityFailed { condition: 2, .. })
            ));
        }
    }

    #[test]
    fn mixed_gluing_kernel() {
        let g = glue_e_fixed(&m(), &parts(|_, _| 0), &Epsilon::default()).unwrap();
        // K_1 = {1}, K_x = G_x since θ^[x]_x is constant x.
        assert_eq!(e_fixed_kernel(&g).unwrap(), vec![0, 1, 2]);
        let g = glue_e_fixed(&m(), &parts(|_, y| y), &Epsilon::default()).unwrap();
        assert_eq!(e_fixed_kernel(&g).unwrap(), vec![0, 1]);
    }
}
