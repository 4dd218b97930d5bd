use serde::Serialize;

use crate::semigroup::{analyze, CayleyTable};
use crate::solution::{PeError, PeSolution};

use super::CliffordError;

/// `φ_{f,e}: G_f → G_e, y ↦ ey` for `e ≤ f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiMap {
    pub from: usize,
    pub to: usize,
    /// Images of the elements of `G_from`, in the order of `groups`.
    pub images: Vec<usize>,
}

/// A Clifford semigroup as a semilattice of groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliffordStructure {
    pub order: usize,
    /// Sorted.
    pub idempotents: Vec<usize>,
    /// `groups[i]` is `G_e` for `e = idempotents[i]`, sorted.
    pub groups: Vec<Vec<usize>>,
    pub inverses: Vec<usize>,
    /// `leq[i][j]` iff `idempotents[i] ≤ idempotents[j]`.
    pub leq: Vec<Vec<bool>>,
    pub phi: Vec<PhiMap>,
    /// Index into `idempotents` of `xx⁻¹`.
    #[serde(skip)]
    pub component: Vec<usize>,
    #[serde(skip)]
    table: CayleyTable,
}

impl CliffordStructure {
    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn index_of_idempotent(&self, e: usize) -> Option<usize> {
        self.idempotents.binary_search(&e).ok()
    }

    /// `e ≤ f` for idempotent elements.
    pub fn le(&self, e: usize, f: usize) -> bool {
        self.table.mul(e, f) == e && self.table.mul(f, e) == e
    }

    /// The idempotent `xx⁻¹` of the group containing `x`.
    pub fn idempotent_of(&self, x: usize) -> usize {
        self.idempotents[self.component[x]]
    }

    /// `φ_{f,e}(y) = ey`.
    pub fn phi_apply(&self, e: usize, y: usize) -> usize {
        self.table.mul(e, y)
    }

    /// `G_e` relabeled so that `groups[i][k]` becomes `k`.
    pub fn group_table(&self, i: usize) -> CayleyTable {
        self.table.restrict(&self.groups[i]).expect("maximal subgroups are closed")
    }

    pub fn local_index(&self, x: usize) -> usize {
        self.groups[self.component[x]].binary_search(&x).expect("x lies in its group")
    }
}

/// Builds and re-verifies the semilattice-of-groups decomposition.
pub fn clifford_structure(s: &CayleyTable) -> Result<CliffordStructure, CliffordError> {
    let facts = analyze(s);
    if !facts.is_clifford {
        return Err(CliffordError::NotClifford);
    }
    let inverses = facts.inverses.expect("Clifford semigroups are inverse");
    let idempotents = facts.idempotents;
    let n = s.order();
    let component: Vec<usize> = (0..n)
        .map(|x| idempotents.binary_search(&s.mul(x, inverses[x])).expect("xx⁻¹ is idempotent"))
        .collect();
    let mut groups = vec![Vec::new(); idempotents.len()];
    for x in 0..n {
        groups[component[x]].push(x);
    }
    let k = idempotents.len();
    let le = |e: usize, f: usize| s.mul(e, f) == e && s.mul(f, e) == e;
    let leq: Vec<Vec<bool>> = (0..k)
        .map(|i| (0..k).map(|j| le(idempotents[i], idempotents[j])).collect())
        .collect();
    let mut phi = Vec::new();
    for (fi, &f) in idempotents.iter().enumerate() {
        for (ei, &e) in idempotents.iter().enumerate() {
            if leq[ei][fi] {
                phi.push(PhiMap {
                    from: f,
                    to: e,
                    images: groups[fi].iter().map(|&y| s.mul(e, y)).collect(),
                });
            }
        }
    }
    let st = CliffordStructure {
        order: n,
        idempotents,
        groups,
        inverses,
        leq,
        phi,
        component,
        table: s.clone(),
    };
    verify_structure(&st).map_err(CliffordError::TheoremViolation)?;
    Ok(st)
}

fn verify_structure(st: &CliffordStructure) -> Result<(), String> {
    let s = &st.table;
    let n = st.order;
    for (i, g) in st.groups.iter().enumerate() {
        let e = st.idempotents[i];
        if !g.contains(&e) || !s.is_closed(g) {
            return Err(format!("G_{e} is not a subgroup"));
        }
        if !g.iter().all(|&x| s.mul(e, x) == x && s.mul(x, e) == x && g.contains(&st.inverses[x])) {
            return Err(format!("G_{e} is not a group with identity {e}"));
        }
    }
    for p in &st.phi {
        let fi = st.index_of_idempotent(p.from).expect("idempotent");
        let gf = &st.groups[fi];
        let ei = st.index_of_idempotent(p.to).expect("idempotent");
        if !p.images.iter().all(|y| st.groups[ei].contains(y)) {
            return Err(format!("φ_{},{} leaves G_{}", p.from, p.to, p.to));
        }
        for (a, &x) in gf.iter().enumerate() {
            for (b, &y) in gf.iter().enumerate() {
                let xy = gf.iter().position(|&z| z == s.mul(x, y)).expect("closed");
                if p.images[xy] != s.mul(p.images[a], p.images[b]) {
                    return Err(format!("φ_{},{} is not a homomorphism", p.from, p.to));
                }
            }
        }
        if p.from == p.to && p.images != *gf {
            return Err(format!("φ_{0},{0} is not the identity", p.from));
        }
    }
    // φ_{f,g} ∘ φ_{e,f} = φ_{e,g} for g ≤ f ≤ e: g(fy) = gy because gf = g.
    for &e in &st.idempotents {
        for &f in &st.idempotents {
            for &g in &st.idempotents {
                if st.le(g, f) && st.le(f, e) {
                    let ge = &st.groups[st.index_of_idempotent(e).expect("idempotent")];
                    if !ge.iter().all(|&y| s.mul(g, s.mul(f, y)) == s.mul(g, y)) {
                        return Err(format!("φ does not compose along {g} ≤ {f} ≤ {e}"));
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let (e, f) = (st.idempotent_of(x), st.idempotent_of(y));
            let ef = s.mul(e, f);
            if s.mul(x, y) != s.mul(s.mul(ef, x), s.mul(ef, y)) {
                return Err(format!("product law fails at ({x}, {y})"));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSolutions {
    /// `I(x, y) = (xy, y)`.
    pub identity: PeSolution,
    /// `F(x, y) = (xy, yy⁻¹)`.
    pub f: PeSolution,
    /// `(e, E_e)` with `E_e(x, y) = (xy, e)`, one per idempotent.
    pub constant: Vec<(usize, PeSolution)>,
}

pub fn canonical_clifford_solutions(s: &CayleyTable) -> Result<CanonicalSolutions, CliffordError> {
    let st = clifford_structure(s)?;
    let identity = PeSolution::from_fn(s, |_, y| y)?;
    let f = PeSolution::from_fn(s, |_, y| s.mul(y, st.inverse(y)))?;
    let constant = st
        .idempotents
        .iter()
        .map(|&e| Ok((e, PeSolution::from_fn(s, |_, _| e)?)))
        .collect::<Result<Vec<_>, PeError>>()?;
    for sol in [&identity, &f] {
        if !invariance_flags(sol).e_fixed {
            return Err(CliffordError::TheoremViolation("I or F is not E(X)-fixed".into()));
        }
    }
    if !constant.iter().all(|(_, c)| invariance_flags(c).e_invariant) {
        return Err(CliffordError::TheoremViolation("some E_e is not E(X)-invariant".into()));
    }
    Ok(CanonicalSolutions { identity, f, constant })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceFlags {
    pub e_invariant: bool,
    pub e_fixed: bool,
}

/// `θ_x(e) = θ_x(f)` and `θ_x(e) = e` over all `x` and idempotents `e, f`.
pub fn invariance_flags(s: &PeSolution) -> InvarianceFlags {
    let es = s.semigroup().idempotents();
    let n = s.order();
    InvarianceFlags {
        e_invariant: (0..n).all(|x| es.iter().all(|&e| s.theta_at(x, e) == s.theta_at(x, es[0]))),
        e_fixed: (0..n).all(|x| es.iter().all(|&e| s.theta_at(x, e) == e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::endo_solution;
    use crate::semigroup::{named, ElementMap};

    #[test]
    fn structure_examples() {
        let z3 = clifford_structure(&named::cyclic_group(3)).unwrap();
        assert_eq!(z3.idempotents, vec![0]);
        assert_eq!(z3.groups, vec![vec![0, 1, 2]]);
        let m = clifford_structure(&named::clifford_monoid_m()).unwrap();
        assert_eq!(m.idempotents, vec![0, 1]);
        assert_eq!(m.groups, vec![vec![0], vec![1, 2]]);
        assert!(m.phi.contains(&PhiMap { from: 0, to: 1, images: vec![1] }));
        let sl = clifford_structure(&named::semilattice_two()).unwrap();
        assert_eq!(sl.groups, vec![vec![0], vec![1]]);
        assert_eq!(clifford_structure(&named::left_zero(2)), Err(CliffordError::NotClifford));
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains("\"groups\":[[0],[1,2]]"));
    }

    #[test]
    fn canonical_solutions() {
        let z2 = named::cyclic_group(2);
        let c = canonical_clifford_solutions(&z2).unwrap();
        assert_eq!(c.f, c.constant[0].1);
        let m = canonical_clifford_solutions(&named::clifford_monoid_m()).unwrap();
        assert_eq!(m.f.apply(0, 2), (2, 1));
        let sl = canonical_clifford_solutions(&named::semilattice_two()).unwrap();
        assert_eq!(sl.identity, sl.f);
    }

    #[test]
    fn flags() {
        let m = named::clifford_monoid_m();
        let s = endo_solution(&m, &ElementMap::new(vec![1, 1, 2]).unwrap()).unwrap();
        assert_eq!(invariance_flags(&s), InvarianceFlags { e_invariant: true, e_fixed: false });
        let c = canonical_clifford_solutions(&m).unwrap();
        assert!(invariance_flags(&c.identity).e_fixed && invariance_flags(&c.f).e_fixed);
        assert!(invariance_flags(&c.constant[1].1).e_invariant);
    }
}
