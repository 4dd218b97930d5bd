use serde::{Deserialize, Serialize};

use crate::semigroup::{analyze, CayleyTable, Congruence};

use super::CliffordError;

/// A kernel `K` and a trace `τ` on the idempotents, given by its blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruencePairData {
    /// Sorted.
    pub kernel: Vec<usize>,
    /// Blocks of `τ`, each sorted, ordered by least element.
    pub trace: Vec<Vec<usize>>,
}

impl CongruencePairData {
    fn normalized(mut self) -> Self {
        self.kernel.sort_unstable();
        self.kernel.dedup();
        for b in &mut self.trace {
            b.sort_unstable();
        }
        self.trace.retain(|b| !b.is_empty());
        self.trace.sort();
        self
    }

    fn trace_related(&self, e: usize, f: usize) -> bool {
        self.trace.iter().any(|b| b.contains(&e) && b.contains(&f))
    }
}

fn inverses(s: &CayleyTable) -> Result<Vec<usize>, CliffordError> {
    analyze(s).inverses.ok_or(CliffordError::NotInverse)
}

/// Checks the defining conditions of a congruence pair; the error names
/// the first one that fails.
pub fn is_congruence_pair(s: &CayleyTable, pair: &CongruencePairData) -> Result<(), CliffordError> {
    let inv = inverses(s)?;
    let pair = pair.clone().normalized();
    let fail = |m: String| Err(CliffordError::NotCongruencePair(m));
    let n = s.order();
    let es = s.idempotents();
    let in_k = |x: usize| pair.kernel.binary_search(&x).is_ok();
    if let Some(&x) = pair.kernel.iter().find(|&&x| x >= n) {
        return fail(format!("kernel element {x} is out of range"));
    }
    let covered: Vec<usize> = {
        let mut v: Vec<usize> = pair.trace.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    };
    if covered != es {
        return fail("the trace blocks do not partition the idempotents".into());
    }
    let tau = |e: usize, f: usize| pair.trace_related(e, f);

    if let Some(e) = es.iter().find(|&&e| !in_k(e)) {
        return fail(format!("idempotent {e} is not in the kernel"));
    }
    for &a in &pair.kernel {
        if !in_k(inv[a]) {
            return fail(format!("{a} ∈ K but its inverse is not"));
        }
        for &b in &pair.kernel {
            if !in_k(s.mul(a, b)) {
                return fail(format!("K is not closed: {a}·{b}"));
            }
        }
        for x in 0..n {
            if !in_k(s.mul(s.mul(inv[x], a), x)) {
                return fail(format!("K is not self-conjugate: {x}⁻¹·{a}·{x}"));
            }
        }
    }
    for &e in &es {
        for &f in &es {
            if !tau(e, f) {
                continue;
            }
            for &g in &es {
                if !tau(s.mul(e, g), s.mul(f, g)) {
                    return fail(format!("τ is not a congruence on E: {e} τ {f} but not {e}{g} τ {f}{g}"));
                }
            }
            for x in 0..n {
                if !tau(s.mul(s.mul(inv[x], e), x), s.mul(s.mul(inv[x], f), x)) {
                    return fail(format!("τ is not normal: {e} τ {f} fails under conjugation by {x}"));
                }
            }
        }
    }
    for a in 0..n {
        for &e in &es {
            if in_k(s.mul(a, e)) && tau(e, s.mul(inv[a], a)) && !in_k(a) {
                return fail(format!("{a}{e} ∈ K and {e} τ {a}⁻¹{a} but {a} ∉ K"));
            }
        }
    }
    for &k in &pair.kernel {
        if !tau(s.mul(k, inv[k]), s.mul(inv[k], k)) {
            return fail(format!("{k} ∈ K but kk⁻¹ and k⁻¹k are not τ-related"));
        }
    }
    Ok(())
}

/// `ρ_(K,τ) = {(a, b) : a⁻¹a τ b⁻¹b, ab⁻¹ ∈ K}`, verified to be a
/// congruence whose kernel and trace give back the pair.
pub fn congruence_from_pair(s: &CayleyTable, pair: &CongruencePairData) -> Result<Congruence, CliffordError> {
    is_congruence_pair(s, pair)?;
    let pair = pair.clone().normalized();
    let rho = raw_pair_relation(s, &pair)?;
    let back = kernel_and_trace_unchecked(s, &rho)?;
    if back != pair {
        return Err(CliffordError::TheoremViolation(format!(
            "round trip gives kernel {:?} and trace {:?}",
            back.kernel, back.trace
        )));
    }
    Ok(rho)
}

fn raw_pair_relation(s: &CayleyTable, pair: &CongruencePairData) -> Result<Congruence, CliffordError> {
    let inv = inverses(s)?;
    let rho = Congruence::from_relation(s.order(), |a, b| {
        pair.trace_related(s.mul(inv[a], a), s.mul(inv[b], b)) && pair.kernel.binary_search(&s.mul(a, inv[b])).is_ok()
    })
    .ok_or_else(|| CliffordError::TheoremViolation("ρ_(K,τ) is not an equivalence".into()))?;
    if !rho.is_compatible(s) {
        return Err(CliffordError::TheoremViolation("ρ_(K,τ) is not compatible".into()));
    }
    Ok(rho)
}

fn kernel_and_trace_unchecked(s: &CayleyTable, rho: &Congruence) -> Result<CongruencePairData, CliffordError> {
    if rho.len() != s.order() || !rho.is_compatible(s) {
        return Err(CliffordError::NotACongruence);
    }
    let es = s.idempotents();
    let kernel = (0..s.order()).filter(|&a| es.iter().any(|&e| rho.related(a, e))).collect();
    let trace = rho
        .blocks()
        .into_iter()
        .map(|b| b.into_iter().filter(|x| es.contains(x)).collect::<Vec<_>>())
        .collect();
    Ok(CongruencePairData { kernel, trace }.normalized())
}

/// `Ker ρ` is the union of the classes containing idempotents and `tr ρ`
/// the restriction to the idempotents. The pair is checked and rebuilt
/// into `ρ`.
pub fn kernel_and_trace(s: &CayleyTable, rho: &Congruence) -> Result<CongruencePairData, CliffordError> {
    inverses(s)?;
    let pair = kernel_and_trace_unchecked(s, rho)?;
    is_congruence_pair(s, &pair)
        .map_err(|e| CliffordError::TheoremViolation(format!("kernel and trace of a congruence: {e}")))?;
    let rebuilt = raw_pair_relation(s, &pair)?;
    if rebuilt != *rho {
        return Err(CliffordError::TheoremViolation("ρ_(Ker ρ, tr ρ) ≠ ρ".into()));
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{enumerate_congruences, named, set_partitions};

    #[test]
    fn round_trips_on_small_inverse_semigroups() {
        let tables = [
            named::clifford_monoid_m(),
            named::symmetric_group_3(),
            named::semilattice_two().direct_product(&named::cyclic_group(2)),
            named::klein_four(),
        ];
        for t in &tables {
            for rho in enumerate_congruences(t) {
                let pair = kernel_and_trace(t, &rho).unwrap();
                assert_eq!(congruence_from_pair(t, &pair).unwrap(), rho);
            }
        }
    }

    #[test]
    fn pairs_and_congruences_are_in_bijection() {
        let t = named::semilattice_two().direct_product(&named::cyclic_group(2));
        let n = t.order();
        let es = t.idempotents();
        let mut valid = 0;
        for mask in 0u32..(1 << n) {
            let kernel: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            for p in set_partitions(es.len()) {
                let trace = p.blocks().into_iter().map(|b| b.into_iter().map(|i| es[i]).collect()).collect();
                let pair = CongruencePairData { kernel: kernel.clone(), trace };
                if is_congruence_pair(&t, &pair).is_ok() {
                    valid += 1;
                    congruence_from_pair(&t, &pair).unwrap();
                }
            }
        }
        assert_eq!(valid, enumerate_congruences(&t).len());
    }

    #[test]
    fn rejects() {
        let m = named::clifford_monoid_m();
        let bad = CongruencePairData { kernel: vec![0], trace: vec![vec![0], vec![1]] };
        assert!(matches!(congruence_from_pair(&m, &bad), Err(CliffordError::NotCongruencePair(_))));
        let pair = CongruencePairData { kernel: vec![0, 1], trace: vec![vec![0], vec![1]] };
        assert_eq!(congruence_from_pair(&m, &pair).unwrap().blocks(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(
            kernel_and_trace(&named::left_zero(2), &Congruence::identity(2)),
            Err(CliffordError::NotInverse)
        );
    }

    #[test]
    fn kernel_and_trace_examples() {
        let m = named::clifford_monoid_m();
        let universal = kernel_and_trace(&m, &Congruence::universal(3)).unwrap();
        assert_eq!(universal, CongruencePairData { kernel: vec![0, 1, 2], trace: vec![vec![0, 1]] });
        let id = kernel_and_trace(&m, &Congruence::identity(3)).unwrap();
        assert_eq!(id, CongruencePairData { kernel: vec![0, 1], trace: vec![vec![0], vec![1]] });
        let z4 = named::cyclic_group(4);
        let mod2 = Congruence::from_labels(&[0, 1, 0, 1]);
        let p = kernel_and_trace(&z4, &mod2).unwrap();
        assert_eq!(p, CongruencePairData { kernel: vec![0, 2], trace: vec![vec![0]] });
    }

    #[test]
    fn group_pairs_are_coset_partitions() {
        let s3 = named::symmetric_group_3();
        let a3 = named::alternating_group_3_elements();
        let rho = congruence_from_pair(&s3, &CongruencePairData { kernel: a3.to_vec(), trace: vec![vec![0]] }).unwrap();
        assert_eq!(rho.num_classes(), 2);
        assert!(a3.iter().all(|&a| rho.related(a, 0)));
    }
}
