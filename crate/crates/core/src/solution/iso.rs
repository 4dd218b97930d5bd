use crate::semigroup::{permutations, ElementMap, SemigroupError, MAX_CANONICAL_ORDER};

use super::{PeError, PeSolution};

fn check_order(n: usize) -> Result<(), PeError> {
    if n > MAX_CANONICAL_ORDER {
        return Err(SemigroupError::CanonicalizationTooLarge(n).into());
    }
    Ok(())
}

/// Relabeled solution whose `(table, theta)` bytes are lexicographically
/// least, with the first permutation reaching it.
pub fn solution_canonical_form(s: &PeSolution) -> Result<(PeSolution, ElementMap), PeError> {
    check_order(s.order())?;
    let mut best: Option<(Vec<u8>, ElementMap)> = None;
    for p in permutations(s.order()) {
        let key = relabeled_key(s, &p);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, p));
        }
    }
    let (_, p) = best.expect("non-empty carrier");
    Ok((s.relabel(&p), p))
}

fn relabeled_key(s: &PeSolution, p: &ElementMap) -> Vec<u8> {
    let n = s.order();
    let mut key = vec![0u8; 2 * n * n];
    for x in 0..n {
        for y in 0..n {
            let i = p.apply(x) * n + p.apply(y);
            key[i] = p.apply(s.mul(x, y)) as u8;
            key[n * n + i] = p.apply(s.theta_at(x, y)) as u8;
        }
    }
    key
}

/// Canonical bytes; equal keys ⇔ isomorphic solutions.
pub fn solution_key(s: &PeSolution) -> Result<Vec<u8>, PeError> {
    check_order(s.order())?;
    Ok(permutations(s.order())
        .map(|p| relabeled_key(s, &p))
        .min()
        .expect("non-empty carrier"))
}

/// Key identifying `s` with `τ s τ`: the smaller of the canonical keys of
/// the two pair maps. Used for the anti-isomorphism-inclusive count.
pub fn solution_key_up_to_flip(s: &PeSolution) -> Result<Vec<u8>, PeError> {
    check_order(s.order())?;
    let map = s.to_pair_map();
    Ok(map.canonical_key().min(map.flip_conjugate().canonical_key()))
}

/// A bijection `ψ` with `(ψ × ψ) s = t (ψ × ψ)`, found by depth-first
/// search with the partial map checked after every assignment.
pub fn solutions_isomorphic(s: &PeSolution, t: &PeSolution) -> Option<ElementMap> {
    let n = s.order();
    if t.order() != n {
        return None;
    }
    let mut psi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(s, t, &mut psi, &mut used, 0) {
        ElementMap::new(psi)
    } else {
        None
    }
}

fn consistent(s: &PeSolution, t: &PeSolution, psi: &[usize], k: usize) -> bool {
    // Only pairs involving the newest element `k` need checking.
    let check = |x: usize, y: usize| {
        let (p, q) = s.apply(x, y);
        let (tp, tq) = t.apply(psi[x], psi[y]);
        (psi[p] == usize::MAX || psi[p] == tp) && (psi[q] == usize::MAX || psi[q] == tq)
    };
    (0..=k).all(|x| check(x, k) && check(k, x))
        && (0..k).all(|x| (0..k).all(|y| check(x, y)))
}

fn extend(s: &PeSolution, t: &PeSolution, psi: &mut [usize], used: &mut [bool], k: usize) -> bool {
    let n = s.order();
    if k == n {
        return true;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        psi[k] = v;
        used[v] = true;
        if consistent(s, t, psi, k) && extend(s, t, psi, used, k + 1) {
            return true;
        }
        used[v] = false;
        psi[k] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;

    fn null_example() -> PeSolution {
        let swap = [0, 2, 1];
        PeSolution::from_fn(&named::null_semigroup(3), |x, y| if x == 0 { y } else { swap[y] }).unwrap()
    }

    #[test]
    fn isomorphism_examples() {
        let kt = PeSolution::from_fn(&named::cyclic_group(2), |_, y| y).unwrap();
        assert!(solutions_isomorphic(&kt, &kt).unwrap().is_identity());
        let ta = PeSolution::from_fn(&named::left_zero(2), |x, y| x ^ y).unwrap();
        assert!(solutions_isomorphic(&kt, &ta).is_none());

        let s = null_example();
        let swap_ab = ElementMap::new(vec![0, 2, 1]).unwrap();
        let t = s.relabel(&swap_ab);
        let psi = solutions_isomorphic(&s, &t).unwrap();
        assert_eq!(s.relabel(&psi), t);
        assert_eq!(solution_key(&s).unwrap(), solution_key(&t).unwrap());
    }

    #[test]
    fn canonical_form_witness() {
        let s = null_example().relabel(&ElementMap::new(vec![2, 0, 1]).unwrap());
        let (c, p) = solution_canonical_form(&s).unwrap();
        assert_eq!(s.relabel(&p), c);
        assert_eq!(c.key_bytes(), solution_key(&s).unwrap());
        assert_eq!(solution_canonical_form(&c).unwrap().0, c);
    }

    #[test]
    fn dfs_agrees_with_keys() {
        let z2 = named::cyclic_group(2);
        let a = PeSolution::from_fn(&z2, |_, _| 0).unwrap();
        let b = PeSolution::from_fn(&z2, |_, y| y).unwrap();
        assert!(solutions_isomorphic(&a, &b).is_none());
        assert_ne!(solution_key(&a).unwrap(), solution_key(&b).unwrap());
    }
}
