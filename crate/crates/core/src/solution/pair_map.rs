use crate::semigroup::{permutations, ElementMap};

/// One of the three ways a map on `X²` acts on `X³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    /// `s₁₂ = s × id`
    L12,
    /// `s₁₃ = (id × τ) s₁₂ (id × τ)`
    L13,
    /// `s₂₃ = id × s`
    L23,
}

/// An arbitrary map `X × X -> X × X`, not necessarily of product shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairMap {
    order: usize,
    /// `image[x * n + y] = s(x, y)`
    image: Vec<(u8, u8)>,
}

impl PairMap {
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        let mut image = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let (a, b) = f(x, y);
                assert!(a < order && b < order, "pair map value out of range");
                image.push((a as u8, b as u8));
            }
        }
        PairMap { order, image }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |x, y| (x, y))
    }

    /// The flip `τ(x, y) = (y, x)`.
    pub fn flip(order: usize) -> Self {
        Self::from_fn(order, |x, y| (y, x))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let (a, b) = self.image[x * self.order + y];
        (a as usize, b as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PairMap) -> PairMap {
        assert_eq!(self.order, other.order);
        Self::from_fn(self.order, |x, y| {
            let (a, b) = other.apply(x, y);
            self.apply(a, b)
        })
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.image.len()];
        self.image
            .iter()
            .all(|&(a, b)| !std::mem::replace(&mut seen[a as usize * self.order + b as usize], true))
    }

    pub fn inverse(&self) -> Option<PairMap> {
        if !self.is_bijective() {
            return None;
        }
        let n = self.order;
        let mut image = vec![(0u8, 0u8); n * n];
        for x in 0..n {
            for y in 0..n {
                let (a, b) = self.apply(x, y);
                image[a * n + b] = (x as u8, y as u8);
            }
        }
        Some(PairMap { order: n, image })
    }

    /// `τ ∘ self ∘ τ`.
    pub fn flip_conjugate(&self) -> PairMap {
        Self::from_fn(self.order, |x, y| {
            let (a, b) = self.apply(y, x);
            (b, a)
        })
    }

    /// `(ψ × ψ) ∘ self ∘ (ψ × ψ)⁻¹`.
    pub fn relabel(&self, perm: &ElementMap) -> PairMap {
        let n = self.order;
        let mut image = vec![(0u8, 0u8); n * n];
        for x in 0..n {
            for y in 0..n {
                let (a, b) = self.apply(x, y);
                image[perm.apply(x) * n + perm.apply(y)] = (perm.apply(a) as u8, perm.apply(b) as u8);
            }
        }
        PairMap { order: n, image }
    }

    /// First components then second components, row-major. This is the
    /// byte layout of a solution's `(table, theta)` pair.
    pub fn key_bytes(&self) -> Vec<u8> {
        self.image
            .iter()
            .map(|p| p.0)
            .chain(self.image.iter().map(|p| p.1))
            .collect()
    }

    /// Lexicographically least [`key_bytes`](Self::key_bytes) over all relabelings.
    pub fn canonical_key(&self) -> Vec<u8> {
        permutations(self.order)
            .map(|p| self.relabel(&p).key_bytes())
            .min()
            .expect("non-empty carrier")
    }

    #[inline]
    pub fn apply_leg(&self, leg: Leg, (a, b, c): (usize, usize, usize)) -> (usize, usize, usize) {
        match leg {
            Leg::L12 => {
                let (p, q) = self.apply(a, b);
                (p, q, c)
            }
            Leg::L13 => {
                let (p, q) = self.apply(a, c);
                (p, b, q)
            }
            Leg::L23 => {
                let (p, q) = self.apply(b, c);
                (a, p, q)
            }
        }
    }

    /// Evaluates a word of legs written as an operator product, so the
    /// rightmost leg acts first.
    pub fn apply_word(&self, word: &[Leg], triple: (usize, usize, usize)) -> (usize, usize, usize) {
        word.iter().rev().fold(triple, |t, &leg| self.apply_leg(leg, t))
    }

    /// First triple (lexicographic) where the two words disagree.
    pub fn word_mismatch(&self, lhs: &[Leg], rhs: &[Leg]) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.apply_word(lhs, (a, b, c)) != self.apply_word(rhs, (a, b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

pub const PENTAGON_LHS: [Leg; 3] = [Leg::L23, Leg::L13, Leg::L12];
pub const PENTAGON_RHS: [Leg; 2] = [Leg::L12, Leg::L23];

/// Evaluates `s₂₃ s₁₃ s₁₂ = s₁₂ s₂₃` on every triple of `X³`.
pub fn pentagon_direct_check(s: &PairMap) -> bool {
    pentagon_witness(s).is_none()
}

/// First triple on which the pentagon identity fails.
pub fn pentagon_witness(s: &PairMap) -> Option<(usize, usize, usize)> {
    s.word_mismatch(&PENTAGON_LHS, &PENTAGON_RHS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_a_pentagon_map() {
        assert!(pentagon_direct_check(&PairMap::identity(2)));
    }

    #[test]
    fn kac_takesaki_on_z3() {
        let s = PairMap::from_fn(3, |x, y| ((x + y) % 3, y));
        assert!(pentagon_direct_check(&s));
    }

    #[test]
    fn flip_fails_on_a_single_triple() {
        // On (0,1,0): s23 s13 s12 gives (0,1,0) while s12 s23 gives (0,0,1).
        let flip = PairMap::flip(2);
        assert_eq!(flip.apply_word(&PENTAGON_LHS, (0, 1, 0)), (0, 1, 0));
        assert_eq!(flip.apply_word(&PENTAGON_RHS, (0, 1, 0)), (0, 0, 1));
        assert_eq!(pentagon_witness(&flip), Some((0, 1, 0)));
        assert!(!pentagon_direct_check(&flip));
    }

    #[test]
    fn inverse_and_flip_conjugate() {
        let s = PairMap::from_fn(3, |x, y| ((x + y) % 3, y));
        let inv = s.inverse().unwrap();
        assert_eq!(s.compose(&inv), PairMap::identity(3));
        let tau = PairMap::flip(3);
        assert_eq!(s.flip_conjugate(), tau.compose(&s).compose(&tau));
        assert!(PairMap::from_fn(2, |_, _| (0, 0)).inverse().is_none());
    }
}
