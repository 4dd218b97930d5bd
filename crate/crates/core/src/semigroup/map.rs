use serde::{Deserialize, Serialize};

/// A total map `{0..n-1} -> {0..n-1}`.
///
/// Serves for every unary map in the crate: the `theta_x` rows, endomorphisms,
/// coset selectors, relabelings and permutations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct ElementMap {
    image: Vec<usize>,
}

impl TryFrom<Vec<usize>> for ElementMap {
    type Error = String;

    fn try_from(image: Vec<usize>) -> Result<Self, String> {
        let n = image.len();
        ElementMap::new(image).ok_or_else(|| format!("map values must lie below {n}"))
    }
}

impl From<ElementMap> for Vec<usize> {
    fn from(m: ElementMap) -> Self {
        m.image
    }
}

impl ElementMap {
    /// Returns `None` when some image is out of range.
    pub fn new(image: Vec<usize>) -> Option<Self> {
        let n = image.len();
        image.iter().all(|&v| v < n).then_some(ElementMap { image })
    }

    pub fn identity(n: usize) -> Self {
        ElementMap { image: (0..n).collect() }
    }

    pub fn constant(n: usize, value: usize) -> Self {
        assert!(value < n);
        ElementMap { image: vec![value; n] }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Option<Self> {
        Self::new((0..n).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &ElementMap) -> ElementMap {
        ElementMap {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.image.iter().all(|&x| self.image[x] == x)
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.image.len()];
        self.image.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn inverse(&self) -> Option<ElementMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Some(ElementMap { image: inv })
    }

    /// `self^k` under composition; `k = 0` gives the identity.
    pub fn power(&self, k: usize) -> ElementMap {
        (0..k).fold(ElementMap::identity(self.len()), |acc, _| self.compose(&acc))
    }

    pub fn range_set(&self) -> Vec<usize> {
        let mut v = self.image.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let swap = ElementMap::new(vec![1, 0, 2]).unwrap();
        let cyc = ElementMap::new(vec![1, 2, 0]).unwrap();
        assert_eq!(swap.compose(&cyc).image(), &[0, 2, 1]);
        assert!(swap.compose(&swap).is_identity());
        assert_eq!(cyc.inverse().unwrap().image(), &[2, 0, 1]);
        assert_eq!(cyc.power(3), ElementMap::identity(3));
        assert!(ElementMap::constant(3, 1).inverse().is_none());
        assert!(ElementMap::new(vec![0, 3]).is_none());
    }

    #[test]
    fn idempotence() {
        assert!(ElementMap::constant(3, 2).is_idempotent());
        assert!(ElementMap::new(vec![0, 0, 2]).unwrap().is_idempotent());
        assert!(!ElementMap::new(vec![1, 0]).unwrap().is_idempotent());
    }
}
