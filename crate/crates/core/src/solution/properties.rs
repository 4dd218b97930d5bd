use serde::{Deserialize, Serialize};

use super::pair_map::{pentagon_direct_check, Leg, PairMap};
use super::{verify_solution, PeError, PeSolution, ThetaFamily};
use crate::semigroup::CayleyTable;

use Leg::{L12, L13, L23};

/// `s₁₂ s₁₃ = s₁₃ s₁₂`.
pub const COMMUTATIVE_WORDS: ([Leg; 2], [Leg; 2]) = ([L12, L13], [L13, L12]);
/// `s₁₃ s₂₃ = s₂₃ s₁₃`.
pub const COCOMMUTATIVE_WORDS: ([Leg; 2], [Leg; 2]) = ([L13, L23], [L23, L13]);

/// Which set-theoretic form of the Yang–Baxter identity to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QybeConvention {
    /// `s₁₂ s₁₃ s₂₃ = s₂₃ s₁₃ s₁₂`.
    QybeA,
    /// The braid form `s₁₂ s₂₃ s₁₂ = s₂₃ s₁₂ s₂₃`.
    QybeB,
}

impl QybeConvention {
    pub fn words(self) -> ([Leg; 3], [Leg; 3]) {
        match self {
            QybeConvention::QybeA => ([L12, L13, L23], [L23, L13, L12]),
            QybeConvention::QybeB => ([L12, L23, L12], [L23, L12, L23]),
        }
    }
}

pub fn qybe_check(s: &PeSolution, convention: QybeConvention) -> bool {
    let (lhs, rhs) = convention.words();
    s.to_pair_map().word_mismatch(&lhs, &rhs).is_none()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub involutive: bool,
    pub idempotent: bool,
    pub bijective: bool,
    pub non_degenerate: bool,
    pub commutative: bool,
    pub cocommutative: bool,
    /// Convention A.
    pub qybe: bool,
    /// Convention B (braid form).
    pub qybe_braid: bool,
}

/// Computes every flag from its definition on the pair map, and
/// cross-checks involutivity and idempotency against their element-wise
/// identities.
pub fn classify_properties(s: &PeSolution) -> Result<PropertyReport, PeError> {
    let n = s.order();
    let map = s.to_pair_map();
    let square = map.compose(&map);
    let involutive = square == PairMap::identity(n);
    let idempotent = square == map;

    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    // s²(x, y) = (xy·θ_x(y), θ_xy(θ_x(y))).
    let second = |x: usize, y: usize| {
        let (p, t) = s.apply(x, y);
        (s.mul(p, t), s.theta_at(p, t))
    };
    let involutive_identities = pairs().all(|(x, y)| second(x, y) == (x, y));
    let idempotent_identities = pairs().all(|(x, y)| second(x, y) == s.apply(x, y));
    if involutive != involutive_identities {
        return Err(PeError::InternalInconsistency(format!(
            "s² = id is {involutive} but the element-wise involutive identities give {involutive_identities}"
        )));
    }
    if idempotent != idempotent_identities {
        return Err(PeError::InternalInconsistency(format!(
            "s² = s is {idempotent} but the element-wise idempotent identities give {idempotent_identities}"
        )));
    }

    let report = PropertyReport {
        involutive,
        idempotent,
        bijective: map.is_bijective(),
        non_degenerate: (0..n).all(|x| s.theta_map(x).is_bijective()),
        commutative: map.word_mismatch(&COMMUTATIVE_WORDS.0, &COMMUTATIVE_WORDS.1).is_none(),
        cocommutative: map.word_mismatch(&COCOMMUTATIVE_WORDS.0, &COCOMMUTATIVE_WORDS.1).is_none(),
        qybe: qybe_check(s, QybeConvention::QybeA),
        qybe_braid: qybe_check(s, QybeConvention::QybeB),
    };
    if report.involutive && !report.bijective {
        return Err(PeError::InternalInconsistency("involutive but not bijective".into()));
    }
    Ok(report)
}

/// `s^op = τ s⁻¹ τ`, repackaged as a product and a theta family and
/// re-verified from scratch.
pub fn opposite(s: &PeSolution) -> Result<PeSolution, PeError> {
    let inv = s.to_pair_map().inverse().ok_or(PeError::NotBijective)?;
    let op = inv.flip_conjugate();
    let n = s.order();
    let table = CayleyTable::from_fn(n, |x, y| op.apply(x, y).0).map_err(PeError::NotProductShaped)?;
    let theta = ThetaFamily::from_fn(n, |x, y| op.apply(x, y).1)?;
    let sol = verify_solution(&table, &theta)
        .map_err(|e| PeError::InternalInconsistency(format!("opposite fails the axioms: {e}")))?;
    if !pentagon_direct_check(&op) {
        return Err(PeError::InternalInconsistency(
            "opposite fails the direct pentagon check".into(),
        ));
    }
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;

    fn kt(n: usize) -> PeSolution {
        PeSolution::from_fn(&named::cyclic_group(n), |_, y| y).unwrap()
    }

    #[test]
    fn lyubashenko_identity_maps() {
        let s = PeSolution::from_fn(&named::left_zero(2), |_, y| y).unwrap();
        let r = classify_properties(&s).unwrap();
        assert!(r.idempotent && r.commutative && r.cocommutative && r.qybe);
        assert!(r.involutive, "the identity on pairs is also involutive");
    }

    #[test]
    fn kac_takesaki_flags() {
        let r2 = classify_properties(&kt(2)).unwrap();
        assert!(r2.involutive && r2.bijective && r2.cocommutative);
        let r3 = classify_properties(&kt(3)).unwrap();
        assert!(r3.bijective && !r3.involutive);
        // s²(1, 1) = s(2, 1) = (0, 1) on Z3.
        let m = kt(3).to_pair_map();
        assert_eq!(m.apply(2, 1), (0, 1));
        assert!(r3.cocommutative);
    }

    #[test]
    fn qybe_verdicts_for_kac_takesaki_z2() {
        // Both conventions fail, first at (0, 0, 1).
        let s = kt(2);
        for c in [QybeConvention::QybeA, QybeConvention::QybeB] {
            let (l, r) = c.words();
            assert_eq!(s.to_pair_map().word_mismatch(&l, &r), Some((0, 0, 1)));
            assert!(!qybe_check(&s, c));
        }
    }

    #[test]
    fn opposite_of_kac_takesaki() {
        let op = opposite(&kt(2)).unwrap();
        assert_eq!(op.semigroup(), &named::left_zero(2));
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(op.apply(x, y), (x, (x + y) % 2));
            }
        }
        let op3 = opposite(&kt(3)).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(op3.apply(x, y), (x, (y + 3 - x) % 3));
            }
        }
        assert_eq!(opposite(&op3).unwrap(), kt(3));
    }

    #[test]
    fn opposite_of_involutive_is_flip_conjugate() {
        let s = kt(2);
        assert_eq!(opposite(&s).unwrap().to_pair_map(), s.to_pair_map().flip_conjugate());
        let degenerate = PeSolution::from_fn(&named::cyclic_group(2), |_, _| 0).unwrap();
        assert_eq!(opposite(&degenerate), Err(PeError::NotBijective));
    }
}
