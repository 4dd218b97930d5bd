use serde::Serialize;

use crate::semigroup::{analyze, ElementMap};
use crate::solution::{classify_properties, PeSolution};

use super::SpecialError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CommutativityReport {
    /// From the leg identity `s₁₂s₁₃ = s₁₃s₁₂`.
    pub commutative: bool,
    /// `xzy = xyz` and `θ_x = θ_xy`.
    pub commutative_elementwise: bool,
    /// From the leg identity `s₁₃s₂₃ = s₂₃s₁₃`.
    pub cocommutative: bool,
    /// `xθ_y(z) = xz` and `θ_xθ_y = θ_yθ_x`.
    pub cocommutative_elementwise: bool,
    /// On monoids and Clifford semigroups: commutative carrier and every
    /// `θ_x` the same idempotent endomorphism.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutative_structural: Option<bool>,
    /// On monoids and Clifford semigroups: every `θ_x` is the identity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cocommutative_structural: Option<bool>,
    /// All available characterizations agree with the definitions.
    pub equivalences_hold: bool,
}

pub fn commutativity_characterizations(s: &PeSolution) -> Result<CommutativityReport, SpecialError> {
    let props = classify_properties(s)?;
    let t = s.semigroup();
    let n = s.order();
    let triples = || (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))));
    let m = |x: usize, y: usize| t.mul(x, y);
    let th = |x: usize, y: usize| s.theta_at(x, y);

    let commutative_elementwise = triples().all(|(x, y, z)| m(m(x, z), y) == m(m(x, y), z))
        && (0..n).all(|x| (0..n).all(|y| s.theta_map(x) == s.theta_map(m(x, y))));
    let cocommutative_elementwise = triples().all(|(x, y, z)| m(x, th(y, z)) == m(x, z) && th(x, th(y, z)) == th(y, th(x, z)));

    let facts = analyze(t);
    let (commutative_structural, cocommutative_structural) = if facts.is_monoid || facts.is_clifford {
        let gamma = s.theta_map(0);
        let uniform = (0..n).all(|x| s.theta_map(x) == gamma);
        let endo = (0..n).all(|x| (0..n).all(|y| gamma.apply(m(x, y)) == m(gamma.apply(x), gamma.apply(y))));
        (
            Some(facts.is_commutative && uniform && endo && gamma.is_idempotent()),
            Some((0..n).all(|x| s.theta_map(x) == ElementMap::identity(n))),
        )
    } else {
        (None, None)
    };
    let equivalences_hold = props.commutative == commutative_elementwise
        && props.cocommutative == cocommutative_elementwise
        && commutative_structural.is_none_or(|c| c == props.commutative)
        && cocommutative_structural.is_none_or(|c| c == props.cocommutative);
    Ok(CommutativityReport {
        commutative: props.commutative,
        commutative_elementwise,
        cocommutative: props.cocommutative,
        cocommutative_elementwise,
        commutative_structural,
        cocommutative_structural,
        equivalences_hold,
    })
}
