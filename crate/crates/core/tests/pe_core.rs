use pentagon::constructions::{kac_takesaki, lyubashenko};
use pentagon::semigroup::{named, ElementMap};
use pentagon::solution::{
    classify_properties, opposite, pentagon_direct_check, qybe_check, solutions_isomorphic, verify_solution, PairMap,
    PeError, PeSolution, QybeConvention, ThetaFamily,
};
use pentagon::special::t_a;

fn null_example() -> PeSolution {
    let swap = [0, 2, 1];
    PeSolution::from_fn(&named::null_semigroup(3), |x, y| if x == 0 { y } else { swap[y] }).unwrap()
}

#[test]
fn worked_verifications() {
    let z2 = named::cyclic_group(2);
    assert!(verify_solution(&z2, &ThetaFamily::from_fn(2, |_, y| y).unwrap()).is_ok());
    let p = classify_properties(&null_example()).unwrap();
    assert!(p.idempotent && p.non_degenerate);
    let bad = ThetaFamily::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
    assert!(matches!(verify_solution(&z2, &bad), Err(PeError::P2Violation(..))));
}

#[test]
fn pentagon_identity_examples() {
    assert!(pentagon_direct_check(&PairMap::identity(3)));
    assert!(pentagon_direct_check(&kac_takesaki(&named::cyclic_group(3)).to_pair_map()));
    assert!(!pentagon_direct_check(&PairMap::flip(2)));
}

#[test]
fn property_examples() {
    let id = ElementMap::identity(2);
    let l = classify_properties(&lyubashenko(2, &id, &id).unwrap()).unwrap();
    assert!(l.idempotent && l.commutative && l.cocommutative && l.qybe);
    let kt2 = classify_properties(&kac_takesaki(&named::cyclic_group(2))).unwrap();
    assert!(kt2.involutive);
    let kt3 = classify_properties(&kac_takesaki(&named::cyclic_group(3))).unwrap();
    assert!(kt3.bijective && !kt3.involutive);
    let trivial = PeSolution::from_fn(&named::left_zero(2), |_, y| y).unwrap();
    assert!(qybe_check(&trivial, QybeConvention::QybeA) && qybe_check(&trivial, QybeConvention::QybeB));
}

#[test]
fn opposites() {
    let z2 = named::cyclic_group(2);
    assert_eq!(opposite(&kac_takesaki(&z2)).unwrap(), t_a(&z2).unwrap());
    let z3 = named::cyclic_group(3);
    let op = opposite(&kac_takesaki(&z3)).unwrap();
    let expected = PeSolution::from_fn(&named::left_zero(3), |x, y| (y + 3 - x) % 3).unwrap();
    assert_eq!(op, expected);
    // Involutive solutions: s⁻¹ = s, so the opposite is τsτ.
    let s = t_a(&named::klein_four()).unwrap();
    assert_eq!(opposite(&s).unwrap().to_pair_map(), s.to_pair_map().flip_conjugate());
}

#[test]
fn isomorphism_examples() {
    let s = null_example();
    assert_eq!(solutions_isomorphic(&s, &s), Some(ElementMap::identity(3)));
    let z2 = named::cyclic_group(2);
    assert_eq!(solutions_isomorphic(&kac_takesaki(&z2), &t_a(&z2).unwrap()), None);
    let swap = ElementMap::new(vec![0, 2, 1]).unwrap();
    let relabeled = s.relabel(&swap);
    assert!(solutions_isomorphic(&s, &relabeled).is_some());
}
