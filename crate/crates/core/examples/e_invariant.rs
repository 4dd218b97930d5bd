//! Solutions whose θ maps ignore idempotents: built from a group quotient
//! and recovered from the solution alone.

use pentagon::clifford::{construct_e_invariant, e_invariant_isomorphic, extract_e_invariant_data};
use pentagon::semigroup::{named, Congruence, ElementMap};

fn main() {
    let m = named::clifford_monoid_m();
    let rho = Congruence::from_labels(&[0, 0, 1]);
    let mu = ElementMap::new(vec![1, 1, 2]).unwrap();
    let s = construct_e_invariant(&m, &rho, &[1, 2], &mu).unwrap();
    println!("R = {{x, y}}: θ_1 = {:?}", s.theta_map(0).image());
    let d = extract_e_invariant_data(&s).unwrap();
    println!("recovered kernel {:?}, quotient of order {}, θ_e agree: {}", d.pair.kernel, d.quotient_order, d.theta_e_agree);
    let other = construct_e_invariant(&m, &rho, &[0, 2], &ElementMap::new(vec![0, 0, 2]).unwrap());
    println!("R = {{1, y}}: {}", other.map_or_else(|e| e.to_string(), |_| "built".into()));

    let k = named::klein_four();
    let rho = Congruence::from_labels(&[0, 1, 0, 1]);
    let a = construct_e_invariant(&k, &rho, &[0, 1], &ElementMap::new(vec![0, 1, 0, 1]).unwrap()).unwrap();
    let b = construct_e_invariant(&k, &rho, &[0, 3], &ElementMap::new(vec![0, 3, 0, 3]).unwrap()).unwrap();
    println!("Z2×Z2, transversals {{0,1}} and {{0,3}}: isomorphic via {:?}", e_invariant_isomorphic(&a, &b).unwrap().map(|p| p.image().to_vec()));
}
