//! The maps (f(x), g(y)), endomorphism solutions and left-zero × group
//! solutions.

use pentagon::constructions::{endo_solution, idempotent_endomorphisms, left_zero_group_solution, lyubashenko};
use pentagon::semigroup::{named, ElementMap, Group};
use pentagon::solution::classify_properties;

fn main() {
    let f = ElementMap::new(vec![0, 0, 2]).unwrap();
    let s = lyubashenko(3, &f, &f).unwrap();
    println!("(f(x), f(y)) with f = [0, 0, 2]: s(1, 2) = {:?}", s.apply(1, 2));
    let g = ElementMap::new(vec![1, 0, 2]).unwrap();
    println!("non-idempotent g rejected: {}", lyubashenko(3, &f, &g).unwrap_err());

    let m = named::clifford_monoid_m();
    for gamma in idempotent_endomorphisms(&m) {
        let s = endo_solution(&m, &gamma).unwrap();
        println!("M, γ = {:?}: θ_1 = {:?}", gamma.image(), s.theta_map(0).image());
    }

    let z3 = Group::new(named::cyclic_group(3)).unwrap();
    let swap = ElementMap::new(vec![1, 0]).unwrap();
    let lz = left_zero_group_solution(&z3, &swap).unwrap();
    let p = classify_properties(&lz).unwrap();
    println!("left-zero(2) × Z3 with σ = (1 2): order {}, bijective={}, involutive={}", lz.order(), p.bijective, p.involutive);
}
