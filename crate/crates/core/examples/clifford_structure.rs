//! The union-of-groups picture of a Clifford semigroup and its canonical
//! solutions.

use pentagon::clifford::{canonical_clifford_solutions, clifford_structure, invariance_flags};
use pentagon::semigroup::named;

fn main() {
    let m = named::clifford_monoid_m();
    let st = clifford_structure(&m).unwrap();
    println!("M = {{1, x, y}}: idempotents {:?}, groups {:?}", st.idempotents, st.groups);
    for phi in &st.phi {
        println!("  φ from {} to {}: {:?}", phi.from, phi.to, phi.images);
    }
    let c = canonical_clifford_solutions(&m).unwrap();
    println!("I: θ_y = {:?}, flags {:?}", c.identity.theta_map(2).image(), invariance_flags(&c.identity));
    println!("F: s(1, y) = {:?}, flags {:?}", c.f.apply(0, 2), invariance_flags(&c.f));
    for (e, s) in &c.constant {
        println!("E_{e}: θ = const {}, flags {:?}", s.theta_at(0, 0), invariance_flags(s));
    }
}
