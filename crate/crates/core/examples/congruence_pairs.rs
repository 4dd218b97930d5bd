//! Congruences of an inverse semigroup and their kernel–trace pairs.

use pentagon::clifford::{congruence_from_pair, kernel_and_trace};
use pentagon::semigroup::{enumerate_congruences, named};

fn main() {
    let t = named::clifford_monoid_m().direct_product(&named::cyclic_group(2));
    println!("M × Z2 (order {}):", t.order());
    for rho in enumerate_congruences(&t) {
        let pair = kernel_and_trace(&t, &rho).unwrap();
        let back = congruence_from_pair(&t, &pair).unwrap();
        println!("  {:?}\n    kernel {:?}, trace {:?}, rebuilt: {}", rho.blocks(), pair.kernel, pair.trace, back == rho);
    }
}
