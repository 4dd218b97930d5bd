//! Gluing one solution per maximal subgroup into a solution on the whole
//! Clifford semigroup, and its kernel.

use pentagon::clifford::{e_fixed_kernel, glue_e_fixed, Epsilon};
use pentagon::constructions::kac_takesaki;
use pentagon::semigroup::named;
use pentagon::solution::PeSolution;

fn main() {
    let m = named::clifford_monoid_m();
    let z1 = named::cyclic_group(1);
    let z2 = named::cyclic_group(2);
    let options = [("Kac–Takesaki", kac_takesaki(&z2)), ("constant", PeSolution::from_fn(&z2, |_, _| 0).unwrap())];
    for (name, component) in options {
        let glued = glue_e_fixed(&m, &[kac_takesaki(&z1), component], &Epsilon::default()).unwrap();
        println!(
            "G_x carries {name}: θ rows {:?}, kernel {:?}",
            glued.solution.theta().rows(),
            e_fixed_kernel(&glued).unwrap()
        );
    }
    let short = glue_e_fixed(&m, &[kac_takesaki(&z1)], &Epsilon::default());
    println!("one component for two groups: {}", short.unwrap_err());
}
