//! Checks the two axioms and the pentagon identity, then shows the
//! witness reported for a family that breaks (P2).

use pentagon::semigroup::named;
use pentagon::solution::{pentagon_witness, verify_solution, PairMap, ThetaFamily};

fn main() {
    let z2 = named::cyclic_group(2);
    let theta = ThetaFamily::from_fn(2, |_, y| y).unwrap();
    let s = verify_solution(&z2, &theta).expect("Kac–Takesaki on Z2");
    println!("s(x, y) = (x + y, y) on Z2: valid, s(1, 1) = {:?}", s.apply(1, 1));

    let broken = ThetaFamily::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
    match verify_solution(&z2, &broken) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("θ_1 = const 0: {e}"),
    }
    let map = PairMap::from_fn(2, |x, y| (z2.mul(x, y), broken.at(x, y)));
    println!("pentagon identity fails at {:?}", pentagon_witness(&map));
}
