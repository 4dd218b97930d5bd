//! Relabelings, isomorphism search and opposites.

use pentagon::constructions::kac_takesaki;
use pentagon::semigroup::{named, ElementMap};
use pentagon::solution::{opposite, solution_key, solutions_isomorphic};
use pentagon::special::t_a;

fn main() {
    let s = kac_takesaki(&named::cyclic_group(3));
    let perm = ElementMap::new(vec![1, 2, 0]).unwrap();
    let r = s.relabel(&perm);
    println!("KT(Z3) vs its relabeling by 0→1→2→0: {:?}", solutions_isomorphic(&s, &r).map(|p| p.image().to_vec()));
    println!("same canonical key: {}", solution_key(&s).unwrap() == solution_key(&r).unwrap());

    let z2 = named::cyclic_group(2);
    let op = opposite(&kac_takesaki(&z2)).unwrap();
    println!("opposite of KT(Z2) equals t_A on Z2: {}", op == t_a(&z2).unwrap());
    println!("KT(Z2) vs t_A(Z2): {:?}", solutions_isomorphic(&kac_takesaki(&z2), &op).map(|p| p.image().to_vec()));
}
