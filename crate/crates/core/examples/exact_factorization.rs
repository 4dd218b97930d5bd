//! The two solutions attached to an exact factorization G = HK.

use pentagon::constructions::exact_factorization_solutions;
use pentagon::semigroup::{named, Group};

fn main() {
    let z6 = Group::new(named::cyclic_group(6)).unwrap();
    let f = exact_factorization_solutions(&z6, &[0, 3], &[0, 2, 4]).unwrap();
    println!("Z6 = {{0,3}} + {{0,2,4}}");
    println!("  s(1, 4) = {:?}, r(1, 4) = {:?}", f.s.apply(1, 4), f.r.apply(1, 4));
    println!("  r = τsτ: {}", f.r_equals_flip_s);
    let s3 = Group::new(named::symmetric_group_3()).unwrap();
    let a3 = named::alternating_group_3_elements();
    let f = exact_factorization_solutions(&s3, &[0, 1], &a3).unwrap();
    println!("S3 = <(1 2)> A3: r = τsτ: {}", f.r_equals_flip_s);
    let z4 = Group::new(named::cyclic_group(4)).unwrap();
    println!("Z4 with H = K = {{0,2}}: {}", exact_factorization_solutions(&z4, &[0, 2], &[0, 2]).unwrap_err());
}
