//! Solutions on groups: every normal subgroup and representative system
//! gives one, and each is recovered from its θ maps.

use pentagon::constructions::{all_group_quotient_solutions, extract_group_data, kashaev_sergeev};
use pentagon::semigroup::{named, Group};

fn main() {
    for (name, t) in named::small_groups() {
        let g = Group::new(t).unwrap();
        let all = all_group_quotient_solutions(&g).unwrap();
        let recovered = all.iter().all(|(_, s)| {
            let d = extract_group_data(s).unwrap();
            pentagon::constructions::group_quotient_solution(&g, &d).unwrap() == *s
        });
        println!("{name:<6} {} solutions, all recovered from their data: {recovered}", all.len());
    }
    let s3 = Group::new(named::symmetric_group_3()).unwrap();
    let all: Vec<usize> = (0..6).collect();
    let mu: Vec<usize> = all.iter().map(|&a| usize::from(named::s3_sign(a) < 0)).collect();
    let sign = kashaev_sergeev(&s3, &all, &[0; 6], &mu).unwrap();
    let d = extract_group_data(&sign).unwrap();
    println!("sign solution on S3: kernel {:?}, representatives {:?}", d.kernel, d.representatives);
}
