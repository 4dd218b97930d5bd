//! Idempotent solutions on {1, a, b}: the structural checks, θ_1 as a
//! homomorphism, and reconstruction from (μ, θ_e).

use pentagon::enumeration::{enumerate_solutions, SearchFilter};
use pentagon::semigroup::named;
use pentagon::solution::{solution_key, verify_solution};
use pentagon::special::{
    construct_idempotent_central, extract_idempotent_central, idempotent_theta_checks, monoid_theta_checks,
    theta1_homomorphism_data,
};

fn main() {
    let m = named::idempotent_example_monoid();
    let f = SearchFilter::none().with_name("idempotent").unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for th in enumerate_solutions(&m, &f) {
        let s = verify_solution(&m, &th).unwrap();
        if !seen.insert(solution_key(&s).unwrap()) {
            continue;
        }
        let d1 = theta1_homomorphism_data(&s).unwrap();
        let data = extract_idempotent_central(&s).unwrap();
        println!(
            "θ rows {:?}: checks {} / {}, μ = {:?}, kernel {:?}, rebuilt: {}",
            th.rows(),
            idempotent_theta_checks(&s).unwrap().all_hold,
            monoid_theta_checks(&s).unwrap().all_hold,
            d1.mu.image(),
            d1.kernel.blocks(),
            construct_idempotent_central(&m, &data).unwrap() == s
        );
    }
    println!("{} classes", seen.len());
}
