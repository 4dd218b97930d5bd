//! The worked matched-product example for every idempotent endomorphism γ.

use pentagon::constructions::{
    check_matched_quadruple, idempotent_endomorphisms, matched_product, worked_example_quadruple, MATCHED_IDENTITIES,
};
use pentagon::semigroup::named;

fn main() {
    for gamma in idempotent_endomorphisms(&named::matched_example_s()) {
        let q = worked_example_quadruple(&gamma).unwrap();
        let verdict = check_matched_quadruple(&q);
        print!("γ = {:?}: ", gamma.image());
        if verdict.holds {
            let p = matched_product(&q).unwrap();
            println!("matched; product of order {} verified", p.order());
        } else {
            let v = &verdict.violations[0];
            println!("not matched: {} fails at {:?}", MATCHED_IDENTITIES[v.identity - 1], v.witness);
        }
    }
}
