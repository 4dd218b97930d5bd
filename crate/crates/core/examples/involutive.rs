//! Retracts, the extensions Ext^σ(t_A), and the decomposition of every
//! involutive solution of order at most 4.

use pentagon::enumeration::{census, SearchFilter};
use pentagon::semigroup::named;
use pentagon::special::{count_involutive, decompose_involutive, reassemble, retract, t_a};

fn main() {
    let t = t_a(&named::klein_four()).unwrap();
    println!("t_A on Z2×Z2 is irretractable: {}", retract(&t).unwrap() == t);
    let f = SearchFilter::none().with_name("involutive").unwrap();
    for n in 1..=4 {
        let r = census(n, &f, 1).unwrap();
        println!("order {n}: {} classes (formula {:?})", r.iso_classes, count_involutive(n as u64));
        for s in &r.catalog {
            let d = decompose_involutive(s).unwrap();
            assert_eq!(reassemble(&d).unwrap(), *s);
            println!("  |X| = {}, A = Z2^{}, |G| = {}, retract order {}", d.x_size, d.a_rank, d.g.order(), retract(s).unwrap().order());
        }
    }
}
