//! Property flags and both Yang–Baxter conventions for a few solutions.

use pentagon::constructions::{kac_takesaki, lyubashenko};
use pentagon::semigroup::{named, ElementMap};
use pentagon::solution::{classify_properties, qybe_check, PeSolution, QybeConvention};
use pentagon::special::commutativity_characterizations;

fn show(name: &str, s: &PeSolution) {
    let p = classify_properties(s).unwrap();
    let c = commutativity_characterizations(s).unwrap();
    println!(
        "{name:<22} involutive={} idempotent={} bijective={} nondegenerate={} commutative={} cocommutative={} qybe-a={} qybe-b={}",
        p.involutive,
        p.idempotent,
        p.bijective,
        p.non_degenerate,
        c.commutative,
        c.cocommutative,
        qybe_check(s, QybeConvention::QybeA),
        qybe_check(s, QybeConvention::QybeB),
    );
}

fn main() {
    show("Kac–Takesaki Z2", &kac_takesaki(&named::cyclic_group(2)));
    show("Kac–Takesaki Z3", &kac_takesaki(&named::cyclic_group(3)));
    let f = ElementMap::constant(3, 1);
    show("(f(x), g(y)), f=g=1", &lyubashenko(3, &f, &f).unwrap());
    let swap = [0, 2, 1];
    let null = PeSolution::from_fn(&named::null_semigroup(3), |x, y| if x == 0 { y } else { swap[y] }).unwrap();
    show("null semigroup", &null);
}
