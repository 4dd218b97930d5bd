//! Semigroup counts: labeled, up to isomorphism, and a few facts about
//! the order-3 classes.

use pentagon::enumeration::enumerate_semigroups;
use pentagon::semigroup::analyze;

fn main() {
    for n in 1..=4 {
        let iso = enumerate_semigroups(n, true).unwrap();
        let labeled = if n <= 3 { enumerate_semigroups(n, false).unwrap().len().to_string() } else { "-".into() };
        let facts: Vec<_> = iso.iter().map(analyze).collect();
        println!(
            "order {n}: {labeled:>4} labeled, {:>3} up to isomorphism ({} monoids, {} inverse, {} Clifford, {} groups)",
            iso.len(),
            facts.iter().filter(|f| f.is_monoid).count(),
            facts.iter().filter(|f| f.is_inverse).count(),
            facts.iter().filter(|f| f.is_clifford).count(),
            facts.iter().filter(|f| f.is_group).count(),
        );
    }
}
