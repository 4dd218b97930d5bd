//! Commutative and cocommutative solutions across the order-3 catalog.

use pentagon::enumeration::{census, SearchFilter};
use pentagon::special::commutativity_characterizations;

fn main() {
    let catalog = census(3, &SearchFilter::none(), 1).unwrap().catalog;
    let (mut comm, mut cocomm, mut agree) = (0, 0, 0);
    for s in &catalog {
        let r = commutativity_characterizations(s).unwrap();
        comm += usize::from(r.commutative);
        cocomm += usize::from(r.cocommutative);
        agree += usize::from(r.equivalences_hold);
    }
    println!("{} classes: {comm} commutative, {cocomm} cocommutative; characterizations agree on {agree}", catalog.len());
}
