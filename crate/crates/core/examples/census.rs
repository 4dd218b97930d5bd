//! Order-3 census, the involutive census at order 4, and a catalog on disk.
//! Usage: `cargo run --example census [-- OUTDIR]`.

use pentagon::enumeration::{census, write_catalog, SearchFilter};

fn main() {
    let all = census(3, &SearchFilter::none(), 4).unwrap();
    println!(
        "order 3: {} labeled solutions, {} up to isomorphism, {} also identifying s with τsτ",
        all.labeled_solutions, all.iso_classes, all.iso_classes_up_to_flip
    );
    for row in all.per_semigroup.iter().filter(|r| r.iso_classes > 0).take(5) {
        println!("  {:?}: {} classes", row.semigroup.rows(), row.iso_classes);
    }
    let involutive = SearchFilter::none().with_name("involutive").unwrap();
    for n in 1..=4 {
        println!("involutive, order {n}: {}", census(n, &involutive, 4).unwrap().iso_classes);
    }
    if let Some(dir) = std::env::args().nth(1) {
        let files = write_catalog(&all, std::path::Path::new(&dir)).unwrap();
        println!("wrote {} files to {dir}", files.len());
    }
}
