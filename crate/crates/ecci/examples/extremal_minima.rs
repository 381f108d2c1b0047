//! Exhaustive extremal search: minimize or maximize the index over a whole
//! isomorphism class, with witnesses.
//!
//!     cargo run --release --example extremal_minima

use ecci::enumeration::ClassFilter;
use ecci::extremal::{extremal_search, Objective};
use ecci::families;
use ecci::xi_linear;

fn main() {
    // Minimum over all trees on 13 vertices with maximum degree exactly 6.
    // Ten classes tie; the breadth-first packed tree is one of them.
    let filter = ClassFilter { max_degree: Some(6), ..ClassFilter::default() };
    let report = extremal_search(13, &filter, Objective::Min, 3, 1).unwrap();
    println!(
        "min xi over trees on 13 vertices with max degree 6: {} ({} classes tie)",
        report.value, report.count
    );
    let packed = families::volkmann(13, 6).unwrap();
    assert_eq!(xi_linear(&packed), report.value);
    println!("first witnesses of {}:", report.count);
    for w in &report.witnesses {
        println!("{w}");
    }

    // Maximum over the same kind of class: always a single winner, the broom.
    let report = extremal_search(11, &filter, Objective::Max, 1, 1).unwrap();
    let broom = families::broom(11, 6).unwrap();
    assert_eq!(report.count, 1);
    assert_eq!(report.witnesses[0].parse::<ecci::Tree>().unwrap().canonical_code(),
               broom.canonical_code());
    println!("max xi over trees on 11 vertices with max degree 6: {} (unique: the broom)",
             report.value);

    // Unfiltered: the path maximizes, the star minimizes.
    let all = ClassFilter::default();
    let hi = extremal_search(12, &all, Objective::Max, 1, 1).unwrap();
    let lo = extremal_search(12, &all, Objective::Min, 1, 1).unwrap();
    println!("over all trees on 12 vertices: min {} (star), max {} (path)", lo.value, hi.value);
}
