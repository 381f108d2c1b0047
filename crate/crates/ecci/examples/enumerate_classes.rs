//! Walk every free (unlabeled, unrooted) tree on n vertices exactly once,
//! then slice one size into structural classes.
//!
//!     cargo run --example enumerate_classes

use ecci::enumeration::{free_trees, ClassFilter};
use ecci::xi_linear;

fn main() {
    // The number of isomorphism classes grows roughly like 2.96^n; these are
    // the classic counts.
    println!("n    free trees");
    for n in 1..=12 {
        let count = free_trees(n).unwrap().count();
        println!("{n:>2}  {count:>10}");
    }

    // Slice n = 10 by maximum degree. Every tree lands in exactly one
    // bucket, so the bucket counts add back up to the total.
    let n = 10;
    println!("\nn = {n}, by maximum degree:");
    println!("delta  classes  min xi  max xi");
    let mut total = 0;
    for delta in 2..=n - 1 {
        let filter = ClassFilter { max_degree: Some(delta), ..ClassFilter::default() };
        let mut count = 0u64;
        let (mut lo, mut hi) = (u64::MAX, 0u64);
        for t in free_trees(n).unwrap().filter(|t| filter.matches(t)) {
            let x = xi_linear(&t).0;
            count += 1;
            lo = lo.min(x);
            hi = hi.max(x);
        }
        total += count;
        println!("{delta:>5}  {count:>7}  {lo:>6}  {hi:>6}");
    }
    assert_eq!(total, free_trees(n).unwrap().count() as u64);

    // Filters compose: trees on 12 vertices with a perfect matching and
    // exactly 4 pendant vertices.
    let filter = ClassFilter {
        pendant_count: Some(4),
        perfect_matching: Some(true),
        ..ClassFilter::default()
    };
    let picked: Vec<_> =
        free_trees(12).unwrap().filter(|t| filter.matches(t)).collect();
    println!("\n12 vertices, perfect matching, 4 pendants: {} classes", picked.len());
    for t in picked.iter().take(3) {
        println!("xi = {}\n{t}", xi_linear(t));
    }
}
