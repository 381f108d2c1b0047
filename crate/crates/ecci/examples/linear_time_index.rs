//! The index of a tree in one pass: time it across sizes and check the
//! growth is linear, then cross-check small sizes against the quadratic
//! reference.
//!
//!     cargo run --release --example linear_time_index

use std::time::Instant;

use ecci::enumeration::free_trees;
use ecci::families;
use ecci::{xi_linear, xi_oracle};

fn median_ns(tree: &ecci::Tree, repeat: usize) -> u64 {
    let mut runs: Vec<u64> = (0..repeat)
        .map(|_| {
            let started = Instant::now();
            std::hint::black_box(xi_linear(std::hint::black_box(tree)));
            started.elapsed().as_nanos() as u64
        })
        .collect();
    runs.sort_unstable();
    runs[runs.len() / 2]
}

fn main() {
    // Exact agreement with the per-vertex-BFS reference on every tree up to
    // 10 vertices: all 201 isomorphism classes.
    let mut checked = 0;
    for n in 1..=10 {
        for t in free_trees(n).unwrap() {
            assert_eq!(xi_linear(&t), xi_oracle(&t));
            checked += 1;
        }
    }
    println!("agrees with the quadratic reference on all {checked} trees up to 10 vertices");

    // Timing sweep on paths (the worst case for the diameter walk) and on
    // packed trees (bushy, shallow). Doubling n should roughly double time.
    println!("\n{:>9}  {:>12}  {:>12}", "n", "path", "volkmann(,4)");
    for exp in 14..=20 {
        let n = 1usize << exp;
        let p = families::path(n).unwrap();
        let v = families::volkmann(n, 4).unwrap();
        println!(
            "{n:>9}  {:>9} us  {:>9} us",
            median_ns(&p, 5) / 1000,
            median_ns(&v, 5) / 1000
        );
    }

    let million = families::path(1_000_000).unwrap();
    let ns = median_ns(&million, 3);
    println!("\npath on 10^6 vertices: xi = {} in {:.1} ms", xi_linear(&million), ns as f64 / 1e6);
}
