//! Build every named tree family once and print its index, next to the
//! closed form where one exists.
//!
//!     cargo run --example family_gallery

use ecci::descriptor::{xi_broom_closed, xi_path_closed, xi_star_closed};
use ecci::families;
use ecci::xi_linear;

fn main() {
    let n = 11;

    let p = families::path(n).unwrap();
    println!("path({n}):              xi = {:>4}  closed {}", xi_linear(&p), xi_path_closed(n));

    let s = families::star(n).unwrap();
    println!("star({n}):              xi = {:>4}  closed {}", xi_linear(&s), xi_star_closed(n));

    for delta in [3, 6, 9] {
        let b = families::broom(n, delta).unwrap();
        println!(
            "broom({n},{delta}):           xi = {:>4}  closed {}",
            xi_linear(&b),
            xi_broom_closed(n, delta).unwrap()
        );
    }

    // The runner-up in each maximum-degree class: shorten the broom handle
    // by one and hang the spare vertex one step in.
    let b2 = families::second_broom(n, 6).unwrap();
    println!("second_broom({n},6):    xi = {:>4}", xi_linear(&b2));

    // Spider with prescribed leg lengths.
    let spider = families::starlike(&[3, 2, 2]).unwrap();
    println!("starlike [3,2,2]:      xi = {:>4}  (8 vertices)", xi_linear(&spider));

    // Legs as equal as possible; the minimizer at fixed pendant count.
    let sb = families::balanced_starlike(n, 4).unwrap();
    println!("balanced_starlike({n},4): xi = {:>3}", xi_linear(&sb));

    // Breadth-first packing at maximum degree delta; the minimizer at fixed
    // maximum degree. The layout says how deep the packing gets.
    let vt = families::volkmann(n, 4).unwrap();
    let layout = families::volkmann_layout(n, 4);
    println!(
        "volkmann({n},4):        xi = {:>4}  ({} full level(s) below the root, {} spill over)",
        xi_linear(&vt),
        layout.full_levels,
        layout.leftover
    );

    // Spine of a fixed diameter, spare vertices split over the two middle
    // positions; at_floor of them go on the lower one.
    for at_floor in 0..=2 {
        let dt = families::diameter_tree(10, 5, at_floor).unwrap();
        println!("diameter_tree(10,5,{at_floor}): xi = {:>4}", xi_linear(&dt));
    }

    // Perfect-matching family: one long leg, delta-2 legs of length two, one
    // pendant edge.
    let mt = families::matching_tree(12, 4).unwrap();
    assert!(mt.has_perfect_matching());
    println!("matching_tree(12,4):   xi = {:>4}", xi_linear(&mt));
}
