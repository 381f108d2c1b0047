//! Three local tree surgeries and what each one does to the index.
//!
//!     cargo run --example surgery_monotonicity

use ecci::families;
use ecci::transforms::{delta_transform, pendant_paths_at, rotate_leaf, LeafRotation, TwoPathAnchor};
use ecci::xi_oracle;
use ecci::Tree;

fn main() {
    // 1. Two pendant paths hanging at one vertex: sliding a vertex from the
    //    shorter path onto the longer one strictly raises the index.
    let base = families::path(3).unwrap();
    let mut p = 2;
    let mut q = 2;
    println!("two paths on a 3-vertex base, sliding one vertex at a time:");
    loop {
        let anchor = TwoPathAnchor::new(base.clone(), 1, p, q).unwrap();
        let here = xi_oracle(&anchor.attach());
        println!("  (p, q) = ({p}, {q}): xi = {here}");
        if q == 0 {
            break;
        }
        let next = xi_oracle(&anchor.shift_one().unwrap());
        assert!(next > here);
        p += 1;
        q -= 1;
    }

    // 2. Consolidating a junction: keep its longest pendant path in place
    //    and re-hang every other one a step closer to the rest of the tree.
    //    Vertex 1 below carries two single-vertex paths beside a long spine;
    //    it branches furthest from the center, so the move drops the index
    //    by exactly twice the number of re-hung vertices.
    let t = Tree::from_edges(
        9,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7), (1, 8)],
    )
    .unwrap();
    let junction = pendant_paths_at(&t, 1).unwrap();
    println!(
        "\njunction at vertex 1: legs {:?}, anchor neighbor {}",
        junction.legs, junction.anchor
    );
    let merged = delta_transform(&t, 1).unwrap();
    println!("xi before {} -> after {}", xi_oracle(&t), xi_oracle(&merged));
    assert!(xi_oracle(&merged) < xi_oracle(&t));

    // 3. Leaf rotation: re-hang a deepest leaf below a shallowest vertex
    //    with spare capacity. Iterating from the broom walks down to the
    //    packed tree's value, never increasing the index along the way. At
    //    the bottom the move can keep sliding leaves sideways at constant
    //    index, so bound the walk instead of waiting for NoMove.
    let mut t = families::broom(8, 3).unwrap();
    println!("\nrotating leaves of broom(8,3) toward the packed tree:");
    let mut xi = xi_oracle(&t);
    let floor = xi_oracle(&families::volkmann(8, 3).unwrap());
    println!("  start: xi = {xi}");
    for _ in 0..100 {
        let (next, label) = match rotate_leaf(&t) {
            LeafRotation::Strict(next) => (next, "drop"),
            LeafRotation::Equal(next) => (next, "even"),
            LeafRotation::NoMove => break,
        };
        let nxi = xi_oracle(&next);
        assert!(nxi <= xi);
        if nxi < xi {
            println!("  {label}: xi = {nxi}");
        }
        t = next;
        xi = nxi;
        if xi == floor {
            break;
        }
    }
    assert_eq!(xi, floor);
    println!("  reached the volkmann(8,3) minimum: xi = {xi}");
}
