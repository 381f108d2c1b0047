//! Cross-implementation and structural properties, checked exhaustively on
//! small sizes and randomly on larger ones.

use std::collections::HashSet;

use proptest::collection::vec;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ecci::descriptor::eccentricities_linear;
use ecci::enumeration::{decode_prufer, free_trees, labeled_tree_oracle};
use ecci::families;
use ecci::{xi_linear, xi_oracle, Tree};

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Tree {
    if n == 1 {
        return Tree::from_edges(1, &[]).unwrap();
    }
    let code: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.random_range(0..n)).collect();
    decode_prufer(n, &code)
}

/// Greedy leaf elimination against the definition: some set of n/2 disjoint
/// edges covering every vertex.
#[test]
fn perfect_matching_agrees_with_brute_force() {
    fn brute(t: &Tree) -> bool {
        let n = t.n();
        if !n.is_multiple_of(2) {
            return false;
        }
        let edges: Vec<_> = t.edges().collect();
        let want = n / 2;
        // choose(n-1, n/2) subsets at n <= 10 is at most 126
        fn go(edges: &[(usize, usize)], used: u64, picked: usize, want: usize) -> bool {
            if picked == want {
                return true;
            }
            match edges.split_first() {
                None => false,
                Some((&(u, v), rest)) => {
                    let mask = (1u64 << u) | (1u64 << v);
                    (used & mask == 0 && go(rest, used | mask, picked + 1, want))
                        || go(rest, used, picked, want)
                }
            }
        }
        go(&edges, 0, 0, want)
    }
    for n in 1..=10 {
        for t in free_trees(n).unwrap() {
            assert_eq!(t.has_perfect_matching(), brute(&t), "{t:?}");
        }
    }
}

/// Maximum-degree buckets partition each size, as do pendant-count buckets.
#[test]
fn structural_buckets_partition_the_classes() {
    for n in 3..=12 {
        let total = free_trees(n).unwrap().count();
        let by_degree: usize = (2..=n - 1)
            .map(|d| free_trees(n).unwrap().filter(|t| t.max_degree() == d).count())
            .sum();
        let by_pendants: usize = (2..=n - 1)
            .map(|p| free_trees(n).unwrap().filter(|t| t.pendant_count() == p).count())
            .sum();
        assert_eq!(by_degree, total);
        assert_eq!(by_pendants, total);
    }
}

/// The enumeration walks exactly one representative per isomorphism class:
/// labeled trees collapsed by canonical code give the same counts.
#[test]
fn enumeration_matches_labeled_classes() {
    for n in 1..=7 {
        let canonical: HashSet<_> =
            labeled_tree_oracle(n).unwrap().map(|t| t.canonical_code()).collect();
        let walked: Vec<_> = free_trees(n).unwrap().map(|t| t.canonical_code()).collect();
        let distinct: HashSet<_> = walked.iter().cloned().collect();
        assert_eq!(walked.len(), distinct.len(), "duplicate class at n={n}");
        assert_eq!(distinct, canonical, "wrong class set at n={n}");
    }
}

/// The packed tree's value never rises as the degree bound grows, across a
/// much wider range than the enumerated sweeps.
#[test]
fn packed_tree_value_is_monotone_in_delta() {
    for n in 4..=60 {
        let mut prev = None;
        for delta in 2..=n - 1 {
            let x = xi_linear(&families::volkmann(n, delta).unwrap());
            if let Some(p) = prev {
                assert!(x <= p, "n={n} delta={delta}: {x:?} > {p:?}");
            }
            prev = Some(x);
        }
    }
}

/// Two hundred seeded random trees of moderate size: the one-pass value
/// matches the per-vertex BFS reference, and so do the full profiles.
#[test]
fn random_trees_agree_with_the_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let n = rng.random_range(2..=120);
        let t = random_tree(&mut rng, n);
        assert_eq!(xi_linear(&t), xi_oracle(&t), "{t:?}");
        assert_eq!(eccentricities_linear(&t), t.ecc_profile_oracle(), "{t:?}");
    }
}

proptest! {
    /// Edge-list serialization round-trips through the parser.
    #[test]
    fn edge_list_round_trips(code in vec(0usize..40, 0..38)) {
        let n = code.len() + 2;
        let code: Vec<usize> = code.into_iter().map(|c| c % n).collect();
        let t = decode_prufer(n, &code);
        let back: Tree = t.to_edge_list().parse().unwrap();
        prop_assert_eq!(back, t);
    }

    /// Adjacent vertices have eccentricities within one of each other, the
    /// linear profile says so, and the index is bounded by the star and
    /// path extremes.
    #[test]
    fn profile_sanity_on_random_trees(code in vec(0usize..30, 1..28)) {
        let n = code.len() + 2;
        let code: Vec<usize> = code.into_iter().map(|c| c % n).collect();
        let t = decode_prufer(n, &code);
        let profile = eccentricities_linear(&t);
        for (u, v) in t.edges() {
            let du = profile.ecc[u] as i64;
            let dv = profile.ecc[v] as i64;
            prop_assert!((du - dv).abs() <= 1);
        }
        let x = xi_linear(&t);
        prop_assert!(x >= ecci::descriptor::xi_star_closed(n));
        prop_assert!(x <= ecci::descriptor::xi_path_closed(n));
    }
}
