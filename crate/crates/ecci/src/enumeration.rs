//! Exhaustive generation of unlabeled trees, one isomorphism class each.
//!
//! Rooted trees are walked as canonical level sequences in lexicographically
//! decreasing order using the classic successor rule (keep the longest prefix
//! that can still shrink, then tile). A free tree is accepted only in its
//! center-rooted orientation, so each unlabeled tree shows up exactly once.
//! When a sequence fails the center test, every later sequence sharing its
//! first root subtree fails too, so the walk jumps straight past them.
//!
//! A Prüfer-code iterator over all labeled trees backs this up in the tests:
//! bucketing n^(n-2) labeled trees by canonical code must reproduce the same
//! class counts.

use serde::Serialize;
use thiserror::Error;

use crate::descriptor::eccentricities_linear;
use crate::tree::Tree;

/// Free-tree counts grow ~2.96^n; past this the sweep stops being a sane
/// single-process workload.
pub const FREE_TREE_CAP: usize = 22;

/// Labeled trees number n^(n-2); the oracle is for cross-checking small n.
pub const LABELED_CAP: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    NTooLarge { n: usize, cap: usize },
}

/// Depths of vertices 0..n in preorder; parent of vertex i is the nearest
/// earlier vertex one level up. The canonical form keeps sibling subtrees in
/// lexicographically non-increasing order.
pub type LevelSequence = Vec<usize>;

/// Tree from a level sequence. Labels follow the preorder positions.
pub fn layout_to_tree(seq: &LevelSequence) -> Tree {
    let n = seq.len();
    debug_assert!(n >= 1 && seq[0] == 0);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut last_at_depth = vec![0usize; n + 1];
    for (i, &d) in seq.iter().enumerate() {
        if i > 0 {
            debug_assert!(d >= 1 && d <= seq[i - 1] + 1);
            edges.push((last_at_depth[d - 1], i));
        }
        last_at_depth[d] = i;
    }
    Tree::from_edges(n, &edges).expect("level sequence describes a tree")
}

/// In-place successor: keep everything before `p`, then tile the block
/// starting at the matching shallower entry `q`. Returns false once `p`
/// cannot be chosen, i.e. the sequence was the last one.
fn tile_successor(seq: &mut LevelSequence, p: usize) -> bool {
    if seq[p] <= 1 {
        return false;
    }
    let q = (0..p).rev().find(|&i| seq[i] == seq[p] - 1).expect("depths descend to 1");
    let period = p - q;
    for i in p..seq.len() {
        seq[i] = seq[i - period];
    }
    true
}

fn default_successor(seq: &mut LevelSequence) -> bool {
    match (0..seq.len()).rev().find(|&i| seq[i] > 1) {
        Some(p) => tile_successor(seq, p),
        None => false,
    }
}

/// Index of the second depth-1 vertex: where the root's first subtree ends.
fn split_point(seq: &LevelSequence) -> usize {
    (2..seq.len()).find(|&i| seq[i] == 1).unwrap_or(seq.len())
}

/// Does this rooted layout represent its free tree canonically?
///
/// The root must be a center: the tree minus the first root subtree must
/// reach at least as deep as that subtree does on its own. On a tie the tree
/// is bicentral with the second center at vertex 1, and one orientation is
/// picked by size, then by sequence order, of the two halves.
fn free_canonical(seq: &LevelSequence) -> bool {
    let n = seq.len();
    if n <= 2 {
        return true;
    }
    let m = split_point(seq);
    let left_height = seq[1..m].iter().max().unwrap() - 1;
    let rest_height = seq[m..].iter().max().copied().unwrap_or(0);
    if rest_height != left_height {
        return rest_height > left_height;
    }
    let (left_len, rest_len) = (m - 1, n - m + 1);
    if left_len != rest_len {
        return left_len < rest_len;
    }
    // equal halves across the central edge: compare their own layouts
    seq[1..m].iter().map(|&d| d - 1).le(std::iter::once(0).chain(seq[m..].iter().copied()))
}

/// Iterator over every unlabeled tree on n vertices, one representative per
/// isomorphism class, in decreasing level-sequence order.
#[derive(Debug)]
pub struct FreeTrees {
    seq: Option<LevelSequence>,
}

impl FreeTrees {
    fn new(n: usize) -> Self {
        FreeTrees { seq: if n == 0 { None } else { Some((0..n).collect()) } }
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        loop {
            let seq = self.seq.as_mut()?;
            if free_canonical(seq) {
                let tree = layout_to_tree(seq);
                if !default_successor(seq) {
                    self.seq = None;
                }
                return Some(tree);
            }
            // every sequence with this first subtree fails the center test
            // with it; rewrite the subtree's last vertex directly
            let p = split_point(seq) - 1;
            if !tile_successor(seq, p) {
                self.seq = None;
            }
        }
    }
}

/// All free trees on n vertices, refusing sizes past [`FREE_TREE_CAP`].
pub fn free_trees(n: usize) -> Result<FreeTrees, EnumError> {
    if n > FREE_TREE_CAP {
        return Err(EnumError::NTooLarge { n, cap: FREE_TREE_CAP });
    }
    Ok(free_trees_uncapped(n))
}

/// Same walk without the guard rail, for callers who accept the cost.
pub fn free_trees_uncapped(n: usize) -> FreeTrees {
    FreeTrees::new(n)
}

/// Structural constraints a tree must satisfy. Unset fields match anything.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassFilter {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree_at_most: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pendant_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect_matching: Option<bool>,
}

impl ClassFilter {
    pub fn matches(&self, t: &Tree) -> bool {
        if let Some(d) = self.max_degree {
            if t.max_degree() != d {
                return false;
            }
        }
        if let Some(d) = self.max_degree_at_most {
            if t.max_degree() > d {
                return false;
            }
        }
        if let Some(p) = self.pendant_count {
            if t.pendant_count() != p {
                return false;
            }
        }
        if let Some(pm) = self.perfect_matching {
            if t.has_perfect_matching() != pm {
                return false;
            }
        }
        if self.radius.is_some() || self.diameter.is_some() {
            let profile = eccentricities_linear(t);
            if let Some(r) = self.radius {
                if profile.radius != r {
                    return false;
                }
            }
            if let Some(d) = self.diameter {
                if profile.diameter != d {
                    return false;
                }
            }
        }
        true
    }
}

/// Free trees on n vertices passing the filter.
pub fn filtered_trees(
    n: usize,
    filter: &ClassFilter,
) -> Result<impl Iterator<Item = Tree>, EnumError> {
    let filter = filter.clone();
    Ok(free_trees(n)?.filter(move |t| filter.matches(t)))
}

/// Labeled tree from a Prüfer code of length n-2.
pub fn decode_prufer(n: usize, code: &[usize]) -> Tree {
    assert!(n >= 2 && code.len() == n - 2);
    let mut deg = vec![1usize; n];
    for &s in code {
        assert!(s < n);
        deg[s] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
        (0..n).filter(|&v| deg[v] == 1).map(std::cmp::Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf always remains");
        edges.push((leaf, s));
        deg[s] -= 1;
        if deg[s] == 1 {
            leaves.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Tree::from_edges(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Every labeled tree on n vertices, by running an odometer over all Prüfer
/// codes. n^(n-2) items, so the cap is tight.
pub fn labeled_tree_oracle(n: usize) -> Result<impl Iterator<Item = Tree>, EnumError> {
    if n > LABELED_CAP {
        return Err(EnumError::NTooLarge { n, cap: LABELED_CAP });
    }
    let mut code: Option<Vec<usize>> = Some(vec![0; n.saturating_sub(2)]);
    Ok(std::iter::from_fn(move || {
        let current = code.as_ref()?;
        let tree = if n == 1 {
            Tree::from_edges(1, &[]).unwrap()
        } else {
            decode_prufer(n, current)
        };
        let cur = code.as_mut().unwrap();
        let mut i = cur.len();
        loop {
            if i == 0 {
                code = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < n {
                break;
            }
            cur[i] = 0;
        }
        Some(tree)
    }))
}
