//! The eccentric connectivity index, two ways.
//!
//! `xi_oracle` trusts nothing: BFS from every vertex, O(n^2). `xi_linear`
//! roots the tree at a center vertex found by the classic double sweep, then
//! derives every eccentricity from subtree depths in O(n). The two must agree
//! exactly; the test suite and the verification layer hold them to that.

use serde::Serialize;
use thiserror::Error;

use crate::tree::{EccProfile, Tree};

/// Index value. Fits comfortably in u64: the index is at most n * Delta * n.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct XiValue(pub u64);

impl std::fmt::Display for XiValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DescriptorError {
    #[error("parameters out of range: {0}")]
    ParamOutOfRange(String),
}

fn xi_from_profile(t: &Tree, profile: &EccProfile) -> XiValue {
    XiValue((0..t.n()).map(|v| (t.degree(v) * profile.ecc[v]) as u64).sum())
}

/// Reference value straight from the BFS-per-vertex profile.
pub fn xi_oracle(t: &Tree) -> XiValue {
    xi_from_profile(t, &t.ecc_profile_oracle())
}

/// Linear-time value via [`eccentricities_linear`].
pub fn xi_linear(t: &Tree) -> XiValue {
    xi_from_profile(t, &eccentricities_linear(t))
}

pub const NO_PARENT: usize = usize::MAX;

/// Rooted view of a tree: parents, depths, and for every vertex the length of
/// the longest downward path in its subtree (`down[leaf] = 0`).
#[derive(Clone, Debug)]
pub struct SubtreeDepths {
    pub root: usize,
    /// parent[root] == NO_PARENT
    pub parent: Vec<usize>,
    pub depth: Vec<usize>,
    pub down: Vec<usize>,
    /// Vertices in BFS order from the root; parents precede children.
    pub order: Vec<usize>,
}

/// Iterative BFS + a reverse pass; no recursion, so a path with 10^6 vertices
/// is fine.
pub fn subtree_depths(t: &Tree, root: usize) -> SubtreeDepths {
    let n = t.n();
    assert!(root < n, "root {root} outside 0..{n}");
    let mut parent = vec![NO_PARENT; n];
    let mut depth = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    order.push(root);
    let mut visited = vec![false; n];
    visited[root] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in t.neighbors(v) {
            if !visited[w] {
                visited[w] = true;
                parent[w] = v;
                depth[w] = depth[v] + 1;
                order.push(w);
            }
        }
    }
    let mut down = vec![0usize; n];
    for &v in order.iter().rev() {
        if v != root {
            let p = parent[v];
            down[p] = down[p].max(down[v] + 1);
        }
    }
    SubtreeDepths { root, parent, depth, down, order }
}

/// Endpoint pair of some longest path, found by the double sweep, plus the
/// path itself (from `far` back to `start`).
fn diameter_path(t: &Tree) -> Vec<usize> {
    let n = t.n();
    let mut dist = vec![0u32; n];
    let mut queue = Vec::with_capacity(n);
    t.bfs_dist(0, &mut dist, &mut queue);
    let a = (0..n).max_by_key(|&v| dist[v]).unwrap();
    // second sweep keeps parents so the path can be read back
    let sd = subtree_depths(t, a);
    let b = (0..n).max_by_key(|&v| sd.depth[v]).unwrap();
    let mut path = vec![b];
    let mut v = b;
    while sd.parent[v] != NO_PARENT {
        v = sd.parent[v];
        path.push(v);
    }
    path
}

/// Exact eccentricities in O(n).
///
/// Root the tree at a center vertex c (middle of a longest path; for a
/// bicenter the smaller id). With r_1..r_k the depths of the root's child
/// subtrees, a vertex v inside subtree i has
///
///   ecc(v) = depth(v) + 1 + max over j != i of r_j
///
/// because the center property guarantees the farthest vertex from v lies
/// outside v's own subtree (or ties it). The max-over-others is served by the
/// top two subtree depths; -1 stands in when the root has a single subtree,
/// which only happens for n = 2.
pub fn eccentricities_linear(t: &Tree) -> EccProfile {
    let n = t.n();
    if n == 1 {
        return EccProfile::from_eccentricities(vec![0]);
    }
    let path = diameter_path(t);
    let d = path.len() - 1;
    let root = if d.is_multiple_of(2) {
        path[d / 2]
    } else {
        path[d / 2].min(path[d / 2 + 1])
    };
    let sd = subtree_depths(t, root);

    let mut best1 = -1i64;
    let mut best2 = -1i64;
    let mut best1_child = usize::MAX;
    for &c in t.neighbors(root) {
        let r = sd.down[c] as i64;
        if r > best1 {
            best2 = best1;
            best1 = r;
            best1_child = c;
        } else if r > best2 {
            best2 = r;
        }
    }

    // which root-child subtree each vertex lives in
    let mut branch = vec![usize::MAX; n];
    for &v in &sd.order {
        if v != root {
            let p = sd.parent[v];
            branch[v] = if p == root { v } else { branch[p] };
        }
    }

    let mut ecc = vec![0usize; n];
    ecc[root] = (1 + best1) as usize;
    for v in 0..n {
        if v == root {
            continue;
        }
        let others = if branch[v] == best1_child { best2 } else { best1 };
        ecc[v] = (sd.depth[v] as i64 + 1 + others) as usize;
    }
    EccProfile::from_eccentricities(ecc)
}

/// Index of the path graph: floor((3(n-1)^2 + 1) / 2). Exact for all n >= 1.
pub fn xi_path_closed(n: usize) -> XiValue {
    assert!(n >= 1);
    let m = (n - 1) as u64;
    XiValue((3 * m * m).div_ceil(2))
}

/// Index of the star: 3(n-1). The formula needs n >= 3; the two-vertex star
/// is the path P_2 whose value 2 the formula misses, so that input is
/// rejected rather than silently miscomputed.
pub fn xi_star_closed(n: usize) -> XiValue {
    assert!(n >= 3, "star closed form holds for n >= 3 only");
    XiValue(3 * (n as u64 - 1))
}

/// Index of the broom with hub degree delta on n vertices:
/// floor((3n^2 - 2*delta*n - 2n - delta^2 + 4*delta) / 2) for 3 <= delta <= n-2.
pub fn xi_broom_closed(n: usize, delta: usize) -> Result<XiValue, DescriptorError> {
    if !(3..=n.saturating_sub(2)).contains(&delta) {
        return Err(DescriptorError::ParamOutOfRange(format!(
            "broom closed form needs 3 <= delta <= n-2, got n={n} delta={delta}"
        )));
    }
    let (n, d) = (n as i128, delta as i128);
    let num = 3 * n * n - 2 * d * n - 2 * n - d * d + 4 * d;
    debug_assert!(num >= 0);
    Ok(XiValue((num / 2) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn path(n: usize) -> Tree {
        families::path(n).unwrap()
    }

    #[test]
    fn oracle_values() {
        assert_eq!(xi_oracle(&path(2)), XiValue(2));
        assert_eq!(xi_oracle(&path(11)), XiValue(150));
        assert_eq!(xi_oracle(&families::star(11).unwrap()), XiValue(30));
    }

    #[test]
    fn subtree_depths_small() {
        let sd = subtree_depths(&path(4), 1);
        assert_eq!(sd.down, vec![0, 2, 1, 0]);
        assert_eq!(sd.parent[1], NO_PARENT);
        assert_eq!(sd.parent[0], 1);
        assert_eq!(sd.depth, vec![1, 0, 1, 2]);
    }

    #[test]
    fn subtree_depths_stays_iterative_on_long_paths() {
        let n = 200_000;
        let sd = subtree_depths(&path(n), 0);
        assert_eq!(sd.down[0], n - 1);
    }

    #[test]
    fn linear_profile_matches_oracle_on_edge_shapes() {
        let shapes = vec![
            path(1),
            path(2),
            path(3),
            path(4),
            path(9),
            families::star(5).unwrap(),
            families::star(2).unwrap(),
            families::broom(11, 6).unwrap(),
            families::starlike(&[2, 2, 2]).unwrap(),
            families::volkmann(13, 6).unwrap(),
            families::diameter_tree(9, 4, 2).unwrap(),
        ];
        for t in shapes {
            assert_eq!(eccentricities_linear(&t), t.ecc_profile_oracle(), "{t:?}");
        }
    }

    #[test]
    fn linear_values() {
        assert_eq!(xi_linear(&path(11)), XiValue(150));
        assert_eq!(xi_linear(&families::broom(11, 6).unwrap()), XiValue(98));
        assert_eq!(xi_linear(&families::volkmann(13, 6).unwrap()), XiValue(72));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(xi_path_closed(1), XiValue(0));
        assert_eq!(xi_path_closed(2), XiValue(2));
        assert_eq!(xi_path_closed(11), XiValue(150));
        assert_eq!(xi_path_closed(20), XiValue(542));
        assert_eq!(xi_star_closed(11), XiValue(30));
        assert_eq!(xi_star_closed(20), XiValue(57));
        assert_eq!(xi_broom_closed(11, 6).unwrap(), XiValue(98));
        assert_eq!(xi_broom_closed(11, 3).unwrap(), XiValue(139));
        assert!(xi_broom_closed(11, 2).is_err());
        assert!(xi_broom_closed(11, 10).is_err());
        assert_eq!(xi_broom_closed(5, 3).unwrap(), XiValue(19));
    }

    #[test]
    fn closed_forms_match_constructions_up_to_200() {
        for n in 1..=200 {
            assert_eq!(xi_linear(&path(n)), xi_path_closed(n), "path n={n}");
        }
        for n in 3..=200 {
            assert_eq!(xi_linear(&families::star(n).unwrap()), xi_star_closed(n), "star n={n}");
        }
    }
}
