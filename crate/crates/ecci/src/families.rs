//! Named tree families: paths, stars, starlike trees, brooms, the
//! perfect-matching extremal trees, balanced starlike trees, the
//! breadth-first-packed trees that minimize the index at fixed maximum
//! degree, and the bounded-diameter minimizers.
//!
//! Every constructor labels vertices deterministically so that two calls with
//! equal parameters yield identical edge lists, not merely isomorphic trees.

use serde::Serialize;
use thiserror::Error;

use crate::tree::Tree;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameters out of range: {0}")]
    ParamOutOfRange(String),
    #[error("parity constraint violated: {0}")]
    Parity(String),
}

fn out_of_range(msg: impl Into<String>) -> FamilyError {
    FamilyError::ParamOutOfRange(msg.into())
}

/// Path 0-1-...-(n-1).
pub fn path(n: usize) -> Result<Tree, FamilyError> {
    if n < 1 {
        return Err(out_of_range("path needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Ok(Tree::from_edges(n, &edges).expect("path edges are well formed"))
}

/// Star with center 0 and leaves 1..n-1.
pub fn star(n: usize) -> Result<Tree, FamilyError> {
    if n < 2 {
        return Err(out_of_range("star needs n >= 2"));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Ok(Tree::from_edges(n, &edges).expect("star edges are well formed"))
}

/// Starlike tree: a root of degree `legs.len()` with pendant paths of the
/// given lengths. The root is 0 and leg vertices take consecutive labels in
/// the order the lengths are given.
pub fn starlike(legs: &[usize]) -> Result<Tree, FamilyError> {
    if legs.is_empty() {
        return Err(out_of_range("starlike needs at least one leg"));
    }
    if legs.contains(&0) {
        return Err(out_of_range("starlike legs must have length >= 1"));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(Tree::from_edges(n, &edges).expect("starlike edges are well formed"))
}

/// Broom: a path of n - delta + 1 vertices with delta - 1 extra leaves on one
/// end. Maximum degree delta. Degenerates to the path at delta = 2 and the
/// star at delta = n - 1.
pub fn broom(n: usize, delta: usize) -> Result<Tree, FamilyError> {
    if n < 3 || !(2..=n - 1).contains(&delta) {
        return Err(out_of_range(format!(
            "broom needs n >= 3 and 2 <= delta <= n-1, got n={n} delta={delta}"
        )));
    }
    let mut legs = vec![n - delta];
    legs.extend(std::iter::repeat_n(1, delta - 1));
    starlike(&legs)
}

/// The broom's runner-up: shorten the handle by one and grow one leaf into a
/// two-edge path. Needs 3 <= delta <= n - 3 so the shape differs from both
/// the broom and the star.
pub fn second_broom(n: usize, delta: usize) -> Result<Tree, FamilyError> {
    if n < 6 || !(3..=n - 3).contains(&delta) {
        return Err(out_of_range(format!(
            "second broom needs 3 <= delta <= n-3, got n={n} delta={delta}"
        )));
    }
    let mut legs = vec![n - delta - 1, 2];
    legs.extend(std::iter::repeat_n(1, delta - 2));
    starlike(&legs)
}

/// Extremal tree among trees with a perfect matching and maximum degree
/// delta: one long leg of n - 2*delta + 2 vertices, delta - 2 legs of two
/// vertices, one single leaf. Every leg pairs off internally and the last
/// leaf pairs with the root.
pub fn matching_tree(n: usize, delta: usize) -> Result<Tree, FamilyError> {
    if !n.is_multiple_of(2) {
        return Err(FamilyError::Parity(format!(
            "matching tree needs even n, got n={n}"
        )));
    }
    if n < 4 || !(2..=n / 2).contains(&delta) {
        return Err(out_of_range(format!(
            "matching tree needs n >= 4 and 2 <= delta <= n/2, got n={n} delta={delta}"
        )));
    }
    let mut legs = vec![n - 2 * delta + 2];
    legs.extend(std::iter::repeat_n(2, delta - 2));
    legs.push(1);
    starlike(&legs)
}

/// Starlike tree with p legs as equal as possible: (n-1) mod p legs of
/// length ceil((n-1)/p), the rest floor((n-1)/p). Longer legs first.
pub fn balanced_starlike(n: usize, p: usize) -> Result<Tree, FamilyError> {
    if !(3..=n.saturating_sub(2)).contains(&p) {
        return Err(out_of_range(format!(
            "balanced starlike needs 2 < p < n-1, got n={n} p={p}"
        )));
    }
    let q = (n - 1) / p;
    let rem = (n - 1) % p;
    let mut legs = vec![q + 1; rem];
    legs.extend(std::iter::repeat_n(q, p - rem));
    starlike(&legs)
}

/// Shape summary for [`volkmann`]: the deepest fully packed level and how
/// many vertices spill onto the next one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VolkmannLayout {
    pub full_levels: usize,
    pub leftover: usize,
}

/// How deep the breadth-first packing gets before vertices run out.
pub fn volkmann_layout(n: usize, delta: usize) -> VolkmannLayout {
    let mut filled: u128 = 1;
    let mut width: u128 = delta as u128;
    let mut k = 0;
    while filled + width <= n as u128 {
        filled += width;
        k += 1;
        width *= (delta - 1) as u128;
    }
    VolkmannLayout { full_levels: k, leftover: (n as u128 - filled) as usize }
}

/// Breadth-first packed tree: the root takes delta children, every later
/// vertex takes delta - 1, each level fills completely (left to right) before
/// the next one starts. Labels are breadth-first: 0 is the root, levels take
/// consecutive label ranges. Max degree is min(delta, n-1).
pub fn volkmann(n: usize, delta: usize) -> Result<Tree, FamilyError> {
    if n < 2 || delta < 2 {
        return Err(out_of_range(format!(
            "volkmann tree needs n >= 2 and delta >= 2, got n={n} delta={delta}"
        )));
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut parent = 0;
    let mut kids_of_parent = 0;
    for v in 1..n {
        let cap = if parent == 0 { delta } else { delta - 1 };
        if kids_of_parent == cap {
            parent += 1;
            kids_of_parent = 0;
        }
        edges.push((parent, v));
        kids_of_parent += 1;
    }
    Ok(Tree::from_edges(n, &edges).expect("level packing is well formed"))
}

/// Minimizer at fixed diameter d: a path 0-1-...-d with the remaining
/// n - d - 1 vertices attached as leaves to the one or two middle path
/// vertices. `at_floor` of them go to vertex floor(d/2), the rest to
/// ceil(d/2); for even d the two coincide and the split is immaterial.
pub fn diameter_tree(n: usize, d: usize, at_floor: usize) -> Result<Tree, FamilyError> {
    if !(2..=n.saturating_sub(1)).contains(&d) {
        return Err(out_of_range(format!(
            "diameter tree needs 2 <= d <= n-1, got n={n} d={d}"
        )));
    }
    let spare = n - d - 1;
    if at_floor > spare {
        return Err(out_of_range(format!(
            "diameter tree has {spare} spare vertices, cannot put {at_floor} at the floor midpoint"
        )));
    }
    let mut edges: Vec<_> = (1..=d).map(|v| (v - 1, v)).collect();
    let (lo, hi) = (d / 2, d - d / 2);
    for i in 0..spare {
        let hub = if i < at_floor { lo } else { hi };
        edges.push((hub, d + 1 + i));
    }
    Ok(Tree::from_edges(n, &edges).expect("diameter tree edges are well formed"))
}

/// One parameterized family, addressable by name; the command line builds
/// trees through this.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Path,
    Star,
    Starlike,
    Broom,
    SecondBroom,
    MatchingTree,
    BalancedStarlike,
    Volkmann,
    DiameterTree,
}

impl std::str::FromStr for FamilyKind {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "path" => FamilyKind::Path,
            "star" => FamilyKind::Star,
            "starlike" => FamilyKind::Starlike,
            "broom" => FamilyKind::Broom,
            "second-broom" => FamilyKind::SecondBroom,
            "matching-tree" => FamilyKind::MatchingTree,
            "balanced-starlike" => FamilyKind::BalancedStarlike,
            "volkmann" => FamilyKind::Volkmann,
            "diameter-tree" => FamilyKind::DiameterTree,
            other => {
                return Err(FamilyError::ParamOutOfRange(format!(
                    "unknown family {other:?}; expected one of path, star, starlike, broom, \
                     second-broom, matching-tree, balanced-starlike, volkmann, diameter-tree"
                )))
            }
        })
    }
}

/// A family plus its parameters. Unused parameters may stay `None`; missing
/// required ones surface as `ParamOutOfRange` from `build`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct FamilySpec {
    pub kind: Option<FamilyKind>,
    pub n: Option<usize>,
    pub delta: Option<usize>,
    pub legs: Option<Vec<usize>>,
    pub p: Option<usize>,
    pub d: Option<usize>,
    pub at_floor: Option<usize>,
}

impl FamilySpec {
    fn need(v: Option<usize>, what: &str) -> Result<usize, FamilyError> {
        v.ok_or_else(|| out_of_range(format!("{what} is required for this family")))
    }

    pub fn build(&self) -> Result<Tree, FamilyError> {
        let kind = self.kind.ok_or_else(|| out_of_range("no family kind given"))?;
        let n = || Self::need(self.n, "n");
        let delta = || Self::need(self.delta, "delta");
        match kind {
            FamilyKind::Path => path(n()?),
            FamilyKind::Star => star(n()?),
            FamilyKind::Starlike => {
                let legs = self
                    .legs
                    .as_deref()
                    .ok_or_else(|| out_of_range("legs are required for starlike"))?;
                starlike(legs)
            }
            FamilyKind::Broom => broom(n()?, delta()?),
            FamilyKind::SecondBroom => second_broom(n()?, delta()?),
            FamilyKind::MatchingTree => matching_tree(n()?, delta()?),
            FamilyKind::BalancedStarlike => {
                balanced_starlike(n()?, Self::need(self.p, "p")?)
            }
            FamilyKind::Volkmann => volkmann(n()?, delta()?),
            FamilyKind::DiameterTree => {
                diameter_tree(n()?, Self::need(self.d, "d")?, self.at_floor.unwrap_or(0))
            }
        }
    }
}
