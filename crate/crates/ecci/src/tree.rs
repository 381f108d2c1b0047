//! Tree storage, the edge-list text format, and the slow trusted reference
//! computations (BFS-per-vertex eccentricities, greedy perfect matching,
//! canonical codes). Everything here favors being obviously correct over
//! being fast; the linear-time counterparts live in [`crate::descriptor`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("tree needs at least one vertex")]
    Empty,
    #[error("first line must be the vertex count")]
    MissingHeader,
    #[error("unreadable token {0:?}")]
    Malformed(String),
    #[error("vertex id {0} outside 0..{1}")]
    BadVertexId(usize, usize),
    #[error("self edge at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("edge set does not connect all {0} vertices")]
    Disconnected(usize),
}

/// An unrooted tree on vertices `0..n`. Construction validates the tree
/// properties (n-1 edges, connected, no duplicates), so every value of this
/// type is a genuine tree. Adjacency lists are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if edges.len() != n - 1 {
            return Err(TreeError::WrongEdgeCount { expected: n - 1, found: edges.len() });
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(TreeError::BadVertexId(u, n));
            }
            if v >= n {
                return Err(TreeError::BadVertexId(v, n));
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(TreeError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let t = Tree { adj };
        // n-1 distinct edges + connected == tree
        let mut seen = vec![false; n];
        let mut queue = vec![0usize];
        seen[0] = true;
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &w in t.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        if queue.len() != n {
            return Err(TreeError::Disconnected(n));
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of degree-1 vertices.
    pub fn pendant_count(&self) -> usize {
        self.adj.iter().filter(|l| l.len() == 1).count()
    }

    /// Each edge once, as (u, v) with u < v, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Edge-list document: vertex count line, then one `u v` line per edge
    /// with u < v, edges sorted. Round-trips through the `FromStr` parser.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.n().to_string());
        out.push('\n');
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }

    pub(crate) fn bfs_dist(&self, src: usize, dist: &mut [u32], queue: &mut Vec<usize>) {
        dist.fill(u32::MAX);
        queue.clear();
        dist[src] = 0;
        queue.push(src);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &w in self.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push(w);
                }
            }
        }
    }

    /// Reference eccentricity profile: one BFS per vertex, O(n^2) total.
    pub fn ecc_profile_oracle(&self) -> EccProfile {
        let n = self.n();
        let mut dist = vec![0u32; n];
        let mut queue = Vec::with_capacity(n);
        let mut ecc = vec![0usize; n];
        for (v, e) in ecc.iter_mut().enumerate() {
            self.bfs_dist(v, &mut dist, &mut queue);
            *e = dist.iter().copied().max().unwrap() as usize;
        }
        EccProfile::from_eccentricities(ecc)
    }

    /// Trees have at most one perfect matching; greedy leaf elimination finds
    /// it (or proves there is none) in linear time. Each leaf is forced to
    /// match its only neighbor, which in turn creates new forced leaves.
    pub fn has_perfect_matching(&self) -> bool {
        let n = self.n();
        if !n.is_multiple_of(2) {
            return false;
        }
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut alive = vec![true; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        let mut matched = 0usize;
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            let Some(&w) = self.neighbors(v).iter().find(|&&w| alive[w]) else {
                return false; // v's partner was already consumed
            };
            alive[v] = false;
            alive[w] = false;
            matched += 2;
            for &x in self.neighbors(w) {
                if alive[x] {
                    deg[x] -= 1;
                    if deg[x] == 1 {
                        stack.push(x);
                    }
                }
            }
        }
        matched == n
    }

    /// Isomorphism-invariant fingerprint: the classic parenthesis code of the
    /// tree rooted at its center. Bicentral trees split at the center edge,
    /// and the two halves' codes are combined smaller-first under a distinct
    /// leading byte so the two cases can never collide.
    pub fn canonical_code(&self) -> CanonicalCode {
        let centers = self.ecc_profile_oracle().center;
        if centers.len() == 1 {
            let mut out = vec![b'U'];
            out.extend(self.rooted_code(centers[0], None));
            CanonicalCode(out)
        } else {
            let (c1, c2) = (centers[0], centers[1]);
            let a = self.rooted_code(c1, Some(c2));
            let b = self.rooted_code(c2, Some(c1));
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let mut out = vec![b'B'];
            out.extend(lo);
            out.extend(hi);
            CanonicalCode(out)
        }
    }

    /// Parenthesis code of the subtree rooted at `root`, with the `blocked`
    /// neighbor (if any) treated as absent. Children codes are sorted, so the
    /// result does not depend on vertex labels.
    fn rooted_code(&self, root: usize, blocked: Option<usize>) -> Vec<u8> {
        // BFS order gives parents before children; fold codes in reverse.
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut order = vec![root];
        parent[root] = root;
        if let Some(b) = blocked {
            // sentinel so the blocked side is never entered
            parent[b] = b;
        }
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in self.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
        let mut codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
        for &v in order.iter().rev() {
            let mut kids = std::mem::take(&mut codes[v]);
            kids.sort();
            let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
            code.push(b'(');
            for k in kids {
                code.extend(k);
            }
            code.push(b')');
            if v == root {
                return code;
            }
            codes[parent[v]].push(code);
        }
        unreachable!("root is always in the BFS order");
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl FromStr for Tree {
    type Err = TreeError;

    /// Edge-list format: first non-blank token is the vertex count n, followed
    /// by n-1 pairs `u v`. Any whitespace layout is accepted.
    fn from_str(s: &str) -> Result<Tree, TreeError> {
        let mut tokens = s.split_whitespace();
        let head = tokens.next().ok_or(TreeError::MissingHeader)?;
        let n: usize = head.parse().map_err(|_| TreeError::Malformed(head.to_string()))?;
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut nums = Vec::new();
        for tok in tokens {
            let x: usize = tok.parse().map_err(|_| TreeError::Malformed(tok.to_string()))?;
            nums.push(x);
        }
        if nums.len() != 2 * (n - 1) {
            return Err(TreeError::WrongEdgeCount { expected: n - 1, found: nums.len().div_ceil(2) });
        }
        let edges: Vec<(usize, usize)> = nums.chunks(2).map(|c| (c[0], c[1])).collect();
        Tree::from_edges(n, &edges)
    }
}

/// Per-vertex eccentricities plus the derived radius, diameter, and center.
/// For a tree the center is one vertex or two adjacent ones, and the diameter
/// is 2r or 2r-1; both facts are checked at construction in debug builds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccProfile {
    pub ecc: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    /// All vertices of minimum eccentricity, ascending. Length 1 or 2.
    pub center: Vec<usize>,
}

impl EccProfile {
    pub fn from_eccentricities(ecc: Vec<usize>) -> EccProfile {
        let radius = *ecc.iter().min().expect("nonempty");
        let diameter = *ecc.iter().max().expect("nonempty");
        let center: Vec<usize> =
            (0..ecc.len()).filter(|&v| ecc[v] == radius).collect();
        debug_assert!(center.len() == 1 || center.len() == 2);
        debug_assert!(diameter <= 2 * radius && diameter + 1 >= 2 * radius);
        debug_assert_eq!(center.len() == 1, diameter == 2 * radius);
        EccProfile { ecc, radius, diameter, center }
    }

    pub fn is_bicentral(&self) -> bool {
        self.center.len() == 2
    }
}

/// Canonical form as a byte string; equal codes == isomorphic trees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", String::from_utf8_lossy(&self.0))
    }
}
