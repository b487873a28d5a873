//! Rooted planar maps encoded as rotation systems.
//!
//! A map with `E` edges has `2E` darts (half-edges) numbered `0..2E`.
//! `twin` pairs the two darts of an edge and `next` sends a dart to its
//! counterclockwise successor around its tail vertex. Vertices are the
//! orbits of `next`, faces the orbits of `next ∘ twin`. The root dart is the
//! oriented root edge, pointing from its tail (the root vertex) to its head.
//!
//! The trivial map (one vertex, no edges) is the value with zero darts.

mod blocks;
mod blocktree;
mod order;

pub use blocks::{blocks, is_two_connected, Block, BlockDecomposition};
pub use blocktree::{assemble, block_tree, pendant_submap, BlockTree, BlockTreeNode};
pub use order::{bfs_order, bfs_tree, corner_order, Exploration, SpanningTree, VertexOrdering};

use serde::{Deserialize, Serialize};

use crate::error::MapError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedMap {
    twin: Vec<usize>,
    next: Vec<usize>,
    root: usize,
}

impl RootedMap {
    /// The map with one vertex and no edges.
    pub fn trivial() -> Self {
        RootedMap { twin: Vec::new(), next: Vec::new(), root: 0 }
    }

    /// Builds a map and checks every structural invariant.
    pub fn new(twin: Vec<usize>, next: Vec<usize>, root: usize) -> Result<Self, MapError> {
        let m = RootedMap { twin, next, root };
        let violations = validate(&m);
        if violations.is_empty() {
            Ok(m)
        } else {
            Err(MapError::Invalid(violations))
        }
    }

    /// Builds a map without validation. Callers must uphold the invariants.
    pub(crate) fn from_parts(twin: Vec<usize>, next: Vec<usize>, root: usize) -> Self {
        debug_assert!(validate(&RootedMap { twin: twin.clone(), next: next.clone(), root }).is_empty());
        RootedMap { twin, next, root }
    }

    /// The single-edge loop.
    pub fn loop_map() -> Self {
        RootedMap::from_parts(vec![1, 0], vec![1, 0], 0)
    }

    /// The single-edge link between two distinct vertices.
    pub fn link_map() -> Self {
        RootedMap::from_parts(vec![1, 0], vec![0, 1], 0)
    }

    pub fn is_trivial(&self) -> bool {
        self.twin.is_empty()
    }

    pub fn num_darts(&self) -> usize {
        self.twin.len()
    }

    pub fn num_edges(&self) -> usize {
        self.twin.len() / 2
    }

    /// Root dart, `None` for the trivial map.
    pub fn root(&self) -> Option<usize> {
        if self.is_trivial() {
            None
        } else {
            Some(self.root)
        }
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    pub fn next(&self, d: usize) -> usize {
        self.next[d]
    }

    pub fn twins(&self) -> &[usize] {
        &self.twin
    }

    pub fn nexts(&self) -> &[usize] {
        &self.next
    }

    /// Vertex id of the tail of each dart. Ids are assigned in order of the
    /// smallest dart of each `next`-orbit.
    pub fn vertex_of(&self) -> Vec<usize> {
        orbit_ids(&self.next)
    }

    pub fn num_vertices(&self) -> usize {
        if self.is_trivial() {
            1
        } else {
            count_orbits(&self.next)
        }
    }

    pub fn num_faces(&self) -> usize {
        if self.is_trivial() {
            return 1;
        }
        let phi: Vec<usize> = (0..self.num_darts()).map(|d| self.next[self.twin[d]]).collect();
        count_orbits(&phi)
    }

    pub fn is_loop(&self, d: usize, vertex_of: &[usize]) -> bool {
        vertex_of[d] == vertex_of[self.twin[d]]
    }

    /// Sub-map induced by a twin-closed set of darts. Dart `i` of the result
    /// is `darts[i]`; the rotation skips darts outside the set.
    pub fn induced(&self, darts: &[usize], root: usize) -> RootedMap {
        if darts.is_empty() {
            return RootedMap::trivial();
        }
        let mut local = vec![usize::MAX; self.num_darts()];
        for (i, &d) in darts.iter().enumerate() {
            local[d] = i;
        }
        let twin = darts.iter().map(|&d| local[self.twin[d]]).collect();
        let next = darts
            .iter()
            .map(|&d| {
                let mut e = self.next[d];
                while local[e] == usize::MAX {
                    e = self.next[e];
                }
                local[e]
            })
            .collect();
        RootedMap::from_parts(twin, next, local[root])
    }

    /// The same map rooted at dart `r`.
    pub fn rerooted(&self, r: usize) -> RootedMap {
        assert!(r < self.num_darts(), "root out of range");
        RootedMap { twin: self.twin.clone(), next: self.next.clone(), root: r }
    }

    /// Relabels darts by their rank in the corner order. Two rooted maps are
    /// isomorphic iff their canonical forms are equal.
    pub fn canonical(&self) -> RootedMap {
        if self.is_trivial() {
            return RootedMap::trivial();
        }
        let order = corner_order(self);
        let mut rank = vec![0; self.num_darts()];
        for (i, &d) in order.iter().enumerate() {
            rank[d] = i;
        }
        let mut twin = vec![0; order.len()];
        let mut next = vec![0; order.len()];
        for &d in &order {
            twin[rank[d]] = rank[self.twin[d]];
            next[rank[d]] = rank[self.next[d]];
        }
        RootedMap { twin, next, root: rank[self.root] }
    }

    pub fn is_canonical(&self) -> bool {
        self.is_trivial() || self.canonical() == *self
    }

    pub fn to_record(&self) -> MapRecord {
        if self.is_trivial() {
            MapRecord { num_darts: 0, twin: None, next: None, root: None }
        } else {
            MapRecord {
                num_darts: self.num_darts(),
                twin: Some(self.twin.clone()),
                next: Some(self.next.clone()),
                root: Some(self.root),
            }
        }
    }

    pub fn from_record(rec: &MapRecord) -> Result<Self, MapError> {
        if rec.num_darts == 0 {
            return Ok(RootedMap::trivial());
        }
        let (Some(twin), Some(next), Some(root)) = (&rec.twin, &rec.next, rec.root) else {
            return Err(MapError::Invalid(vec!["nonempty map record needs twin, next and root".into()]));
        };
        if twin.len() != rec.num_darts || next.len() != rec.num_darts {
            return Err(MapError::Invalid(vec!["num_darts does not match array lengths".into()]));
        }
        RootedMap::new(twin.clone(), next.clone(), root)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("map record serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, MapError> {
        let rec: MapRecord = serde_json::from_str(s).map_err(|e| MapError::Parse(e.to_string()))?;
        RootedMap::from_record(&rec)
    }
}

/// Serialized form of a map. The trivial map is `{"num_darts": 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapRecord {
    pub num_darts: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twin: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub next: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub(crate) fn orbit_ids(perm: &[usize]) -> Vec<usize> {
    let mut id = vec![usize::MAX; perm.len()];
    let mut count = 0;
    for start in 0..perm.len() {
        if id[start] != usize::MAX {
            continue;
        }
        let mut d = start;
        while id[d] == usize::MAX {
            id[d] = count;
            d = perm[d];
        }
        count += 1;
    }
    id
}

fn count_orbits(perm: &[usize]) -> usize {
    orbit_ids(perm).into_iter().max().map_or(0, |m| m + 1)
}

/// Lists every violated invariant; an empty list means the map is valid.
pub fn validate(m: &RootedMap) -> Vec<String> {
    let mut out = Vec::new();
    let n = m.twin.len();
    if n == 0 {
        if !m.next.is_empty() {
            out.push("trivial map must have an empty rotation".to_string());
        }
        return out;
    }
    if m.next.len() != n {
        out.push(format!("next has length {} but twin has length {}", m.next.len(), n));
        return out;
    }
    if !n.is_multiple_of(2) {
        out.push(format!("odd number of darts ({n})"));
    }
    if !is_permutation(&m.twin) {
        out.push("twin is not a permutation".to_string());
    } else {
        if m.twin.iter().enumerate().any(|(d, &t)| m.twin[t] != d) {
            out.push("twin is not an involution".to_string());
        }
        if m.twin.iter().enumerate().any(|(d, &t)| t == d) {
            out.push("twin not fixed-point-free".to_string());
        }
    }
    if !is_permutation(&m.next) {
        out.push("next is not a permutation".to_string());
    }
    if m.root >= n {
        out.push(format!("root {} out of range", m.root));
    }
    if !out.is_empty() {
        return out;
    }
    // connectivity of the group generated by twin and next
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(d) = stack.pop() {
        for e in [m.twin[d], m.next[d]] {
            if !seen[e] {
                seen[e] = true;
                reached += 1;
                stack.push(e);
            }
        }
    }
    if reached != n {
        out.push("map is not connected".to_string());
        return out;
    }
    let v = m.num_vertices() as i64;
    let e = (n / 2) as i64;
    let f = m.num_faces() as i64;
    if v - e + f != 2 {
        out.push(format!("not planar: V - E + F = {} - {} + {} = {}", v, e, f, v - e + f));
    }
    out
}
