//! Breadth-first vertex order, the BFS spanning tree and the corner order.

use super::RootedMap;

/// Vertices listed in breadth-first order from the root vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    /// Vertex ids (as in [`RootedMap::vertex_of`]) in increasing order.
    pub order: Vec<usize>,
    /// `rank[v]` is the position of vertex `v` in `order`.
    pub rank: Vec<usize>,
}

/// Breadth-first spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    /// For each vertex, the tree dart leading from it to its parent; `None`
    /// at the root vertex.
    pub parent_dart: Vec<Option<usize>>,
}

impl SpanningTree {
    pub fn num_tree_edges(&self) -> usize {
        self.parent_dart.iter().filter(|p| p.is_some()).count()
    }
}

/// Everything one breadth-first pass yields.
#[derive(Debug, Clone)]
pub struct Exploration {
    pub vertex_of: Vec<usize>,
    pub ordering: VertexOrdering,
    pub tree: SpanningTree,
    /// Dart at which the counterclockwise scan of each vertex starts: the
    /// root dart at the root vertex, the parent dart elsewhere.
    pub start: Vec<usize>,
}

impl Exploration {
    /// Runs the search. The map must be nontrivial.
    pub fn new(m: &RootedMap) -> Self {
        assert!(!m.is_trivial(), "exploration of the trivial map");
        let vertex_of = m.vertex_of();
        let nv = vertex_of.iter().max().map_or(0, |x| x + 1);
        let root = m.root;
        let mut start = vec![usize::MAX; nv];
        let mut parent_dart = vec![None; nv];
        let mut visited = vec![false; nv];
        let mut order = Vec::with_capacity(nv);

        let rv = vertex_of[root];
        visited[rv] = true;
        start[rv] = root;
        order.push(rv);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            let s = start[u];
            let mut d = s;
            loop {
                let back = m.twin[d];
                let w = vertex_of[back];
                if !visited[w] {
                    visited[w] = true;
                    start[w] = back;
                    parent_dart[w] = Some(back);
                    order.push(w);
                }
                d = m.next[d];
                if d == s {
                    break;
                }
            }
        }
        let mut rank = vec![0; nv];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        Exploration {
            vertex_of,
            ordering: VertexOrdering { order, rank },
            tree: SpanningTree { parent_dart },
            start,
        }
    }

    /// Darts sorted by the corner order.
    pub fn corner_order(&self, m: &RootedMap) -> Vec<usize> {
        let mut out = Vec::with_capacity(m.num_darts());
        for &v in &self.ordering.order {
            let s = self.start[v];
            let mut d = s;
            loop {
                out.push(d);
                d = m.next[d];
                if d == s {
                    break;
                }
            }
        }
        out
    }
}

/// Breadth-first order of the vertices. The trivial map has a single vertex.
pub fn bfs_order(m: &RootedMap) -> VertexOrdering {
    if m.is_trivial() {
        return VertexOrdering { order: vec![0], rank: vec![0] };
    }
    Exploration::new(m).ordering
}

pub fn bfs_tree(m: &RootedMap) -> SpanningTree {
    if m.is_trivial() {
        return SpanningTree { parent_dart: vec![None] };
    }
    Exploration::new(m).tree
}

/// All darts in corner order: by breadth-first rank of the tail, then
/// counterclockwise from the parent dart (from the root dart at the root
/// vertex).
pub fn corner_order(m: &RootedMap) -> Vec<usize> {
    if m.is_trivial() {
        return Vec::new();
    }
    Exploration::new(m).corner_order(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_edge_maps() {
        let link = RootedMap::link_map();
        let vo = link.vertex_of();
        let ord = bfs_order(&link);
        assert_eq!(ord.order, vec![vo[0], vo[1]]);
        let tree = bfs_tree(&link);
        assert_eq!(tree.parent_dart[vo[1]], Some(1));
        assert_eq!(tree.parent_dart[vo[0]], None);
        assert_eq!(corner_order(&link), vec![0, 1]);

        let lp = RootedMap::loop_map();
        assert_eq!(bfs_order(&lp).order, vec![0]);
        assert_eq!(bfs_tree(&lp).num_tree_edges(), 0);
        assert_eq!(corner_order(&lp), vec![0, 1]);
    }

    #[test]
    fn trivial_map() {
        assert_eq!(bfs_order(&RootedMap::trivial()).order, vec![0]);
        assert!(corner_order(&RootedMap::trivial()).is_empty());
    }

    #[test]
    fn parallel_edges_pick_first_copy_counterclockwise_from_root() {
        // digon between u and v: darts 0 (u->v), 2 (u->v); twins 1, 3.
        // rotation at u: 0 then 2; at v: 1 then 3.
        let m = RootedMap::from_parts(vec![1, 0, 3, 2], vec![2, 3, 0, 1], 0);
        let vo = m.vertex_of();
        assert_eq!(bfs_tree(&m).parent_dart[vo[1]], Some(1));
        // rooted at the other copy, the scan from dart 2 meets dart 2 first
        let m2 = RootedMap::from_parts(vec![1, 0, 3, 2], vec![2, 3, 0, 1], 2);
        assert_eq!(bfs_tree(&m2).parent_dart[vo[1]], Some(3));
        // corner order at v starts from the parent dart
        assert_eq!(corner_order(&m2), vec![2, 0, 3, 1]);
    }
}
