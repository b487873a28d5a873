//! Block decomposition: maximal 2-connected submaps.
//!
//! Non-loop edges are split by a low-link traversal of the underlying
//! multigraph (parallel edges stay distinct, so a digon is one block). Every
//! loop is a block of its own, which makes a vertex carrying a loop and any
//! other edge a cut vertex.

use super::{Exploration, RootedMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Parent-map darts of the block, sorted by the parent's corner order.
    pub darts: Vec<usize>,
    /// The induced map; its dart `i` is `darts[i]`, rooted at `darts[0]`
    /// (the root dart for the root block, otherwise the dart by which the
    /// breadth-first search first enters the block).
    pub map: RootedMap,
}

impl Block {
    pub fn num_edges(&self) -> usize {
        self.darts.len() / 2
    }
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    /// Blocks sorted by the corner rank of their root dart; the root block
    /// comes first.
    pub blocks: Vec<Block>,
    /// Vertex ids (as in [`RootedMap::vertex_of`]) lying in two or more
    /// blocks, in breadth-first order.
    pub cut_vertices: Vec<usize>,
}

/// Partition of the edges into blocks, as lists of edge representatives
/// (the smaller dart of each edge).
pub(crate) fn edge_blocks(m: &RootedMap, vertex_of: &[usize]) -> Vec<Vec<usize>> {
    let nv = vertex_of.iter().max().map_or(0, |x| x + 1);
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    let mut out = Vec::new();
    for d in 0..m.num_darts() {
        let t = m.twin[d];
        if d > t {
            continue;
        }
        let (u, w) = (vertex_of[d], vertex_of[t]);
        if u == w {
            out.push(vec![d]);
        } else {
            adj[u].push((w, d));
            adj[w].push((u, d));
        }
    }

    const UNSET: usize = usize::MAX;
    let mut disc = vec![UNSET; nv];
    let mut low = vec![0; nv];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    // (vertex, edge to parent, next adjacency index)
    let mut frames: Vec<(usize, Option<usize>, usize)> = Vec::new();
    for r in 0..nv {
        if disc[r] != UNSET {
            continue;
        }
        disc[r] = time;
        low[r] = time;
        time += 1;
        frames.push((r, None, 0));
        while let Some(top) = frames.last_mut() {
            let (v, pe, i) = *top;
            if i < adj[v].len() {
                top.2 += 1;
                let (w, e) = adj[v][i];
                if Some(e) == pe {
                    continue;
                }
                if disc[w] == UNSET {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(u, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let pe = pe.expect("non-root frame has a parent edge");
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        out.push(comp);
                    }
                }
            }
        }
    }
    out
}

/// Splits a nontrivial map into its blocks.
pub fn blocks(m: &RootedMap) -> BlockDecomposition {
    if m.is_trivial() {
        return BlockDecomposition { blocks: Vec::new(), cut_vertices: Vec::new() };
    }
    let ex = Exploration::new(m);
    let order = ex.corner_order(m);
    let mut rank = vec![0; m.num_darts()];
    for (i, &d) in order.iter().enumerate() {
        rank[d] = i;
    }
    let nv = ex.ordering.order.len();
    let mut block_count_at = vec![0usize; nv];
    let mut blocks: Vec<Block> = edge_blocks(m, &ex.vertex_of)
        .into_iter()
        .map(|edges| {
            let mut darts: Vec<usize> = edges.iter().flat_map(|&e| [e, m.twin[e]]).collect();
            darts.sort_by_key(|&d| rank[d]);
            let mut verts: Vec<usize> = darts.iter().map(|&d| ex.vertex_of[d]).collect();
            verts.sort_unstable();
            verts.dedup();
            for v in verts {
                block_count_at[v] += 1;
            }
            let map = m.induced(&darts, darts[0]);
            Block { darts, map }
        })
        .collect();
    blocks.sort_by_key(|b| rank[b.darts[0]]);
    let cut_vertices = ex
        .ordering
        .order
        .iter()
        .copied()
        .filter(|&v| block_count_at[v] >= 2)
        .collect();
    BlockDecomposition { blocks, cut_vertices }
}

/// True iff no split of the edges into two nonempty parts shares exactly one
/// vertex. The trivial map counts as 2-connected.
pub fn is_two_connected(m: &RootedMap) -> bool {
    if m.is_trivial() {
        return true;
    }
    edge_blocks(m, &m.vertex_of()).len() == 1
}
