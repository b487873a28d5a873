//! The block tree of a rooted map and its inverse.
//!
//! The root node carries the root block `B`. Its `2|e(B)|` children follow
//! the corner order of `B`; child `i` is a leaf when the counterclockwise
//! successor of the `i`-th dart `a_i` in the whole map is again a dart of
//! `B`, and otherwise carries the block tree of the pendant submap in the
//! corner of `a_i`, rooted at that successor.

use super::blocks::edge_blocks;
use super::{corner_order, is_two_connected, RootedMap};
use crate::error::MapError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTreeNode {
    /// Canonical form of the block this node represents; trivial at leaves.
    pub block: RootedMap,
    /// Child node indices, left to right.
    pub children: Vec<usize>,
}

/// Ordered plane tree with a block attached to every node. Nodes are stored
/// in depth-first (lexicographic) order, the root at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTree {
    pub nodes: Vec<BlockTreeNode>,
}

impl BlockTree {
    /// Builds the tree from a depth-first outdegree sequence and the block of
    /// each node (same order).
    pub fn from_parts(outdegrees: &[usize], blocks: Vec<RootedMap>) -> Result<Self, MapError> {
        if outdegrees.len() != blocks.len() || outdegrees.is_empty() {
            return Err(MapError::Invalid(vec!["outdegree and block lists differ in length".into()]));
        }
        let mut nodes: Vec<BlockTreeNode> = blocks
            .into_iter()
            .map(|block| BlockTreeNode { block, children: Vec::new() })
            .collect();
        // stack of (node, children still to attach)
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for (i, &d) in outdegrees.iter().enumerate() {
            if i > 0 {
                let Some(top) = stack.last_mut() else {
                    return Err(MapError::Invalid(vec!["outdegrees do not describe a tree".into()]));
                };
                let parent = top.0;
                top.1 -= 1;
                if top.1 == 0 {
                    stack.pop();
                }
                nodes[parent].children.push(i);
            }
            if d > 0 {
                stack.push((i, d));
            }
        }
        if !stack.is_empty() {
            return Err(MapError::Invalid(vec!["outdegrees do not describe a tree".into()]));
        }
        Ok(BlockTree { nodes })
    }

    pub fn outdegrees(&self) -> Vec<usize> {
        self.nodes.iter().map(|n| n.children.len()).collect()
    }

    /// Edges of the encoded map, i.e. half the total outdegree.
    pub fn num_map_edges(&self) -> usize {
        self.nodes.iter().map(|n| n.block.num_edges()).sum()
    }

    /// Checks that every node has exactly twice as many children as its block
    /// has edges, and that every block is 2-connected.
    pub fn check(&self) -> Result<(), MapError> {
        for (i, node) in self.nodes.iter().enumerate() {
            if node.children.len() != node.block.num_darts() {
                return Err(MapError::DegreeMismatch {
                    node: i,
                    outdegree: node.children.len(),
                    block_edges: node.block.num_edges(),
                });
            }
            if !is_two_connected(&node.block) {
                return Err(MapError::NotTwoConnected(i));
            }
        }
        Ok(())
    }
}

fn root_block_mask(m: &RootedMap, vertex_of: &[usize]) -> Vec<bool> {
    let root_edge = m.root.min(m.twin[m.root]);
    let comp = edge_blocks(m, vertex_of)
        .into_iter()
        .find(|c| c.contains(&root_edge))
        .expect("root edge lies in some block");
    let mut mask = vec![false; m.num_darts()];
    for e in comp {
        mask[e] = true;
        mask[m.twin[e]] = true;
    }
    mask
}

fn pendant_in_corner(m: &RootedMap, vertex_of: &[usize], in_block: &[bool], a: usize) -> RootedMap {
    let e = m.next[a];
    if in_block[e] {
        return RootedMap::trivial();
    }
    let u = vertex_of[a];
    let mut in_set = vec![false; m.num_darts()];
    let mut stack = Vec::new();
    let mut d = e;
    while !in_block[d] {
        in_set[d] = true;
        stack.push(d);
        d = m.next[d];
    }
    while let Some(d) = stack.pop() {
        let t = m.twin[d];
        if !in_set[t] {
            in_set[t] = true;
            stack.push(t);
        }
        if vertex_of[d] != u {
            let s = m.next[d];
            if !in_set[s] {
                in_set[s] = true;
                stack.push(s);
            }
        }
    }
    let darts: Vec<usize> = (0..m.num_darts()).filter(|&d| in_set[d]).collect();
    m.induced(&darts, e)
}

/// The pendant submap in the corner to the left of `uv`, rooted at the dart
/// following `uv` counterclockwise. `uv` must be a dart of the root block.
pub fn pendant_submap(m: &RootedMap, uv: usize) -> Result<RootedMap, MapError> {
    if m.is_trivial() || uv >= m.num_darts() {
        return Err(MapError::NotRootBlockDart(uv));
    }
    let vertex_of = m.vertex_of();
    let in_block = root_block_mask(m, &vertex_of);
    if !in_block[uv] {
        return Err(MapError::NotRootBlockDart(uv));
    }
    Ok(pendant_in_corner(m, &vertex_of, &in_block, uv))
}

fn build(m: &RootedMap, nodes: &mut Vec<BlockTreeNode>) -> usize {
    let idx = nodes.len();
    if m.is_trivial() {
        nodes.push(BlockTreeNode { block: RootedMap::trivial(), children: Vec::new() });
        return idx;
    }
    let vertex_of = m.vertex_of();
    let in_block = root_block_mask(m, &vertex_of);
    let block_darts: Vec<usize> = (0..m.num_darts()).filter(|&d| in_block[d]).collect();
    let raw = m.induced(&block_darts, m.root);
    let corners: Vec<usize> = corner_order(&raw).into_iter().map(|i| block_darts[i]).collect();
    // relabelled by corner rank, hence canonical
    let block = m.induced(&corners, m.root);
    nodes.push(BlockTreeNode { block, children: Vec::with_capacity(corners.len()) });
    for &a in &corners {
        let pendant = pendant_in_corner(m, &vertex_of, &in_block, a);
        let child = build(&pendant, nodes);
        nodes[idx].children.push(child);
    }
    idx
}

/// Block tree of a rooted map. The trivial map gives a single leaf.
pub fn block_tree(m: &RootedMap) -> BlockTree {
    let mut nodes = Vec::with_capacity(m.num_darts() + 1);
    build(m, &mut nodes);
    BlockTree { nodes }
}

fn assemble_node(t: &BlockTree, v: usize) -> Result<RootedMap, MapError> {
    let node = &t.nodes[v];
    let b = &node.block;
    if node.children.len() != b.num_darts() {
        return Err(MapError::DegreeMismatch {
            node: v,
            outdegree: node.children.len(),
            block_edges: b.num_edges(),
        });
    }
    if b.is_trivial() {
        return Ok(RootedMap::trivial());
    }
    if !is_two_connected(b) {
        return Err(MapError::NotTwoConnected(v));
    }
    let mut twin = b.twin.clone();
    let mut next = b.next.clone();
    for (i, a) in corner_order(b).into_iter().enumerate() {
        let sub = assemble_node(t, node.children[i])?;
        if sub.is_trivial() {
            continue;
        }
        let off = twin.len();
        twin.extend(sub.twin.iter().map(|&x| x + off));
        next.extend(sub.next.iter().map(|&x| x + off));
        let last = (0..sub.num_darts())
            .find(|&x| sub.next[x] == sub.root)
            .expect("root has a predecessor");
        let after = next[a];
        next[a] = sub.root + off;
        next[last + off] = after;
    }
    Ok(RootedMap::from_parts(twin, next, b.root))
}

/// Rebuilds the map encoded by a block tree: each child's map is glued at
/// the tail of its corner dart so that its root follows that dart
/// counterclockwise.
pub fn assemble(t: &BlockTree) -> Result<RootedMap, MapError> {
    if t.nodes.is_empty() {
        return Err(MapError::Invalid(vec!["empty block tree".into()]));
    }
    assemble_node(t, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lollipop() -> RootedMap {
        // loop (0,1) at u, link (2,3) to w sitting in the corner of dart 1
        RootedMap::from_parts(vec![1, 0, 3, 2], vec![1, 2, 0, 3], 0)
    }

    #[test]
    fn loop_has_root_with_two_leaves() {
        let t = block_tree(&RootedMap::loop_map());
        assert_eq!(t.outdegrees(), vec![2, 0, 0]);
        assert_eq!(assemble(&t).unwrap(), RootedMap::loop_map());
    }

    #[test]
    fn trivial_map_is_a_leaf() {
        let t = block_tree(&RootedMap::trivial());
        assert_eq!(t.outdegrees(), vec![0]);
        assert!(assemble(&t).unwrap().is_trivial());
    }

    #[test]
    fn lollipop_tree() {
        let m = lollipop();
        let t = block_tree(&m);
        assert_eq!(t.outdegrees(), vec![2, 0, 2, 0, 0]);
        assert_eq!(t.nodes[0].block, RootedMap::loop_map());
        assert_eq!(t.nodes[2].block, RootedMap::link_map());
        assert_eq!(assemble(&t).unwrap().canonical(), m.canonical());
    }

    #[test]
    fn pendant_of_lollipop() {
        let m = lollipop();
        assert_eq!(pendant_submap(&m, 1).unwrap(), RootedMap::link_map());
        assert!(pendant_submap(&m, 0).unwrap().is_trivial());
        assert!(matches!(pendant_submap(&m, 2), Err(MapError::NotRootBlockDart(2))));
    }

    #[test]
    fn pendants_of_two_connected_map_are_trivial() {
        let digon = RootedMap::from_parts(vec![1, 0, 3, 2], vec![2, 3, 0, 1], 0);
        for d in 0..4 {
            assert!(pendant_submap(&digon, d).unwrap().is_trivial());
        }
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let t = BlockTree {
            nodes: vec![
                BlockTreeNode { block: RootedMap::loop_map(), children: vec![1] },
                BlockTreeNode { block: RootedMap::trivial(), children: vec![] },
            ],
        };
        assert!(matches!(assemble(&t), Err(MapError::DegreeMismatch { node: 0, .. })));
    }

    #[test]
    fn from_parts_matches_block_tree() {
        let m = lollipop();
        let t = block_tree(&m);
        let blocks = t.nodes.iter().map(|n| n.block.clone()).collect();
        assert_eq!(BlockTree::from_parts(&t.outdegrees(), blocks).unwrap(), t);
    }
}
