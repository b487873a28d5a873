//! Exhaustive enumeration of rooted maps for small edge counts.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::trees::tree_weight;
use crate::error::OracleError;
use crate::map::{block_tree, is_two_connected, validate, RootedMap};

/// Largest edge count for the permutation enumeration.
pub const MAP_CAP: usize = 3;
/// Largest edge count for the growth enumeration (and the 2-connected cache).
pub const GROWTH_CAP: usize = 6;

fn sort_maps(set: HashSet<RootedMap>) -> Vec<RootedMap> {
    let mut v: Vec<RootedMap> = set.into_iter().collect();
    v.sort_by(|a, b| (a.nexts(), a.twins(), a.root()).cmp(&(b.nexts(), b.twins(), b.root())));
    v
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All rooted maps with `n ≤ 3` edges, as canonical forms: every rotation
/// on `2n` darts paired `(0 1)(2 3)...`, rooted at dart 0, filtered to
/// connected genus-0 systems and deduplicated.
pub fn enum_maps(n: usize) -> Result<Vec<RootedMap>, OracleError> {
    if n > MAP_CAP {
        return Err(OracleError::AboveCap { n, cap: MAP_CAP });
    }
    if n == 0 {
        return Ok(vec![RootedMap::trivial()]);
    }
    let twin: Vec<usize> = (0..2 * n).map(|d| d ^ 1).collect();
    let mut set = HashSet::new();
    for next in permutations(2 * n) {
        if let Ok(m) = RootedMap::new(twin.clone(), next, 0) {
            set.insert(m.canonical());
        }
    }
    Ok(sort_maps(set))
}

/// Every way to add one edge to `m` keeping it planar: the new darts `x`,
/// `y` are inserted after a dart `d1` and after a dart `d2` (which may be
/// `x` itself), or `y` hangs from a new vertex.
fn extensions(m: &RootedMap) -> Vec<RootedMap> {
    let n = m.num_darts();
    let (x, y) = (n, n + 1);
    let mut out = Vec::new();
    let mut twin = m.twins().to_vec();
    twin.extend([y, x]);
    for d1 in 0..n {
        let mut base = m.nexts().to_vec();
        base.extend([0, 0]);
        base[x] = base[d1];
        base[d1] = x;
        // pendant edge
        let mut pendant = base.clone();
        pendant[y] = y;
        out.push(RootedMap::new(twin.clone(), pendant, 0).expect("a pendant edge keeps planarity"));
        for d2 in 0..=x {
            let mut next = base.clone();
            next[y] = next[d2];
            next[d2] = y;
            let cand = RootedMap::new(twin.clone(), next, 0);
            if let Ok(c) = cand {
                out.push(c);
            }
        }
    }
    out
}

fn all_rootings(m: &RootedMap) -> Vec<RootedMap> {
    (0..m.num_darts()).map(|r| m.rerooted(r).canonical()).collect()
}

fn grown() -> &'static Vec<Vec<RootedMap>> {
    static GROWN: OnceLock<Vec<Vec<RootedMap>>> = OnceLock::new();
    GROWN.get_or_init(|| {
        let mut levels = vec![vec![RootedMap::trivial()], vec![RootedMap::loop_map(), RootedMap::link_map()]];
        levels[1] = sort_maps(levels[1].iter().map(RootedMap::canonical).collect());
        for _ in 2..=GROWTH_CAP {
            let prev = levels.last().expect("nonempty");
            let found: HashSet<RootedMap> = prev
                .par_iter()
                .flat_map_iter(|m| extensions(m).into_iter().flat_map(|e| all_rootings(&e)))
                .collect();
            levels.push(sort_maps(found));
        }
        levels
    })
}

/// All rooted maps with `n ≤ 6` edges, grown edge by edge: every map with
/// at least one edge loses an edge (a non-bridge or a leaf edge) to a map
/// that stays connected and planar, so adding edges in every way to all
/// maps with `n - 1` edges and re-rooting everywhere reaches them all.
pub fn grow_maps(n: usize) -> Result<&'static [RootedMap], OracleError> {
    if n > GROWTH_CAP {
        return Err(OracleError::AboveCap { n, cap: GROWTH_CAP });
    }
    Ok(&grown()[n])
}

/// Rooted 2-connected maps with `k ≤ 6` edges, canonical and sorted. The
/// trivial map stands for `k = 0`.
pub fn two_connected_maps(k: usize) -> Result<&'static [RootedMap], OracleError> {
    static CACHE: OnceLock<Vec<Vec<RootedMap>>> = OnceLock::new();
    if k > GROWTH_CAP {
        return Err(OracleError::AboveCap { n: k, cap: GROWTH_CAP });
    }
    let cache = CACHE.get_or_init(|| {
        (0..=GROWTH_CAP)
            .map(|j| grown()[j].iter().filter(|m| is_two_connected(m)).cloned().collect())
            .collect()
    });
    Ok(&cache[k])
}

/// Groups all maps with `n ≤ 3` edges by block-tree shape and checks that
/// each group has `m(t)` members whose blocks run over every combination of
/// 2-connected maps of the right sizes, and that the blocks decompose and
/// reassemble to the same map.
pub fn verify_prop1(n: usize) -> Result<bool, OracleError> {
    let maps = enum_maps(n)?;
    let mut groups: BTreeMap<Vec<usize>, HashSet<Vec<RootedMap>>> = BTreeMap::new();
    let mut sizes: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for m in &maps {
        let t = block_tree(m);
        let blocks: Vec<RootedMap> = t.nodes.iter().map(|v| v.block.clone()).collect();
        for b in &blocks {
            if !validate(b).is_empty() || !is_two_connected(b) {
                return Ok(false);
            }
            let pool = two_connected_maps(b.num_edges())?;
            if pool.binary_search_by(|p| (p.nexts(), p.twins(), p.root()).cmp(&(b.nexts(), b.twins(), b.root()))).is_err()
            {
                return Ok(false);
            }
        }
        match crate::map::assemble(&t) {
            Ok(back) if back.canonical() == *m => {}
            _ => return Ok(false),
        }
        let key = t.outdegrees();
        groups.entry(key.clone()).or_default().insert(blocks);
        *sizes.entry(key).or_default() += 1;
    }
    let trees = super::trees::enum_even_trees(n.max(1))?;
    if n == 0 {
        return Ok(maps.len() == 1);
    }
    if groups.len() != trees.len() {
        return Ok(false);
    }
    for t in trees {
        let key = t.outdegrees().to_vec();
        let w = tree_weight(&key)?;
        let (Some(g), Some(&s)) = (groups.get(&key), sizes.get(&key)) else {
            return Ok(false);
        };
        // distinct block tuples, one per map, as many as the weight
        if BigUint::from(g.len()) != w || BigUint::from(s) != w {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{count_maps, count_two_connected};

    #[test]
    fn permutation_counts() {
        for n in 0..=MAP_CAP {
            let maps = enum_maps(n).unwrap();
            assert_eq!(BigUint::from(maps.len()), count_maps(n), "n = {n}");
            assert!(maps.iter().all(|m| validate(m).is_empty() && m.is_canonical()));
        }
        assert!(enum_maps(4).is_err());
    }

    #[test]
    fn growth_agrees_with_permutations() {
        for n in 0..=MAP_CAP {
            assert_eq!(grow_maps(n).unwrap(), enum_maps(n).unwrap().as_slice());
        }
    }

    #[test]
    fn growth_counts() {
        for n in 0..=GROWTH_CAP {
            assert_eq!(BigUint::from(grow_maps(n).unwrap().len()), count_maps(n), "n = {n}");
        }
    }

    #[test]
    fn two_connected_counts() {
        for k in 0..=GROWTH_CAP {
            assert_eq!(BigUint::from(two_connected_maps(k).unwrap().len()), count_two_connected(k), "k = {k}");
        }
    }

    #[test]
    fn prop1_small() {
        for n in 0..=MAP_CAP {
            assert!(verify_prop1(n).unwrap(), "n = {n}");
        }
    }
}
