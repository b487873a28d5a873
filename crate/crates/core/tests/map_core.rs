use std::path::PathBuf;

use mapblocks::map::{assemble, bfs_order, block_tree, blocks, corner_order, is_two_connected, validate};
use mapblocks::{MapError, RootedMap};

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

fn load(name: &str) -> RootedMap {
    RootedMap::from_json(&fixture(name)).unwrap()
}

fn block_sizes(m: &RootedMap) -> Vec<usize> {
    let mut s: Vec<usize> = blocks(m).blocks.iter().map(|b| b.map.num_edges()).collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

#[test]
fn fixture_shapes() {
    // (file, vertices, faces, block sizes, 2-connected)
    let cases: [(&str, usize, usize, Vec<usize>, bool); 5] = [
        ("trivial.json", 1, 1, vec![], true),
        ("digon.json", 2, 2, vec![2], true),
        ("path2.json", 3, 1, vec![1, 1], false),
        ("figure_eight.json", 1, 3, vec![1, 1], false),
        ("triangle_pendant.json", 4, 2, vec![3, 1], false),
    ];
    for (name, v, f, sizes, two) in cases {
        let m = load(name);
        assert!(validate(&m).is_empty(), "{name}: {:?}", validate(&m));
        assert_eq!(m.num_vertices(), v, "{name}");
        assert_eq!(m.num_faces(), f, "{name}");
        assert_eq!(block_sizes(&m), sizes, "{name}");
        assert_eq!(is_two_connected(&m), two, "{name}");
    }
}

#[test]
fn cut_vertex_of_triangle_with_pendant() {
    let m = load("triangle_pendant.json");
    let d = blocks(&m);
    assert_eq!(d.cut_vertices, vec![m.vertex_of()[0]]);
    // the root block is the triangle, entered through the root dart
    assert_eq!(d.blocks[0].map.num_edges(), 3);
    assert_eq!(d.blocks[0].darts[0], 0);
}

#[test]
fn bfs_and_corner_orders_cover_everything() {
    for name in ["digon.json", "path2.json", "figure_eight.json", "triangle_pendant.json"] {
        let m = load(name);
        let o = bfs_order(&m);
        assert_eq!(o.order[0], m.vertex_of()[0], "{name}");
        let mut seen = o.order.clone();
        seen.sort_unstable();
        assert_eq!(seen, (0..m.num_vertices()).collect::<Vec<_>>());
        let mut c = corner_order(&m);
        assert_eq!(c[0], 0);
        c.sort_unstable();
        assert_eq!(c, (0..m.num_darts()).collect::<Vec<_>>(), "{name}");
    }
}

#[test]
fn json_roundtrip_and_reassembly() {
    for name in ["trivial.json", "digon.json", "path2.json", "figure_eight.json", "triangle_pendant.json"] {
        let m = load(name);
        assert_eq!(RootedMap::from_json(&m.to_json()).unwrap(), m);
        let t = block_tree(&m);
        assert_eq!(t.outdegrees().iter().sum::<usize>(), 2 * m.num_edges());
        assert_eq!(assemble(&t).unwrap().canonical(), m.canonical(), "{name}");
    }
}

#[test]
fn rerooting_keeps_the_canonical_class_per_root() {
    let m = load("triangle_pendant.json");
    let classes: std::collections::HashSet<RootedMap> =
        (0..m.num_darts()).map(|r| m.rerooted(r).canonical()).collect();
    // the pendant edge seen from either end and each triangle dart differ
    assert!(classes.len() > 1);
    for r in 0..m.num_darts() {
        let c = m.rerooted(r).canonical();
        assert!(c.is_canonical());
        assert_eq!(c.canonical(), c);
    }
}

#[test]
fn malformed_fixture_is_rejected() {
    assert!(matches!(RootedMap::from_json(&fixture("bad_twin.json")), Err(MapError::Invalid(_))));
}
