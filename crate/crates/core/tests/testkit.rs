use std::collections::HashSet;

use proptest::prelude::*;

use schnyder_at::planar::validate;
use schnyder_at::schnyder::{find_clockwise_triangle, realizer_from_orientation};
use schnyder_at::testkit::{
    bipyramid, enumerate_internal_3_orientations, icosahedron, k3, k4, octahedron,
    stacked_triangulation, suite, GeneratorConfig, DEFAULT_ENUMERATION_CAP,
};
use schnyder_at::Error;

#[test]
fn generator_examples() {
    let t = stacked_triangulation(GeneratorConfig::stacked(3, 9));
    assert_eq!(t.to_data(), k3().to_data());
    let t = stacked_triangulation(GeneratorConfig::stacked(4, 9));
    assert_eq!((t.n(), t.edge_count()), (4, 6));
    let t = stacked_triangulation(GeneratorConfig::stacked(10, 42));
    assert!(validate(&t.to_data()).is_triangulation());
    assert_eq!(t.edge_count(), 24);
}

#[test]
fn config_json() {
    let cfg = GeneratorConfig::stacked(12, 7);
    let text = serde_json::to_string(&cfg).unwrap();
    assert_eq!(text, r#"{"target_n":12,"seed":7,"method":"stacked"}"#);
    assert_eq!(serde_json::from_str::<GeneratorConfig>(&text).unwrap(), cfg);
}

#[test]
fn enumeration_examples() {
    assert_eq!(enumerate_internal_3_orientations(&k3(), DEFAULT_ENUMERATION_CAP).unwrap().len(), 1);
    let k4s = enumerate_internal_3_orientations(&k4(), DEFAULT_ENUMERATION_CAP).unwrap();
    assert_eq!(k4s.len(), 1);
    let oct = enumerate_internal_3_orientations(&octahedron(), DEFAULT_ENUMERATION_CAP).unwrap();
    let ccw: Vec<_> = oct.iter().filter(|o| find_clockwise_triangle(o).unwrap().is_none()).collect();
    assert_eq!(ccw.len(), 1);
    assert!(matches!(
        enumerate_internal_3_orientations(&icosahedron(), DEFAULT_ENUMERATION_CAP),
        Err(Error::CapExceeded { size: 27, cap: 22, .. })
    ));
}

#[test]
fn enumerations_are_valid_and_duplicate_free() {
    for t in [octahedron(), bipyramid(5), bipyramid(6), bipyramid(7)] {
        let all = enumerate_internal_3_orientations(&t, DEFAULT_ENUMERATION_CAP).unwrap();
        let distinct: HashSet<Vec<Option<usize>>> = all.iter().map(|o| o.heads().to_vec()).collect();
        assert_eq!(distinct.len(), all.len());
        for o in &all {
            for e in t.interior_edges() {
                let h = o.head(e).unwrap();
                assert!(!t.is_exterior(h));
            }
            for v in t.interior_vertices() {
                let indeg = (0..t.edge_count()).filter(|&e| o.head(e) == Some(v)).count();
                assert_eq!(indeg, 3);
            }
            assert!(realizer_from_orientation(o).is_ok());
        }
    }
}

/// Brute force over all `2^k` head assignments, for comparison.
#[test]
fn enumeration_matches_brute_force() {
    for t in [octahedron(), bipyramid(5)] {
        let interior = t.interior_edges();
        let mut count = 0;
        for mask in 0u32..(1 << interior.len()) {
            let mut indeg = vec![0; t.n()];
            for (i, &e) in interior.iter().enumerate() {
                let (u, v) = t.edge(e);
                indeg[if mask >> i & 1 == 1 { u } else { v }] += 1;
            }
            if (0..t.n()).all(|v| indeg[v] == if t.is_exterior(v) { 0 } else { 3 }) {
                count += 1;
            }
        }
        assert_eq!(enumerate_internal_3_orientations(&t, 22).unwrap().len(), count);
    }
}

#[test]
fn suite_is_valid() {
    let names: HashSet<String> = suite().into_iter().map(|(n, t)| {
        assert!(validate(&t.to_data()).is_triangulation(), "{n}");
        n
    }).collect();
    assert!(names.contains("octahedron"));
    assert!(suite().iter().any(|(_, t)| t.edge_count() == 24));
}

proptest! {
    #[test]
    fn generation_is_deterministic(n in 3usize..60, seed in any::<u64>()) {
        let a = stacked_triangulation(GeneratorConfig::stacked(n, seed));
        let b = stacked_triangulation(GeneratorConfig::stacked(n, seed));
        prop_assert_eq!(a.to_data(), b.to_data());
        prop_assert_eq!(a.edge_count(), 3 * n - 6);
    }
}
