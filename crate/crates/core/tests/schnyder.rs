mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use schnyder_at::export::{orientation_from_records, orientation_records, EdgeRecord, RealizerDoc};
use schnyder_at::planar::{is_counterclockwise, PlaneTriangulation};
use schnyder_at::schnyder::{
    canonical_realizer, canonicalize_ccw, clockwise_triangles, colored_path,
    find_clockwise_triangle, flip, orient_triangulation, orientation_of, realizer_from_orientation,
    realizer_with_red_root, region, schnyder_drawing, thomassen_procedure, Color,
    DirectedTriangle, InternalOrientation, StepAction,
};
use schnyder_at::planar::NearTriangulation;
use schnyder_at::testkit::{
    bipyramid, enumerate_internal_3_orientations, k3, k4, nested_triangles, octahedron,
    stacked_triangulation, suite, GeneratorConfig,
};
use schnyder_at::Error;

fn stacked(n: usize, seed: u64) -> PlaneTriangulation {
    stacked_triangulation(GeneratorConfig::stacked(n, seed))
}

/// Fixtures with more than one internal 3-orientation.
fn multi_orientation_fixtures() -> Vec<PlaneTriangulation> {
    vec![octahedron(), nested_triangles(), bipyramid(5), bipyramid(6), bipyramid(7)]
}

fn small_suite() -> Vec<(String, PlaneTriangulation)> {
    suite()
        .into_iter()
        .filter(|(_, t)| t.interior_edges().len() <= 18)
        .collect()
}

#[test]
fn k4_realizer_spokes() {
    let t = k4();
    let all = enumerate_internal_3_orientations(&t, 22).unwrap();
    assert_eq!(all.len(), 1);
    let o = &all[0];
    for e in t.interior_edges() {
        assert_eq!(o.head(e), Some(3));
    }
    let r = realizer_from_orientation(o).unwrap();
    let colors: BTreeSet<Color> = t.interior_edges().iter().map(|&e| r.color(e).unwrap()).collect();
    assert_eq!(colors.len(), 3);
    for c in Color::ALL {
        let spoke = r.class(c);
        assert_eq!(spoke.len(), 1);
        let (a, b) = t.edge(spoke[0]);
        assert_eq!(a.min(b), r.root(c));
        assert_eq!(colored_path(&r, 3, c).unwrap(), vec![3, r.root(c)]);
    }
    assert_eq!(orientation_of(&r), *o);
    assert!(find_clockwise_triangle(o).unwrap().is_none());
    assert_eq!(canonicalize_ccw(o).unwrap(), *o);
}

#[test]
fn k3_is_empty() {
    let t = k3();
    let r = canonical_realizer(&t).unwrap();
    assert!(r.colors().iter().all(Option::is_none));
    assert!(orientation_of(&r).heads().iter().all(Option::is_none));
    let out = orient_triangulation(&t).unwrap();
    assert!(out.doubled_edges().is_empty());
    let orienting: Vec<_> = out
        .trace
        .steps
        .iter()
        .filter(|s| matches!(s.action, StepAction::Orient { .. }))
        .collect();
    assert_eq!(orienting.len(), 1);
    if let StepAction::Orient { center, .. } = orienting[0].action {
        assert_eq!(center, t.outer_face()[0]);
    }
    assert!(matches!(colored_path(&r, 0, Color::Red), Err(Error::NotInterior(0))));
    assert_eq!(schnyder_drawing(&r).unwrap().len(), 3);
}

#[test]
fn k4_procedure_doubles_one_spoke() {
    let t = k4();
    let o = t.outer_face().to_vec();
    let out = thomassen_procedure(&NearTriangulation::from_triangulation(&t), o[1]).unwrap();
    let doubled = out.doubled_edges();
    assert_eq!(doubled, vec![t.edge_id(o[0], 3).unwrap()]);
    let mut aug = 0;
    for e in 0..t.edge_count() {
        if out.heads[e] == 3 {
            aug += out.strengths[e];
        }
    }
    assert_eq!(aug, 4);
    // outer triangle: v1 <- v2, v1 -> v3, v2 -> v3
    assert_eq!(out.heads[t.edge_id(o[1], o[2]).unwrap()], o[1]);
    assert_eq!(out.heads[t.edge_id(o[1], o[0]).unwrap()], o[0]);
    assert_eq!(out.heads[t.edge_id(o[2], o[0]).unwrap()], o[0]);
}

#[test]
fn octahedron_flip_gives_clockwise_face() {
    let t = octahedron();
    let canon = canonical_realizer(&t).unwrap().orientation().clone();
    assert!(find_clockwise_triangle(&canon).unwrap().is_none());
    let tri = t
        .faces()
        .into_iter()
        .filter(|f| !f.is_outer)
        .map(|f| [f.boundary[0], f.boundary[1], f.boundary[2]])
        .find(|&[a, b, c]| canon.is_arc(a, b) && canon.is_arc(b, c) && canon.is_arc(c, a))
        .expect("a counterclockwise directed face");
    let flipped = flip(&canon, DirectedTriangle(tri)).unwrap();
    let found = find_clockwise_triangle(&flipped).unwrap().unwrap();
    assert_eq!(BTreeSet::from(found.0), BTreeSet::from(tri));
    assert_eq!(canonicalize_ccw(&flipped).unwrap(), canon);
    assert!(flip(&canon, DirectedTriangle(tri).reversed()).is_err());
}

#[test]
fn clockwise_triangle_iff_clockwise_cycle() {
    for (name, t) in small_suite() {
        for o in enumerate_internal_3_orientations(&t, 22).unwrap() {
            let oracle = common::has_clockwise_cycle(&o);
            let tris = clockwise_triangles(&o).unwrap();
            assert_eq!(oracle, !tris.is_empty(), "{name}");
            for tri in tris {
                assert!(!common::cycle_is_ccw(&t, &tri.0), "{name}");
                assert!(!is_counterclockwise(&t, &tri.0).unwrap(), "{name}");
            }
        }
    }
}

#[test]
fn canonical_orientation_has_only_ccw_cycles() {
    for (name, t) in suite() {
        if t.n() > 8 {
            continue;
        }
        let o = canonical_realizer(&t).unwrap().orientation().clone();
        for cycle in common::directed_cycles(&common::out_lists(&o)) {
            assert!(is_counterclockwise(&t, &cycle).unwrap(), "{name}: {cycle:?}");
        }
    }
}

#[test]
fn every_enumerated_orientation_is_a_realizer() {
    for (name, t) in small_suite() {
        for o in enumerate_internal_3_orientations(&t, 22).unwrap() {
            let r = realizer_from_orientation(&o).unwrap();
            assert!(common::realizer_axiom_failures(&r).is_empty(), "{name}");
            assert_eq!(orientation_of(&r), o);
        }
    }
}

#[test]
fn region_examples() {
    let t = k4();
    let r = canonical_realizer(&t).unwrap();
    let fm = t.face_map();
    let mut covered = Vec::new();
    for c in Color::ALL {
        let reg = region(&r, 3, c).unwrap();
        assert_eq!(reg.faces.len(), 1);
        assert_eq!(reg.boundary.len(), 3);
        covered.extend(reg.faces);
    }
    covered.sort_unstable();
    let inner: Vec<usize> = (0..fm.faces.len()).filter(|&f| f != fm.outer).collect();
    assert_eq!(covered, inner);
    assert!(region(&r, 0, Color::Green).is_err());
}

#[test]
fn drawing_examples() {
    let r = canonical_realizer(&k3()).unwrap();
    let pts = schnyder_drawing(&r).unwrap();
    let corners: BTreeSet<(i64, i64)> = pts.into_iter().collect();
    assert_eq!(corners, BTreeSet::from([(0, 0), (1, 0), (0, 1)]));
    let t = stacked(10, 42);
    let r = canonical_realizer(&t).unwrap();
    let pts = schnyder_drawing(&r).unwrap();
    let m = 2 * 10 - 5;
    assert!(pts.iter().all(|&(x, y)| (0..=m).contains(&x) && (0..=m).contains(&y)));
    assert!(common::segment_crossings(&t, &pts).is_empty());
}

#[test]
fn alternative_red_root() {
    let t = nested_triangles();
    let o = canonical_realizer(&t).unwrap().orientation().clone();
    for &red in t.outer_face() {
        let r = realizer_with_red_root(&o, red).unwrap();
        assert_eq!(r.root(Color::Red), red);
        assert!(r.violations().is_empty());
        assert!(common::realizer_axiom_failures(&r).is_empty());
        assert_eq!(orientation_of(&r), o);
    }
    assert!(realizer_with_red_root(&o, 4).is_err());
}

#[test]
fn records_round_trip() {
    let t = bipyramid(6);
    let r = canonical_realizer(&t).unwrap();
    let o = r.orientation();
    let json = serde_json::to_string(&orientation_records(o)).unwrap();
    let records: Vec<EdgeRecord> = serde_json::from_str(&json).unwrap();
    let back = orientation_from_records(&t, &records).unwrap();
    assert_eq!(&back, o);
    let doc = RealizerDoc::new(&r);
    let again: RealizerDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(again, doc);
}

#[test]
fn invalid_orientations_are_rejected() {
    let t = k4();
    let mut heads = vec![None; t.edge_count()];
    for e in t.interior_edges() {
        let (a, _) = t.edge(e);
        heads[e] = Some(a);
    }
    assert!(InternalOrientation::new(t.clone(), heads).is_err());
    assert!(InternalOrientation::new(t.clone(), vec![None; t.edge_count()]).is_err());
}

fn all_pairs_acyclic(t: &PlaneTriangulation) -> Result<(), String> {
    let r = canonical_realizer(t).map_err(|e| e.to_string())?;
    let o = r.orientation();
    for (a, b) in [(Color::Red, Color::Green), (Color::Green, Color::Blue), (Color::Red, Color::Blue)] {
        let arcs: Vec<(usize, usize)> = r
            .class(a)
            .into_iter()
            .chain(r.class(b))
            .map(|e| (o.tail(e).unwrap(), o.head(e).unwrap()))
            .collect();
        if !common::is_acyclic(t.n(), &arcs) {
            return Err(format!("{a} + {b} has a directed cycle"));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bijection_round_trip(n in 3usize..25, seed in any::<u64>()) {
        let t = stacked(n, seed);
        let r = canonical_realizer(&t).unwrap();
        let o = orientation_of(&r);
        prop_assert_eq!(&realizer_from_orientation(&o).unwrap(), &r);
        prop_assert_eq!(orientation_of(&realizer_from_orientation(&o).unwrap()), o);
    }

    #[test]
    fn flip_is_an_involution(pick in any::<prop::sample::Index>(), which in any::<prop::sample::Index>()) {
        let fixtures = multi_orientation_fixtures();
        let t = pick.get(&fixtures).clone();
        let all = enumerate_internal_3_orientations(&t, 22).unwrap();
        let o = which.get(&all).clone();
        let mut flips = 0;
        for face in t.faces().into_iter().filter(|f| !f.is_outer) {
            let [a, b, c] = [face.boundary[0], face.boundary[1], face.boundary[2]];
            for tri in [[a, b, c], [a, c, b]] {
                if o.is_arc(tri[0], tri[1]) && o.is_arc(tri[1], tri[2]) && o.is_arc(tri[2], tri[0]) {
                    let once = flip(&o, DirectedTriangle(tri)).unwrap();
                    prop_assert!(once.violations().is_empty());
                    let twice = flip(&once, DirectedTriangle(tri).reversed()).unwrap();
                    prop_assert_eq!(&twice, &o);
                    flips += 1;
                }
            }
        }
        prop_assert!(flips > 0);
    }

    #[test]
    fn canonicalization_ignores_flip_history(fixture in any::<prop::sample::Index>(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..8)) {
        let fixtures = multi_orientation_fixtures();
        let t = fixture.get(&fixtures).clone();
        let canon = canonical_realizer(&t).unwrap().orientation().clone();
        // walk away from the canonical orientation by reversing directed triangles
        let mut cur = canon.clone();
        for pick in picks {
            let mut options = Vec::new();
            for &(a, b) in t.edges() {
                for c in b + 1..t.n() {
                    for tri in [[a, b, c], [a, c, b]] {
                        if cur.is_arc(tri[0], tri[1]) && cur.is_arc(tri[1], tri[2]) && cur.is_arc(tri[2], tri[0]) {
                            options.push(tri);
                        }
                    }
                }
            }
            if options.is_empty() {
                break;
            }
            cur = flip(&cur, DirectedTriangle(*pick.get(&options))).unwrap();
        }
        prop_assert_eq!(canonicalize_ccw(&cur).unwrap(), canon);
    }

    #[test]
    fn procedure_matches_flip_descent(n in 3usize..30, seed in any::<u64>()) {
        let t = stacked(n, seed);
        let out = orient_triangulation(&t).unwrap();
        let o = out.internal_orientation(&t).unwrap();
        prop_assert!(find_clockwise_triangle(&o).unwrap().is_none());
        prop_assert!(out.trace.check_invariants(t.graph()).is_empty());
        let (heads, strengths) = out.trace.replayed(t.graph());
        prop_assert_eq!(heads.into_iter().map(Option::unwrap).collect::<Vec<_>>(), out.heads.clone());
        prop_assert_eq!(strengths, out.strengths.clone());
    }

    #[test]
    fn realizers_satisfy_axioms(n in 3usize..40, seed in any::<u64>()) {
        let t = stacked(n, seed);
        let r = canonical_realizer(&t).unwrap();
        let fails = common::realizer_axiom_failures(&r);
        prop_assert!(fails.is_empty(), "{:?}", fails);
        prop_assert!(r.violations().is_empty());
        prop_assert!(all_pairs_acyclic(&t).is_ok(), "{:?}", all_pairs_acyclic(&t));
    }

    #[test]
    fn drawings_are_planar(n in 3usize..30, seed in any::<u64>()) {
        let t = stacked(n, seed);
        let r = canonical_realizer(&t).unwrap();
        let pts = schnyder_drawing(&r).unwrap();
        prop_assert!(common::segment_crossings(&t, &pts).is_empty());
        let distinct: BTreeSet<_> = pts.iter().collect();
        prop_assert_eq!(distinct.len(), n);
    }

    #[test]
    fn regions_nest_and_cover(n in 4usize..11, seed in any::<u64>()) {
        let t = stacked(n, seed);
        let r = canonical_realizer(&t).unwrap();
        let fm = t.face_map();
        let inner = fm.faces.len() - 1;
        for v in t.interior_vertices() {
            let mut faces = Vec::new();
            for c in Color::ALL {
                let reg = region(&r, v, c).unwrap();
                faces.extend(reg.faces.iter().copied());
                for u in t.interior_vertices() {
                    if u != v && reg.contains_vertex(u) {
                        prop_assert!(region(&r, u, c).unwrap().is_subregion_of(&reg));
                    }
                }
            }
            prop_assert_eq!(faces.len(), inner);
            faces.sort_unstable();
            faces.dedup();
            prop_assert_eq!(faces.len(), inner);
        }
    }
}

#[test]
fn pair_acyclicity_on_fixtures() {
    for (name, t) in suite() {
        assert!(all_pairs_acyclic(&t).is_ok(), "{name}");
    }
}
