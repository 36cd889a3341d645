//! Seeded triangulation generators, named fixtures and exhaustive
//! enumeration of internal 3-orientations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::planar::{triangulate, GraphData, PlaneGraph, PlaneTriangulation};
use crate::schnyder::InternalOrientation;

pub const DEFAULT_ENUMERATION_CAP: usize = 22;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenerationMethod {
    Stacked,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub target_n: usize,
    pub seed: u64,
    pub method: GenerationMethod,
}

impl GeneratorConfig {
    pub fn stacked(target_n: usize, seed: u64) -> Self {
        GeneratorConfig {
            target_n,
            seed,
            method: GenerationMethod::Stacked,
        }
    }
}

/// Random stacked triangulation: start from a triangle and repeatedly put a
/// new vertex into a uniformly chosen inner face. The random source is
/// ChaCha8 seeded with `cfg.seed`.
///
/// # Panics
/// If `cfg.target_n < 3`.
pub fn stacked_triangulation(cfg: GeneratorConfig) -> PlaneTriangulation {
    assert!(cfg.target_n >= 3, "target_n must be at least 3");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rotations: Vec<Vec<usize>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // inner faces, counterclockwise
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];
    while rotations.len() < cfg.target_n {
        let x = rotations.len();
        let k = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[k];
        for (corner, next) in [(a, b), (b, c), (c, a)] {
            let rot = &mut rotations[corner];
            let at = rot.iter().position(|&w| w == next).expect("face corner");
            rot.insert(at + 1, x);
        }
        rotations.push(vec![a, b, c]);
        faces[k] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
    }
    let data = GraphData {
        n: rotations.len(),
        rotations,
        outer_face: vec![0, 2, 1],
    };
    PlaneTriangulation::new(data).expect("stacked construction yields a triangulation")
}

/// Every internal 3-orientation of `t`, in lexicographic order of the head
/// choices over interior edges (smaller endpoint first).
pub fn enumerate_internal_3_orientations(
    t: &PlaneTriangulation,
    cap: usize,
) -> Result<Vec<InternalOrientation>> {
    let interior = t.interior_edges();
    if interior.len() > cap {
        return Err(Error::CapExceeded {
            what: "orientation enumeration",
            size: interior.len(),
            cap,
        });
    }
    let n = t.n();
    let need: Vec<usize> = (0..n).map(|v| if t.is_exterior(v) { 0 } else { 3 }).collect();
    let mut remaining = vec![0usize; n];
    for &e in &interior {
        let (u, v) = t.edge(e);
        remaining[u] += 1;
        remaining[v] += 1;
    }
    let mut indeg = vec![0usize; n];
    let mut heads = vec![None; t.edge_count()];
    let mut found = Vec::new();
    enumerate_rec(
        t,
        &interior,
        0,
        &need,
        &mut indeg,
        &mut remaining,
        &mut heads,
        &mut found,
    )?;
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec(
    t: &PlaneTriangulation,
    interior: &[usize],
    k: usize,
    need: &[usize],
    indeg: &mut [usize],
    remaining: &mut [usize],
    heads: &mut [Option<usize>],
    found: &mut Vec<InternalOrientation>,
) -> Result<()> {
    if k == interior.len() {
        if indeg == need {
            let o = InternalOrientation::new(t.clone(), heads.to_vec()).map_err(|e| {
                Error::Internal(format!("enumerated orientation rejected: {e}"))
            })?;
            found.push(o);
        }
        return Ok(());
    }
    let e = interior[k];
    let (u, v) = t.edge(e);
    remaining[u] -= 1;
    remaining[v] -= 1;
    for (head, tail) in [(u, v), (v, u)] {
        indeg[head] += 1;
        let feasible = [head, tail]
            .iter()
            .all(|&w| indeg[w] <= need[w] && indeg[w] + remaining[w] >= need[w]);
        if feasible {
            heads[e] = Some(head);
            enumerate_rec(t, interior, k + 1, need, indeg, remaining, heads, found)?;
        }
        indeg[head] -= 1;
    }
    heads[e] = None;
    remaining[u] += 1;
    remaining[v] += 1;
    Ok(())
}

/// Plane graph of a straight-line drawing. Rotations are sorted by angle; the
/// outer face is the face walk of least signed area.
pub fn plane_graph_from_drawing(coords: &[(i64, i64)], edges: &[(usize, usize)]) -> Result<PlaneGraph> {
    let n = coords.len();
    let mut rotations = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range")));
        }
        rotations[u].push(v);
        rotations[v].push(u);
    }
    for (v, rot) in rotations.iter_mut().enumerate() {
        let (x0, y0) = coords[v];
        rot.sort_by(|&a, &b| {
            let angle = |w: usize| ((coords[w].1 - y0) as f64).atan2((coords[w].0 - x0) as f64);
            angle(a).total_cmp(&angle(b))
        });
    }
    let mut seen = std::collections::HashSet::new();
    let mut outer = None;
    for u in 0..n {
        for &v in &rotations[u] {
            if !seen.insert((u, v)) {
                continue;
            }
            let mut walk = vec![u];
            let (mut a, mut b) = (u, v);
            loop {
                let rot = &rotations[b];
                let i = rot.iter().position(|&w| w == a).unwrap();
                let c = rot[(i + rot.len() - 1) % rot.len()];
                (a, b) = (b, c);
                if (a, b) == (u, v) {
                    break;
                }
                seen.insert((a, b));
                walk.push(a);
            }
            let area: i128 = (0..walk.len())
                .map(|i| {
                    let (x1, y1) = coords[walk[i]];
                    let (x2, y2) = coords[walk[(i + 1) % walk.len()]];
                    i128::from(x1) * i128::from(y2) - i128::from(x2) * i128::from(y1)
                })
                .sum();
            if outer.as_ref().is_none_or(|(best, _)| area < *best) {
                outer = Some((area, walk));
            }
        }
    }
    let (_, outer_face) = outer.ok_or_else(|| Error::InvalidGraph("drawing has no edges".into()))?;
    PlaneGraph::new(GraphData {
        n,
        rotations,
        outer_face,
    })
}

fn triangulation_from_drawing(coords: &[(i64, i64)], edges: &[(usize, usize)]) -> PlaneTriangulation {
    let g = plane_graph_from_drawing(coords, edges).expect("fixture drawing is plane");
    PlaneTriangulation::try_from(g).expect("fixture is a triangulation")
}

pub fn k3() -> PlaneTriangulation {
    triangulation_from_drawing(&[(0, 0), (10, 0), (5, 9)], &[(0, 1), (1, 2), (0, 2)])
}

pub fn k4() -> PlaneTriangulation {
    triangulation_from_drawing(
        &[(0, 0), (10, 0), (5, 9), (5, 3)],
        &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)],
    )
}

pub fn octahedron() -> PlaneTriangulation {
    triangulation_from_drawing(
        &[(0, 0), (12, 0), (6, 11), (6, 2), (8, 5), (4, 5)],
        &[
            (0, 1), (1, 2), (0, 2),
            (3, 4), (4, 5), (3, 5),
            (0, 3), (0, 5), (1, 3), (1, 4), (2, 4), (2, 5),
        ],
    )
}

/// Three nested triangles, consecutive levels joined like an octahedron.
pub fn nested_triangles() -> PlaneTriangulation {
    triangulation_from_drawing(
        &[
            (0, 0), (48, 0), (24, 44),
            (24, 6), (32, 22), (16, 22),
            (26, 15), (24, 20), (22, 15),
        ],
        &[
            (0, 1), (1, 2), (0, 2),
            (3, 4), (4, 5), (3, 5),
            (6, 7), (7, 8), (6, 8),
            (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5),
            (3, 6), (4, 6), (4, 7), (5, 7), (5, 8), (3, 8),
        ],
    )
}

pub fn cube() -> PlaneGraph {
    plane_graph_from_drawing(
        &[(0, 0), (20, 0), (20, 20), (0, 20), (6, 6), (14, 6), (14, 14), (6, 14)],
        &[
            (0, 1), (1, 2), (2, 3), (0, 3),
            (4, 5), (5, 6), (6, 7), (4, 7),
            (0, 4), (1, 5), (2, 6), (3, 7),
        ],
    )
    .expect("cube drawing is plane")
}

/// Wheel with `rim` spokes: hub 0 and rim vertices 1..=rim.
pub fn wheel(rim: usize) -> PlaneGraph {
    assert!(rim >= 3);
    let mut coords = vec![(0i64, 0i64)];
    for k in 0..rim {
        let a = std::f64::consts::TAU * k as f64 / rim as f64;
        coords.push(((1000.0 * a.cos()).round() as i64, (1000.0 * a.sin()).round() as i64));
    }
    let mut edges = Vec::new();
    for k in 1..=rim {
        edges.push((0, k));
        edges.push((k, k % rim + 1));
    }
    plane_graph_from_drawing(&coords, &edges).expect("wheel drawing is plane")
}

/// Triangulation from an abstract 3-connected planar graph, laid out by
/// barycentric (Tutte) placement with `outer` pinned to a triangle.
pub fn tutte_triangulation(n: usize, edges: &[(usize, usize)], outer: [usize; 3]) -> Result<PlaneTriangulation> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n || u == v {
            return Err(Error::InvalidGraph(format!("bad edge {u}-{v}")));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut pos = vec![(0.0f64, 0.0f64); n];
    let corners = [(0.0, 0.0), (1.0, 0.0), (0.5, 0.866)];
    for (k, &v) in outer.iter().enumerate() {
        pos[v] = corners[k];
    }
    for _ in 0..20_000 {
        let mut delta = 0.0f64;
        for v in (0..n).filter(|v| !outer.contains(v)) {
            let d = adj[v].len() as f64;
            let x = adj[v].iter().map(|&w| pos[w].0).sum::<f64>() / d;
            let y = adj[v].iter().map(|&w| pos[w].1).sum::<f64>() / d;
            delta = delta.max((x - pos[v].0).abs() + (y - pos[v].1).abs());
            pos[v] = (x, y);
        }
        if delta < 1e-13 {
            break;
        }
    }
    let coords: Vec<(i64, i64)> = pos
        .iter()
        .map(|&(x, y)| ((x * 1e6).round() as i64, (y * 1e6).round() as i64))
        .collect();
    PlaneTriangulation::try_from(plane_graph_from_drawing(&coords, edges)?)
}

/// Double pyramid over a `rim`-cycle: rim `0..rim`, apexes `rim` and `rim + 1`.
pub fn bipyramid(rim: usize) -> PlaneTriangulation {
    assert!(rim >= 3);
    let mut edges = Vec::new();
    for i in 0..rim {
        edges.push((i, (i + 1) % rim));
        edges.push((i, rim));
        edges.push((i, rim + 1));
    }
    tutte_triangulation(rim + 2, &edges, [rim + 1, 0, 1]).expect("bipyramid")
}

pub fn icosahedron() -> PlaneTriangulation {
    let mut edges = Vec::new();
    for i in 0..5 {
        let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
        let (low, low_next) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, up), (up, up_next), (up, low), (up_next, low), (low, low_next), (low, 11)]);
    }
    tutte_triangulation(12, &edges, [0, 1, 2]).expect("icosahedron")
}

pub fn square() -> PlaneGraph {
    plane_graph_from_drawing(&[(0, 0), (4, 0), (4, 4), (0, 4)], &[(0, 1), (1, 2), (2, 3), (0, 3)])
        .expect("square drawing is plane")
}

pub fn path(n: usize) -> PlaneGraph {
    let coords: Vec<(i64, i64)> = (0..n as i64).map(|i| (i, i * i)).collect();
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    plane_graph_from_drawing(&coords, &edges).expect("path drawing is plane")
}

/// Fixed named instances used across the test suites.
pub fn suite() -> Vec<(String, PlaneTriangulation)> {
    let mut out = vec![
        ("k3".to_string(), k3()),
        ("k4".to_string(), k4()),
        ("octahedron".to_string(), octahedron()),
        ("nested-triangles".to_string(), nested_triangles()),
        ("cube-triangulated".to_string(), triangulate(&cube()).expect("cube").0),
    ];
    for rim in [4, 5, 6, 7] {
        let t = triangulate(&wheel(rim)).expect("wheel").0;
        out.push((format!("wheel-{rim}-triangulated"), t));
    }
    for rim in [5, 6, 7] {
        out.push((format!("bipyramid-{rim}"), bipyramid(rim)));
    }
    out.push(("icosahedron".to_string(), icosahedron()));
    for (n, seed) in [(5, 1), (6, 2), (7, 3), (7, 4), (8, 5), (8, 6), (9, 7), (10, 42), (10, 8), (12, 9), (16, 10), (24, 11)] {
        out.push((
            format!("stacked-n{n}-s{seed}"),
            stacked_triangulation(GeneratorConfig::stacked(n, seed)),
        ));
    }
    out
}
