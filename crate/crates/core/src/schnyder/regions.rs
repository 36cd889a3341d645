use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::planar::{FaceMap, PlaneTriangulation};

use super::{canonical_realizer, Color, Realizer};

/// Vertices of the monochromatic path from interior vertex `v` to the root
/// of color `c`, starting at `v`. Under the realizer orientation the path is
/// directed from the root toward `v`.
pub fn colored_path(r: &Realizer, v: usize, c: Color) -> Result<Vec<usize>> {
    let t = r.base();
    if v >= t.n() || t.is_exterior(v) {
        return Err(Error::NotInterior(v));
    }
    let root = r.root(c);
    let mut path = vec![v];
    let mut cur = v;
    while cur != root {
        cur = r
            .parent(cur, c)
            .ok_or_else(|| Error::Internal(format!("{c} path from {v} stops at {cur}")))?;
        path.push(cur);
        if path.len() > t.n() {
            return Err(Error::Internal(format!("{c} path from {v} does not end")));
        }
    }
    Ok(path)
}

/// The region of color `c` at `v`: the part of the triangulation enclosed by
/// the paths of the two other colors and the outer edge between their roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub color: Color,
    pub vertex: usize,
    /// Bounding cycle, starting at `vertex`.
    pub boundary: Vec<usize>,
    /// Enclosed inner faces, as ids into `base().face_map()`.
    pub faces: Vec<usize>,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Region {
    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Subgraph inclusion: faces, vertices and edges.
    pub fn is_subregion_of(&self, other: &Region) -> bool {
        let sub = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
        sub(&self.faces, &other.faces)
            && sub(&self.vertices, &other.vertices)
            && sub(&self.edges, &other.edges)
    }
}

pub fn region(r: &Realizer, v: usize, c: Color) -> Result<Region> {
    let fm = r.base().face_map();
    region_in(r, &fm, v, c)
}

pub(crate) fn region_in(r: &Realizer, fm: &FaceMap, v: usize, c: Color) -> Result<Region> {
    let t = r.base();
    let forward = colored_path(r, v, c.next())?;
    let backward = colored_path(r, v, c.prev())?;
    let used: BTreeSet<usize> = forward.iter().copied().collect();
    if backward[1..].iter().any(|x| used.contains(x)) {
        return Err(Error::Internal(format!(
            "paths {forward:?} and {backward:?} from {v} meet"
        )));
    }
    let mut boundary = forward;
    boundary.extend(backward[1..].iter().rev());
    let (left, right) = t.cycle_sides(fm, &boundary)?;
    let faces = if left.contains(&fm.outer) { right } else { left };
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for &f in &faces {
        let walk = &fm.faces[f].boundary;
        for i in 0..walk.len() {
            let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
            vertices.insert(a);
            edges.insert(t.edge_id(a, b).expect("face edge"));
        }
    }
    Ok(Region {
        color: c,
        vertex: v,
        boundary,
        faces,
        vertices: vertices.into_iter().collect(),
        edges: edges.into_iter().collect(),
    })
}

/// Integer Schnyder coordinates: interior `v` sits at
/// (inner faces of its red region, inner faces of its green region); the
/// roots sit at the corners `(2n-5, 0)`, `(0, 2n-5)` and `(0, 0)`.
pub fn schnyder_drawing(r: &Realizer) -> Result<Vec<(i64, i64)>> {
    let t = r.base();
    let fm = t.face_map();
    let inner = (2 * t.n() - 5) as i64;
    let mut coords = vec![(0, 0); t.n()];
    coords[r.root(Color::Red)] = (inner, 0);
    coords[r.root(Color::Green)] = (0, inner);
    coords[r.root(Color::Blue)] = (0, 0);
    for v in t.interior_vertices() {
        let x = region_in(r, &fm, v, Color::Red)?.faces.len() as i64;
        let y = region_in(r, &fm, v, Color::Green)?.faces.len() as i64;
        coords[v] = (x, y);
    }
    Ok(coords)
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn on_segment(p: (i64, i64), a: (i64, i64), b: (i64, i64)) -> bool {
    cross(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

/// Pairs of edges whose straight segments meet anywhere other than a shared
/// endpoint, plus edges passing through a non-incident vertex (reported as
/// `(e, e)`).
pub fn crossing_pairs(t: &PlaneTriangulation, coords: &[(i64, i64)]) -> Vec<(usize, usize)> {
    let edges = t.edges();
    let mut out = Vec::new();
    for (e, &(a, b)) in edges.iter().enumerate() {
        let (pa, pb) = (coords[a], coords[b]);
        if (0..t.n()).any(|v| v != a && v != b && on_segment(coords[v], pa, pb)) {
            out.push((e, e));
        }
        for (f, &(c, d)) in edges.iter().enumerate().skip(e + 1) {
            if a == c || a == d || b == c || b == d {
                // segments sharing an endpoint overlap only if collinear and overlapping
                let shared = if a == c || a == d { a } else { b };
                let other1 = if shared == a { b } else { a };
                let other2 = if shared == c { d } else { c };
                let (s, p, q) = (coords[shared], coords[other1], coords[other2]);
                let same_ray = cross(s, p, q) == 0
                    && (p.0 - s.0) * (q.0 - s.0) + (p.1 - s.1) * (q.1 - s.1) > 0;
                if same_ray {
                    out.push((e, f));
                }
                continue;
            }
            let (pc, pd) = (coords[c], coords[d]);
            let d1 = cross(pa, pb, pc).signum();
            let d2 = cross(pa, pb, pd).signum();
            let d3 = cross(pc, pd, pa).signum();
            let d4 = cross(pc, pd, pb).signum();
            let proper = d1 * d2 < 0 && d3 * d4 < 0;
            let touching = (d1 == 0 && on_segment(pc, pa, pb))
                || (d2 == 0 && on_segment(pd, pa, pb))
                || (d3 == 0 && on_segment(pa, pc, pd))
                || (d4 == 0 && on_segment(pb, pc, pd));
            if proper || touching {
                out.push((e, f));
            }
        }
    }
    out
}

/// Twice the signed area of a polygon; positive when counterclockwise in the
/// usual x-right, y-up frame.
pub(crate) fn signed_area2(coords: &[(i64, i64)], cycle: &[usize]) -> i64 {
    let k = cycle.len();
    (0..k)
        .map(|i| {
            let (x1, y1) = coords[cycle[i]];
            let (x2, y2) = coords[cycle[(i + 1) % k]];
            x1 * y2 - x2 * y1
        })
        .sum()
}

/// A straight-line drawing of a triangulation, used to decide the winding of
/// cycles.
#[derive(Clone, Debug)]
pub struct Geometry {
    base: PlaneTriangulation,
    coords: Vec<(i64, i64)>,
    sign: i64,
}

impl Geometry {
    pub fn new(t: &PlaneTriangulation) -> Result<Self> {
        let r = canonical_realizer(t)?;
        let coords = schnyder_drawing(&r)?;
        // the outer face is listed clockwise, so its area must come out negative
        let outer = signed_area2(&coords, t.outer_face());
        if outer == 0 {
            return Err(Error::Internal("degenerate outer triangle".into()));
        }
        Ok(Geometry {
            base: t.clone(),
            coords,
            sign: -outer.signum(),
        })
    }

    pub fn coords(&self) -> &[(i64, i64)] {
        &self.coords
    }

    pub fn is_counterclockwise(&self, cycle: &[usize]) -> Result<bool> {
        self.base.check_simple_cycle(cycle)?;
        let area = signed_area2(&self.coords, cycle);
        if area == 0 {
            return Err(Error::Internal(format!("cycle {cycle:?} has zero area")));
        }
        Ok(area * self.sign > 0)
    }
}
