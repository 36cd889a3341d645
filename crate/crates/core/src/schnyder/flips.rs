use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{Geometry, InternalOrientation};

/// Directed triangle `a -> b -> c -> a`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DirectedTriangle(pub [usize; 3]);

impl DirectedTriangle {
    pub fn reversed(self) -> DirectedTriangle {
        let [a, b, c] = self.0;
        DirectedTriangle([a, c, b])
    }
}

fn is_directed(o: &InternalOrientation, [a, b, c]: [usize; 3]) -> bool {
    o.is_arc(a, b) && o.is_arc(b, c) && o.is_arc(c, a)
}

/// Clockwise facial triangles, in face order.
fn clockwise_facial(o: &InternalOrientation) -> (Vec<DirectedTriangle>, HashSet<[usize; 3]>) {
    let fm = o.base().face_map();
    let mut found = Vec::new();
    let mut facial = HashSet::new();
    for face in fm.faces.iter().filter(|f| !f.is_outer) {
        let &[a, b, c] = face.boundary.as_slice() else {
            continue;
        };
        let mut key = [a, b, c];
        key.sort_unstable();
        facial.insert(key);
        // inner faces are walked counterclockwise
        if is_directed(o, [a, c, b]) {
            found.push(DirectedTriangle([a, c, b]));
        }
    }
    (found, facial)
}

/// Directed non-facial triangles, each reported once in its direction of travel.
fn directed_separating(o: &InternalOrientation, facial: &HashSet<[usize; 3]>) -> Vec<DirectedTriangle> {
    let t = o.base();
    let mut out = Vec::new();
    for &(a, b) in t.edges() {
        for &c in t.rotation(a) {
            if c <= b || !t.are_adjacent(b, c) || facial.contains(&[a, b, c]) {
                continue;
            }
            if is_directed(o, [a, b, c]) {
                out.push(DirectedTriangle([a, b, c]));
            } else if is_directed(o, [a, c, b]) {
                out.push(DirectedTriangle([a, c, b]));
            }
        }
    }
    out
}

fn find_with(
    o: &InternalOrientation,
    geometry: &mut Option<Geometry>,
) -> Result<Option<DirectedTriangle>> {
    let (facial_cw, facial) = clockwise_facial(o);
    if let Some(&tri) = facial_cw.first() {
        return Ok(Some(tri));
    }
    for tri in directed_separating(o, &facial) {
        if geometry.is_none() {
            *geometry = Some(Geometry::new(o.base())?);
        }
        if !geometry.as_ref().unwrap().is_counterclockwise(&tri.0)? {
            return Ok(Some(tri));
        }
    }
    Ok(None)
}

/// A clockwise directed triangle of interior edges, facial triangles first.
pub fn find_clockwise_triangle(o: &InternalOrientation) -> Result<Option<DirectedTriangle>> {
    find_with(o, &mut None)
}

/// Every clockwise directed triangle of interior edges.
pub fn clockwise_triangles(o: &InternalOrientation) -> Result<Vec<DirectedTriangle>> {
    let (mut out, facial) = clockwise_facial(o);
    let separating = directed_separating(o, &facial);
    if !separating.is_empty() {
        let geometry = Geometry::new(o.base())?;
        for tri in separating {
            if !geometry.is_counterclockwise(&tri.0)? {
                out.push(tri);
            }
        }
    }
    Ok(out)
}

/// Reverse the three edges of a directed triangle.
pub fn flip(o: &InternalOrientation, tri: DirectedTriangle) -> Result<InternalOrientation> {
    if !is_directed(o, tri.0) {
        return Err(Error::InvalidOrientation(format!(
            "{:?} is not a directed triangle of interior edges",
            tri.0
        )));
    }
    let t = o.base();
    let [a, b, c] = tri.0;
    let mut heads = o.heads().to_vec();
    for (x, y) in [(a, b), (b, c), (c, a)] {
        heads[t.edge_id(x, y).unwrap()] = Some(x);
    }
    let flipped = o.with_heads(heads);
    debug_assert!(flipped.violations().is_empty());
    Ok(flipped)
}

/// Flip clockwise triangles until none is left. The result is the unique
/// internal 3-orientation without clockwise directed cycles.
pub fn canonicalize_ccw(o: &InternalOrientation) -> Result<InternalOrientation> {
    let cap = 4u64.saturating_pow(o.base().n() as u32);
    let mut geometry = None;
    let mut current = o.clone();
    let mut flips = 0u64;
    while let Some(tri) = find_with(&current, &mut geometry)? {
        current = flip(&current, tri)?;
        flips += 1;
        if flips > cap {
            return Err(Error::Internal(format!(
                "flip descent exceeded {cap} flips"
            )));
        }
    }
    Ok(current)
}
