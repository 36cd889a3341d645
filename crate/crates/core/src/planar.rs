//! Plane graphs given by rotation systems.
//!
//! Conventions used throughout the crate:
//!
//! * `rotations[v]` lists the neighbours of `v` in counterclockwise order.
//! * The face to the left of the dart `u -> v` continues with `v -> w`, where
//!   `w` is the neighbour immediately *before* `u` in the counterclockwise
//!   rotation at `v` (equivalently, immediately after `u` clockwise).
//!   Inner faces are therefore walked counterclockwise and the outer face
//!   clockwise.
//! * `outer_face` is the clockwise boundary walk of the unbounded face.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Graph JSON document: `{"n": .., "rotations": [[..], ..], "outer_face": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphData {
    pub n: usize,
    pub rotations: Vec<Vec<usize>>,
    pub outer_face: Vec<usize>,
}

impl GraphData {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph data serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    RotationCountMismatch { n: usize, rotations: usize },
    UnknownVertex { at: usize, neighbor: usize },
    SelfLoop { at: usize },
    RepeatedNeighbor { at: usize, neighbor: usize },
    AsymmetricAdjacency { from: usize, to: usize },
    Disconnected,
    EulerFormula { v: usize, e: usize, f: usize },
    OuterFaceNotAFace,
    TooFewVertices { n: usize },
    NonTriangularFace { boundary: Vec<usize> },
    NotTwoConnected { boundary: Vec<usize> },
    EdgeCount { e: usize, expected: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RotationCountMismatch { n, rotations } => {
                write!(f, "n = {n} but {rotations} rotation lists given")
            }
            Violation::UnknownVertex { at, neighbor } => {
                write!(f, "rotation of {at} names unknown vertex {neighbor}")
            }
            Violation::SelfLoop { at } => write!(f, "self-loop at {at}"),
            Violation::RepeatedNeighbor { at, neighbor } => {
                write!(f, "rotation of {at} repeats neighbour {neighbor}")
            }
            Violation::AsymmetricAdjacency { from, to } => {
                write!(f, "{to} is in the rotation of {from} but not vice versa")
            }
            Violation::Disconnected => write!(f, "graph is disconnected"),
            Violation::EulerFormula { v, e, f: faces } => {
                write!(f, "Euler formula fails: V - E + F = {v} - {e} + {faces} != 2")
            }
            Violation::OuterFaceNotAFace => {
                write!(f, "outer_face is not one of the clockwise face walks")
            }
            Violation::TooFewVertices { n } => write!(f, "{n} vertices, need at least 3"),
            Violation::NonTriangularFace { boundary } => {
                write!(f, "face {boundary:?} is not a triangle")
            }
            Violation::NotTwoConnected { boundary } => {
                write!(f, "face {boundary:?} repeats a vertex")
            }
            Violation::EdgeCount { e, expected } => {
                write!(f, "{e} edges, a triangulation needs {expected}")
            }
        }
    }
}

/// Result of [`validate`]: plane-graph violations and, separately, the
/// extra violations that keep a valid plane graph from being a triangulation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: Option<usize>,
    pub violations: Vec<Violation>,
    pub triangulation_violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_triangulation(&self) -> bool {
        self.is_valid() && self.triangulation_violations.is_empty()
    }
}

fn rotation_successor(rotations: &[Vec<usize>], u: usize, v: usize) -> Option<usize> {
    let rot = &rotations[v];
    let pos = rot.iter().position(|&x| x == u)?;
    Some(rot[(pos + rot.len() - 1) % rot.len()])
}

/// Face walks of a symmetric rotation system, in order of first dart
/// `(v, rotations[v][i])` scanned by vertex then slot.
fn trace_faces(rotations: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut faces = Vec::new();
    for (v, rot) in rotations.iter().enumerate() {
        for &w in rot {
            if seen.contains(&(v, w)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (v, w);
            while seen.insert((a, b)) {
                walk.push(a);
                let c = rotation_successor(rotations, a, b).expect("symmetric rotation system");
                a = b;
                b = c;
            }
            faces.push(walk);
        }
    }
    faces
}

fn same_cyclic_walk(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return false;
    }
    (0..a.len()).any(|shift| (0..a.len()).all(|i| a[(i + shift) % a.len()] == b[i]))
}

fn has_repeated_vertex(walk: &[usize]) -> bool {
    let mut seen = HashSet::new();
    !walk.iter().all(|v| seen.insert(*v))
}

/// Check a raw rotation system against the plane-graph and triangulation
/// invariants. Malformed input yields violations, never a panic.
pub fn validate(data: &GraphData) -> ValidationReport {
    let n = data.n;
    let mut violations = Vec::new();
    let mut triangulation_violations = Vec::new();
    let degree_sum: usize = data.rotations.iter().map(Vec::len).sum();
    let mut report = ValidationReport {
        vertex_count: n,
        edge_count: degree_sum / 2,
        face_count: None,
        violations: Vec::new(),
        triangulation_violations: Vec::new(),
    };

    if data.rotations.len() != n {
        violations.push(Violation::RotationCountMismatch {
            n,
            rotations: data.rotations.len(),
        });
        report.violations = violations;
        return report;
    }
    for (v, rot) in data.rotations.iter().enumerate() {
        let mut seen = HashSet::new();
        for &w in rot {
            if w >= n {
                violations.push(Violation::UnknownVertex { at: v, neighbor: w });
            } else if w == v {
                violations.push(Violation::SelfLoop { at: v });
            } else if !seen.insert(w) {
                violations.push(Violation::RepeatedNeighbor { at: v, neighbor: w });
            } else if !data.rotations[w].contains(&v) {
                violations.push(Violation::AsymmetricAdjacency { from: v, to: w });
            }
        }
    }
    for &v in &data.outer_face {
        if v >= n {
            violations.push(Violation::UnknownVertex {
                at: v,
                neighbor: v,
            });
        }
    }
    if !violations.is_empty() {
        report.violations = violations;
        return report;
    }

    if n > 0 {
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &data.rotations[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            violations.push(Violation::Disconnected);
        }
    }

    let faces = if report.edge_count == 0 {
        // a single vertex has one (empty) face
        vec![Vec::new()]
    } else {
        trace_faces(&data.rotations)
    };
    let f = faces.len();
    report.face_count = Some(f);
    if n + f != report.edge_count + 2 {
        violations.push(Violation::EulerFormula {
            v: n,
            e: report.edge_count,
            f,
        });
    }
    let outer = faces
        .iter()
        .position(|walk| same_cyclic_walk(walk, &data.outer_face));
    if outer.is_none() && report.edge_count > 0 {
        violations.push(Violation::OuterFaceNotAFace);
    }

    if n < 3 {
        triangulation_violations.push(Violation::TooFewVertices { n });
    }
    for walk in &faces {
        if walk.len() != 3 {
            triangulation_violations.push(Violation::NonTriangularFace {
                boundary: walk.clone(),
            });
        } else if has_repeated_vertex(walk) {
            triangulation_violations.push(Violation::NotTwoConnected {
                boundary: walk.clone(),
            });
        }
    }
    if n >= 3 && report.edge_count != 3 * n - 6 {
        triangulation_violations.push(Violation::EdgeCount {
            e: report.edge_count,
            expected: 3 * n - 6,
        });
    }
    report.violations = violations;
    report.triangulation_violations = triangulation_violations;
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub boundary: Vec<usize>,
    pub is_outer: bool,
}

/// Faces of a plane graph together with the dart-to-face lookup.
#[derive(Clone, Debug)]
pub struct FaceMap {
    pub faces: Vec<Face>,
    pub outer: usize,
    dart_face: HashMap<(usize, usize), usize>,
}

impl FaceMap {
    /// Face to the left of the dart `u -> v`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.dart_face.get(&(u, v)).copied()
    }
}

/// A connected plane graph with a valid rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    rotations: Vec<Vec<usize>>,
    outer_face: Vec<usize>,
    edges: Vec<(usize, usize)>,
    slot_edges: Vec<Vec<usize>>,
}

impl PlaneGraph {
    pub fn new(data: GraphData) -> Result<Self> {
        let report = validate(&data);
        if !report.is_valid() {
            let msg: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
            return Err(Error::InvalidGraph(msg.join("; ")));
        }
        Ok(Self::from_valid(data))
    }

    fn from_valid(data: GraphData) -> Self {
        let mut edges: Vec<(usize, usize)> = data
            .rotations
            .iter()
            .enumerate()
            .flat_map(|(v, rot)| rot.iter().filter(move |&&w| v < w).map(move |&w| (v, w)))
            .collect();
        edges.sort_unstable();
        let slot_edges = data
            .rotations
            .iter()
            .enumerate()
            .map(|(v, rot)| {
                rot.iter()
                    .map(|&w| edges.binary_search(&(v.min(w), v.max(w))).unwrap())
                    .collect()
            })
            .collect();
        PlaneGraph {
            rotations: data.rotations,
            outer_face: data.outer_face,
            edges,
            slot_edges,
        }
    }

    pub fn to_data(&self) -> GraphData {
        GraphData {
            n: self.n(),
            rotations: self.rotations.clone(),
            outer_face: self.outer_face.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted; edge ids index this list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.edge_id(a, b).is_some()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    /// Edge ids aligned with `rotation(v)`.
    pub fn rotation_edges(&self, v: usize) -> &[usize] {
        &self.slot_edges[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn outer_face(&self) -> &[usize] {
        &self.outer_face
    }

    /// Next dart along the face to the left of `u -> v`.
    pub fn face_successor(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        rotation_successor(&self.rotations, u, v).map(|w| (v, w))
    }

    pub fn faces(&self) -> Vec<Face> {
        self.face_map().faces
    }

    pub fn face_map(&self) -> FaceMap {
        let walks = if self.edges.is_empty() {
            vec![Vec::new()]
        } else {
            trace_faces(&self.rotations)
        };
        let mut dart_face = HashMap::new();
        let mut outer = 0;
        let mut faces = Vec::with_capacity(walks.len());
        for (id, walk) in walks.into_iter().enumerate() {
            for i in 0..walk.len() {
                dart_face.insert((walk[i], walk[(i + 1) % walk.len()]), id);
            }
            let is_outer = same_cyclic_walk(&walk, &self.outer_face) || self.edges.is_empty();
            if is_outer {
                outer = id;
            }
            faces.push(Face {
                boundary: walk,
                is_outer,
            });
        }
        FaceMap {
            faces,
            outer,
            dart_face,
        }
    }

    pub fn to_simple(&self) -> SimpleGraph {
        SimpleGraph::new(self.n(), self.edges.iter().copied()).expect("plane graph is simple")
    }

    /// Checks that `cycle` is a simple cycle of the graph (closing edge implied).
    pub fn check_simple_cycle(&self, cycle: &[usize]) -> Result<()> {
        if cycle.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "{cycle:?} has fewer than 3 vertices"
            )));
        }
        if let Some(&v) = cycle.iter().find(|&&v| v >= self.n()) {
            return Err(Error::InvalidCycle(format!("unknown vertex {v}")));
        }
        if has_repeated_vertex(cycle) {
            return Err(Error::InvalidCycle(format!("{cycle:?} repeats a vertex")));
        }
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            if !self.are_adjacent(a, b) {
                return Err(Error::InvalidCycle(format!("{a} and {b} are not adjacent")));
            }
        }
        Ok(())
    }

    /// Splits the faces by a simple cycle. Returns the faces on the left of
    /// the traversal and on the right, as face ids of `fm`.
    pub fn cycle_sides(&self, fm: &FaceMap, cycle: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
        self.check_simple_cycle(cycle)?;
        let k = cycle.len();
        let on_cycle: HashSet<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % k]);
                [(a, b), (b, a)]
            })
            .collect();
        let flood = |seeds: Vec<usize>| {
            let mut inside = vec![false; fm.faces.len()];
            let mut queue: VecDeque<usize> = VecDeque::new();
            for s in seeds {
                if !inside[s] {
                    inside[s] = true;
                    queue.push_back(s);
                }
            }
            while let Some(f) = queue.pop_front() {
                let walk = &fm.faces[f].boundary;
                for i in 0..walk.len() {
                    let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
                    if on_cycle.contains(&(a, b)) {
                        continue;
                    }
                    let g = fm.face_of_dart(b, a).expect("twin dart");
                    if !inside[g] {
                        inside[g] = true;
                        queue.push_back(g);
                    }
                }
            }
            (0..fm.faces.len()).filter(|&f| inside[f]).collect::<Vec<_>>()
        };
        let dart_faces = |forward: bool| {
            (0..k)
                .map(|i| {
                    let (a, b) = (cycle[i], cycle[(i + 1) % k]);
                    let (a, b) = if forward { (a, b) } else { (b, a) };
                    fm.face_of_dart(a, b).expect("cycle dart")
                })
                .collect::<Vec<_>>()
        };
        Ok((flood(dart_faces(true)), flood(dart_faces(false))))
    }

    /// Faces enclosed by a simple cycle (the side without the outer face),
    /// and whether that side lies to the left of the traversal.
    pub fn enclosed_faces(&self, cycle: &[usize]) -> Result<(Vec<usize>, bool)> {
        let fm = self.face_map();
        let (left, right) = self.cycle_sides(&fm, cycle)?;
        if left.contains(&fm.outer) {
            Ok((right, false))
        } else {
            Ok((left, true))
        }
    }
}

/// A plane graph with every face (outer included) a triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneTriangulation(PlaneGraph);

impl PlaneTriangulation {
    pub fn new(data: GraphData) -> Result<Self> {
        let report = validate(&data);
        if !report.is_valid() {
            let msg: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
            return Err(Error::InvalidGraph(msg.join("; ")));
        }
        if !report.is_triangulation() {
            let msg: Vec<String> = report
                .triangulation_violations
                .iter()
                .map(ToString::to_string)
                .collect();
            return Err(Error::NotTriangulation(msg.join("; ")));
        }
        Ok(PlaneTriangulation(PlaneGraph::from_valid(data)))
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.0
    }

    /// The outer triangle in clockwise order.
    pub fn exterior(&self) -> [usize; 3] {
        let o = self.0.outer_face();
        [o[0], o[1], o[2]]
    }

    pub fn is_exterior(&self, v: usize) -> bool {
        self.0.outer_face().contains(&v)
    }

    pub fn interior_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| !self.is_exterior(v)).collect()
    }

    /// Edges of the outer triangle are exterior; all others are interior.
    pub fn is_interior_edge(&self, e: usize) -> bool {
        let (u, v) = self.edge(e);
        !(self.is_exterior(u) && self.is_exterior(v))
    }

    pub fn interior_edges(&self) -> Vec<usize> {
        (0..self.edge_count())
            .filter(|&e| self.is_interior_edge(e))
            .collect()
    }
}

impl Deref for PlaneTriangulation {
    type Target = PlaneGraph;
    fn deref(&self) -> &PlaneGraph {
        &self.0
    }
}

impl TryFrom<PlaneGraph> for PlaneTriangulation {
    type Error = Error;
    fn try_from(g: PlaneGraph) -> Result<Self> {
        PlaneTriangulation::new(g.to_data())
    }
}

/// 2-connected plane graph whose inner faces are triangles, with two
/// distinguished outer vertices `v1`, `v2` such that `v2` follows `v1`
/// clockwise on the outer cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearTriangulation {
    graph: PlaneGraph,
    v1: usize,
    v2: usize,
}

impl NearTriangulation {
    pub fn new(graph: PlaneGraph, v1: usize, v2: usize) -> Result<Self> {
        let fm = graph.face_map();
        for face in &fm.faces {
            if has_repeated_vertex(&face.boundary) || face.boundary.len() < 3 {
                return Err(Error::NotNearTriangulation(format!(
                    "face {:?} is not a simple cycle",
                    face.boundary
                )));
            }
            if !face.is_outer && face.boundary.len() != 3 {
                return Err(Error::NotNearTriangulation(format!(
                    "inner face {:?} is not a triangle",
                    face.boundary
                )));
            }
        }
        let outer = graph.outer_face();
        let k = outer.len();
        let consecutive = (0..k).any(|i| outer[i] == v1 && outer[(i + 1) % k] == v2);
        if !consecutive {
            return Err(Error::NotNearTriangulation(format!(
                "{v2} does not follow {v1} clockwise on the outer cycle"
            )));
        }
        Ok(NearTriangulation { graph, v1, v2 })
    }

    /// Distinguish the first two outer vertices of a triangulation so that the
    /// third one, `outer_face[0]`, is the first central vertex.
    pub fn from_triangulation(t: &PlaneTriangulation) -> Self {
        let [_, o1, o2] = t.exterior();
        NearTriangulation {
            graph: t.graph().clone(),
            v1: o1,
            v2: o2,
        }
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn distinguished(&self) -> (usize, usize) {
        (self.v1, self.v2)
    }
}

/// Add edges until every face is a triangle. Rotations of `g` survive as
/// subsequences of the output rotations; the added edges are returned in
/// insertion order as `(min, max)` pairs.
pub fn triangulate(g: &PlaneGraph) -> Result<(PlaneTriangulation, Vec<(usize, usize)>)> {
    if g.n() < 3 {
        return Err(Error::InvalidGraph(format!(
            "triangulation needs at least 3 vertices, got {}",
            g.n()
        )));
    }
    let mut rotations = g.rotations.clone();
    let mut outer = g.outer_face.clone();
    let mut added = Vec::new();
    loop {
        let walks = trace_faces(&rotations);
        let Some(walk) = walks.iter().find(|w| w.len() > 3) else {
            break;
        };
        let is_outer = same_cyclic_walk(walk, &outer);
        let adjacent = |a: usize, b: usize| rotations[a].contains(&b);
        let len = walk.len();
        // distance-2 chords first, then any admissible pair
        let mut choice = (0..len).find_map(|i| {
            let (a, b) = (walk[i], walk[(i + 2) % len]);
            (a != b && !adjacent(a, b)).then_some((i, 2))
        });
        if choice.is_none() {
            choice = (0..len).find_map(|i| {
                (3..len - 1).find_map(|d| {
                    let (a, b) = (walk[i], walk[(i + d) % len]);
                    (a != b && !adjacent(a, b)).then_some((i, d))
                })
            });
        }
        let (start, d) = choice.ok_or_else(|| {
            Error::Internal(format!("no admissible chord in face {walk:?}"))
        })?;
        let w: Vec<usize> = (0..len).map(|i| walk[(start + i) % len]).collect();
        let (a, b) = (w[0], w[d]);
        // at a face corner (prev -> x -> next) the new neighbour goes right
        // after `next` in the counterclockwise rotation of x
        let insert_at = |rotations: &mut Vec<Vec<usize>>, x: usize, next: usize, new: usize| {
            let pos = rotations[x].iter().position(|&y| y == next).unwrap();
            rotations[x].insert(pos + 1, new);
        };
        insert_at(&mut rotations, a, w[1], b);
        insert_at(&mut rotations, b, w[(d + 1) % len], a);
        if is_outer {
            let mut new_outer: Vec<usize> = w[d..].to_vec();
            new_outer.push(w[0]);
            outer = new_outer;
        }
        added.push((a.min(b), a.max(b)));
    }
    let t = PlaneTriangulation::new(GraphData {
        n: g.n(),
        rotations,
        outer_face: outer,
    })?;
    Ok((t, added))
}

/// True iff the bounded side of the simple cycle lies to the left of its
/// traversal. Decided by the sign of the polygon area in the Schnyder
/// drawing of `t`.
pub fn is_counterclockwise(t: &PlaneTriangulation, cycle: &[usize]) -> Result<bool> {
    let geometry = crate::schnyder::Geometry::new(t)?;
    geometry.is_counterclockwise(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> GraphData {
        GraphData {
            n: 3,
            rotations: vec![vec![1, 2], vec![2, 0], vec![0, 1]],
            outer_face: vec![0, 2, 1],
        }
    }

    // outer triangle 0 (0,0), 1 (10,0), 2 (5,9); centre 3 (5,3)
    pub(crate) fn k4() -> GraphData {
        GraphData {
            n: 4,
            rotations: vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            outer_face: vec![0, 2, 1],
        }
    }

    #[test]
    fn k3_is_the_smallest_triangulation() {
        let r = validate(&k3());
        assert!(r.is_triangulation(), "{r:?}");
        assert_eq!(r.face_count, Some(2));
    }

    #[test]
    fn k4_satisfies_euler() {
        let r = validate(&k4());
        assert!(r.is_triangulation(), "{r:?}");
        assert_eq!((r.vertex_count, r.edge_count, r.face_count), (4, 6, Some(4)));
    }

    #[test]
    fn reversed_rotation_breaks_euler() {
        let mut d = k4();
        d.rotations[3].reverse();
        let r = validate(&d);
        assert!(!r.is_valid());
        assert!(r.face_count != Some(4));
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::EulerFormula { .. })));
    }

    #[test]
    fn malformed_input_is_reported() {
        let mut d = k4();
        d.rotations[0] = vec![1, 3];
        let r = validate(&d);
        assert!(r
            .violations
            .contains(&Violation::AsymmetricAdjacency { from: 2, to: 0 }));
        d.rotations[0] = vec![1, 3, 7];
        assert!(validate(&d)
            .violations
            .contains(&Violation::UnknownVertex { at: 0, neighbor: 7 }));
        d.rotations.pop();
        assert!(!validate(&d).is_valid());
    }

    #[test]
    fn outer_face_must_be_clockwise() {
        let mut d = k4();
        d.outer_face = vec![0, 1, 2];
        assert!(validate(&d)
            .violations
            .contains(&Violation::OuterFaceNotAFace));
    }

    #[test]
    fn faces_partition_darts() {
        let g = PlaneGraph::new(k4()).unwrap();
        let faces = g.faces();
        assert_eq!(faces.len(), 4);
        let total: usize = faces.iter().map(|f| f.boundary.len()).sum();
        assert_eq!(total, 2 * g.edge_count());
        assert_eq!(faces.iter().filter(|f| f.is_outer).count(), 1);
        assert!(faces.iter().all(|f| f.boundary.len() == 3));
    }

    #[test]
    fn triangulate_is_identity_on_triangles() {
        let t = PlaneGraph::new(k3()).unwrap();
        let (out, added) = triangulate(&t).unwrap();
        assert!(added.is_empty());
        assert_eq!(out.to_data(), k3());
    }

    #[test]
    fn triangulate_path_and_square() {
        let path = GraphData {
            n: 3,
            rotations: vec![vec![1], vec![2, 0], vec![1]],
            outer_face: vec![0, 1, 2, 1],
        };
        let (t, added) = triangulate(&PlaneGraph::new(path).unwrap()).unwrap();
        assert_eq!(added, vec![(0, 2)]);
        assert_eq!(t.edge_count(), 3);

        // square 0 (0,0), 1 (1,0), 2 (1,1), 3 (0,1)
        let square = GraphData {
            n: 4,
            rotations: vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]],
            outer_face: vec![0, 3, 2, 1],
        };
        let (t, added) = triangulate(&PlaneGraph::new(square).unwrap()).unwrap();
        assert_eq!(added.len(), 2);
        assert_eq!(t.edge_count(), 6);
    }

    #[test]
    fn too_small_to_triangulate() {
        let edge = GraphData {
            n: 2,
            rotations: vec![vec![1], vec![0]],
            outer_face: vec![0, 1],
        };
        let g = PlaneGraph::new(edge).unwrap();
        assert!(triangulate(&g).is_err());
    }

    #[test]
    fn cycle_checks() {
        let g = PlaneGraph::new(k4()).unwrap();
        assert!(g.check_simple_cycle(&[0, 1]).is_err());
        assert!(g.check_simple_cycle(&[0, 1, 0]).is_err());
        assert!(g.check_simple_cycle(&[0, 1, 3]).is_ok());
        let (inside, left) = g.enclosed_faces(&[0, 1, 3]).unwrap();
        assert_eq!(inside.len(), 1);
        assert!(left);
        let (inside, left) = g.enclosed_faces(&[0, 2, 1]).unwrap();
        assert_eq!(inside.len(), 3);
        assert!(!left);
    }

    #[test]
    fn near_triangulation_requires_clockwise_pair() {
        let g = PlaneGraph::new(k4()).unwrap();
        assert!(NearTriangulation::new(g.clone(), 0, 2).is_ok());
        assert!(NearTriangulation::new(g.clone(), 2, 0).is_err());
        assert!(NearTriangulation::new(g, 0, 3).is_err());
    }
}
