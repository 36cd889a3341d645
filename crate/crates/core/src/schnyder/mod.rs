//! Internal 3-orientations and realizers (Schnyder woods) of plane
//! triangulations.
//!
//! Realizer orientations follow the convention useful for Alon-Tarsi
//! arguments: every interior vertex has in-degree one in each color, and the
//! counterclockwise order of its edges is
//! incoming red, outgoing blue*, incoming green, outgoing red*, incoming blue,
//! outgoing green*. The roots `v_r, v_g, v_b` appear counterclockwise on the
//! outer triangle, and every interior edge leaving a root carries the root's
//! color.

mod flips;
mod procedure;
mod regions;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::planar::PlaneTriangulation;

pub use flips::{
    canonicalize_ccw, clockwise_triangles, find_clockwise_triangle, flip, DirectedTriangle,
};
pub use procedure::{
    orient_triangulation, thomassen_procedure, OrientedEdge, ProcedureOutput, ProcedureTrace,
    StepAction, TraceStep,
};
pub use regions::{colored_path, crossing_pairs, region, schnyder_drawing, Geometry, Region};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Green,
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    pub fn index(self) -> usize {
        match self {
            Color::Red => 0,
            Color::Green => 1,
            Color::Blue => 2,
        }
    }

    pub fn from_index(i: usize) -> Color {
        Color::ALL[i % 3]
    }

    /// Red -> green -> blue -> red.
    pub fn next(self) -> Color {
        Color::from_index(self.index() + 1)
    }

    pub fn prev(self) -> Color {
        Color::from_index(self.index() + 2)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Green => "green",
            Color::Blue => "blue",
        })
    }
}

/// Orientation of the interior edges of a triangulation in which every
/// interior vertex has in-degree 3 and no interior edge points to an
/// exterior vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalOrientation {
    base: PlaneTriangulation,
    heads: Vec<Option<usize>>,
}

impl InternalOrientation {
    /// `heads[e]` is the head of interior edge `e`; exterior edges must be `None`.
    pub fn new(base: PlaneTriangulation, heads: Vec<Option<usize>>) -> Result<Self> {
        let o = InternalOrientation { base, heads };
        let problems = o.violations();
        if problems.is_empty() {
            Ok(o)
        } else {
            Err(Error::InvalidOrientation(problems.join("; ")))
        }
    }

    /// Build from `(tail, head)` arcs covering every interior edge.
    pub fn from_arcs(
        base: PlaneTriangulation,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut heads = vec![None; base.edge_count()];
        for (t, h) in arcs {
            let e = base
                .edge_id(t, h)
                .ok_or_else(|| Error::InvalidOrientation(format!("{t}-{h} is not an edge")))?;
            heads[e] = Some(h);
        }
        InternalOrientation::new(base, heads)
    }

    pub fn violations(&self) -> Vec<String> {
        let t = &self.base;
        let mut out = Vec::new();
        if self.heads.len() != t.edge_count() {
            out.push(format!(
                "{} heads for {} edges",
                self.heads.len(),
                t.edge_count()
            ));
            return out;
        }
        let mut indeg = vec![0usize; t.n()];
        for (e, head) in self.heads.iter().enumerate() {
            let (u, v) = t.edge(e);
            match (t.is_interior_edge(e), head) {
                (true, Some(h)) if *h == u || *h == v => indeg[*h] += 1,
                (true, Some(h)) => out.push(format!("head {h} of edge {u}-{v} is not an endpoint")),
                (true, None) => out.push(format!("interior edge {u}-{v} is not oriented")),
                (false, Some(_)) => out.push(format!("exterior edge {u}-{v} is oriented")),
                (false, None) => {}
            }
        }
        for (v, &d) in indeg.iter().enumerate() {
            if t.is_exterior(v) && d != 0 {
                out.push(format!("interior edge directed toward exterior vertex {v}"));
            } else if !t.is_exterior(v) && d != 3 {
                out.push(format!("interior vertex {v} has in-degree {d}"));
            }
        }
        out
    }

    pub fn base(&self) -> &PlaneTriangulation {
        &self.base
    }

    pub fn heads(&self) -> &[Option<usize>] {
        &self.heads
    }

    pub fn head(&self, e: usize) -> Option<usize> {
        self.heads[e]
    }

    pub fn tail(&self, e: usize) -> Option<usize> {
        let (u, v) = self.base.edge(e);
        self.heads[e].map(|h| if h == u { v } else { u })
    }

    /// True iff `a - b` is an interior edge directed `a -> b`.
    pub fn is_arc(&self, a: usize, b: usize) -> bool {
        self.base
            .edge_id(a, b)
            .is_some_and(|e| self.heads[e] == Some(b))
    }

    /// `(tail, head)` for every interior edge, by edge id.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.heads.len())
            .filter_map(|e| Some((self.tail(e)?, self.heads[e]?)))
            .collect()
    }

    pub(crate) fn with_heads(&self, heads: Vec<Option<usize>>) -> Self {
        InternalOrientation {
            base: self.base.clone(),
            heads,
        }
    }
}

/// A Schnyder realizer: an internal 3-orientation with a coloring of the
/// interior edges into three trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realizer {
    orientation: InternalOrientation,
    colors: Vec<Option<Color>>,
    roots: [usize; 3],
}

impl Realizer {
    pub fn orientation(&self) -> &InternalOrientation {
        &self.orientation
    }

    pub fn base(&self) -> &PlaneTriangulation {
        &self.orientation.base
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn color(&self, e: usize) -> Option<Color> {
        self.colors[e]
    }

    pub fn root(&self, c: Color) -> usize {
        self.roots[c.index()]
    }

    pub fn roots(&self) -> [usize; 3] {
        self.roots
    }

    /// Tail of the unique incoming edge of color `c` at interior vertex `v`.
    pub fn parent(&self, v: usize, c: Color) -> Option<usize> {
        let t = self.base();
        t.rotation_edges(v).iter().find_map(|&e| {
            (self.orientation.heads[e] == Some(v) && self.colors[e] == Some(c))
                .then(|| self.orientation.tail(e).unwrap())
        })
    }

    /// Edge ids of one color class.
    pub fn class(&self, c: Color) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&e| self.colors[e] == Some(c))
            .collect()
    }

    /// Every violated realizer axiom, as text. Empty for a valid realizer.
    pub fn violations(&self) -> Vec<String> {
        let t = self.base();
        let o = &self.orientation;
        let mut out = o.violations();
        for e in 0..t.edge_count() {
            let (u, v) = t.edge(e);
            match (t.is_interior_edge(e), self.colors[e]) {
                (true, None) => out.push(format!("interior edge {u}-{v} uncolored")),
                (false, Some(_)) => out.push(format!("exterior edge {u}-{v} colored")),
                _ => {}
            }
        }
        if !out.is_empty() {
            return out;
        }
        for v in t.interior_vertices() {
            let rot = t.rotation_edges(v);
            let incoming: Vec<(usize, Color)> = rot
                .iter()
                .enumerate()
                .filter(|(_, &e)| o.heads[e] == Some(v))
                .map(|(slot, &e)| (slot, self.colors[e].unwrap()))
                .collect();
            let mut per_color = [0; 3];
            for &(_, c) in &incoming {
                per_color[c.index()] += 1;
            }
            if per_color != [1, 1, 1] {
                out.push(format!(
                    "vertex {v}: incoming colors red/green/blue counted {per_color:?}"
                ));
                continue;
            }
            // walk counterclockwise from the incoming red edge
            let start = incoming.iter().find(|(_, c)| *c == Color::Red).unwrap().0;
            let mut expected_in = Color::Red;
            for k in 0..rot.len() {
                let e = rot[(start + k) % rot.len()];
                let c = self.colors[e].unwrap();
                if o.heads[e] == Some(v) {
                    if c != expected_in {
                        out.push(format!("vertex {v}: incoming {c} out of order"));
                        break;
                    }
                    expected_in = expected_in.next();
                } else if c != expected_in.prev().prev() {
                    // between incoming X and incoming X.next() the outgoing edges have color X.prev()
                    out.push(format!("vertex {v}: outgoing {c} in the wrong sector"));
                    break;
                }
            }
        }
        for c in Color::ALL {
            let root = self.root(c);
            for v in t.interior_vertices() {
                let mut cur = v;
                let mut steps = 0;
                loop {
                    match self.parent(cur, c) {
                        Some(p) if p == root => break,
                        Some(p) if t.is_exterior(p) => {
                            out.push(format!("{c} path from {v} reaches {p}, not root {root}"));
                            break;
                        }
                        Some(p) => cur = p,
                        None => {
                            out.push(format!("{c} path from {v} stops at {cur}"));
                            break;
                        }
                    }
                    steps += 1;
                    if steps > t.n() {
                        out.push(format!("{c} class has a cycle through {v}"));
                        break;
                    }
                }
            }
        }
        out
    }
}

/// Default root assignment: red at `outer_face[0]`, then green and blue
/// counterclockwise.
fn default_roots(t: &PlaneTriangulation) -> [usize; 3] {
    roots_with_red(t, t.exterior()[0]).expect("outer vertex")
}

fn roots_with_red(t: &PlaneTriangulation, red: usize) -> Result<[usize; 3]> {
    let o = t.exterior();
    let k = o
        .iter()
        .position(|&x| x == red)
        .ok_or_else(|| Error::InvalidOrientation(format!("{red} is not an exterior vertex")))?;
    // outer_face is clockwise, so counterclockwise successors are at k-1, k-2
    Ok([o[k], o[(k + 2) % 3], o[(k + 1) % 3]])
}

/// The realizer determined by an internal 3-orientation, with red rooted at
/// `outer_face[0]`.
pub fn realizer_from_orientation(o: &InternalOrientation) -> Result<Realizer> {
    let roots = default_roots(&o.base);
    realizer_with_roots(o, roots)
}

/// As [`realizer_from_orientation`] but with the red root chosen by the caller.
pub fn realizer_with_red_root(o: &InternalOrientation, red: usize) -> Result<Realizer> {
    let roots = roots_with_red(&o.base, red)?;
    realizer_with_roots(o, roots)
}

fn realizer_with_roots(o: &InternalOrientation, roots: [usize; 3]) -> Result<Realizer> {
    let problems = o.violations();
    if !problems.is_empty() {
        return Err(Error::InvalidOrientation(problems.join("; ")));
    }
    let t = &o.base;
    let n = t.n();
    let root_color = |v: usize| roots.iter().position(|&r| r == v).map(Color::from_index);

    // incoming edges of each interior vertex, as rotation slots
    let incoming: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            t.rotation_edges(v)
                .iter()
                .enumerate()
                .filter(|(_, &e)| o.heads[e] == Some(v))
                .map(|(slot, _)| slot)
                .collect()
        })
        .collect();
    // offset[v] = k means incoming[v][(k + c) % 3] has color c
    let mut offset: Vec<Option<usize>> = vec![None; n];

    // color of the edge at `slot` of tail vertex `v`, once `v` is resolved
    let outgoing_color = |offset: &[Option<usize>], v: usize, slot: usize| -> Option<Color> {
        if let Some(c) = root_color(v) {
            return Some(c);
        }
        let k = offset[v]?;
        let ins = &incoming[v];
        // last incoming slot at or before `slot`, cyclically
        let idx = ins
            .iter()
            .rposition(|&s| s <= slot)
            .unwrap_or(ins.len() - 1);
        let preceding = Color::from_index((idx + 3 - k) % 3);
        Some(preceding.prev())
    };

    let mut queue: VecDeque<usize> = VecDeque::new();
    let resolve = |offset: &mut Vec<Option<usize>>, v: usize| -> bool {
        if offset[v].is_some() || t.is_exterior(v) {
            return false;
        }
        for (idx, &slot) in incoming[v].iter().enumerate() {
            let e = t.rotation_edges(v)[slot];
            let tail = o.tail(e).unwrap();
            let tail_slot = t.rotation(tail).iter().position(|&w| w == v).unwrap();
            if let Some(c) = outgoing_color(offset, tail, tail_slot) {
                offset[v] = Some((idx + 3 - c.index()) % 3);
                return true;
            }
        }
        false
    };
    for v in 0..n {
        if resolve(&mut offset, v) {
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &e in t.rotation_edges(v) {
            if o.tail(e) == Some(v) {
                let h = o.heads[e].unwrap();
                if resolve(&mut offset, h) {
                    queue.push_back(h);
                }
            }
        }
    }
    if let Some(v) = (0..n).find(|&v| !t.is_exterior(v) && offset[v].is_none()) {
        return Err(Error::Internal(format!(
            "no color reaches interior vertex {v}"
        )));
    }

    let mut colors = vec![None; t.edge_count()];
    for (e, slot) in colors.iter_mut().enumerate() {
        let (Some(h), Some(tail)) = (o.heads[e], o.tail(e)) else {
            continue;
        };
        let tail_slot = t.rotation(tail).iter().position(|&w| w == h).unwrap();
        let from_tail = outgoing_color(&offset, tail, tail_slot).unwrap();
        let head_slot = t.rotation(h).iter().position(|&w| w == tail).unwrap();
        let idx = incoming[h].iter().position(|&s| s == head_slot).unwrap();
        let from_head = Color::from_index((idx + 3 - offset[h].unwrap()) % 3);
        if from_tail != from_head {
            return Err(Error::Internal(format!(
                "edge {tail}->{h}: tail says {from_tail}, head says {from_head}"
            )));
        }
        *slot = Some(from_tail);
    }
    let r = Realizer {
        orientation: o.clone(),
        colors,
        roots,
    };
    let problems = r.violations();
    if problems.is_empty() {
        Ok(r)
    } else {
        Err(Error::Internal(problems.join("; ")))
    }
}

/// Forget the coloring.
pub fn orientation_of(r: &Realizer) -> InternalOrientation {
    r.orientation.clone()
}

/// Realizer of the counterclockwise orientation built by the chordal
/// decomposition procedure, red rooted at `outer_face[0]`.
pub fn canonical_realizer(t: &PlaneTriangulation) -> Result<Realizer> {
    let out = orient_triangulation(t)?;
    let o = out.internal_orientation(t)?;
    realizer_from_orientation(&o)
}
