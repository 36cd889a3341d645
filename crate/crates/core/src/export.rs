//! Edge-record JSON, DOT and SVG output.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::planar::PlaneTriangulation;
use crate::schnyder::{Color, InternalOrientation, Realizer};

/// One edge of an orientation, realizer or certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub u: usize,
    pub v: usize,
    pub head: Option<usize>,
    pub color: Option<Color>,
    pub strength: Option<u32>,
}

pub fn orientation_records(o: &InternalOrientation) -> Vec<EdgeRecord> {
    o.base()
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| EdgeRecord {
            u,
            v,
            head: o.head(e),
            color: None,
            strength: None,
        })
        .collect()
}

pub fn realizer_records(r: &Realizer) -> Vec<EdgeRecord> {
    let o = r.orientation();
    r.base()
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| EdgeRecord {
            u,
            v,
            head: o.head(e),
            color: r.color(e),
            strength: None,
        })
        .collect()
}

/// Rebuild an internal 3-orientation from edge records listed in edge order.
pub fn orientation_from_records(
    t: &PlaneTriangulation,
    records: &[EdgeRecord],
) -> Result<InternalOrientation> {
    let mut heads = vec![None; t.edge_count()];
    for rec in records {
        let e = t
            .edge_id(rec.u, rec.v)
            .ok_or_else(|| Error::Parse(format!("{}-{} is not an edge", rec.u, rec.v)))?;
        heads[e] = rec.head.filter(|_| t.is_interior_edge(e));
    }
    InternalOrientation::new(t.clone(), heads)
}

fn color_name(c: Option<Color>) -> &'static str {
    match c {
        Some(Color::Red) => "red",
        Some(Color::Green) => "green",
        Some(Color::Blue) => "blue",
        None => "black",
    }
}

/// Graphviz digraph of a realizer; outer edges are undirected and black.
pub fn realizer_dot(r: &Realizer) -> String {
    let t = r.base();
    let o = r.orientation();
    let mut s = String::from("digraph realizer {\n");
    for v in 0..t.n() {
        let _ = writeln!(s, "  {v};");
    }
    for (e, &(u, v)) in t.edges().iter().enumerate() {
        match (o.tail(e), o.head(e)) {
            (Some(a), Some(b)) => {
                let _ = writeln!(s, "  {a} -> {b} [color={}];", color_name(r.color(e)));
            }
            _ => {
                let _ = writeln!(s, "  {u} -> {v} [dir=none, color=black];");
            }
        }
    }
    s.push_str("}\n");
    s
}

/// SVG of a straight-line drawing with edges tinted by realizer color.
pub fn drawing_svg(r: &Realizer, coords: &[(i64, i64)]) -> String {
    let t = r.base();
    let max = coords
        .iter()
        .map(|&(x, y)| x.max(y))
        .max()
        .unwrap_or(1)
        .max(1);
    let scale = 40i64;
    let margin = 20i64;
    let size = max * scale + 2 * margin;
    let px = |(x, y): (i64, i64)| (margin + x * scale, size - margin - y * scale);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    for (e, &(u, v)) in t.edges().iter().enumerate() {
        let (x1, y1) = px(coords[u]);
        let (x2, y2) = px(coords[v]);
        let _ = writeln!(
            s,
            r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{}" stroke-width="2"/>"#,
            color_name(r.color(e))
        );
    }
    for (v, &p) in coords.iter().enumerate() {
        let (x, y) = px(p);
        let _ = writeln!(s, r#"  <circle cx="{x}" cy="{y}" r="5" fill="white" stroke="black"/>"#);
        let _ = writeln!(
            s,
            r#"  <text x="{}" y="{}" font-size="12">{v}</text>"#,
            x + 6,
            y - 6
        );
    }
    s.push_str("</svg>\n");
    s
}

/// JSON form of a realizer: roots by color and one record per edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizerDoc {
    pub roots: [usize; 3],
    pub edges: Vec<EdgeRecord>,
}

impl RealizerDoc {
    pub fn new(r: &Realizer) -> Self {
        RealizerDoc {
            roots: r.roots(),
            edges: realizer_records(r),
        }
    }
}
