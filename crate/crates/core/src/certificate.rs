//! Augmented orientations certifying Alon-Tarsi bounds.
//!
//! An augmented orientation assigns every edge a direction and a positive
//! strength. An Eulerian structure is a set of edges in which every vertex
//! has equal strength-weighted in- and out-degree. If the even and odd
//! structures differ in number, the maximum augmented in-degree plus one
//! bounds the Alon-Tarsi number.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::export::EdgeRecord;
use crate::graph::{degeneracy, topological_order, SimpleGraph};
use crate::planar::{GraphData, PlaneTriangulation};
use crate::schnyder::{
    find_clockwise_triangle, orient_triangulation, realizer_from_orientation,
    canonical_realizer, Color, Realizer,
};

pub const DEFAULT_EULERIAN_CAP: usize = 26;
pub const CERTIFICATE_FORMAT: &str = "at-certificate/1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedOrientation {
    graph: SimpleGraph,
    heads: Vec<usize>,
    strengths: Vec<u32>,
}

impl AugmentedOrientation {
    /// `heads[e]` and `strengths[e]` refer to `graph.edges()[e]`.
    pub fn new(graph: SimpleGraph, heads: Vec<usize>, strengths: Vec<u32>) -> Result<Self> {
        let m = graph.edge_count();
        if heads.len() != m || strengths.len() != m {
            return Err(Error::InvalidOrientation(format!(
                "{} heads and {} strengths for {m} edges",
                heads.len(),
                strengths.len()
            )));
        }
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            if heads[e] != u && heads[e] != v {
                return Err(Error::InvalidOrientation(format!(
                    "head {} of edge {u}-{v} is not an endpoint",
                    heads[e]
                )));
            }
            if strengths[e] == 0 {
                return Err(Error::InvalidOrientation(format!(
                    "edge {u}-{v} has strength 0"
                )));
            }
        }
        Ok(AugmentedOrientation {
            graph,
            heads,
            strengths,
        })
    }

    /// Every edge with strength 1.
    pub fn plain(graph: SimpleGraph, heads: Vec<usize>) -> Result<Self> {
        let strengths = vec![1; graph.edge_count()];
        AugmentedOrientation::new(graph, heads, strengths)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn head(&self, e: usize) -> usize {
        self.heads[e]
    }

    pub fn tail(&self, e: usize) -> usize {
        let (u, v) = self.graph.edges()[e];
        if self.heads[e] == u {
            v
        } else {
            u
        }
    }

    pub fn strength(&self, e: usize) -> u32 {
        self.strengths[e]
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    pub fn strengths(&self) -> &[u32] {
        &self.strengths
    }

    /// Strength-weighted in-degree of every vertex; also the exponent vector
    /// of the monomial this orientation selects from the augmented polynomial.
    pub fn augmented_indegrees(&self) -> Vec<u32> {
        let mut d = vec![0; self.n()];
        for e in 0..self.edge_count() {
            d[self.heads[e]] += self.strengths[e];
        }
        d
    }

    /// Sign of the orientation's term in the product over edges `i < j` of
    /// `(x_i^D - x_j^D)`: one factor of -1 per edge pointing to its larger end.
    pub fn term_sign(&self) -> i32 {
        let flips = self
            .graph
            .edges()
            .iter()
            .zip(&self.heads)
            .filter(|(&(_, v), &h)| h == v)
            .count();
        if flips % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

pub fn max_augmented_indegree(a: &AugmentedOrientation) -> u32 {
    a.augmented_indegrees().into_iter().max().unwrap_or(0)
}

/// Even and odd Eulerian structures; the empty structure is counted in
/// `even` when `includes_empty` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerianCount {
    pub even: u64,
    pub odd: u64,
    pub includes_empty: bool,
}

impl EulerianCount {
    pub fn nonempty(&self) -> u64 {
        self.even + self.odd - u64::from(self.includes_empty)
    }

    /// Even minus odd count, nonempty and empty structures alike.
    pub fn difference(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }
}

struct Search<'a> {
    order: Vec<usize>,
    tails: Vec<usize>,
    heads: Vec<usize>,
    strengths: Vec<i64>,
    remaining: Vec<i64>,
    balance: Vec<i64>,
    chosen: Vec<usize>,
    visit: &'a mut dyn FnMut(&[usize]),
}

impl Search<'_> {
    fn feasible(&self, v: usize) -> bool {
        self.balance[v].abs() <= self.remaining[v]
    }

    fn go(&mut self, k: usize) {
        if k == self.order.len() {
            (self.visit)(&self.chosen);
            return;
        }
        let e = self.order[k];
        let (t, h, s) = (self.tails[e], self.heads[e], self.strengths[e]);
        self.remaining[t] -= s;
        self.remaining[h] -= s;
        if self.feasible(t) && self.feasible(h) {
            self.go(k + 1);
        }
        self.balance[h] += s;
        self.balance[t] -= s;
        self.chosen.push(e);
        if self.feasible(t) && self.feasible(h) {
            self.go(k + 1);
        }
        self.chosen.pop();
        self.balance[h] -= s;
        self.balance[t] += s;
        self.remaining[t] += s;
        self.remaining[h] += s;
    }
}

/// Edge order that closes vertices early: edges sorted by the later
/// breadth-first position of their endpoints.
fn search_order(a: &AugmentedOrientation) -> Vec<usize> {
    let adj = a.graph.adjacency();
    let mut pos = vec![usize::MAX; a.n()];
    let mut next = 0;
    for s in 0..a.n() {
        if pos[s] != usize::MAX {
            continue;
        }
        pos[s] = next;
        next += 1;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if pos[w] == usize::MAX {
                    pos[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..a.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = a.graph.edges()[e];
        (pos[u].max(pos[v]), pos[u].min(pos[v]))
    });
    order
}

/// Call `visit` with the edge ids of every Eulerian structure, the empty
/// one included. Refuses graphs with more than `cap` edges.
pub fn for_each_eulerian_structure(
    a: &AugmentedOrientation,
    cap: usize,
    visit: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    if a.edge_count() > cap {
        return Err(Error::CapExceeded {
            what: "Eulerian structure enumeration",
            size: a.edge_count(),
            cap,
        });
    }
    let mut remaining = vec![0i64; a.n()];
    for e in 0..a.edge_count() {
        remaining[a.head(e)] += i64::from(a.strength(e));
        remaining[a.tail(e)] += i64::from(a.strength(e));
    }
    let mut search = Search {
        order: search_order(a),
        tails: (0..a.edge_count()).map(|e| a.tail(e)).collect(),
        heads: a.heads.clone(),
        strengths: a.strengths.iter().map(|&s| i64::from(s)).collect(),
        remaining,
        balance: vec![0; a.n()],
        chosen: Vec::new(),
        visit,
    };
    search.go(0);
    Ok(())
}

pub fn count_eulerian_structures(a: &AugmentedOrientation, cap: usize) -> Result<EulerianCount> {
    let mut count = EulerianCount {
        even: 0,
        odd: 0,
        includes_empty: true,
    };
    for_each_eulerian_structure(a, cap, &mut |edges| {
        if edges.len() % 2 == 0 {
            count.even += 1;
        } else {
            count.odd += 1;
        }
    })?;
    Ok(count)
}

/// Some nonempty Eulerian structure, if one exists.
pub fn nonempty_eulerian_witness(a: &AugmentedOrientation, cap: usize) -> Result<Option<Vec<usize>>> {
    let mut witness = None;
    for_each_eulerian_structure(a, cap, &mut |edges| {
        if witness.is_none() && !edges.is_empty() {
            let mut w = edges.to_vec();
            w.sort_unstable();
            witness = Some(w);
        }
    })?;
    Ok(witness)
}

/// Augmented orientation of a triangulation with one realizer tree doubled,
/// together with the data needed to check it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtCertificate {
    pub graph: PlaneTriangulation,
    pub augmented: AugmentedOrientation,
    /// Realizer color of every interior edge, `None` on the outer triangle.
    pub colors: Vec<Option<Color>>,
    /// Edge ids with strength 2.
    pub doubled_tree: Vec<usize>,
    pub max_aug_indegree: u32,
    pub eulerian: Option<EulerianCount>,
    pub claimed_bound: u32,
}

/// Build the certificate from the chordal procedure: the counterclockwise
/// internal 3-orientation, the outer triangle `v1 <- v2`, `v1 -> v3`,
/// `v2 -> v3`, and the tree rooted at `v3 = outer_face[0]` doubled.
/// Eulerian structures are counted when the graph has at most
/// `eulerian_cap` edges.
pub fn build_certificate(t: &PlaneTriangulation, eulerian_cap: usize) -> Result<AtCertificate> {
    let out = orient_triangulation(t)?;
    let realizer = realizer_from_orientation(&out.internal_orientation(t)?)?;
    let augmented =
        AugmentedOrientation::new(t.to_simple(), out.heads.clone(), out.strengths.clone())?;
    let max_aug_indegree = max_augmented_indegree(&augmented);
    let eulerian = if t.edge_count() <= eulerian_cap {
        Some(count_eulerian_structures(&augmented, eulerian_cap)?)
    } else {
        None
    };
    Ok(AtCertificate {
        graph: t.clone(),
        colors: realizer.colors().to_vec(),
        doubled_tree: out.doubled_edges(),
        max_aug_indegree,
        eulerian,
        claimed_bound: max_aug_indegree + 1,
        augmented,
    })
}

impl AtCertificate {
    /// Every failed property, as text. Empty for a sound certificate.
    pub fn violations(&self) -> Vec<String> {
        let t = &self.graph;
        let a = &self.augmented;
        let mut out = Vec::new();
        if a.graph().edges() != t.edges() {
            out.push("augmented orientation is not on the certificate graph".into());
            return out;
        }
        if self.max_aug_indegree != max_augmented_indegree(a) {
            out.push("recorded max augmented in-degree is stale".into());
        }
        if self.max_aug_indegree > 4 {
            out.push(format!(
                "max augmented in-degree {} exceeds 4",
                self.max_aug_indegree
            ));
        }
        if self.claimed_bound != self.max_aug_indegree + 1 {
            out.push("claimed bound is not max augmented in-degree + 1".into());
        }
        if let Some(count) = self.eulerian {
            if count.nonempty() != 0 {
                out.push(format!("{} nonempty Eulerian structures", count.nonempty()));
            }
        }
        for e in 0..t.edge_count() {
            let (u, v) = t.edge(e);
            let expected = if self.doubled_tree.contains(&e) { 2 } else { 1 };
            if a.strength(e) != expected {
                out.push(format!("edge {u}-{v} has strength {}", a.strength(e)));
            }
            if t.is_interior_edge(e) && t.is_exterior(a.head(e)) {
                out.push(format!("interior edge {u}-{v} points to the outer triangle"));
            }
        }
        let [o0, o1, o2] = t.exterior();
        let outer_cyclic = [(o0, o1), (o1, o2), (o2, o0)]
            .iter()
            .all(|&(x, y)| a.head(t.edge_id(x, y).unwrap()) == y)
            || [(o0, o2), (o2, o1), (o1, o0)]
                .iter()
                .all(|&(x, y)| a.head(t.edge_id(x, y).unwrap()) == y);
        if outer_cyclic {
            out.push("outer face is a directed cycle".into());
        }
        let heads = (0..t.edge_count())
            .map(|e| t.is_interior_edge(e).then(|| a.head(e)))
            .collect();
        match crate::schnyder::InternalOrientation::new(t.clone(), heads) {
            Err(err) => out.push(format!("interior orientation: {err}")),
            Ok(o) => {
                match find_clockwise_triangle(&o) {
                    Ok(Some(tri)) => out.push(format!("clockwise triangle {:?}", tri.0)),
                    Ok(None) => {}
                    Err(err) => out.push(err.to_string()),
                }
                match realizer_from_orientation(&o) {
                    Ok(r) => {
                        let mut tree = self.doubled_tree.clone();
                        tree.sort_unstable();
                        let root = t.exterior()[0];
                        let class = Color::ALL
                            .into_iter()
                            .find(|&c| r.root(c) == root)
                            .map(|c| r.class(c))
                            .unwrap_or_default();
                        if tree != class {
                            out.push("doubled edges are not the realizer tree at outer_face[0]".into());
                        }
                        if r.colors() != self.colors.as_slice() {
                            out.push("recorded colors differ from the realizer".into());
                        }
                    }
                    Err(err) => out.push(format!("realizer: {err}")),
                }
            }
        }
        out
    }

    pub fn edge_records(&self) -> Vec<EdgeRecord> {
        let a = &self.augmented;
        self.graph
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| EdgeRecord {
                u,
                v,
                head: Some(a.head(e)),
                color: self.colors[e],
                strength: Some(a.strength(e)),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        let doc = CertificateDoc {
            format: CERTIFICATE_FORMAT.to_string(),
            graph: self.graph.to_data(),
            edges: self.edge_records(),
            doubled_tree: self
                .doubled_tree
                .iter()
                .map(|&e| {
                    let (u, v) = self.graph.edge(e);
                    [u, v]
                })
                .collect(),
            max_aug_indegree: self.max_aug_indegree,
            eulerian: self.eulerian,
            claimed_bound: self.claimed_bound,
        };
        serde_json::to_string_pretty(&doc).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CertificateDoc = serde_json::from_str(text)?;
        if doc.format != CERTIFICATE_FORMAT {
            return Err(Error::Parse(format!(
                "unsupported certificate format {:?}",
                doc.format
            )));
        }
        let graph = PlaneTriangulation::new(doc.graph)?;
        if doc.edges.len() != graph.edge_count() {
            return Err(Error::Parse("edge records do not match the graph".into()));
        }
        let mut heads = Vec::new();
        let mut strengths = Vec::new();
        let mut colors = Vec::new();
        for (rec, &(u, v)) in doc.edges.iter().zip(graph.edges()) {
            if (rec.u.min(rec.v), rec.u.max(rec.v)) != (u, v) {
                return Err(Error::Parse(format!(
                    "edge record {}-{} out of order",
                    rec.u, rec.v
                )));
            }
            heads.push(rec.head.ok_or_else(|| Error::Parse("edge without head".into()))?);
            strengths.push(
                rec.strength
                    .ok_or_else(|| Error::Parse("edge without strength".into()))?,
            );
            colors.push(rec.color);
        }
        let doubled_tree = doc
            .doubled_tree
            .iter()
            .map(|&[u, v]| {
                graph
                    .edge_id(u, v)
                    .ok_or_else(|| Error::Parse(format!("doubled edge {u}-{v} not in graph")))
            })
            .collect::<Result<Vec<_>>>()?;
        let augmented = AugmentedOrientation::new(graph.to_simple(), heads, strengths)?;
        Ok(AtCertificate {
            graph,
            augmented,
            colors,
            doubled_tree,
            max_aug_indegree: doc.max_aug_indegree,
            eulerian: doc.eulerian,
            claimed_bound: doc.claimed_bound,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateDoc {
    format: String,
    graph: GraphData,
    edges: Vec<EdgeRecord>,
    doubled_tree: Vec<[usize; 2]>,
    max_aug_indegree: u32,
    eulerian: Option<EulerianCount>,
    claimed_bound: u32,
}

/// True iff the union of two color classes, directed as in the realizer, is acyclic.
pub fn union_is_acyclic(r: &Realizer, a: Color, b: Color) -> bool {
    let o = r.orientation();
    let arcs: Vec<(usize, usize)> = r
        .class(a)
        .into_iter()
        .chain(r.class(b))
        .map(|e| (o.tail(e).unwrap(), o.head(e).unwrap()))
        .collect();
    topological_order(r.base().n(), &arcs).is_some()
}

/// A forest `F` (one realizer color class) and an acyclic orientation of the
/// remaining edges with in-degree at most 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestDecomposition {
    /// Edge ids of the forest.
    pub forest: Vec<usize>,
    /// `(tail, head)` for every edge outside the forest.
    pub arcs: Vec<(usize, usize)>,
}

/// Remove the blue class; the red and green classes keep their realizer
/// directions and the outer triangle is oriented
/// `o0 -> o1`, `o0 -> o2`, `o1 -> o2`.
pub fn forest_decomposition(t: &PlaneTriangulation) -> Result<ForestDecomposition> {
    let r = canonical_realizer(t)?;
    let o = r.orientation();
    let forest = r.class(Color::Blue);
    let mut arcs: Vec<(usize, usize)> = r
        .class(Color::Red)
        .into_iter()
        .chain(r.class(Color::Green))
        .map(|e| (o.tail(e).unwrap(), o.head(e).unwrap()))
        .collect();
    let [o0, o1, o2] = t.exterior();
    arcs.extend([(o0, o1), (o0, o2), (o1, o2)]);
    arcs.sort_unstable();
    Ok(ForestDecomposition { forest, arcs })
}

impl ForestDecomposition {
    pub fn violations(&self, t: &PlaneTriangulation) -> Vec<String> {
        let mut out = Vec::new();
        let n = t.n();
        let mut seen = vec![0u8; t.edge_count()];
        for &e in &self.forest {
            seen[e] += 1;
        }
        for &(a, b) in &self.arcs {
            match t.edge_id(a, b) {
                Some(e) => seen[e] += 1,
                None => out.push(format!("arc {a}->{b} is not an edge")),
            }
        }
        if let Some(e) = seen.iter().position(|&c| c != 1) {
            let (u, v) = t.edge(e);
            out.push(format!("edge {u}-{v} covered {} times", seen[e]));
        }
        // forest: union-find over the removed edges
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &e in &self.forest {
            let (u, v) = t.edge(e);
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                out.push(format!("forest has a cycle through {u}-{v}"));
            }
            parent[ru] = rv;
        }
        if topological_order(n, &self.arcs).is_none() {
            out.push("orientation of G - F has a cycle".into());
        }
        let mut indeg = vec![0usize; n];
        for &(_, h) in &self.arcs {
            indeg[h] += 1;
        }
        if let Some(v) = (0..n).find(|&v| indeg[v] > 2) {
            out.push(format!("vertex {v} has in-degree {}", indeg[v]));
        }
        for v in t.interior_vertices() {
            if indeg[v] != 2 {
                out.push(format!("interior vertex {v} has in-degree {}", indeg[v]));
            }
        }
        let rest: Vec<(usize, usize)> = self.arcs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let d = degeneracy(n, &rest);
        if d > 2 {
            out.push(format!("G - F is {d}-degenerate, not 2-degenerate"));
        }
        out
    }
}
