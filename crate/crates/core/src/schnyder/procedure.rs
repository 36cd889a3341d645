//! Thomassen-style decomposition of a near triangulation that orients every
//! edge and doubles one realizer tree.
//!
//! The current graph always has an outer cycle listed clockwise and starting
//! with the distinguished pair `v1, v2`. If the cycle has a chord the graph
//! is split along it and both halves are processed, the half containing
//! `v1, v2` first. Otherwise the vertex `v3` following `v2` is removed: its
//! two outer-cycle edges point into it with strength 1, every other edge
//! leaves it with strength 2.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::planar::{NearTriangulation, PlaneGraph, PlaneTriangulation};

use super::InternalOrientation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedEdge {
    pub tail: usize,
    pub head: usize,
    pub strength: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StepAction {
    /// Split along chord `a - b`; `h1` holds `v1, v2`, and `h2` is processed
    /// next with distinguished pair `(b, a)`.
    Chord {
        a: usize,
        b: usize,
        h1: Vec<usize>,
        h2: Vec<usize>,
    },
    Orient {
        center: usize,
        edges: Vec<OrientedEdge>,
    },
}

/// State of the current near triangulation at the start of a step, and what
/// the step did.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub distinguished: (usize, usize),
    pub outer_cycle: Vec<usize>,
    pub vertices: Vec<usize>,
    pub action: StepAction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProcedureTrace {
    pub preoriented: OrientedEdge,
    pub steps: Vec<TraceStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProcedureOutput {
    /// Head of every edge, by edge id.
    pub heads: Vec<usize>,
    /// Strength (1 or 2) of every edge, by edge id.
    pub strengths: Vec<u32>,
    pub distinguished: (usize, usize),
    pub trace: ProcedureTrace,
}

impl ProcedureOutput {
    pub fn doubled_edges(&self) -> Vec<usize> {
        (0..self.strengths.len())
            .filter(|&e| self.strengths[e] == 2)
            .collect()
    }

    /// Restriction to the interior edges of a triangulation.
    pub fn internal_orientation(&self, t: &PlaneTriangulation) -> Result<InternalOrientation> {
        let heads = (0..t.edge_count())
            .map(|e| t.is_interior_edge(e).then_some(self.heads[e]))
            .collect();
        InternalOrientation::new(t.clone(), heads)
    }
}

struct Task {
    members: Vec<bool>,
    /// clockwise, starting `v1, v2`
    outer: Vec<usize>,
}

/// Run the procedure on `nt`. The edge between the distinguished vertices is
/// pre-oriented toward `pre_head` (one of them) with strength 1.
pub fn thomassen_procedure(nt: &NearTriangulation, pre_head: usize) -> Result<ProcedureOutput> {
    let g = nt.graph();
    let (v1, v2) = nt.distinguished();
    if pre_head != v1 && pre_head != v2 {
        return Err(Error::InvalidOrientation(format!(
            "pre-oriented head {pre_head} is not one of {v1}, {v2}"
        )));
    }
    let n = g.n();
    let mut heads: Vec<Option<usize>> = vec![None; g.edge_count()];
    let mut strengths = vec![0u32; g.edge_count()];
    let pre = g.edge_id(v1, v2).expect("distinguished vertices are adjacent");
    heads[pre] = Some(pre_head);
    strengths[pre] = 1;
    let preoriented = OrientedEdge {
        tail: if pre_head == v1 { v2 } else { v1 },
        head: pre_head,
        strength: 1,
    };

    let outer = g.outer_face();
    let start = outer.iter().position(|&x| x == v1).unwrap();
    let initial: Vec<usize> = (0..outer.len())
        .map(|i| outer[(start + i) % outer.len()])
        .collect();
    let mut stack = vec![Task {
        members: vec![true; n],
        outer: initial,
    }];
    let mut steps = Vec::new();

    while let Some(mut task) = stack.pop() {
        loop {
            let size = task.members.iter().filter(|&&m| m).count();
            if size <= 2 {
                break;
            }
            let outer = &task.outer;
            let len = outer.len();
            let state = |action| TraceStep {
                distinguished: (outer[0], outer[1]),
                outer_cycle: outer.clone(),
                vertices: (0..n).filter(|&v| task.members[v]).collect(),
                action,
            };
            if let Some((i, j)) = find_chord(g, &task) {
                // positions are counted clockwise from v2
                let seq: Vec<usize> = (0..len).map(|k| outer[(k + 1) % len]).collect();
                let (a, b) = (seq[i], seq[j]);
                let h2_members = split_side(g, &task.members, &seq[i + 1..j], a, b);
                let mut h1_members = task.members.clone();
                for v in 0..n {
                    if h2_members[v] && v != a && v != b {
                        h1_members[v] = false;
                    }
                }
                let mut c1 = vec![seq[len - 1]];
                c1.extend_from_slice(&seq[..=i]);
                c1.extend_from_slice(&seq[j..len - 1]);
                let mut c2 = vec![b];
                c2.extend_from_slice(&seq[i..j]);
                steps.push(state(StepAction::Chord {
                    a,
                    b,
                    h1: (0..n).filter(|&v| h1_members[v]).collect(),
                    h2: (0..n).filter(|&v| h2_members[v]).collect(),
                }));
                stack.push(Task {
                    members: h2_members,
                    outer: c2,
                });
                stack.push(Task {
                    members: h1_members,
                    outer: c1,
                });
                break;
            }

            let (v2, v3, w) = (outer[1], outer[2], outer[3 % len]);
            let rot: Vec<usize> = g
                .rotation(v3)
                .iter()
                .copied()
                .filter(|&y| task.members[y])
                .collect();
            let mut oriented = Vec::with_capacity(rot.len());
            for &y in &rot {
                let e = g.edge_id(v3, y).unwrap();
                if heads[e].is_some() {
                    return Err(Error::Internal(format!(
                        "edge {v3}-{y} already oriented when {v3} is central"
                    )));
                }
                let edge = if y == v2 || y == w {
                    OrientedEdge { tail: y, head: v3, strength: 1 }
                } else {
                    OrientedEdge { tail: v3, head: y, strength: 2 }
                };
                heads[e] = Some(edge.head);
                strengths[e] = edge.strength;
                oriented.push(edge);
            }
            let from = rot.iter().position(|&y| y == v2).ok_or_else(|| {
                Error::Internal(format!("{v2} missing from the rotation of {v3}"))
            })?;
            let inner: Vec<usize> = (1..rot.len())
                .map(|k| rot[(from + k) % rot.len()])
                .take_while(|&y| y != w)
                .collect();
            steps.push(state(StepAction::Orient {
                center: v3,
                edges: oriented,
            }));
            let mut next = vec![outer[0], v2];
            next.extend(inner);
            next.extend_from_slice(&outer[3.min(len)..]);
            task.members[v3] = false;
            task.outer = next;
        }
    }

    let heads = heads
        .into_iter()
        .enumerate()
        .map(|(e, h)| {
            h.ok_or_else(|| {
                let (u, v) = g.edge(e);
                Error::Internal(format!("edge {u}-{v} left unoriented"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProcedureOutput {
        heads,
        strengths,
        distinguished: (v1, v2),
        trace: ProcedureTrace { preoriented, steps },
    })
}

/// Chord with the endpoint closest to `v2` (clockwise), ties broken by the
/// smaller id of the far endpoint. Returned as positions counted from `v2`.
fn find_chord(g: &PlaneGraph, task: &Task) -> Option<(usize, usize)> {
    let len = task.outer.len();
    let mut pos = vec![None; g.n()];
    for k in 0..len {
        pos[task.outer[(k + 1) % len]] = Some(k);
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..len {
        let x = task.outer[(i + 1) % len];
        for &y in g.rotation(x) {
            if !task.members[y] {
                continue;
            }
            let Some(j) = pos[y] else { continue };
            if j <= i + 1 || (i == 0 && j == len - 1) {
                continue;
            }
            let key = (i, y, j);
            if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                best = Some(key);
            }
        }
    }
    best.map(|(i, _, j)| (i, j))
}

/// Members on the side of chord `a - b` that contains `seeds`, including `a` and `b`.
fn split_side(g: &PlaneGraph, members: &[bool], seeds: &[usize], a: usize, b: usize) -> Vec<bool> {
    let mut side = vec![false; members.len()];
    side[a] = true;
    side[b] = true;
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &s in seeds {
        side[s] = true;
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.rotation(v) {
            if members[w] && !side[w] {
                side[w] = true;
                queue.push_back(w);
            }
        }
    }
    side
}

/// Run the procedure on a triangulation with `outer_face[1], outer_face[2]`
/// distinguished, so `outer_face[0]` is the first central vertex and the
/// root of the doubled tree. The edge between the distinguished vertices
/// points to `outer_face[1]`.
pub fn orient_triangulation(t: &PlaneTriangulation) -> Result<ProcedureOutput> {
    let nt = NearTriangulation::from_triangulation(t);
    let (v1, _) = nt.distinguished();
    thomassen_procedure(&nt, v1)
}

impl ProcedureTrace {
    /// Replay the trace on `g` and check the step invariants:
    ///
    /// * I1: at the start of a step no inner edge of the current graph is oriented;
    /// * I2: from the second step on, each non-distinguished outer vertex has
    ///   exactly one incoming edge, off the outer cycle and of strength 2
    ///   (only meaningful when the run started on a triangle);
    /// * I3: once a vertex has been central, later edges at it point away from it.
    ///
    /// Also checks that no edge is oriented twice and that every edge ends up
    /// oriented. Returns the violations (empty when all hold).
    pub fn check_invariants(&self, g: &PlaneGraph) -> Vec<String> {
        self.replay(g).2
    }

    /// Orientation and strengths rebuilt from the trace alone.
    pub fn replayed(&self, g: &PlaneGraph) -> (Vec<Option<usize>>, Vec<u32>) {
        let (h, s, _) = self.replay(g);
        (h, s)
    }

    fn replay(&self, g: &PlaneGraph) -> (Vec<Option<usize>>, Vec<u32>, Vec<String>) {
        let mut heads: Vec<Option<usize>> = vec![None; g.edge_count()];
        let mut strengths = vec![0u32; g.edge_count()];
        let mut errors = Vec::new();
        let mut central_done = vec![false; g.n()];
        let apply = |edge: &OrientedEdge,
                         heads: &mut Vec<Option<usize>>,
                         strengths: &mut Vec<u32>,
                         central_done: &[bool],
                         errors: &mut Vec<String>| {
            let Some(e) = g.edge_id(edge.tail, edge.head) else {
                errors.push(format!("{}-{} is not an edge", edge.tail, edge.head));
                return;
            };
            if heads[e].is_some() {
                errors.push(format!("edge {}-{} oriented twice", edge.tail, edge.head));
            }
            if central_done[edge.head] {
                errors.push(format!(
                    "I3: edge {}->{} enters a vertex already removed",
                    edge.tail, edge.head
                ));
            }
            heads[e] = Some(edge.head);
            strengths[e] = edge.strength;
        };
        apply(&self.preoriented, &mut heads, &mut strengths, &central_done, &mut errors);
        let starts_on_triangle = self
            .steps
            .first()
            .is_some_and(|s| s.outer_cycle.len() == 3);

        for (k, step) in self.steps.iter().enumerate() {
            let outer = &step.outer_cycle;
            let len = outer.len();
            let on_outer = |a: usize, b: usize| {
                (0..len).any(|i| {
                    let (x, y) = (outer[i], outer[(i + 1) % len]);
                    (x, y) == (a, b) || (x, y) == (b, a)
                })
            };
            let member = |v: usize| step.vertices.binary_search(&v).is_ok();
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                if member(u) && member(v) && !on_outer(u, v) && heads[e].is_some() {
                    errors.push(format!("I1: step {k}: inner edge {u}-{v} already oriented"));
                }
            }
            if k > 0 && starts_on_triangle {
                for &x in outer {
                    if x == step.distinguished.0 || x == step.distinguished.1 {
                        continue;
                    }
                    let incoming: Vec<usize> = g
                        .rotation_edges(x)
                        .iter()
                        .copied()
                        .filter(|&e| heads[e] == Some(x))
                        .collect();
                    if incoming.len() != 1 {
                        errors.push(format!(
                            "I2: step {k}: vertex {x} has {} incoming edges",
                            incoming.len()
                        ));
                        continue;
                    }
                    let e = incoming[0];
                    let (a, b) = g.edge(e);
                    if on_outer(a, b) || strengths[e] != 2 {
                        errors.push(format!(
                            "I2: step {k}: incoming edge {a}-{b} of {x} is on the outer cycle or not doubled"
                        ));
                    }
                }
            }
            if let StepAction::Orient { center, edges } = &step.action {
                for edge in edges {
                    apply(edge, &mut heads, &mut strengths, &central_done, &mut errors);
                }
                central_done[*center] = true;
            }
        }
        for (e, h) in heads.iter().enumerate() {
            if h.is_none() {
                let (u, v) = g.edge(e);
                errors.push(format!("edge {u}-{v} never oriented"));
            }
        }
        (heads, strengths, errors)
    }
}
