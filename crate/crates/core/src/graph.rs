//! Plain undirected simple graphs, used where no embedding is needed.

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`. Edges are stored as `(u, v)`
/// with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) references a vertex outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "repeated edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(SimpleGraph {
            n,
            edges: normalized,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// True when every edge of `self` is an edge of `other` and both share a vertex set.
    pub fn is_spanning_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(u, v)| other.edge_index(u, v).is_some())
    }
}

/// Smallest `d` such that every subgraph has a vertex of degree at most `d`.
/// Computed by repeatedly removing a minimum-degree vertex (bucket queue,
/// ties broken by smaller vertex id).
pub fn degeneracy(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<std::collections::BTreeSet<usize>> =
        vec![Default::default(); max_degree + 1];
    for (v, &d) in degree.iter().enumerate() {
        buckets[d].insert(v);
    }
    let mut removed = vec![false; n];
    let mut result = 0;
    for _ in 0..n {
        let d = buckets.iter().position(|b| !b.is_empty()).expect("vertex left");
        let v = *buckets[d].iter().next().unwrap();
        buckets[d].remove(&v);
        removed[v] = true;
        result = result.max(d);
        for &w in &adj[v] {
            if !removed[w] {
                buckets[degree[w]].remove(&w);
                degree[w] -= 1;
                buckets[degree[w]].insert(w);
            }
        }
    }
    result
}

/// Kahn's algorithm; returns a topological order or `None` if the arcs contain a cycle.
pub fn topological_order(n: usize, arcs: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for &(t, h) in arcs {
        indeg[h] += 1;
        out[t].push(h);
    }
    let mut ready: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.insert(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}
