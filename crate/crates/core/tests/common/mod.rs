//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's own checkers.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use schnyder_at::planar::PlaneTriangulation;
use schnyder_at::schnyder::{Color, InternalOrientation, Realizer};

/// Out-neighbour lists of an internal orientation.
pub fn out_lists(o: &InternalOrientation) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); o.base().n()];
    for (e, &(u, v)) in o.base().edges().iter().enumerate() {
        match o.head(e) {
            Some(h) if h == v => out[u].push(v),
            Some(_) => out[v].push(u),
            None => {}
        }
    }
    out
}

/// Every simple directed cycle, each once, starting at its smallest vertex.
pub fn directed_cycles(out: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn dfs(
        start: usize,
        v: usize,
        out: &[Vec<usize>],
        path: &mut Vec<usize>,
        on: &mut [bool],
        found: &mut Vec<Vec<usize>>,
    ) {
        for &w in &out[v] {
            if w == start {
                found.push(path.clone());
            } else if w > start && !on[w] {
                on[w] = true;
                path.push(w);
                dfs(start, w, out, path, on, found);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut found = Vec::new();
    let mut on = vec![false; out.len()];
    for s in 0..out.len() {
        on[s] = true;
        dfs(s, s, out, &mut vec![s], &mut on, &mut found);
        on[s] = false;
    }
    found
}

/// Whether the directed cycle runs counterclockwise: flood the faces on its
/// left through the dual without crossing it; the cycle is counterclockwise
/// iff the outer face is not reached.
pub fn cycle_is_ccw(t: &PlaneTriangulation, cycle: &[usize]) -> bool {
    let fm = t.face_map();
    let k = cycle.len();
    let mut on_cycle = HashSet::new();
    for i in 0..k {
        let (a, b) = (cycle[i], cycle[(i + 1) % k]);
        on_cycle.insert((a.min(b), a.max(b)));
    }
    let start = fm.face_of_dart(cycle[0], cycle[1]).unwrap();
    let mut seen = vec![false; fm.faces.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        if f == fm.outer {
            return false;
        }
        let walk = &fm.faces[f].boundary;
        for i in 0..walk.len() {
            let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
            if on_cycle.contains(&(a.min(b), a.max(b))) {
                continue;
            }
            let g = fm.face_of_dart(b, a).unwrap();
            if !seen[g] {
                seen[g] = true;
                queue.push_back(g);
            }
        }
    }
    true
}

pub fn has_clockwise_cycle(o: &InternalOrientation) -> bool {
    directed_cycles(&out_lists(o))
        .iter()
        .any(|c| !cycle_is_ccw(o.base(), c))
}

/// Checks of the realizer axioms written from the definitions: one incoming
/// edge per color at interior vertices, the rotation pattern
/// `in r, out b*, in g, out r*, in b, out g*` (counterclockwise), and every
/// color class a tree on the interior vertices plus its root.
pub fn realizer_axiom_failures(r: &Realizer) -> Vec<String> {
    let t = r.base();
    let o = r.orientation();
    let mut fails = Vec::new();
    let label = |v: usize, w: usize| -> Option<(bool, Color)> {
        let e = t.edge_id(v, w).unwrap();
        let c = r.color(e)?;
        Some((o.head(e) == Some(v), c))
    };
    for v in t.interior_vertices() {
        let labels: Vec<Option<(bool, Color)>> = t.rotation(v).iter().map(|&w| label(v, w)).collect();
        if labels.iter().any(Option::is_none) {
            fails.push(format!("uncolored edge at {v}"));
            continue;
        }
        let labels: Vec<(bool, Color)> = labels.into_iter().flatten().collect();
        for c in Color::ALL {
            let k = labels.iter().filter(|&&l| l == (true, c)).count();
            if k != 1 {
                fails.push(format!("vertex {v} has {k} incoming {c} edges"));
            }
        }
        let Some(start) = labels.iter().position(|&l| l == (true, Color::Red)) else {
            continue;
        };
        let d = labels.len();
        let seq: Vec<(bool, Color)> = (0..d).map(|i| labels[(start + i) % d]).collect();
        let mut pattern = Vec::new();
        for &l in &seq {
            if l.0 || pattern.last() != Some(&l) {
                pattern.push(l);
            }
        }
        let expected_full = [
            (true, Color::Red),
            (false, Color::Blue),
            (true, Color::Green),
            (false, Color::Red),
            (true, Color::Blue),
            (false, Color::Green),
        ];
        let expected: Vec<(bool, Color)> = expected_full
            .iter()
            .copied()
            .filter(|l| l.0 || pattern.contains(l))
            .collect();
        if pattern != expected {
            fails.push(format!("vertex {v}: rotation pattern {seq:?}"));
        }
    }
    let interior: BTreeSet<usize> = t.interior_vertices().into_iter().collect();
    for c in Color::ALL {
        let root = r.root(c);
        let class: Vec<usize> = (0..t.edge_count()).filter(|&e| r.color(e) == Some(c)).collect();
        if class.len() != interior.len() {
            fails.push(format!("{c} class has {} edges for {} interior vertices", class.len(), interior.len()));
        }
        let mut touched = BTreeSet::new();
        for &e in &class {
            let (a, b) = t.edge(e);
            touched.insert(a);
            touched.insert(b);
        }
        let exterior_touched: Vec<usize> = touched.iter().copied().filter(|&x| t.is_exterior(x)).collect();
        if exterior_touched != vec![root] && !interior.is_empty() {
            fails.push(format!("{c} class touches exterior {exterior_touched:?}"));
        }
        let mut expected_nodes = interior.clone();
        if !interior.is_empty() {
            expected_nodes.insert(root);
        }
        if touched != expected_nodes {
            fails.push(format!("{c} class does not span the interior"));
        }
        // a connected graph with |V| - 1 edges is a tree
        if !interior.is_empty() && !connected(&touched, &class, t) {
            fails.push(format!("{c} class is not connected"));
        }
    }
    fails
}

fn connected(nodes: &BTreeSet<usize>, edges: &[usize], t: &PlaneTriangulation) -> bool {
    let mut parent: Vec<usize> = (0..t.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = nodes.len();
    for &e in edges {
        let (a, b) = t.edge(e);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            comps -= 1;
        }
    }
    comps == 1
}

/// Degeneracy by repeatedly deleting a vertex of minimum degree.
pub fn degeneracy_oracle(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut best = 0;
    while let Some(&v) = alive.iter().min_by_key(|&&v| adj[v].len()) {
        best = best.max(adj[v].len());
        for w in std::mem::take(&mut adj[v]) {
            adj[w].remove(&v);
        }
        alive.remove(&v);
    }
    best
}

/// Whether the arcs admit a topological order (repeated source removal).
pub fn is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0usize; n];
    for &(_, h) in arcs {
        indeg[h] += 1;
    }
    let mut removed = vec![false; arcs.len()];
    let mut done = vec![false; n];
    let mut progress = true;
    while progress {
        progress = false;
        for v in 0..n {
            if !done[v] && indeg[v] == 0 {
                done[v] = true;
                progress = true;
                for (i, &(a, h)) in arcs.iter().enumerate() {
                    if a == v && !removed[i] {
                        removed[i] = true;
                        indeg[h] -= 1;
                    }
                }
            }
        }
    }
    done.iter().all(|&d| d)
}

/// Undirected acyclicity by union-find.
pub fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    let (ax, ay, bx, by, cx, cy) = (a.0 as i128, a.1 as i128, b.0 as i128, b.1 as i128, c.0 as i128, c.1 as i128);
    ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)).signum()
}

fn within(a: (i64, i64), b: (i64, i64), p: (i64, i64)) -> bool {
    a.0.min(b.0) <= p.0 && p.0 <= a.0.max(b.0) && a.1.min(b.1) <= p.1 && p.1 <= a.1.max(b.1)
}

/// Pairs of edges whose straight segments meet anywhere other than a shared
/// endpoint, plus edges passing through a vertex.
pub fn segment_crossings(t: &PlaneTriangulation, pts: &[(i64, i64)]) -> Vec<(usize, usize)> {
    let edges = t.edges();
    let mut bad = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            let shared = [a, b].iter().filter(|x| **x == c || **x == d).count();
            let (p1, p2, p3, p4) = (pts[a], pts[b], pts[c], pts[d]);
            let (o1, o2) = (orient(p1, p2, p3), orient(p1, p2, p4));
            let (o3, o4) = (orient(p3, p4, p1), orient(p3, p4, p2));
            let hit = if shared == 1 {
                // collinear overlap beyond the common endpoint
                o1 == 0 && o2 == 0 && {
                    let common = if a == c || a == d { p1 } else { p2 };
                    let other1 = if common == p1 { p2 } else { p1 };
                    let other2 = if common == p3 { p4 } else { p3 };
                    (other1.0 - common.0) * (other2.0 - common.0) + (other1.1 - common.1) * (other2.1 - common.1) > 0
                }
            } else {
                (o1 * o2 < 0 && o3 * o4 < 0)
                    || (o1 == 0 && within(p1, p2, p3))
                    || (o2 == 0 && within(p1, p2, p4))
                    || (o3 == 0 && within(p3, p4, p1))
                    || (o4 == 0 && within(p3, p4, p2))
            };
            if hit {
                bad.push((i, j));
            }
        }
    }
    for (e, &(a, b)) in edges.iter().enumerate() {
        for v in 0..t.n() {
            if v != a && v != b && orient(pts[a], pts[b], pts[v]) == 0 && within(pts[a], pts[b], pts[v]) {
                bad.push((e, usize::MAX));
            }
        }
    }
    bad
}
