//! Brute-force ground truth at desk scale: exhaustive cycle enumeration,
//! wheel search, exact chromatic/independence/clique numbers, subgraph and
//! isomorphism checks, and K_{3,3}-subdivision detection. Deliberately
//! naive; every oracle refuses inputs beyond its budget instead of
//! silently degrading.

use crate::graph::{Cycle, Graph, VertexPath};
use crate::wheels::WheelWitness;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_cycles: u64,
    pub time_cap: Duration,
}

impl OracleBudget {
    /// Default for cycle enumeration and wheel search.
    pub fn cycles() -> Self {
        OracleBudget { max_vertices: 12, max_cycles: 5_000_000, time_cap: Duration::from_secs(60) }
    }

    /// Default for chromatic number, independence and clique numbers.
    pub fn chromatic() -> Self {
        OracleBudget { max_vertices: 16, max_cycles: 5_000_000, time_cap: Duration::from_secs(60) }
    }

    /// Default for K_{3,3}-subdivision search; sized to admit the 13-vertex
    /// Ramsey circulant.
    pub fn subdivision() -> Self {
        OracleBudget { max_vertices: 13, max_cycles: 5_000_000, time_cap: Duration::from_secs(60) }
    }

    pub fn with_max_vertices(mut self, n: usize) -> Self {
        self.max_vertices = n;
        self
    }

    fn admit(&self, n: usize) -> Result<(), OracleError> {
        if n > self.max_vertices {
            Err(OracleError::TooManyVertices { n, max: self.max_vertices })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("input has {n} vertices, over the budget of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("cycle enumeration exceeded the cap of {0} cycles")]
    TooManyCycles(u64),
    #[error("time cap of {0:?} exceeded")]
    TimedOut(Duration),
}

struct Deadline {
    start: Instant,
    cap: Duration,
    ticks: u32,
}

impl Deadline {
    fn new(cap: Duration) -> Self {
        Deadline { start: Instant::now(), cap, ticks: 0 }
    }

    fn check(&mut self) -> Result<(), OracleError> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 4096 == 0 && self.start.elapsed() > self.cap {
            return Err(OracleError::TimedOut(self.cap));
        }
        Ok(())
    }
}

/// Enumerates every simple cycle exactly once: each cycle is rooted at its
/// smallest vertex and direction-normalized (second vertex < last vertex).
/// The visitor returns true to stop early.
fn enumerate_cycles(
    g: &Graph,
    budget: &OracleBudget,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Result<bool, OracleError> {
    budget.admit(g.n())?;
    let n = g.n();
    let mut deadline = Deadline::new(budget.time_cap);
    let mut count = 0u64;
    let mut on_path = vec![false; n];
    let mut path: Vec<usize> = Vec::new();

    for root in 0..n {
        path.clear();
        path.push(root);
        on_path[root] = true;
        // stack of neighbor indices per path position
        let mut iters: Vec<usize> = vec![0];
        while !iters.is_empty() {
            deadline.check()?;
            let depth = iters.len() - 1;
            let u = path[depth];
            let i = iters[depth];
            if i < g.neighbors(u).len() {
                iters[depth] += 1;
                let w = g.neighbors(u)[i];
                if w == root && depth >= 2 {
                    // direction normalization: count each cycle once
                    if path[1] < path[depth] {
                        count += 1;
                        if count > budget.max_cycles {
                            return Err(OracleError::TooManyCycles(budget.max_cycles));
                        }
                        if visit(&path) {
                            return Ok(true);
                        }
                    }
                    continue;
                }
                if w > root && !on_path[w] {
                    path.push(w);
                    on_path[w] = true;
                    iters.push(0);
                }
            } else {
                iters.pop();
                on_path[u] = false;
                path.pop();
            }
        }
        on_path[root] = false;
    }
    Ok(false)
}

/// Runs the visitor over every simple cycle (each seen once, in canonical
/// order); the visitor returns true to stop early.
pub fn for_each_cycle(
    g: &Graph,
    budget: &OracleBudget,
    visit: impl FnMut(&[usize]) -> bool,
) -> Result<bool, OracleError> {
    enumerate_cycles(g, budget, visit)
}

/// First simple cycle (in canonical enumeration order) through all of
/// x, y, z, if any exists.
pub fn brute_cycle_through(
    g: &Graph,
    x: usize,
    y: usize,
    z: usize,
    budget: &OracleBudget,
) -> Result<Option<Cycle>, OracleError> {
    let mut found: Option<Cycle> = None;
    enumerate_cycles(g, budget, |path| {
        if path.contains(&x) && path.contains(&y) && path.contains(&z) {
            found = Some(Cycle::new(path.to_vec()).unwrap());
            true
        } else {
            false
        }
    })?;
    Ok(found)
}

/// Exhaustive search over (center, cycle) pairs for a vertex with at least
/// k neighbors on a cycle avoiding it.
pub fn brute_hub(g: &Graph, k: usize, budget: &OracleBudget) -> Result<Option<WheelWitness>, OracleError> {
    budget.admit(g.n())?;
    for v in 0..g.n() {
        if g.degree(v) < k {
            continue;
        }
        let (h, map) = g.remove_vertex(v).expect("vertex in range");
        let nbrs: BTreeSet<usize> =
            g.neighbors(v).iter().map(|&w| map.to_new(w).unwrap()).collect();
        let mut found: Option<Cycle> = None;
        enumerate_cycles(&h, budget, |path| {
            if path.iter().filter(|w| nbrs.contains(w)).count() >= k {
                found = Some(Cycle::new(path.to_vec()).unwrap());
                true
            } else {
                false
            }
        })?;
        if let Some(rim) = found {
            let rim = map.lift_cycle(&rim);
            let spokes: Vec<usize> =
                rim.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            return Ok(Some(WheelWitness { center: v, rim, spokes, k }));
        }
    }
    Ok(None)
}

pub fn brute_wheel(g: &Graph, budget: &OracleBudget) -> Result<Option<WheelWitness>, OracleError> {
    brute_hub(g, 3, budget)
}

/// Exhaustive search for a wheel whose rim has length at least 4.
pub fn brute_long_wheel(g: &Graph, budget: &OracleBudget) -> Result<Option<WheelWitness>, OracleError> {
    budget.admit(g.n())?;
    for v in 0..g.n() {
        if g.degree(v) < 3 {
            continue;
        }
        let (h, map) = g.remove_vertex(v).expect("vertex in range");
        let nbrs: BTreeSet<usize> =
            g.neighbors(v).iter().map(|&w| map.to_new(w).unwrap()).collect();
        let mut found: Option<Cycle> = None;
        enumerate_cycles(&h, budget, |path| {
            if path.len() >= 4 && path.iter().filter(|w| nbrs.contains(w)).count() >= 3 {
                found = Some(Cycle::new(path.to_vec()).unwrap());
                true
            } else {
                false
            }
        })?;
        if let Some(rim) = found {
            let rim = map.lift_cycle(&rim);
            let spokes: Vec<usize> =
                rim.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            return Ok(Some(WheelWitness { center: v, rim, spokes, k: 3 }));
        }
    }
    Ok(None)
}

fn colorable_rec(g: &Graph, colors: usize, assign: &mut [usize], used: usize, v: usize) -> bool {
    if v == g.n() {
        return true;
    }
    // trying one fresh color is enough; the rest are symmetric
    for c in 0..colors.min(used + 1) {
        if g.neighbors(v).iter().all(|&w| w >= v || assign[w] != c) {
            assign[v] = c;
            if colorable_rec(g, colors, assign, used.max(c + 1), v + 1) {
                return true;
            }
        }
    }
    false
}

pub fn is_colorable(g: &Graph, colors: usize, budget: &OracleBudget) -> Result<bool, OracleError> {
    budget.admit(g.n())?;
    if g.n() == 0 {
        return Ok(true);
    }
    if colors == 0 {
        return Ok(false);
    }
    let mut assign = vec![usize::MAX; g.n()];
    Ok(colorable_rec(g, colors, &mut assign, 0, 0))
}

pub fn chromatic_number(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    budget.admit(g.n())?;
    if g.n() == 0 {
        return Ok(0);
    }
    let mut k = 1;
    loop {
        if is_colorable(g, k, budget)? {
            return Ok(k);
        }
        k += 1;
    }
}

fn max_clique_rec(g: &Graph, cand: &[usize], current: usize, best: &mut usize) {
    if current + cand.len() <= *best {
        return;
    }
    if cand.is_empty() {
        *best = (*best).max(current);
        return;
    }
    for (i, &v) in cand.iter().enumerate() {
        if current + (cand.len() - i) <= *best {
            break;
        }
        let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        max_clique_rec(g, &next, current + 1, best);
    }
}

/// Exact (independence number, clique number) by backtracking.
pub fn alpha_omega(g: &Graph, budget: &OracleBudget) -> Result<(usize, usize), OracleError> {
    budget.admit(g.n())?;
    let n = g.n();
    let mut omega = 0usize;
    let all: Vec<usize> = (0..n).collect();
    max_clique_rec(g, &all, 0, &mut omega);
    // alpha(G) = omega(complement)
    let mut comp = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                comp = comp.add_edge(u, v).unwrap();
            }
        }
    }
    let mut alpha = 0usize;
    max_clique_rec(&comp, &all, 0, &mut alpha);
    Ok((alpha, omega))
}

/// A subdivision of K_{3,3}: six branch vertices and nine internally
/// disjoint paths joining the two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K33Subdivision {
    pub side_a: [usize; 3],
    pub side_b: [usize; 3],
    /// Paths in (a_i, b_j) lexicographic order: a0b0, a0b1, ..., a2b2.
    pub paths: Vec<VertexPath>,
}

impl K33Subdivision {
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let branches: BTreeSet<usize> =
            self.side_a.iter().chain(self.side_b.iter()).copied().collect();
        if branches.len() != 6 {
            return Err("branch vertices not distinct".into());
        }
        if self.paths.len() != 9 {
            return Err(format!("expected 9 paths, got {}", self.paths.len()));
        }
        let mut interior_seen: BTreeSet<usize> = BTreeSet::new();
        for (idx, p) in self.paths.iter().enumerate() {
            p.validate(g).map_err(|e| e.to_string())?;
            let (i, j) = (idx / 3, idx % 3);
            if p.first() != self.side_a[i] || p.last() != self.side_b[j] {
                return Err(format!("path {idx} does not join a{i} to b{j}"));
            }
            for &v in &p.vertices()[1..p.vertices().len() - 1] {
                if branches.contains(&v) {
                    return Err(format!("path {idx} passes through branch vertex {v}"));
                }
                if !interior_seen.insert(v) {
                    return Err(format!("interior vertex {v} shared between paths"));
                }
            }
        }
        Ok(())
    }
}

/// Exhaustive K_{3,3}-subdivision search over branch 6-tuples with a
/// backtracking disjoint-path search.
pub fn brute_k33_subdivision(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<Option<K33Subdivision>, OracleError> {
    budget.admit(g.n())?;
    let n = g.n();
    let mut deadline = Deadline::new(budget.time_cap);
    let candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    if candidates.len() < 6 {
        return Ok(None);
    }
    let mut triples_a: Vec<[usize; 3]> = Vec::new();
    for i in 0..candidates.len() {
        for j in i + 1..candidates.len() {
            for k in j + 1..candidates.len() {
                triples_a.push([candidates[i], candidates[j], candidates[k]]);
            }
        }
    }
    for a in &triples_a {
        for b in &triples_a {
            // avoid visiting the unordered {A,B} pair twice
            if b <= a || a.iter().any(|v| b.contains(v)) {
                continue;
            }
            deadline.check()?;
            if let Some(paths) = disjoint_path_system(g, a, b, &mut deadline)? {
                return Ok(Some(K33Subdivision { side_a: *a, side_b: *b, paths }));
            }
        }
    }
    Ok(None)
}

fn disjoint_path_system(
    g: &Graph,
    side_a: &[usize; 3],
    side_b: &[usize; 3],
    deadline: &mut Deadline,
) -> Result<Option<Vec<VertexPath>>, OracleError> {
    let branches: BTreeSet<usize> = side_a.iter().chain(side_b.iter()).copied().collect();
    let mut used = vec![false; g.n()];
    let mut paths: Vec<VertexPath> = Vec::new();
    if assign_paths(g, side_a, side_b, &branches, &mut used, &mut paths, 0, deadline)? {
        Ok(Some(paths))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn assign_paths(
    g: &Graph,
    side_a: &[usize; 3],
    side_b: &[usize; 3],
    branches: &BTreeSet<usize>,
    used: &mut Vec<bool>,
    paths: &mut Vec<VertexPath>,
    idx: usize,
    deadline: &mut Deadline,
) -> Result<bool, OracleError> {
    if idx == 9 {
        return Ok(true);
    }
    deadline.check()?;
    let (s, t) = (side_a[idx / 3], side_b[idx % 3]);
    // DFS over simple paths from s to t through free non-branch interiors
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(vec![s], 0)];
    while let Some((path, i)) = stack.last().cloned() {
        deadline.check()?;
        let u = *path.last().unwrap();
        if i >= g.neighbors(u).len() {
            stack.pop();
            continue;
        }
        stack.last_mut().unwrap().1 += 1;
        let w = g.neighbors(u)[i];
        if w == t {
            let mut full = path.clone();
            full.push(t);
            for &v in &full[1..full.len() - 1] {
                used[v] = true;
            }
            paths.push(VertexPath::new(full.clone()).unwrap());
            if assign_paths(g, side_a, side_b, branches, used, paths, idx + 1, deadline)? {
                return Ok(true);
            }
            paths.pop();
            for &v in &full[1..full.len() - 1] {
                used[v] = false;
            }
            continue;
        }
        if branches.contains(&w) || used[w] || path.contains(&w) {
            continue;
        }
        let mut next = path.clone();
        next.push(w);
        stack.push((next, 0));
    }
    Ok(false)
}

/// Graph isomorphism by backtracking with degree pruning.
pub fn brute_isomorphic(g: &Graph, h: &Graph, budget: &OracleBudget) -> Result<bool, OracleError> {
    budget.admit(g.n().max(h.n()))?;
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // iterative backtracking over assignments of g-vertices in id order
    let mut choice: Vec<usize> = vec![0; n + 1];
    let mut v = 0usize;
    loop {
        if v == n {
            return Ok(true);
        }
        let mut placed = false;
        let start = choice[v];
        for cand in start..n {
            if used[cand] || h.degree(cand) != g.degree(v) {
                continue;
            }
            let ok = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], cand));
            if ok {
                choice[v] = cand + 1;
                map[v] = cand;
                used[cand] = true;
                v += 1;
                choice[v] = 0;
                placed = true;
                break;
            }
        }
        if !placed {
            if v == 0 {
                return Ok(false);
            }
            choice[v] = 0;
            v -= 1;
            used[map[v]] = false;
            map[v] = usize::MAX;
        }
    }
}

/// First subgraph embedding of `pattern` into `host` (mapping pattern id ->
/// host id), if one exists. Host edges may be a superset.
pub fn brute_contains_subgraph(
    host: &Graph,
    pattern: &Graph,
    budget: &OracleBudget,
) -> Result<Option<Vec<usize>>, OracleError> {
    budget.admit(host.n())?;
    let (np, nh) = (pattern.n(), host.n());
    if np > nh || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; np];
    let mut used = vec![false; nh];
    let mut choice = vec![0usize; np + 1];
    let mut v = 0usize;
    loop {
        if v == np {
            return Ok(Some(map));
        }
        let mut placed = false;
        for cand in choice[v]..nh {
            if used[cand] || host.degree(cand) < pattern.degree(v) {
                continue;
            }
            let ok = (0..v).all(|u| !pattern.has_edge(u, v) || host.has_edge(map[u], cand));
            if ok {
                choice[v] = cand + 1;
                map[v] = cand;
                used[cand] = true;
                v += 1;
                choice[v] = 0;
                placed = true;
                break;
            }
        }
        if !placed {
            if v == 0 {
                return Ok(None);
            }
            choice[v] = 0;
            v -= 1;
            used[map[v]] = false;
            map[v] = usize::MAX;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn k23() -> Graph {
        // parts {0,1} and {2,3,4}
        Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    fn k33() -> Graph {
        Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
            .unwrap()
    }

    fn c(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).map(|(a, b)| (a.min(b), a.max(b))).collect::<Vec<_>>()).unwrap()
    }

    fn cube() -> Graph {
        let mut edges = Vec::new();
        for u in 0..8usize {
            for b in 0..3 {
                let v = u ^ (1 << b);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(8, &edges).unwrap()
    }

    #[test]
    fn cycle_count_k4() {
        let mut count = 0;
        enumerate_cycles(&k4(), &OracleBudget::cycles(), |_| {
            count += 1;
            false
        })
        .unwrap();
        // 4 triangles + 3 four-cycles
        assert_eq!(count, 7);
    }

    #[test]
    fn no_cycle_through_degree_two_side_of_k23() {
        let got = brute_cycle_through(&k23(), 2, 3, 4, &OracleBudget::cycles()).unwrap();
        assert_eq!(got, None);
    }

    #[test]
    fn k4_cycle_through_any_triple() {
        let got = brute_cycle_through(&k4(), 0, 1, 2, &OracleBudget::cycles()).unwrap();
        assert!(got.is_some());
    }

    #[test]
    fn c6_alternating_triple() {
        let g = c(6);
        let got = brute_cycle_through(&g, 0, 2, 4, &OracleBudget::cycles()).unwrap();
        assert_eq!(got.unwrap().len(), 6);
    }

    #[test]
    fn wheel_search_examples() {
        assert!(brute_wheel(&k33(), &OracleBudget::cycles()).unwrap().is_none());
        assert!(brute_wheel(&c(5), &OracleBudget::cycles()).unwrap().is_none());
        let w = brute_wheel(&cube(), &OracleBudget::cycles()).unwrap().unwrap();
        assert!(w.spokes.len() >= 3);
        assert!(!w.rim.contains(w.center));
        let w4 = brute_wheel(&k4(), &OracleBudget::cycles()).unwrap().unwrap();
        assert_eq!(w4.rim.len(), 3);
    }

    #[test]
    fn chromatic_examples() {
        let b = OracleBudget::chromatic();
        assert_eq!(chromatic_number(&k33(), &b).unwrap(), 2);
        assert_eq!(chromatic_number(&c(5), &b).unwrap(), 3);
        assert_eq!(alpha_omega(&k33(), &b).unwrap(), (3, 2));
        assert_eq!(alpha_omega(&c(5), &b).unwrap(), (2, 2));
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::empty(20);
        assert!(matches!(
            brute_wheel(&g, &OracleBudget::cycles()),
            Err(OracleError::TooManyVertices { n: 20, max: 12 })
        ));
    }

    #[test]
    fn k33_subdivision_of_itself() {
        let w = brute_k33_subdivision(&k33(), &OracleBudget::subdivision()).unwrap().unwrap();
        w.validate(&k33()).unwrap();
        assert!(w.paths.iter().all(|p| p.len_edges() == 1));
    }

    #[test]
    fn small_planar_graphs_have_no_k33_subdivision() {
        for g in [k4(), c(7), cube()] {
            assert!(brute_k33_subdivision(&g, &OracleBudget::subdivision()).unwrap().is_none());
        }
    }

    #[test]
    fn isomorphism_basic() {
        let b = OracleBudget::cycles();
        let k33_relabeled = parse_graph("6\n0 1\n0 2\n0 3\n4 1\n4 2\n4 3\n5 1\n5 2\n5 3").unwrap();
        assert!(brute_isomorphic(&k33(), &k33_relabeled, &b).unwrap());
        assert!(!brute_isomorphic(&k33(), &cube(), &b).unwrap());
        assert!(!brute_isomorphic(&c(6), &k33(), &b).unwrap());
    }

    #[test]
    fn subgraph_search_finds_k33_minus_e() {
        let b = OracleBudget::cycles();
        let mut k33_minus = k33();
        k33_minus = k33_minus.remove_edge(0, 3).unwrap();
        assert!(brute_contains_subgraph(&k33(), &k33_minus, &b).unwrap().is_some());
        assert!(brute_contains_subgraph(&cube(), &k33_minus, &b).unwrap().is_none());
    }
}
