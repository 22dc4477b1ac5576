//! Menger-style path machinery: two vertex-disjoint paths between vertex
//! pairs, k-fans, the cycle-or-theta dichotomy, and the fan-extension
//! cycle construction. Everything runs on a unit-capacity flow over the
//! vertex-split digraph with breadth-first augmentation; k never exceeds 3
//! here, so no scaling machinery.

use crate::graph::{
    two_connectivity_defect, ConnectivityDefect, Cycle, Graph, VertexPath,
};
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MengerError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    OutOfRange(usize, usize),
    #[error("pair must contain two distinct vertices")]
    DegeneratePair,
    #[error("fan precondition violated: {0}")]
    FanPrecondition(String),
    #[error("graph is not 2-connected: {0}")]
    NotTwoConnected(ConnectivityDefect),
    #[error("a ({0}, cycle)-separator exists: {1:?}")]
    SeparatorExists(usize, Vec<usize>),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

// ---------------------------------------------------------------------------
// Flow engine
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct Arc {
    to: usize,
    cap: i32,
    flow: i32,
}

/// Unit-capacity max flow on the vertex-split digraph of a graph.
/// Node 2v is "into v", node 2v+1 is "out of v"; the last two nodes are
/// the super source and sink.
pub(crate) struct SplitFlow {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
    n: usize,
    absorbing: BTreeSet<usize>,
}

pub(crate) struct PathProblem<'a> {
    pub g: &'a Graph,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    /// Vertices exempt from the unit capacity (shared path endpoints).
    pub uncapped: Vec<usize>,
    /// When true, paths terminate on first contact with a sink vertex and
    /// may not pass through sinks (fan targets).
    pub absorbing: bool,
    pub limit: u32,
}

impl SplitFlow {
    pub(crate) fn build(p: &PathProblem) -> Self {
        let n = p.g.n();
        let source = 2 * n;
        let sink = 2 * n + 1;
        let mut net = SplitFlow {
            arcs: Vec::new(),
            out: vec![Vec::new(); 2 * n + 2],
            source,
            sink,
            n,
            absorbing: if p.absorbing { p.sinks.iter().copied().collect() } else { BTreeSet::new() },
        };
        let uncapped: BTreeSet<usize> = p.uncapped.iter().copied().collect();
        for v in 0..n {
            if net.absorbing.contains(&v) {
                net.add(2 * v, sink, 1);
            } else {
                let cap = if uncapped.contains(&v) { p.limit } else { 1 };
                net.add(2 * v, 2 * v + 1, cap);
            }
        }
        for (u, v) in p.g.edges() {
            // an edge between two capacity-exempt vertices could otherwise
            // carry two units; any other edge is limited by an endpoint
            let cap = if uncapped.contains(&u) && uncapped.contains(&v) { 1 } else { p.limit };
            net.add(2 * u + 1, 2 * v, cap);
            net.add(2 * v + 1, 2 * u, cap);
        }
        for &s in &p.sources {
            net.add(source, 2 * s, p.limit);
        }
        if !p.absorbing {
            for &t in &p.sinks {
                net.add(2 * t + 1, sink, p.limit);
            }
        }
        net
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap: cap as i32, flow: 0 });
        self.arcs.push(Arc { to: from, cap: 0, flow: 0 });
        self.out[from].push(id);
        self.out[to].push(id + 1);
    }

    fn residual(&self, id: usize) -> i32 {
        self.arcs[id].cap - self.arcs[id].flow
    }

    pub(crate) fn max_flow(&mut self, want: u32) -> u32 {
        let mut total = 0;
        while total < want {
            // BFS for one augmenting path; arc order keeps this deterministic
            let mut pred: Vec<Option<usize>> = vec![None; self.out.len()];
            let mut queue = std::collections::VecDeque::from([self.source]);
            let mut seen = vec![false; self.out.len()];
            seen[self.source] = true;
            'bfs: while let Some(u) = queue.pop_front() {
                for &id in &self.out[u] {
                    if self.residual(id) > 0 && !seen[self.arcs[id].to] {
                        let w = self.arcs[id].to;
                        seen[w] = true;
                        pred[w] = Some(id);
                        if w == self.sink {
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if pred[self.sink].is_none() {
                break;
            }
            let mut w = self.sink;
            while w != self.source {
                let id = pred[w].unwrap();
                self.arcs[id].flow += 1;
                self.arcs[id ^ 1].flow -= 1;
                w = self.arcs[id ^ 1].to;
            }
            total += 1;
        }
        total
    }

    /// Decomposes the current flow into vertex sequences, one per unit,
    /// each running source to sink.
    pub(crate) fn extract_paths(&self) -> Vec<Vec<usize>> {
        let mut remaining: Vec<i32> = self.arcs.iter().map(|a| a.flow).collect();
        let mut paths = Vec::new();
        loop {
            let mut start = None;
            for &id in &self.out[self.source] {
                if id % 2 == 0 && remaining[id] > 0 {
                    start = Some(id);
                    break;
                }
            }
            let Some(mut id) = start else { break };
            let mut verts: Vec<usize> = Vec::new();
            loop {
                remaining[id] -= 1;
                let node = self.arcs[id].to;
                if node == self.sink {
                    break;
                }
                let v = node / 2;
                if verts.last() != Some(&v) {
                    verts.push(v);
                }
                id = *self.out[node]
                    .iter()
                    .find(|&&a| a % 2 == 0 && remaining[a] > 0)
                    .expect("flow conservation");
            }
            paths.push(verts);
        }
        paths
    }

    /// Vertices corresponding to saturated unit arcs across the residual
    /// source cut. Only meaningful when the flow is maximum and below the
    /// requested limit, so that no wide arc can lie in the cut.
    pub(crate) fn min_cut_vertices(&self) -> Vec<usize> {
        let mut seen = vec![false; self.out.len()];
        seen[self.source] = true;
        let mut queue = std::collections::VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.out[u] {
                let w = self.arcs[id].to;
                if self.residual(id) > 0 && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let mut cut = BTreeSet::new();
        for (from, ids) in self.out.iter().enumerate() {
            if !seen[from] {
                continue;
            }
            for &id in ids {
                if id % 2 != 0 {
                    continue;
                }
                let to = self.arcs[id].to;
                if seen[to] || self.residual(id) > 0 {
                    continue;
                }
                if from < 2 * self.n && from % 2 == 0 && to == from + 1 {
                    cut.insert(from / 2);
                } else if to == self.sink && self.absorbing.contains(&(from / 2)) {
                    cut.insert(from / 2);
                } else {
                    debug_assert!(false, "wide arc in a small min cut");
                }
            }
        }
        cut.into_iter().collect()
    }
}

/// Max flow and, if it falls short of `want`, the vertex min cut.
fn solve(p: &PathProblem, want: u32) -> (u32, SplitFlow) {
    let mut net = SplitFlow::build(p);
    let got = net.max_flow(want);
    (got, net)
}

// ---------------------------------------------------------------------------
// Two disjoint paths
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoPaths {
    pub p1: VertexPath,
    pub p2: VertexPath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoPathsOutcome {
    Paths(TwoPaths),
    /// A single vertex whose removal disconnects the two pairs; it may be
    /// one of the four endpoints.
    Separator(usize),
}

/// Two vertex-disjoint paths from {a, b} to {c, d}, or a one-vertex
/// separator. The pairs may intersect or be equal, in which case length-0
/// paths appear.
pub fn two_disjoint_paths(
    g: &Graph,
    pair1: (usize, usize),
    pair2: (usize, usize),
) -> Result<TwoPathsOutcome, MengerError> {
    let (a, b) = pair1;
    let (c, d) = pair2;
    for v in [a, b, c, d] {
        g.check_vertex(v).map_err(|_| MengerError::OutOfRange(v, g.n()))?;
    }
    if a == b || c == d {
        return Err(MengerError::DegeneratePair);
    }
    let problem = PathProblem {
        g,
        sources: vec![a.min(b), a.max(b)],
        sinks: vec![c.min(d), c.max(d)],
        uncapped: vec![],
        absorbing: false,
        limit: 2,
    };
    let (got, net) = solve(&problem, 2);
    if got == 2 {
        let mut paths = net.extract_paths();
        debug_assert_eq!(paths.len(), 2);
        paths.sort();
        let p1 = VertexPath::new(paths[0].clone()).map_err(|_| MengerError::Internal("flow path not simple"))?;
        let p2 = VertexPath::new(paths[1].clone()).map_err(|_| MengerError::Internal("flow path not simple"))?;
        Ok(TwoPathsOutcome::Paths(TwoPaths { p1, p2 }))
    } else {
        // one vertex must separate; prefer a non-terminal, then smallest id
        let terminals = [a, b, c, d];
        let separates = |v: usize| {
            let blocked = BTreeSet::from([v]);
            let sources: Vec<usize> = [a, b].into_iter().filter(|&s| s != v).collect();
            let sinks: Vec<usize> = [c, d].into_iter().filter(|&s| s != v).collect();
            sources.iter().all(|&s| {
                let reach = g.reachable_from(s, &blocked);
                sinks.iter().all(|t| !reach.contains(t))
            })
        };
        let found = (0..g.n())
            .filter(|v| !terminals.contains(v))
            .find(|&v| separates(v))
            .or_else(|| terminals.iter().copied().find(|&v| separates(v)));
        found
            .map(TwoPathsOutcome::Separator)
            .ok_or(MengerError::Internal("flow below 2 without a one-vertex separator"))
    }
}

// ---------------------------------------------------------------------------
// Fans
// ---------------------------------------------------------------------------

/// k paths from one vertex to a target set, pairwise sharing only the
/// apex, with no internal vertex inside the target set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fan {
    pub apex: usize,
    pub paths: Vec<VertexPath>,
}

impl Fan {
    pub fn ends(&self) -> Vec<usize> {
        self.paths.iter().map(|p| p.last()).collect()
    }

    pub fn validate(&self, g: &Graph, targets: &BTreeSet<usize>) -> Result<(), String> {
        let mut seen_interior: BTreeSet<usize> = BTreeSet::new();
        let mut seen_ends: BTreeSet<usize> = BTreeSet::new();
        for p in &self.paths {
            p.validate(g).map_err(|e| e.to_string())?;
            if p.first() != self.apex {
                return Err(format!("path does not start at apex {}", self.apex));
            }
            let end = p.last();
            if !targets.contains(&end) {
                return Err(format!("path ends at {end}, not in the target set"));
            }
            if !seen_ends.insert(end) {
                return Err(format!("two paths end at {end}"));
            }
            for &v in &p.vertices()[1..p.vertices().len() - 1] {
                if targets.contains(&v) {
                    return Err(format!("internal vertex {v} lies in the target set"));
                }
                if !seen_interior.insert(v) {
                    return Err(format!("paths share internal vertex {v}"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FanOutcome {
    Fan(Fan),
    /// Fewer than k vertices, avoiding the apex, whose removal cuts the
    /// apex off from the rest of the target set.
    Separator(Vec<usize>),
}

pub fn k_fan(g: &Graph, x: usize, targets: &BTreeSet<usize>, k: usize) -> Result<FanOutcome, MengerError> {
    g.check_vertex(x).map_err(|_| MengerError::OutOfRange(x, g.n()))?;
    for &y in targets {
        g.check_vertex(y).map_err(|_| MengerError::OutOfRange(y, g.n()))?;
    }
    if targets.contains(&x) {
        return Err(MengerError::FanPrecondition(format!("apex {x} lies in the target set")));
    }
    if k == 0 || targets.len() < k {
        return Err(MengerError::FanPrecondition(format!(
            "need at least k = {k} targets, got {}",
            targets.len()
        )));
    }
    let problem = PathProblem {
        g,
        sources: vec![x],
        sinks: targets.iter().copied().collect(),
        uncapped: vec![x],
        absorbing: true,
        limit: k as u32,
    };
    let (got, net) = solve(&problem, k as u32);
    if got == k as u32 {
        let paths = net.extract_paths();
        let mut vps: Vec<VertexPath> = paths
            .into_iter()
            .map(|p| VertexPath::new(p).map_err(|_| MengerError::Internal("fan path not simple")))
            .collect::<Result<_, _>>()?;
        vps.sort_by(|a, b| a.vertices().cmp(b.vertices()));
        Ok(FanOutcome::Fan(Fan { apex: x, paths: vps }))
    } else {
        let cut = net.min_cut_vertices();
        debug_assert!(cut.len() < k && !cut.contains(&x));
        Ok(FanOutcome::Separator(cut))
    }
}

// ---------------------------------------------------------------------------
// Cycle through two vertices (internally disjoint path pair)
// ---------------------------------------------------------------------------

/// Two internally disjoint paths from s to t, sharing only the endpoints.
pub(crate) fn internally_disjoint_pair(
    g: &Graph,
    s: usize,
    t: usize,
) -> Result<(VertexPath, VertexPath), MengerError> {
    let problem = PathProblem {
        g,
        sources: vec![s],
        sinks: vec![t],
        uncapped: vec![s, t],
        absorbing: false,
        limit: 2,
    };
    let (got, net) = solve(&problem, 2);
    if got < 2 {
        return Err(MengerError::Internal("2-connected graph lacks two internally disjoint paths"));
    }
    let mut paths = net.extract_paths();
    paths.sort();
    Ok((
        VertexPath::new(paths[0].clone()).map_err(|_| MengerError::Internal("path not simple"))?,
        VertexPath::new(paths[1].clone()).map_err(|_| MengerError::Internal("path not simple"))?,
    ))
}

/// A cycle through both u and v in a 2-connected graph.
pub(crate) fn cycle_through_pair(g: &Graph, u: usize, v: usize) -> Result<Cycle, MengerError> {
    let (p1, p2) = internally_disjoint_pair(g, u, v)?;
    let cycle = Cycle::stitch(&[p1, p2.reversed()]).map_err(|_| MengerError::Internal("pair did not close into a cycle"))?;
    Ok(cycle)
}

// ---------------------------------------------------------------------------
// Cycle or theta
// ---------------------------------------------------------------------------

/// Two branch vertices joined to x, y, z by six internally disjoint paths.
/// Each stored path runs from its branch vertex to its terminal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theta {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub t_a: usize,
    pub t_b: usize,
    pub p_a: VertexPath,
    pub p_b: VertexPath,
    pub q_a: VertexPath,
    pub q_b: VertexPath,
    pub r_a: VertexPath,
    pub r_b: VertexPath,
}

impl Theta {
    pub fn paths(&self) -> [&VertexPath; 6] {
        [&self.p_a, &self.p_b, &self.q_a, &self.q_b, &self.r_a, &self.r_b]
    }

    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        if self.t_a == self.t_b {
            return Err("branch vertices coincide".into());
        }
        for t in [self.t_a, self.t_b] {
            if [self.x, self.y, self.z].contains(&t) {
                return Err(format!("branch vertex {t} is a terminal"));
            }
        }
        let spec = [
            (&self.p_a, self.t_a, self.x),
            (&self.p_b, self.t_b, self.x),
            (&self.q_a, self.t_a, self.y),
            (&self.q_b, self.t_b, self.y),
            (&self.r_a, self.t_a, self.z),
            (&self.r_b, self.t_b, self.z),
        ];
        for (p, from, to) in &spec {
            p.validate(g).map_err(|e| e.to_string())?;
            if p.first() != *from || p.last() != *to {
                return Err(format!("path endpoints {}..{} do not match {from}..{to}", p.first(), p.last()));
            }
        }
        // pairwise: intersection must equal shared endpoints
        for i in 0..6 {
            for j in i + 1..6 {
                let (pi, fi, ti) = &spec[i];
                let (pj, fj, tj) = &spec[j];
                let vi: BTreeSet<usize> = pi.iter().copied().collect();
                let vj: BTreeSet<usize> = pj.iter().copied().collect();
                let inter: BTreeSet<usize> = vi.intersection(&vj).copied().collect();
                let mut allowed = BTreeSet::new();
                for e in [*fi, *ti] {
                    if e == *fj || e == *tj {
                        allowed.insert(e);
                    }
                }
                if inter != allowed {
                    return Err(format!("paths {i} and {j} overlap beyond shared endpoints: {inter:?}"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleOrTheta {
    Cycle(Cycle),
    Theta(Theta),
}

/// The raw dichotomy construction: find a cycle through x and z, route y
/// into it through a 2-fan, and either reroute to a cycle through all
/// three or report the resulting theta. The theta is a genuine theta but
/// its existence does not by itself rule out a cycle.
pub(crate) fn cycle_or_theta_raw(
    g: &Graph,
    x: usize,
    y: usize,
    z: usize,
) -> Result<CycleOrTheta, MengerError> {
    debug_assert!(x != y && y != z && x != z);
    let c = cycle_through_pair(g, x, z)?;
    if c.contains(y) {
        return Ok(CycleOrTheta::Cycle(c));
    }
    let (s_a, s_b) = {
        let (arc1, arc2) = c.split_at(x, z);
        (arc1, arc2)
    };
    let targets: BTreeSet<usize> = c.iter().copied().collect();
    let fan = match k_fan(g, y, &targets, 2)? {
        FanOutcome::Fan(f) => f,
        FanOutcome::Separator(_) => {
            return Err(MengerError::Internal("2-connected graph lacks a 2-fan to a cycle"))
        }
    };
    let (f1, f2) = (&fan.paths[0], &fan.paths[1]);
    let (t1, t2) = (f1.last(), f2.last());

    // both fan ends on one x-z arc: reroute into a cycle through x, y, z
    for arc in [&s_a, &s_b] {
        let pos1 = arc.vertices().iter().position(|&v| v == t1);
        let pos2 = arc.vertices().iter().position(|&v| v == t2);
        if let (Some(i1), Some(i2)) = (pos1, pos2) {
            let (first, second) = if i1 < i2 { (f1, f2) } else { (f2, f1) };
            let (fi, se) = (first.last(), second.last());
            let other = if std::ptr::eq(arc, &s_a) { &s_b } else { &s_a };
            let cycle = Cycle::stitch(&[
                arc.segment(x, fi),
                first.oriented_from(fi),
                second.oriented_from(y),
                arc.segment(se, z),
                other.reversed(),
            ])
            .map_err(|_| MengerError::Internal("fan reroute did not close"))?;
            return Ok(CycleOrTheta::Cycle(cycle));
        }
    }

    // fan ends sit strictly inside different arcs: a theta; the side with
    // the smaller branch vertex is called A
    let (fa, fb) = if s_a.contains(t1) { (f1, f2) } else { (f2, f1) };
    let (mut arc_a, mut arc_b) = (&s_a, &s_b);
    let (mut fa, mut fb) = (fa, fb);
    if fa.last() > fb.last() {
        std::mem::swap(&mut fa, &mut fb);
        std::mem::swap(&mut arc_a, &mut arc_b);
    }
    let (t_a, t_b) = (fa.last(), fb.last());
    let theta = Theta {
        x,
        y,
        z,
        t_a,
        t_b,
        p_a: arc_a.segment(t_a, x),
        p_b: arc_b.segment(t_b, x),
        q_a: fa.oriented_from(t_a),
        q_b: fb.oriented_from(t_b),
        r_a: arc_a.segment(t_a, z),
        r_b: arc_b.segment(t_b, z),
    };
    debug_assert!(theta.validate(g).is_ok(), "{:?}", theta.validate(g));
    Ok(CycleOrTheta::Theta(theta))
}

/// Either a cycle through x, y, z or a theta joining them. The cycle
/// branch is taken exactly when such a cycle exists: a raw theta is
/// escalated through the splitter construction, which either uncovers a
/// cycle or certifies that none exists.
pub fn cycle_or_theta(g: &Graph, x: usize, y: usize, z: usize) -> Result<CycleOrTheta, MengerError> {
    for v in [x, y, z] {
        g.check_vertex(v).map_err(|_| MengerError::OutOfRange(v, g.n()))?;
    }
    if let Some(defect) = two_connectivity_defect(g) {
        return Err(MengerError::NotTwoConnected(defect));
    }
    let distinct: BTreeSet<usize> = [x, y, z].into_iter().collect();
    match distinct.len() {
        1 => {
            let nbr = g.neighbors(x)[0];
            return Ok(CycleOrTheta::Cycle(cycle_through_pair(g, x, nbr)?));
        }
        2 => {
            let mut it = distinct.into_iter();
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            return Ok(CycleOrTheta::Cycle(cycle_through_pair(g, u, v)?));
        }
        _ => {}
    }
    match cycle_or_theta_raw(g, x, y, z)? {
        CycleOrTheta::Cycle(c) => Ok(CycleOrTheta::Cycle(c)),
        CycleOrTheta::Theta(theta) => {
            match crate::cycle3::resolve_theta(g, &theta).map_err(|_| MengerError::Internal("splitter escalation failed"))? {
                Some(cycle) => Ok(CycleOrTheta::Cycle(cycle)),
                None => Ok(CycleOrTheta::Theta(theta)),
            }
        }
    }
}

/// Extends a cycle c by a vertex x off it: given no small (x, c)-separator,
/// returns a cycle through x and two chosen vertices y, z of c, built from
/// a 3-fan by the pigeon-hole reroute.
pub fn cycle_through_fan(
    g: &Graph,
    c: &Cycle,
    x: usize,
    y: usize,
    z: usize,
) -> Result<Cycle, MengerError> {
    g.check_vertex(x).map_err(|_| MengerError::OutOfRange(x, g.n()))?;
    assert!(!c.contains(x), "x must avoid the cycle");
    assert!(c.contains(y) && c.contains(z) && y != z, "y, z must be distinct cycle vertices");
    let targets = c.vertex_set();
    let fan = match k_fan(g, x, &targets, 3)? {
        FanOutcome::Fan(f) => f,
        FanOutcome::Separator(s) => return Err(MengerError::SeparatorExists(x, s)),
    };
    let (arc_q, arc_r) = c.split_at(y, z);
    // two of the three fan ends share an arc
    for arc in [&arc_q, &arc_r] {
        let mut on_arc: Vec<(usize, &VertexPath)> = fan
            .paths
            .iter()
            .filter_map(|p| arc.vertices().iter().position(|&v| v == p.last()).map(|i| (i, p)))
            .collect();
        if on_arc.len() < 2 {
            continue;
        }
        on_arc.sort_by_key(|&(i, _)| i);
        let (_, p1) = on_arc[0];
        let (_, p2) = on_arc[1];
        let other = if std::ptr::eq(arc, &arc_q) { &arc_r } else { &arc_q };
        let cycle = Cycle::stitch(&[
            arc.segment(y, p1.last()),
            p1.oriented_from(p1.last()),
            p2.oriented_from(x),
            arc.segment(p2.last(), z),
            other.reversed(),
        ])
        .map_err(|_| MengerError::Internal("pigeon-hole reroute did not close"))?;
        return Ok(cycle);
    }
    Err(MengerError::Internal("3-fan with no two ends on a common arc"))
}
