//! Wheel and hub detection: a wheel is a chordless cycle (the rim) plus a
//! center with at least three neighbors on it, and a k-hub generalizes
//! the center's neighbor count to k. Detection reduces to the
//! cycle-through-three-vertices machinery inside blocks of the graph
//! minus the candidate center.

use crate::cycle3::{cycle_or_splitter, CycleOrSplitter};
use crate::graph::{blocks, Cycle, Graph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

/// A wheel (k-hub) witness: the rim cycle, the center, and the rim
/// vertices adjacent to the center. The witness subgraph (rim edges plus
/// spokes) is itself a wheel; chords of the rim elsewhere in the host
/// graph do not disturb it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelWitness {
    pub center: usize,
    pub rim: Cycle,
    pub spokes: Vec<usize>,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WheelViolation {
    pub reason: String,
}

impl WheelWitness {
    /// Structural re-check against the host graph; total, so corrupted
    /// certificates report violations instead of panicking.
    pub fn verify(&self, g: &Graph, min_rim: usize) -> Vec<WheelViolation> {
        let mut out = Vec::new();
        let fail = |reason: String| WheelViolation { reason };
        if self.center >= g.n() {
            out.push(fail(format!("center {} out of range", self.center)));
            return out;
        }
        let rim = self.rim.vertices();
        if rim.len() < 3.max(min_rim) {
            out.push(fail(format!("rim has {} vertices, needs {}", rim.len(), 3.max(min_rim))));
        }
        let mut seen = BTreeSet::new();
        for &v in rim {
            if v >= g.n() {
                out.push(fail(format!("rim vertex {v} out of range")));
                return out;
            }
            if !seen.insert(v) {
                out.push(fail(format!("rim vertex {v} repeats")));
                return out;
            }
        }
        for i in 0..rim.len() {
            let (u, w) = (rim[i], rim[(i + 1) % rim.len()]);
            if !g.has_edge(u, w) {
                out.push(fail(format!("missing rim edge {u} {w}")));
            }
        }
        if rim.contains(&self.center) {
            out.push(fail(format!("center {} lies on the rim", self.center)));
        }
        if self.k < 3 {
            out.push(fail(format!("hub order {} below 3", self.k)));
        }
        if self.spokes.len() < self.k {
            out.push(fail(format!("{} spokes for hub order {}", self.spokes.len(), self.k)));
        }
        let mut spoke_seen = BTreeSet::new();
        for &s in &self.spokes {
            if !spoke_seen.insert(s) {
                out.push(fail(format!("spoke {s} repeats")));
                continue;
            }
            if !rim.contains(&s) {
                out.push(fail(format!("spoke {s} not on the rim")));
            }
            if s >= g.n() || !g.has_edge(self.center, s) {
                out.push(fail(format!("spoke {s} not adjacent to the center")));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WheelError {
    #[error("hub order must be at least 3, got {0}")]
    HubOrderTooSmall(usize),
}

/// Searches for a k-hub centered at `center`: a cycle in g - center
/// through at least k of its neighbors. Exact for k = 3; for larger k the
/// scan over neighbor k-subsets checks each found cycle's spoke count and
/// may miss hubs whose cycles elude the triple queries.
fn hub_at(g: &Graph, center: usize, k: usize, min_rim: usize) -> Option<WheelWitness> {
    if g.degree(center) < k {
        return None;
    }
    let (h, map) = g.remove_vertex(center).expect("center in range");
    let nbrs: Vec<usize> = g.neighbors(center).iter().map(|&w| map.to_new(w).unwrap()).collect();
    let dec = blocks(&h);

    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let chosen: Vec<usize> = idx.iter().map(|&i| nbrs[i]).collect();
        if let Some(w) = try_subset(g, &h, &map, &dec, center, &chosen, k, min_rim) {
            return Some(w);
        }
        if !next_combination(&mut idx, nbrs.len()) {
            return None;
        }
    }
}

/// Advances to the next k-combination of 0..n in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - (k - i) {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn try_subset(
    g: &Graph,
    h: &Graph,
    map: &crate::graph::Relabeling,
    dec: &crate::graph::BlockDecomposition,
    center: usize,
    chosen: &[usize],
    k: usize,
    min_rim: usize,
) -> Option<WheelWitness> {
    // a cycle lives inside one 2-connected block
    let block = dec
        .blocks
        .iter()
        .find(|b| !b.is_edge && chosen.iter().all(|v| b.vertices.contains(v)))?;
    let (bg, bmap) = h.induced(&block.vertices);
    let triples: Vec<[usize; 3]> = if k == 3 {
        vec![[chosen[0], chosen[1], chosen[2]]]
    } else {
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                for l in j + 1..k {
                    out.push([chosen[i], chosen[j], chosen[l]]);
                }
            }
        }
        out
    };
    for t in triples {
        let [a, b, c] = t.map(|v| bmap.to_new(v).unwrap());
        match cycle_or_splitter(&bg, a, b, c) {
            Ok(CycleOrSplitter::Cycle(cycle)) => {
                let in_h = bmap.lift_cycle(&cycle);
                let rim = map.lift_cycle(&in_h);
                let spokes: Vec<usize> =
                    rim.iter().copied().filter(|&w| g.has_edge(center, w)).collect();
                if spokes.len() >= k && rim.len() >= min_rim {
                    let rim = shrink_rim(g, rim, center, k, min_rim);
                    let spokes: Vec<usize> =
                        rim.iter().copied().filter(|&w| g.has_edge(center, w)).collect();
                    return Some(WheelWitness { center, rim, spokes, k });
                }
            }
            Ok(CycleOrSplitter::Splitter(_)) => {}
            Err(e) => panic!("hub query on a 2-connected block failed: {e}"),
        }
    }
    None
}

/// Shortcuts the rim across chords while at least k spokes and the
/// minimum rim length survive, to emit small witnesses.
fn shrink_rim(g: &Graph, rim: Cycle, center: usize, k: usize, min_rim: usize) -> Cycle {
    let mut current = rim;
    'outer: loop {
        let verts = current.vertices().to_vec();
        let len = verts.len();
        for i in 0..len {
            for j in i + 1..len {
                // skip rim edges (consecutive on the cycle)
                if j == i + 1 || (i == 0 && j == len - 1) {
                    continue;
                }
                let (u, w) = (verts[i], verts[j]);
                if !g.has_edge(u, w) {
                    continue;
                }
                // two candidate shortcuts; keep the short side only if valid
                let side1: Vec<usize> = verts[i..=j].to_vec();
                let mut side2: Vec<usize> = verts[j..].to_vec();
                side2.extend_from_slice(&verts[..=i]);
                for cand in [side1, side2] {
                    if cand.len() < 3.max(min_rim) || cand.len() >= len {
                        continue;
                    }
                    let spokes = cand.iter().filter(|&&v| g.has_edge(center, v)).count();
                    if spokes >= k {
                        current = Cycle::new(cand).expect("shortcut stays a cycle");
                        continue 'outer;
                    }
                }
            }
        }
        return current;
    }
}

/// First k-hub witness in scan order (centers ascending, neighbor subsets
/// lexicographic). Exact for k = 3.
pub fn find_hub(g: &Graph, k: usize) -> Result<Option<WheelWitness>, WheelError> {
    if k < 3 {
        return Err(WheelError::HubOrderTooSmall(k));
    }
    for center in 0..g.n() {
        if let Some(w) = hub_at(g, center, k, 3) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// First wheel witness, if the graph contains any wheel.
pub fn find_wheel(g: &Graph) -> Option<WheelWitness> {
    find_hub(g, 3).expect("k = 3 is valid")
}

/// First wheel witness whose rim has length at least 4. A triangle rim
/// through a neighbor triple is dodged by re-querying with each triangle
/// edge removed: any longer cycle through the triple omits one of them.
pub fn find_long_wheel(g: &Graph) -> Option<WheelWitness> {
    for center in 0..g.n() {
        if let Some(w) = long_wheel_at(g, center) {
            return Some(w);
        }
    }
    None
}

fn long_wheel_at(g: &Graph, center: usize) -> Option<WheelWitness> {
    if g.degree(center) < 3 {
        return None;
    }
    let nbrs: Vec<usize> = g.neighbors(center).to_vec();
    for i in 0..nbrs.len() {
        for j in i + 1..nbrs.len() {
            for l in j + 1..nbrs.len() {
                let triple = [nbrs[i], nbrs[j], nbrs[l]];
                let triangle_edges: Vec<(usize, usize)> = [
                    (triple[0], triple[1]),
                    (triple[0], triple[2]),
                    (triple[1], triple[2]),
                ]
                .into_iter()
                .filter(|&(u, v)| g.has_edge(u, v))
                .collect();
                let hosts: Vec<Graph> = if triangle_edges.len() < 3 {
                    vec![g.clone()]
                } else {
                    triangle_edges
                        .iter()
                        .map(|&(u, v)| g.remove_edge(u, v).expect("triangle edge present"))
                        .collect()
                };
                for host in hosts {
                    if let Some(w) = long_wheel_query(g, &host, center, triple) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

fn long_wheel_query(g: &Graph, host: &Graph, center: usize, triple: [usize; 3]) -> Option<WheelWitness> {
    let (h, map) = host.remove_vertex(center).expect("center in range");
    let dec = blocks(&h);
    let local = triple.map(|v| map.to_new(v).unwrap());
    let block = dec
        .blocks
        .iter()
        .find(|b| !b.is_edge && local.iter().all(|v| b.vertices.contains(v)))?;
    let (bg, bmap) = h.induced(&block.vertices);
    let [a, b, c] = local.map(|v| bmap.to_new(v).unwrap());
    match cycle_or_splitter(&bg, a, b, c) {
        Ok(CycleOrSplitter::Cycle(cycle)) => {
            let rim = map.lift_cycle(&bmap.lift_cycle(&cycle));
            debug_assert!(rim.len() >= 4);
            let rim = shrink_rim(g, rim, center, 3, 4);
            let spokes: Vec<usize> =
                rim.iter().copied().filter(|&w| g.has_edge(center, w)).collect();
            Some(WheelWitness { center, rim, spokes, k: 3 })
        }
        Ok(CycleOrSplitter::Splitter(_)) => None,
        Err(e) => panic!("long-wheel query on a 2-connected block failed: {e}"),
    }
}

/// W(G): every vertex on which some wheel is centered.
pub fn wheel_centers(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| hub_at(g, v, 3, 3).is_some()).collect()
}

/// Classification by wheel centers: none, an almost-wheel-free exception
/// (one degree-3 center, or two adjacent degree-3 centers), or anything
/// else.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "wheel_centers")]
pub enum Classification {
    WheelFree(Vec<usize>),
    AlmostWheelFree(Vec<usize>),
    Neither(Vec<usize>),
}

impl Classification {
    pub fn wheel_centers(&self) -> &[usize] {
        match self {
            Classification::WheelFree(w)
            | Classification::AlmostWheelFree(w)
            | Classification::Neither(w) => w,
        }
    }

    pub fn is_wheel_free(&self) -> bool {
        matches!(self, Classification::WheelFree(_))
    }

    pub fn is_almost_wheel_free(&self) -> bool {
        !matches!(self, Classification::Neither(_))
    }
}

pub fn classify(g: &Graph) -> Classification {
    let w = wheel_centers(g);
    match w.len() {
        0 => Classification::WheelFree(w),
        1 if g.degree(w[0]) == 3 => Classification::AlmostWheelFree(w),
        2 if g.has_edge(w[0], w[1]) && g.degree(w[0]) == 3 && g.degree(w[1]) == 3 => {
            Classification::AlmostWheelFree(w)
        }
        _ => Classification::Neither(w),
    }
}
