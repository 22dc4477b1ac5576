//! Constructive coloring. Wheel-free graphs peel down by low-degree
//! vertices and twin pairs and take three colors; long-wheel-free graphs
//! decompose into blocks that are K4 or wheel-free and take four.

use crate::graph::{blocks, Graph};
use crate::wheels::{find_long_wheel, find_wheel, WheelWitness};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

/// A vertex coloring with its color budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringViolation {
    pub reason: String,
}

/// Checks totality, properness, and the color budget. Rejection names an
/// offending vertex or edge.
pub fn verify_coloring(g: &Graph, c: &Coloring, max_colors: usize) -> Vec<ColoringViolation> {
    let mut out = Vec::new();
    if c.colors.len() != g.n() {
        out.push(ColoringViolation {
            reason: format!("{} colors for {} vertices", c.colors.len(), g.n()),
        });
        return out;
    }
    for (v, &col) in c.colors.iter().enumerate() {
        if col >= max_colors {
            out.push(ColoringViolation { reason: format!("vertex {v} has color {col} >= {max_colors}") });
        }
    }
    for (u, v) in g.edges() {
        if c.colors[u] == c.colors[v] {
            out.push(ColoringViolation { reason: format!("edge {u} {v} is monochrome") });
        }
    }
    out
}

/// One step of the peel order used by the 3-coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum PeelStep {
    /// A vertex of degree at most 2 was removed; it later takes the
    /// smallest color unused among these neighbors.
    LowDegree { vertex: usize, neighbors: Vec<usize> },
    /// The first member of a twin pair was removed; it later copies the
    /// color of its twin.
    Twin { removed: usize, kept: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("graph contains a wheel centered at {}", witness.center)]
    NotWheelFree { witness: WheelWitness },
    #[error("graph contains a long wheel centered at {}", witness.center)]
    NotLongWheelFree { witness: WheelWitness },
}

/// Proper 3-coloring of a wheel-free graph, with the peel trace. The
/// peel is iterative: record n - 1 reductions, then color in reverse.
pub fn color3_traced(g: &Graph) -> Result<(Coloring, Vec<PeelStep>), ColoringError> {
    if let Some(witness) = find_wheel(g) {
        return Err(ColoringError::NotWheelFree { witness });
    }
    // wheel-freeness survives vertex deletion, so one up-front check
    // covers the whole peel
    let mut adj: Vec<BTreeSet<usize>> =
        (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive: BTreeSet<usize> = (0..g.n()).collect();
    let mut trace: Vec<PeelStep> = Vec::new();
    while alive.len() > 1 {
        let low = alive.iter().copied().find(|&v| adj[v].len() <= 2);
        if let Some(v) = low {
            trace.push(PeelStep::LowDegree { vertex: v, neighbors: adj[v].iter().copied().collect() });
            remove(&mut adj, &mut alive, v);
            continue;
        }
        let twin = first_twin(&adj, &alive);
        match twin {
            Some((u, v)) => {
                trace.push(PeelStep::Twin { removed: u, kept: v });
                remove(&mut adj, &mut alive, u);
            }
            None => unreachable!(
                "wheel-free graph with neither a low-degree vertex nor a twin pair"
            ),
        }
    }
    let mut colors = vec![0usize; g.n()];
    for step in trace.iter().rev() {
        match step {
            PeelStep::LowDegree { vertex, neighbors } => {
                let used: BTreeSet<usize> = neighbors.iter().map(|&w| colors[w]).collect();
                colors[*vertex] = (0..3).find(|c| !used.contains(c)).expect("degree <= 2 leaves a free color");
            }
            PeelStep::Twin { removed, kept } => colors[*removed] = colors[*kept],
        }
    }
    Ok((Coloring { colors, max: 3 }, trace))
}

pub fn color3(g: &Graph) -> Result<Coloring, ColoringError> {
    color3_traced(g).map(|(c, _)| c)
}

fn remove(adj: &mut [BTreeSet<usize>], alive: &mut BTreeSet<usize>, v: usize) {
    alive.remove(&v);
    let ns: Vec<usize> = adj[v].iter().copied().collect();
    for w in ns {
        adj[w].remove(&v);
    }
    adj[v].clear();
}

fn first_twin(adj: &[BTreeSet<usize>], alive: &BTreeSet<usize>) -> Option<(usize, usize)> {
    let candidates: Vec<usize> = alive.iter().copied().filter(|&v| adj[v].len() == 3).collect();
    for (i, &u) in candidates.iter().enumerate() {
        for &v in &candidates[i + 1..] {
            if !adj[u].contains(&v) && adj[u] == adj[v] {
                return Some((u, v));
            }
        }
    }
    None
}

/// Proper 4-coloring of a long-wheel-free graph: K4 blocks take all four
/// colors, the other blocks are wheel-free and go through the peel,
/// and colors reconcile across the block tree by swapping at the shared
/// cut vertex.
pub fn color4_long(g: &Graph) -> Result<Coloring, ColoringError> {
    if let Some(witness) = find_long_wheel(g) {
        return Err(ColoringError::NotLongWheelFree { witness });
    }
    let dec = blocks(g);
    let mut colors: Vec<Option<usize>> = vec![None; g.n()];
    // process blocks so each one (after the first in its component) meets
    // the already-colored region in exactly its shared cut vertex
    let mut remaining: Vec<&crate::graph::Block> = dec.blocks.iter().collect();
    while !remaining.is_empty() {
        let pos = remaining
            .iter()
            .position(|b| b.vertices.iter().any(|&v| colors[v].is_some()))
            .unwrap_or(0);
        let block = remaining.remove(pos);
        let (bg, map) = g.induced(&block.vertices);
        let local = if bg.n() == 4 && bg.edge_count() == 6 {
            Coloring { colors: vec![0, 1, 2, 3], max: 4 }
        } else {
            match color3(&bg) {
                Ok(c) => c,
                Err(e) => unreachable!("block of a long-wheel-free graph is K4 or wheel-free: {e}"),
            }
        };
        // at most one vertex is already colored (a cut vertex); swap its
        // block color with its assigned color
        let pinned = block.vertices.iter().find(|&&v| colors[v].is_some());
        let swap: Option<(usize, usize)> = pinned.map(|&v| {
            let want = colors[v].unwrap();
            let have = local.colors[map.to_new(v).unwrap()];
            (want, have)
        });
        for &v in &block.vertices {
            let mut c = local.colors[map.to_new(v).unwrap()];
            if let Some((want, have)) = swap {
                if c == have {
                    c = want;
                } else if c == want {
                    c = have;
                }
            }
            match colors[v] {
                None => colors[v] = Some(c),
                Some(existing) => debug_assert_eq!(existing, c, "cut vertex color must match"),
            }
        }
    }
    let colors: Vec<usize> = colors.into_iter().map(|c| c.unwrap_or(0)).collect();
    Ok(Coloring { colors, max: 4 })
}
