//! Twin structure: pairs of non-adjacent degree-3 vertices with identical
//! neighborhoods, disjoint pairs of them, and the reduction outcomes that
//! drive the constructive coloring (low-degree vertices and twin pairs
//! always exist in wheel-free graphs).

use crate::graph::Graph;
use serde::Serialize;
use thiserror::Error;

/// Two non-adjacent degree-3 vertices with the same neighborhood.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TwinPair(pub usize, pub usize);

impl TwinPair {
    pub fn verify(&self, g: &Graph) -> bool {
        let TwinPair(u, v) = *self;
        u != v
            && u < g.n()
            && v < g.n()
            && !g.has_edge(u, v)
            && g.degree(u) == 3
            && g.degree(v) == 3
            && g.neighbors(u) == g.neighbors(v)
    }

    pub fn disjoint_from(&self, other: &TwinPair) -> bool {
        let TwinPair(a, b) = *self;
        let TwinPair(c, d) = *other;
        a != c && a != d && b != c && b != d
    }
}

/// All twin pairs, sorted.
pub fn twin_pairs(g: &Graph) -> Vec<TwinPair> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        if g.degree(u) != 3 {
            continue;
        }
        for v in u + 1..g.n() {
            if g.degree(v) == 3 && !g.has_edge(u, v) && g.neighbors(u) == g.neighbors(v) {
                out.push(TwinPair(u, v));
            }
        }
    }
    out
}

/// First (lexicographically) pair of vertex-disjoint twin pairs.
pub fn disjoint_twin_pairs(g: &Graph) -> Option<(TwinPair, TwinPair)> {
    let pairs = twin_pairs(g);
    for (i, p) in pairs.iter().enumerate() {
        for q in &pairs[i + 1..] {
            if p.disjoint_from(q) {
                return Some((*p, *q));
            }
        }
    }
    None
}

/// Member of a twin pair, or adjacent to one.
pub fn close_to_twin(g: &Graph, v: usize) -> bool {
    let pairs = twin_pairs(g);
    pairs.iter().any(|&TwinPair(a, b)| {
        a == v || b == v || g.has_edge(a, v) || g.has_edge(b, v)
    })
}

/// What a reduction scan found, strongest information first. Wheel-free
/// graphs on two or more vertices always admit one of the first three.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ReductionOutcome {
    TwoTwinPairs { first: TwinPair, second: TwinPair },
    Deg2PlusTwins { vertex: usize, pair: TwinPair },
    TwoDeg2 { first: usize, second: usize },
    Twins { pair: TwinPair },
    Deg2 { vertex: usize },
    NotFound,
}

impl ReductionOutcome {
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            ReductionOutcome::TwoTwinPairs { first, second } => {
                first.verify(g) && second.verify(g) && first.disjoint_from(second)
            }
            ReductionOutcome::Deg2PlusTwins { vertex, pair } => {
                *vertex < g.n() && g.degree(*vertex) <= 2 && pair.verify(g)
            }
            ReductionOutcome::TwoDeg2 { first, second } => {
                first != second
                    && *first < g.n()
                    && *second < g.n()
                    && g.degree(*first) <= 2
                    && g.degree(*second) <= 2
            }
            ReductionOutcome::Twins { pair } => pair.verify(g),
            ReductionOutcome::Deg2 { vertex } => *vertex < g.n() && g.degree(*vertex) <= 2,
            ReductionOutcome::NotFound => true,
        }
    }

    pub fn is_trichotomy(&self) -> bool {
        matches!(
            self,
            ReductionOutcome::TwoTwinPairs { .. }
                | ReductionOutcome::Deg2PlusTwins { .. }
                | ReductionOutcome::TwoDeg2 { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph has {0} vertices, needs at least 2")]
    TooSmall(usize),
}

/// Scans for the strongest available reduction: two disjoint twin pairs,
/// a low-degree vertex plus a twin pair, two low-degree vertices, then
/// the single-witness fallbacks.
pub fn reduction_step(g: &Graph) -> Result<ReductionOutcome, StructureError> {
    if g.n() < 2 {
        return Err(StructureError::TooSmall(g.n()));
    }
    let low: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) <= 2).collect();
    let pairs = twin_pairs(g);
    if let Some((first, second)) = disjoint_twin_pairs(g) {
        return Ok(ReductionOutcome::TwoTwinPairs { first, second });
    }
    if let (Some(&vertex), Some(&pair)) = (low.first(), pairs.first()) {
        return Ok(ReductionOutcome::Deg2PlusTwins { vertex, pair });
    }
    if low.len() >= 2 {
        return Ok(ReductionOutcome::TwoDeg2 { first: low[0], second: low[1] });
    }
    if let Some(&pair) = pairs.first() {
        return Ok(ReductionOutcome::Twins { pair });
    }
    if let Some(&vertex) = low.first() {
        return Ok(ReductionOutcome::Deg2 { vertex });
    }
    Ok(ReductionOutcome::NotFound)
}
