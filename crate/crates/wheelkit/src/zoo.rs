//! Named graphs and seeded generators used as fixtures across the test
//! and property suites: small standards, the 13-vertex Ramsey circulant,
//! a glued pair of K33's, the subdivision-based wheel-free generator, and
//! seeded random graphs.

use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZooError {
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("theta arms must have length >= 1 with at most one arm of length 1, got {0:?}")]
    BadThetaArms([usize; 3]),
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("labeled enumeration is capped at 6 vertices, got {0}")]
    EnumerationTooBig(usize),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

/// The named fixture graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    K4,
    K33,
    K33MinusE,
    Cycle(usize),
    Theta(usize, usize, usize),
    /// K4 minus an edge; also answers to "kite".
    Diamond,
    Cube,
    Petersen,
    RamseyR35,
    GluedK33Pair,
    /// Two K23's with their degree-2 sides joined by a perfect matching:
    /// the smallest 3-connected wheel-free graph after K33.
    TwinLadder,
}

impl Fixture {
    /// Parses a CLI-style name. Cycle and theta parameters ride along as
    /// `cycle:7` and `theta:2,3,4`.
    pub fn parse(name: &str) -> Result<Fixture, ZooError> {
        let (head, args) = match name.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (name, None),
        };
        let fixture = match (head, args) {
            ("k4", None) => Fixture::K4,
            ("k33", None) => Fixture::K33,
            ("k33-minus-e", None) | ("k33_minus_e", None) => Fixture::K33MinusE,
            ("diamond", None) | ("kite", None) => Fixture::Diamond,
            ("cube", None) | ("q3", None) => Fixture::Cube,
            ("petersen", None) => Fixture::Petersen,
            ("ramsey-r35", None) | ("r35", None) => Fixture::RamseyR35,
            ("glued-k33-pair", None) | ("glued_k33_pair", None) => Fixture::GluedK33Pair,
            ("twin-ladder", None) | ("twin_ladder", None) => Fixture::TwinLadder,
            ("cycle", Some(a)) => {
                let n = a.parse().map_err(|_| ZooError::UnknownFixture(name.into()))?;
                Fixture::Cycle(n)
            }
            ("theta", Some(a)) => {
                let parts: Vec<usize> = a
                    .split(',')
                    .map(|p| p.trim().parse())
                    .collect::<Result<_, _>>()
                    .map_err(|_| ZooError::UnknownFixture(name.into()))?;
                let [p, q, r]: [usize; 3] =
                    parts.try_into().map_err(|_| ZooError::UnknownFixture(name.into()))?;
                Fixture::Theta(p, q, r)
            }
            _ => return Err(ZooError::UnknownFixture(name.into())),
        };
        Ok(fixture)
    }
}

pub fn fixture(f: Fixture) -> Result<Graph, ZooError> {
    match f {
        Fixture::K4 => Ok(complete(4)),
        Fixture::K33 => Ok(complete_bipartite(3, 3)),
        Fixture::K33MinusE => {
            let g = complete_bipartite(3, 3);
            Ok(g.remove_edge(0, 3).expect("edge of K33"))
        }
        Fixture::Cycle(n) => {
            if n < 3 {
                return Err(ZooError::CycleTooShort(n));
            }
            let edges: Vec<(usize, usize)> =
                (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
            Ok(Graph::from_edges(n, &edges).expect("cycle is simple"))
        }
        Fixture::Theta(p, q, r) => theta(p, q, r),
        Fixture::Diamond => {
            let g = complete(4);
            Ok(g.remove_edge(0, 1).expect("edge of K4"))
        }
        Fixture::Cube => {
            let mut edges = Vec::new();
            for u in 0..8usize {
                for b in 0..3 {
                    let v = u ^ (1 << b);
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            Ok(Graph::from_edges(8, &edges).expect("cube is simple"))
        }
        Fixture::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5usize {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((i + 5, (i + 2) % 5 + 5));
            }
            let edges: Vec<(usize, usize)> =
                edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
            Ok(Graph::from_edges(10, &edges).expect("petersen is simple"))
        }
        Fixture::RamseyR35 => Ok(circulant(13, &[1, 5])),
        Fixture::GluedK33Pair => {
            // two K33's sharing exactly the edge 0-3 (one vertex per part)
            let mut edges = Vec::new();
            for &a in &[0, 1, 2] {
                for &b in &[3, 4, 5] {
                    edges.push((a, b));
                }
            }
            for &a in &[0, 6, 7] {
                for &b in &[3, 8, 9] {
                    if (a, b) != (0, 3) {
                        edges.push((a.min(b), a.max(b)));
                    }
                }
            }
            edges.sort_unstable();
            edges.dedup();
            Ok(Graph::from_edges(10, &edges).expect("glued pair is simple"))
        }
        Fixture::TwinLadder => {
            let mut edges = Vec::new();
            for (hub, rail) in [(6, 0), (7, 0), (8, 3), (9, 3)] {
                for d in 0..3 {
                    edges.push((rail + d, hub));
                }
            }
            for d in 0..3 {
                edges.push((d, d + 3));
            }
            Ok(Graph::from_edges(10, &edges).expect("ladder is simple"))
        }
    }
}

fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete graph is simple")
}

fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..p {
        for v in p..p + q {
            edges.push((u, v));
        }
    }
    Graph::from_edges(p + q, &edges).expect("bipartite graph is simple")
}

/// Two branch vertices 0 and 1 joined by three internally disjoint paths
/// with the given edge counts.
fn theta(p: usize, q: usize, r: usize) -> Result<Graph, ZooError> {
    let arms = [p, q, r];
    if arms.iter().any(|&a| a == 0) || arms.iter().filter(|&&a| a == 1).count() > 1 {
        return Err(ZooError::BadThetaArms(arms));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for len in arms {
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev.min(next), prev.max(next)));
            prev = next;
            next += 1;
        }
        edges.push((prev.min(1), prev.max(1)));
    }
    Ok(Graph::from_edges(next, &edges).expect("theta is simple"))
}

/// Circulant graph on n vertices with the given connection offsets.
pub fn circulant(n: usize, offsets: &[usize]) -> Graph {
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for &d in offsets {
            let j = (i + d) % n;
            edges.insert((i.min(j), i.max(j)));
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).expect("circulant is simple")
}

/// Subdivides edges (seeded choices) until every vertex of degree 3 or
/// more has at most two neighbors of degree 3 or more; graphs in that
/// shape cannot center a wheel anywhere.
pub fn make_wheel_free(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj: Vec<BTreeSet<usize>> =
        (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    loop {
        let mut busy_pairs: Vec<(usize, usize)> = Vec::new();
        for v in 0..adj.len() {
            if adj[v].len() < 3 {
                continue;
            }
            let heavy: Vec<usize> =
                adj[v].iter().copied().filter(|&u| adj[u].len() >= 3).collect();
            if heavy.len() > 2 {
                for u in heavy {
                    if v < u {
                        busy_pairs.push((v, u));
                    } else {
                        busy_pairs.push((u, v));
                    }
                }
            }
        }
        busy_pairs.sort_unstable();
        busy_pairs.dedup();
        if busy_pairs.is_empty() {
            break;
        }
        let (u, v) = busy_pairs[rng.gen_range(0..busy_pairs.len())];
        // subdivide uv
        let w = adj.len();
        adj.push(BTreeSet::from([u, v]));
        adj[u].remove(&v);
        adj[v].remove(&u);
        adj[u].insert(w);
        adj[v].insert(w);
    }
    let edges: Vec<(usize, usize)> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
        .collect();
    Graph::from_edges(adj.len(), &edges).expect("subdivision is simple")
}

/// Checks the degree condition the generator establishes.
pub fn satisfies_wheel_free_shape(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        g.degree(v) < 3
            || g.neighbors(v).iter().filter(|&&u| g.degree(u) >= 3).count() <= 2
    })
}

/// Erdos-Renyi sample, deterministic per seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, ZooError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(ZooError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("sample is simple"))
}

/// Every labeled graph on exactly n vertices, for exhaustive small-scale
/// sweeps. Capped at n = 6 (32768 graphs).
pub fn all_labeled_graphs(n: usize) -> Result<Vec<Graph>, ZooError> {
    if n > 6 {
        return Err(ZooError::EnumerationTooBig(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 << bits);
    for mask in 0u64..(1u64 << bits) {
        let mut edges = Vec::new();
        let mut b = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> b & 1 == 1 {
                    edges.push((u, v));
                }
                b += 1;
            }
        }
        out.push(Graph::from_edges(n, &edges).expect("mask graph is simple"));
    }
    Ok(out)
}
