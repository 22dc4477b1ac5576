//! Vertex connectivity and its structure: kappa with a cutset witness,
//! fragments and ends, essential edges, minimal 3-connectivity, and the
//! two fragment-extension constructions used when peeling graphs apart
//! at small cutsets.

use crate::graph::{Graph, Relabeling};
use crate::menger::{PathProblem, SplitFlow};
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("graph is empty")]
    EmptyGraph,
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    OutOfRange(usize, usize),
    #[error("graph is complete; fragments are undefined")]
    CompleteGraph,
    #[error("graph is disconnected; fragments are undefined")]
    Disconnected,
    #[error("fragment precondition violated: {0}")]
    BadFragment(String),
    #[error("cutset enumeration is capped at 24 vertices, got {0}")]
    TooLarge(usize),
}

/// Witness attached to a connectivity value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "detail")]
pub enum KappaWitness {
    /// Complete graphs have no cutset; kappa is n - 1 by convention.
    Complete,
    /// A vertex set of size kappa whose removal disconnects the graph.
    Cutset(Vec<usize>),
    /// Already disconnected: one component as evidence.
    Disconnected(Vec<usize>),
}

/// Largest k such that the graph stays connected after removing any k - 1
/// vertices, with kappa(K_n) = n - 1.
pub fn kappa(g: &Graph) -> Result<(usize, KappaWitness), ConnectivityError> {
    let n = g.n();
    if n == 0 {
        return Err(ConnectivityError::EmptyGraph);
    }
    if g.is_complete() {
        return Ok((n - 1, KappaWitness::Complete));
    }
    if !g.is_connected() {
        let comp = g.components().into_iter().next().unwrap();
        return Ok((0, KappaWitness::Disconnected(comp)));
    }
    // minimum over a dominating family of pairs: a fixed low-degree
    // vertex against all its non-neighbors, plus non-adjacent pairs of
    // its neighbors
    let s = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut consider = |k: usize, cut: Vec<usize>| {
        if best.as_ref().is_none_or(|(bk, _)| k < *bk) {
            best = Some((k, cut));
        }
    };
    for t in 0..n {
        if t != s && !g.has_edge(s, t) {
            let (k, cut) = local_connectivity(g, s, t);
            consider(k, cut);
        }
    }
    let nbrs = g.neighbors(s).to_vec();
    for (i, &u) in nbrs.iter().enumerate() {
        for &v in &nbrs[i + 1..] {
            if !g.has_edge(u, v) {
                let (k, cut) = local_connectivity(g, u, v);
                consider(k, cut);
            }
        }
    }
    let (k, cut) = best.expect("incomplete graph has a non-adjacent pair");
    debug_assert_eq!(cut.len(), k);
    Ok((k, KappaWitness::Cutset(cut)))
}

/// Minimum vertex cut between two non-adjacent vertices, via max flow on
/// the split digraph with both endpoints capacity-exempt.
fn local_connectivity(g: &Graph, s: usize, t: usize) -> (usize, Vec<usize>) {
    debug_assert!(!g.has_edge(s, t) && s != t);
    let limit = g.n() as u32;
    let problem = PathProblem {
        g,
        sources: vec![s],
        sinks: vec![t],
        uncapped: vec![s, t],
        absorbing: false,
        limit,
    };
    let mut net = SplitFlow::build(&problem);
    let flow = net.max_flow(limit);
    let cut = net.min_cut_vertices();
    debug_assert_eq!(cut.len(), flow as usize);
    (flow as usize, cut)
}

pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    match kappa(g) {
        Ok((kap, _)) => kap >= k,
        Err(_) => false,
    }
}

/// A fragment: a vertex set whose neighborhood is a minimum cutset, with
/// something left over beyond the neighborhood.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fragment {
    pub vertices: Vec<usize>,
    pub neighborhood: Vec<usize>,
    pub complement: Vec<usize>,
    pub is_end: bool,
}

/// Every fragment, each flagged as an end (a fragment containing no other
/// fragment properly). Minimum cutsets are enumerated exhaustively for
/// completeness, which is what desk scale is for.
pub fn fragments_and_ends(g: &Graph) -> Result<Vec<Fragment>, ConnectivityError> {
    let n = g.n();
    if n == 0 {
        return Err(ConnectivityError::EmptyGraph);
    }
    if g.is_complete() {
        return Err(ConnectivityError::CompleteGraph);
    }
    if !g.is_connected() {
        return Err(ConnectivityError::Disconnected);
    }
    if n > 24 {
        return Err(ConnectivityError::TooLarge(n));
    }
    let (k, _) = kappa(g)?;
    let cutsets = minimum_cutsets(g, k);
    let mut frags: BTreeSet<Vec<usize>> = BTreeSet::new();
    for cut in &cutsets {
        let cut_set: BTreeSet<usize> = cut.iter().copied().collect();
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; n];
        for &v in cut {
            seen[v] = true;
        }
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let comp = g.reachable_from(start, &cut_set);
            for &v in &comp {
                seen[v] = true;
            }
            comps.push(comp);
        }
        // unions of components whose joint neighborhood is the whole cutset
        let m = comps.len();
        for pick in 1u32..(1 << m) - 1 {
            let union: Vec<usize> = (0..m)
                .filter(|i| pick >> i & 1 == 1)
                .flat_map(|i| comps[i].iter().copied())
                .collect();
            let nbhd: BTreeSet<usize> = union
                .iter()
                .flat_map(|&v| g.neighbors(v).iter().copied())
                .filter(|w| cut_set.contains(w))
                .collect();
            if nbhd.len() == k && nbhd == cut_set {
                let mut sorted = union;
                sorted.sort_unstable();
                frags.insert(sorted);
            }
        }
    }
    let frag_list: Vec<Vec<usize>> = frags.into_iter().collect();
    let sets: Vec<BTreeSet<usize>> = frag_list.iter().map(|f| f.iter().copied().collect()).collect();
    let out = frag_list
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let nbhd: BTreeSet<usize> = f
                .iter()
                .flat_map(|&v| g.neighbors(v).iter().copied())
                .filter(|w| !sets[i].contains(w))
                .collect();
            let complement: Vec<usize> =
                (0..n).filter(|v| !sets[i].contains(v) && !nbhd.contains(v)).collect();
            let is_end = sets
                .iter()
                .enumerate()
                .all(|(j, other)| j == i || !other.is_subset(&sets[i]) || other == &sets[i]);
            Fragment {
                vertices: f.clone(),
                neighborhood: nbhd.into_iter().collect(),
                complement,
                is_end,
            }
        })
        .collect();
    Ok(out)
}

/// All vertex sets of size k whose removal disconnects the graph.
fn minimum_cutsets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    debug_assert!(n <= 24, "exhaustive cutset enumeration is desk-scale only");
    let mut cuts = Vec::new();
    let mut subset: Vec<usize> = (0..k).collect();
    if k == 0 || k >= n {
        return cuts;
    }
    loop {
        let cut_set: BTreeSet<usize> = subset.iter().copied().collect();
        let start = (0..n).find(|v| !cut_set.contains(v));
        if let Some(s) = start {
            let reach = g.reachable_from(s, &cut_set);
            if reach.len() < n - k {
                cuts.push(subset.clone());
            }
        }
        // next k-subset
        let mut i = k;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if subset[i] < n - (k - i) {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    cuts
}

/// An edge is essential when deleting it lowers the connectivity.
pub fn essential_edges(g: &Graph) -> Vec<(usize, usize)> {
    let Ok((k, _)) = kappa(g) else { return Vec::new() };
    g.edges()
        .filter(|&(u, v)| {
            let h = g.remove_edge(u, v).expect("edge exists");
            match kappa(&h) {
                Ok((kh, _)) => kh < k,
                Err(_) => false,
            }
        })
        .collect()
}

/// Connectivity exactly 3 with every edge essential.
pub fn is_minimally_3_connected(g: &Graph) -> bool {
    match kappa(g) {
        Ok((3, _)) => essential_edges(g).len() == g.edge_count(),
        _ => false,
    }
}

/// Result of extending a fragment across a 2-cutset {a, b}: the induced
/// graph on the fragment plus {a, b} with the edge ab added.
#[derive(Debug, Clone)]
pub struct ExtendedBlock {
    pub graph: Graph,
    pub map: Relabeling,
    pub a: usize,
    pub b: usize,
    pub added_edge: bool,
}

/// Builds that extension for an end F with |F| >= 2 of a graph with
/// connectivity 2. Preconditions are validated, not trusted.
pub fn extend_2cut_block(g: &Graph, fragment: &[usize]) -> Result<ExtendedBlock, ConnectivityError> {
    let (k, _) = kappa(g)?;
    if k != 2 {
        return Err(ConnectivityError::BadFragment(format!("connectivity is {k}, not 2")));
    }
    if fragment.len() < 2 {
        return Err(ConnectivityError::BadFragment(format!(
            "end has {} vertices, needs at least 2",
            fragment.len()
        )));
    }
    let frags = fragments_and_ends(g)?;
    let sorted: Vec<usize> = {
        let mut f = fragment.to_vec();
        f.sort_unstable();
        f.dedup();
        f
    };
    let found = frags
        .iter()
        .find(|f| f.vertices == sorted)
        .ok_or_else(|| ConnectivityError::BadFragment("not a fragment".into()))?;
    if !found.is_end {
        return Err(ConnectivityError::BadFragment("fragment is not an end".into()));
    }
    let [a, b]: [usize; 2] = found.neighborhood.clone().try_into().map_err(|_| {
        ConnectivityError::BadFragment(format!("neighborhood {:?} is not a pair", found.neighborhood))
    })?;
    let mut keep = sorted;
    keep.push(a);
    keep.push(b);
    keep.sort_unstable();
    let (mut h, map) = g.induced(&keep);
    let (na, nb) = (map.to_new(a).unwrap(), map.to_new(b).unwrap());
    let added_edge = !h.has_edge(na, nb);
    if added_edge {
        h = h.add_edge(na, nb).expect("fresh edge");
    }
    Ok(ExtendedBlock { graph: h, map, a: na, b: nb, added_edge })
}

/// Result of the 3-cutset extension: the fragment side with the cutset
/// edges stripped, pendant copies for busy cutset vertices, and two new
/// apex vertices joined to all three (copies).
#[derive(Debug, Clone)]
pub struct ExtendedSep {
    pub graph: Graph,
    /// Positions of a, b, c in the new graph.
    pub cut: [usize; 3],
    /// Positions of a', b', c' (equal to `cut` entries when no copy was
    /// needed).
    pub primed: [usize; 3],
    pub apex: [usize; 2],
    /// Old id -> new id for the kept vertices.
    pub map: Relabeling,
}

/// Builds the 3-cutset extension for a fragment F with N(F) = {a, b, c}.
pub fn extend_3sep(g: &Graph, fragment: &[usize]) -> Result<ExtendedSep, ConnectivityError> {
    for &v in fragment {
        g.check_vertex(v).map_err(|_| ConnectivityError::OutOfRange(v, g.n()))?;
    }
    let (k, _) = kappa(g)?;
    if k != 3 {
        return Err(ConnectivityError::BadFragment(format!("connectivity is {k}, not 3")));
    }
    let frag_set: BTreeSet<usize> = fragment.iter().copied().collect();
    if frag_set.is_empty() {
        return Err(ConnectivityError::BadFragment("fragment is empty".into()));
    }
    let nbhd: BTreeSet<usize> = frag_set
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().copied())
        .filter(|w| !frag_set.contains(w))
        .collect();
    let [a, b, c]: [usize; 3] = nbhd
        .iter()
        .copied()
        .collect::<Vec<_>>()
        .try_into()
        .map_err(|_| ConnectivityError::BadFragment(format!("neighborhood {nbhd:?} is not a triple")))?;
    if frag_set.len() + nbhd.len() >= g.n() {
        return Err(ConnectivityError::BadFragment("complement is empty".into()));
    }
    // induced graph on F + {a,b,c} minus the edges among {a,b,c}
    let mut keep: Vec<usize> = frag_set.iter().copied().chain([a, b, c]).collect();
    keep.sort_unstable();
    let (mut h, map) = g.induced(&keep);
    let cut_new = [a, b, c].map(|v| map.to_new(v).unwrap());
    for i in 0..3 {
        for j in i + 1..3 {
            if h.has_edge(cut_new[i], cut_new[j]) {
                h = h.remove_edge(cut_new[i], cut_new[j]).expect("edge present");
            }
        }
    }
    // pendant copy for each cutset vertex with two or more fragment
    // neighbors, then two apexes joined to the three (copies)
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    let mut next = h.n();
    let mut primed = cut_new;
    for i in 0..3 {
        let orig = [a, b, c][i];
        let deg_in_f = g.neighbors(orig).iter().filter(|w| frag_set.contains(w)).count();
        if deg_in_f >= 2 {
            primed[i] = next;
            edges.push((cut_new[i], next));
            next += 1;
        }
    }
    let apex = [next, next + 1];
    for &d in &apex {
        for &p in &primed {
            edges.push((p.min(d), p.max(d)));
        }
    }
    let graph = Graph::from_edges(next + 2, &edges)
        .map_err(|_| ConnectivityError::BadFragment("extension produced parallel edges".into()))?;
    Ok(ExtendedSep { graph, cut: cut_new, primed, apex, map })
}
