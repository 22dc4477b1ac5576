//! Simple undirected graphs over dense vertex ids 0..n-1, the path and
//! cycle types shared by the whole crate, edge-list/graph6 parsing, and
//! block (biconnected component) decomposition.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    OutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("missing edge {0} {1}")]
    MissingEdge(usize, usize),
}

/// An immutable simple undirected graph. Neighbor lists are kept sorted,
/// so all traversals are deterministic. "Mutations" return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n {
            return Err(GraphError::OutOfRange(u, n));
        }
        if v >= n {
            return Err(GraphError::OutOfRange(v, n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => return Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => self.adj[u].insert(pos, v),
        }
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::OutOfRange(v, self.n()))
        }
    }

    /// Edges as (u, v) pairs with u < v, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        Ok(g)
    }

    /// Deletes a vertex and relabels to keep ids dense. The returned map
    /// lets certificates computed in the smaller graph be lifted back.
    pub fn remove_vertex(&self, v: usize) -> Result<(Self, Relabeling), GraphError> {
        self.check_vertex(v)?;
        self.remove_vertices(&BTreeSet::from([v]))
    }

    pub fn remove_vertices(&self, drop: &BTreeSet<usize>) -> Result<(Self, Relabeling), GraphError> {
        for &v in drop {
            self.check_vertex(v)?;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|v| !drop.contains(v)).collect();
        Ok(self.induced(&keep))
    }

    /// Induced subgraph on `keep` (which must be sorted and duplicate-free).
    pub fn induced(&self, keep: &[usize]) -> (Self, Relabeling) {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut old_to_new = vec![None; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut adj = vec![Vec::new(); keep.len()];
        for (new, &old) in keep.iter().enumerate() {
            adj[new] = self.adj[old].iter().filter_map(|&w| old_to_new[w]).collect();
        }
        (
            Graph { adj },
            Relabeling { old_to_new, new_to_old: keep.to_vec() },
        )
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|a| a.len() == n - 1)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.reachable_from(0, &BTreeSet::new()).len() == self.n()
    }

    /// Vertices reachable from `start` in the graph minus `blocked`.
    /// `start` itself must not be blocked.
    pub fn reachable_from(&self, start: usize, blocked: &BTreeSet<usize>) -> Vec<usize> {
        debug_assert!(!blocked.contains(&start));
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        let mut out = vec![start];
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] && !blocked.contains(&w) {
                    seen[w] = true;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let comp = self.reachable_from(s, &BTreeSet::new());
            for &v in &comp {
                seen[v] = true;
            }
            comps.push(comp);
        }
        comps
    }
}

/// Old-id/new-id correspondence produced by vertex deletions and induced
/// subgraphs.
#[derive(Debug, Clone)]
pub struct Relabeling {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Relabeling {
    pub fn identity(n: usize) -> Self {
        Relabeling { old_to_new: (0..n).map(Some).collect(), new_to_old: (0..n).collect() }
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    pub fn lift_path(&self, p: &VertexPath) -> VertexPath {
        VertexPath::new(p.iter().map(|&v| self.to_old(v)).collect()).expect("relabeling is injective")
    }

    pub fn lift_cycle(&self, c: &Cycle) -> Cycle {
        Cycle::new(c.iter().map(|&v| self.to_old(v)).collect()).expect("relabeling is injective")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path is empty")]
    Empty,
    #[error("repeated vertex {0}")]
    Repeated(usize),
    #[error("cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
}

/// A simple path given by its vertex sequence. Length-0 paths (a single
/// vertex) are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexPath(Vec<usize>);

impl VertexPath {
    pub fn new(vertices: Vec<usize>) -> Result<Self, PathError> {
        if vertices.is_empty() {
            return Err(PathError::Empty);
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(PathError::Repeated(v));
            }
        }
        Ok(VertexPath(vertices))
    }

    pub fn single(v: usize) -> Self {
        VertexPath(vec![v])
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn len_edges(&self) -> usize {
        self.0.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        VertexPath(v)
    }

    /// The same path, oriented to start at `end` (which must be an endpoint).
    pub fn oriented_from(&self, end: usize) -> Self {
        if self.first() == end {
            self.clone()
        } else {
            debug_assert_eq!(self.last(), end);
            self.reversed()
        }
    }

    /// Subpath between two vertices of the path (inclusive), in path order
    /// from `a` to `b` (reversing if needed).
    pub fn segment(&self, a: usize, b: usize) -> Self {
        let ia = self.0.iter().position(|&v| v == a).expect("segment endpoint on path");
        let ib = self.0.iter().position(|&v| v == b).expect("segment endpoint on path");
        let verts = if ia <= ib {
            self.0[ia..=ib].to_vec()
        } else {
            let mut v = self.0[ib..=ia].to_vec();
            v.reverse();
            v
        };
        VertexPath(verts)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        for &v in &self.0 {
            g.check_vertex(v)?;
        }
        for w in self.0.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(GraphError::MissingEdge(w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        Ok(())
    }
}

/// A simple cycle on at least three vertices, stored in canonical form:
/// smallest vertex first, second vertex smaller than the last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    pub fn new(vertices: Vec<usize>) -> Result<Self, PathError> {
        if vertices.len() < 3 {
            return Err(PathError::TooShort(vertices.len()));
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(PathError::Repeated(v));
            }
        }
        Ok(Cycle(canonical_rotation(vertices)))
    }

    /// Builds a cycle from path pieces laid end to end; consecutive pieces
    /// must share their junction vertex, and the last piece must return to
    /// the first one's start.
    pub fn stitch(pieces: &[VertexPath]) -> Result<Self, PathError> {
        let mut verts: Vec<usize> = Vec::new();
        for p in pieces {
            if let Some(&last) = verts.last() {
                assert_eq!(last, p.first(), "pieces must chain at shared junctions");
                verts.extend_from_slice(&p.vertices()[1..]);
            } else {
                verts.extend_from_slice(p.vertices());
            }
        }
        assert_eq!(verts.first(), verts.last(), "stitched pieces must close up");
        verts.pop();
        Cycle::new(verts)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.0.iter().copied().collect()
    }

    /// Consecutive pairs including the wraparound edge.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.0.len()).map(move |i| (self.0[i], self.0[(i + 1) % self.0.len()]))
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        for &v in &self.0 {
            g.check_vertex(v)?;
        }
        for (u, v) in self.edges() {
            if !g.has_edge(u, v) {
                return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
            }
        }
        Ok(())
    }

    /// The two arcs into which vertices `a` and `b` split the cycle, each
    /// returned as a path from `a` to `b`.
    pub fn split_at(&self, a: usize, b: usize) -> (VertexPath, VertexPath) {
        assert_ne!(a, b);
        let ia = self.0.iter().position(|&v| v == a).expect("split vertex on cycle");
        let ib = self.0.iter().position(|&v| v == b).expect("split vertex on cycle");
        let n = self.0.len();
        let mut arc1 = Vec::new();
        let mut i = ia;
        loop {
            arc1.push(self.0[i]);
            if i == ib {
                break;
            }
            i = (i + 1) % n;
        }
        let mut arc2 = Vec::new();
        let mut i = ia;
        loop {
            arc2.push(self.0[i]);
            if i == ib {
                break;
            }
            i = (i + n - 1) % n;
        }
        (VertexPath(arc1), VertexPath(arc2))
    }
}

fn canonical_rotation(mut verts: Vec<usize>) -> Vec<usize> {
    let min_pos = verts
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| *v)
        .map(|(i, _)| i)
        .unwrap();
    verts.rotate_left(min_pos);
    if verts[1] > *verts.last().unwrap() {
        verts[1..].reverse();
    }
    verts
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: bad token `{token}`")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected `u v`, got {count} tokens")]
    BadArity { line: usize, count: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {v} out of range (n = {n})")]
    OutOfRange { line: usize, v: usize, n: usize },
    #[error("graph6: byte {0:#x} out of range")]
    Graph6BadByte(u8),
    #[error("graph6: truncated input")]
    Graph6Truncated,
    #[error("graph6: graph too large")]
    Graph6TooLarge,
}

/// Parses either of the two accepted formats, auto-detected by the first
/// byte: edge lists start with a decimal vertex count, graph6 bytes are
/// all >= 63.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let first = text
        .bytes()
        .find(|b| !b.is_ascii_whitespace())
        .ok_or(ParseError::Empty)?;
    if first.is_ascii_digit() || first == b'#' {
        parse_edge_list(text)
    } else {
        parse_graph6(text)
    }
}

/// Edge-list format: first significant line is the vertex count, each
/// following non-empty, non-`#` line is one edge `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match &mut g {
            None => {
                if tokens.len() != 1 {
                    return Err(ParseError::BadArity { line, count: tokens.len() });
                }
                let n: usize = tokens[0]
                    .parse()
                    .map_err(|_| ParseError::BadToken { line, token: tokens[0].to_string() })?;
                g = Some(Graph::empty(n));
            }
            Some(g) => {
                if tokens.len() != 2 {
                    return Err(ParseError::BadArity { line, count: tokens.len() });
                }
                let mut uv = [0usize; 2];
                for (slot, tok) in uv.iter_mut().zip(&tokens) {
                    *slot = tok
                        .parse()
                        .map_err(|_| ParseError::BadToken { line, token: tok.to_string() })?;
                }
                let (u, v) = (uv[0], uv[1]);
                g.insert_edge(u, v).map_err(|e| match e {
                    GraphError::SelfLoop(v) => ParseError::SelfLoop { line, v },
                    GraphError::DuplicateEdge(u, v) => ParseError::DuplicateEdge { line, u, v },
                    GraphError::OutOfRange(v, n) => ParseError::OutOfRange { line, v, n },
                    GraphError::MissingEdge(..) => unreachable!(),
                })?;
            }
        }
    }
    g.ok_or(ParseError::Empty)
}

/// Canonical edge-list text: `parse_graph(write_graph(g)) == g`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

/// Header-less graph6, upper triangle in column order, 6 bits per byte.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes: Vec<u8> = text.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(ParseError::Graph6Truncated);
        }
        if bytes[1] == 126 {
            return Err(ParseError::Graph6TooLarge);
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(ParseError::Graph6BadByte(b));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        let b = bytes[0];
        if !(63..=125).contains(&b) {
            return Err(ParseError::Graph6BadByte(b));
        }
        ((b - 63) as usize, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(ParseError::Graph6Truncated);
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(ParseError::Graph6BadByte(byte));
            }
            let val = (byte - 63) >> (5 - bit % 6) & 1;
            if val == 1 {
                g.insert_edge(i, j).expect("triangle order never repeats a pair");
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    pos += nbytes;
    if bytes.len() > pos {
        return Err(ParseError::Graph6BadByte(bytes[pos]));
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        assert!(n <= 258_047, "graph6 size limit");
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(out).unwrap()
}

/// One block of the decomposition: either a bridge edge or a maximal
/// 2-connected subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub is_edge: bool,
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
}

/// Biconnected decomposition by iterative lowpoint DFS. Blocks partition
/// the edge set; isolated vertices belong to no block.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    const UNSET: usize = usize::MAX;
    let mut disc = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSET; n];
    let mut child_count = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        // (vertex, index into its adjacency list)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i < g.neighbors(u).len() {
                let w = g.neighbors(u)[*i];
                *i += 1;
                if disc[w] == UNSET {
                    parent[w] = u;
                    child_count[u] += 1;
                    edge_stack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, 0));
                } else if w != parent[u] && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        // p closes a block below it
                        let mut es = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            es.push(e);
                            if e == (p, u) {
                                break;
                            }
                        }
                        raw_blocks.push(es);
                        if parent[p] != UNSET || child_count[p] >= 2 {
                            is_cut[p] = true;
                        }
                    }
                }
            }
        }
    }

    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|mut es| {
            for e in &mut es {
                if e.0 > e.1 {
                    *e = (e.1, e.0);
                }
            }
            es.sort_unstable();
            let vertices: Vec<usize> = es
                .iter()
                .flat_map(|&(u, v)| [u, v])
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let is_edge = es.len() == 1;
            Block { vertices, edges: es, is_edge }
        })
        .collect();
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
    BlockDecomposition { blocks, cut_vertices }
}

/// What stops a graph from being 2-connected, when something does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "detail")]
pub enum ConnectivityDefect {
    TooFewVertices(usize),
    Disconnected,
    CutVertex(usize),
}

impl fmt::Display for ConnectivityDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectivityDefect::TooFewVertices(n) => write!(f, "only {n} vertices"),
            ConnectivityDefect::Disconnected => write!(f, "disconnected"),
            ConnectivityDefect::CutVertex(v) => write!(f, "cut vertex {v}"),
        }
    }
}

pub fn two_connectivity_defect(g: &Graph) -> Option<ConnectivityDefect> {
    if g.n() < 3 {
        return Some(ConnectivityDefect::TooFewVertices(g.n()));
    }
    if !g.is_connected() {
        return Some(ConnectivityDefect::Disconnected);
    }
    let dec = blocks(g);
    dec.cut_vertices.first().map(|&v| ConnectivityDefect::CutVertex(v))
}

pub fn is_two_connected(g: &Graph) -> bool {
    two_connectivity_defect(g).is_none()
}
