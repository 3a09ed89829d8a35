//! Finite simple connected graphs with a canonical edge order.
//!
//! Vertices are labelled `1..=n`. Edges are stored as pairs `(a, b)` with
//! `a < b`, sorted lexicographically; the position of an edge in that list is
//! its [`EdgeIndex`] and fixes the variable order of every ideal built from the
//! graph.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest edge count representable: every ideal uses `2 * |E|` variables
/// packed into a `u64`.
pub const MAX_EDGES: usize = 32;
/// Vertex sets are packed into a `u32`.
pub const MAX_VERTICES: usize = 32;
/// Cycle enumeration is exponential in the edge count.
pub const MAX_CYCLE_EDGES: usize = 12;
/// Largest vertex count accepted by [`connected_graph_catalog`].
pub const MAX_CATALOG_VERTICES: usize = 6;

/// Position of an edge in a graph's sorted edge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeIndex(pub usize);

/// A finite, simple, connected graph on the vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an arbitrary list of edges; endpoints may be given
    /// in either order.
    ///
    /// The only edgeless graph accepted is the single vertex (`n == 1`).
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidSize {
                value: 0,
                reason: "a graph needs at least one vertex",
            });
        }
        if n > MAX_VERTICES {
            return Err(Error::Guard {
                what: "vertex count",
                actual: n,
                limit: MAX_VERTICES,
            });
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for label in [a, b] {
                if label == 0 || label > n {
                    return Err(Error::LabelOutOfRange { label, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        if list.len() > MAX_EDGES {
            return Err(Error::Guard {
                what: "edge count",
                actual: list.len(),
                limit: MAX_EDGES,
            });
        }
        let g = Graph { n, edges: list };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of an edge. Panics if the index is out of range.
    pub fn edge(&self, e: EdgeIndex) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<EdgeIndex> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok().map(EdgeIndex)
    }

    pub fn edge_indices(&self) -> impl Iterator<Item = EdgeIndex> {
        (0..self.edges.len()).map(EdgeIndex)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Neighbour sets as bit masks; bit `u - 1` of entry `v - 1` is set when
    /// `{u, v}` is an edge.
    pub(crate) fn adjacency(&self) -> Vec<u32> {
        let mut adj = vec![0u32; self.n];
        for &(a, b) in &self.edges {
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        adj
    }

    fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let all = full_mask(self.n);
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == all
    }

    /// `|E| = n - 1` (the graph is connected by construction).
    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n
    }

    /// Every vertex has degree two.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && (1..=self.n).all(|v| self.degree(v) == 2)
    }

    /// An edge is a whisker when at least one endpoint has degree one.
    /// Panics if the index is out of range.
    pub fn is_whisker(&self, e: EdgeIndex) -> bool {
        self.free_vertex(e).is_some()
    }

    /// The degree-one endpoint of a whisker (the larger label if both are).
    pub fn free_vertex(&self, e: EdgeIndex) -> Option<usize> {
        let (a, b) = self.edge(e);
        if self.degree(b) == 1 {
            Some(b)
        } else if self.degree(a) == 1 {
            Some(a)
        } else {
            None
        }
    }
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl fmt::Display for Graph {
    /// Renders the edge-list text format, e.g. `3; 1 2; 2 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        for (a, b) in &self.edges {
            write!(f, "; {a} {b}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        parse_graph(s)
    }
}

/// Parses `<n>; <a> <b>; <a> <b>; ...`.
///
/// Segments may also be separated by newlines, so the same text works as a
/// file. Labels must already be `1..=n`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut segments = text.split([';', '\n']).map(str::trim).filter(|s| !s.is_empty());
    let head = segments
        .next()
        .ok_or_else(|| Error::Parse("missing vertex count".into()))?;
    let n = parse_number(head)?;
    let mut edges = Vec::new();
    for seg in segments {
        let fields: Vec<&str> = seg.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse(format!("expected `a b`, got `{seg}`")));
        }
        edges.push((parse_number(fields[0])?, parse_number(fields[1])?));
    }
    if edges.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    Graph::new(n, edges)
}

fn parse_number(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Parse(format!("`{s}` is not a non-negative integer")))
}

/// The path on vertices `1..=r+1` with edges `{i, i+1}`.
pub fn path_graph(r: usize) -> Result<Graph> {
    if r < 1 {
        return Err(Error::InvalidSize {
            value: r,
            reason: "a path needs at least one edge",
        });
    }
    Graph::new(r + 1, (1..=r).map(|i| (i, i + 1)))
}

/// The cycle on vertices `1..=r` with edges `{i, i+1}` and `{1, r}`.
pub fn cycle_graph(r: usize) -> Result<Graph> {
    if r < 3 {
        return Err(Error::InvalidSize {
            value: r,
            reason: "a cycle needs at least three edges",
        });
    }
    Graph::new(r, (1..r).map(|i| (i, i + 1)).chain([(1, r)]))
}

/// A connected subgraph together with its embedding into a parent graph.
///
/// The subgraph is relabelled `1..=k` preserving the order of the parent
/// labels, which keeps its edge list aligned with the parent's edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    graph: Graph,
    vertices: Vec<usize>,
    edge_map: Vec<EdgeIndex>,
}

impl Subgraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Parent labels of the subgraph's vertices, in order.
    pub fn parent_vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Parent edge index of each subgraph edge.
    pub fn edge_map(&self) -> &[EdgeIndex] {
        &self.edge_map
    }

    pub fn parent_edge(&self, e: EdgeIndex) -> EdgeIndex {
        self.edge_map[e.0]
    }

    /// Relabelling map: entry `v - 1` is the new label of parent vertex `v`,
    /// or `None` when the vertex was dropped.
    pub fn vertex_map(&self, parent_n: usize) -> Vec<Option<usize>> {
        let mut map = vec![None; parent_n];
        for (i, &v) in self.vertices.iter().enumerate() {
            map[v - 1] = Some(i + 1);
        }
        map
    }
}

/// The subgraph spanned by a set of edges, on exactly the vertices they touch.
pub fn edge_subgraph(g: &Graph, edges: &[EdgeIndex]) -> Result<Subgraph> {
    let mut edge_map = edges.to_vec();
    edge_map.sort_unstable();
    edge_map.dedup();
    if let Some(bad) = edge_map.iter().find(|e| e.0 >= g.n_edges()) {
        return Err(Error::EdgeOutOfRange {
            index: bad.0,
            edges: g.n_edges(),
        });
    }
    if edge_map.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    let mut vertices: Vec<usize> = edge_map
        .iter()
        .flat_map(|&e| {
            let (a, b) = g.edge(e);
            [a, b]
        })
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    let relabel = |v: usize| vertices.binary_search(&v).unwrap() + 1;
    let sub_edges: Vec<(usize, usize)> = edge_map
        .iter()
        .map(|&e| {
            let (a, b) = g.edge(e);
            (relabel(a), relabel(b))
        })
        .collect();
    let graph = Graph::new(vertices.len(), sub_edges)?;
    Ok(Subgraph {
        graph,
        vertices,
        edge_map,
    })
}

/// Removes one edge. A whisker's free vertex is removed with it and the
/// remaining vertices are compacted to `1..=n-1`; the returned [`Subgraph`]
/// carries the relabelling.
pub fn delete_edge(g: &Graph, e: EdgeIndex) -> Result<Subgraph> {
    if e.0 >= g.n_edges() {
        return Err(Error::EdgeOutOfRange {
            index: e.0,
            edges: g.n_edges(),
        });
    }
    if g.n_edges() == 1 {
        return Err(Error::Edgeless);
    }
    let rest: Vec<EdgeIndex> = g.edge_indices().filter(|&f| f != e).collect();
    edge_subgraph(g, &rest)
}

/// Connected components of `g` minus edge `e` that still have edges.
///
/// Usually this is the single graph returned by [`delete_edge`]; removing a
/// bridge that is not a whisker yields two components, and removing the only
/// edge yields none.
pub fn components_without_edge(g: &Graph, e: EdgeIndex) -> Result<Vec<Subgraph>> {
    if e.0 >= g.n_edges() {
        return Err(Error::EdgeOutOfRange {
            index: e.0,
            edges: g.n_edges(),
        });
    }
    let rest: Vec<EdgeIndex> = g.edge_indices().filter(|&f| f != e).collect();
    let mut assigned = vec![false; g.n_edges()];
    let mut parts = Vec::new();
    for &seed in &rest {
        if assigned[seed.0] {
            continue;
        }
        // Grow the vertex set reachable from the seed edge.
        let (a, _) = g.edge(seed);
        let mut reach = 1u32 << (a - 1);
        loop {
            let mut grown = reach;
            for &f in &rest {
                let (x, y) = g.edge(f);
                if grown >> (x - 1) & 1 == 1 || grown >> (y - 1) & 1 == 1 {
                    grown |= 1 << (x - 1) | 1 << (y - 1);
                }
            }
            if grown == reach {
                break;
            }
            reach = grown;
        }
        let part: Vec<EdgeIndex> = rest
            .iter()
            .copied()
            .filter(|&f| reach >> (g.edge(f).0 - 1) & 1 == 1)
            .collect();
        part.iter().for_each(|f| assigned[f.0] = true);
        parts.push(edge_subgraph(g, &part)?);
    }
    Ok(parts)
}

/// All simple cycles of `g`, each exactly once, ordered by length and then by
/// their parent edge-index lists.
///
/// Cycles are grown by backtracking from their smallest vertex, only through
/// larger vertices, and each is kept in one of its two orientations.
pub fn enumerate_cycles(g: &Graph) -> Result<Vec<Subgraph>> {
    if g.n_edges() > MAX_CYCLE_EDGES {
        return Err(Error::Guard {
            what: "edge count for cycle enumeration",
            actual: g.n_edges(),
            limit: MAX_CYCLE_EDGES,
        });
    }
    let adj = g.adjacency();
    let mut found: Vec<Vec<EdgeIndex>> = Vec::new();
    for start in 0..g.n {
        let mut path = vec![start];
        extend_cycles(g, &adj, start, 1u32 << start, &mut path, &mut found);
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found.iter().map(|edges| edge_subgraph(g, edges)).collect()
}

fn extend_cycles(
    g: &Graph,
    adj: &[u32],
    start: usize,
    visited: u32,
    path: &mut Vec<usize>,
    found: &mut Vec<Vec<EdgeIndex>>,
) {
    let v = *path.last().unwrap();
    let mut next = adj[v];
    while next != 0 {
        let u = next.trailing_zeros() as usize;
        next &= next - 1;
        if u == start {
            if path.len() >= 3 && path[1] < path[path.len() - 1] {
                let mut edges: Vec<EdgeIndex> = path
                    .windows(2)
                    .map(|w| g.edge_index(w[0] + 1, w[1] + 1).unwrap())
                    .collect();
                edges.push(g.edge_index(v + 1, start + 1).unwrap());
                edges.sort_unstable();
                found.push(edges);
            }
        } else if u > start && visited & (1 << u) == 0 {
            path.push(u);
            extend_cycles(g, adj, start, visited | (1 << u), path, found);
            path.pop();
        }
    }
}

/// Streams every labelled connected simple graph on exactly `n` vertices for
/// `n = 1..=n_max`: by vertex count, then by the edge subset read as a binary
/// number over the pairs `(1,2), (1,3), ..., (n-1,n)`.
pub fn connected_graph_catalog(n_max: usize) -> Result<Catalog> {
    if !(1..=MAX_CATALOG_VERTICES).contains(&n_max) {
        return Err(Error::InvalidSize {
            value: n_max,
            reason: "catalog size must be in 1..=6",
        });
    }
    Ok(Catalog {
        n: 1,
        n_max,
        pairs: Vec::new(),
        mask: 0,
    })
}

/// Iterator returned by [`connected_graph_catalog`].
#[derive(Clone, Debug)]
pub struct Catalog {
    n: usize,
    n_max: usize,
    pairs: Vec<(usize, usize)>,
    mask: u64,
}

impl Iterator for Catalog {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if self.n > self.n_max {
                return None;
            }
            if self.mask >> self.pairs.len() != 0 {
                self.n += 1;
                self.mask = 0;
                self.pairs = (1..=self.n)
                    .flat_map(|a| (a + 1..=self.n).map(move |b| (a, b)))
                    .collect();
                continue;
            }
            let mask = self.mask;
            self.mask += 1;
            let edges = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p);
            if let Ok(g) = Graph::new(self.n, edges) {
                return Some(g);
            }
        }
    }
}
