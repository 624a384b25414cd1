//! Simple undirected graphs on `0..n` and the standard generators.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seed::Seed;

pub type Vertex = u32;
pub type EdgeId = u32;

/// Unordered vertex pair stored as `(min, max)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// Panics on a self-loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        Self::try_new(a, b).expect("self-loop")
    }

    pub fn try_new(a: Vertex, b: Vertex) -> Result<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge(a, b)),
            std::cmp::Ordering::Greater => Ok(Edge(b, a)),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn u(self) -> Vertex {
        self.0
    }

    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn contains(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`. Assumes `x` is an endpoint.
    pub fn other(self, x: Vertex) -> Vertex {
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Length of a shortest cycle; `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Girth::Finite(x) => x >= g,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Undirected simple graph. Immutable once built.
///
/// Edges are kept sorted in canonical order, so an [`EdgeId`] is the edge's
/// rank in that order and is stable across runs.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    index: HashMap<Edge, EdgeId>,
    bipartition: Option<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .field("bipartition", &self.bipartition)
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges && self.bipartition == other.bipartition
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x as usize >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            list.push(Edge::try_new(a, b)?);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].u(), w[0].v()));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        let mut index = HashMap::with_capacity(edges.len());
        for (id, e) in edges.iter().enumerate() {
            let id = id as EdgeId;
            adj[e.u() as usize].push((e.v(), id));
            adj[e.v() as usize].push((e.u(), id));
            index.insert(*e, id);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj, index, bipartition: None }
    }

    /// Empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        Self::from_edges(n, std::iter::empty())
    }

    /// Tags vertices `0..x` as one class and `x..x+y` as the other.
    pub fn with_bipartition(mut self, x: usize, y: usize) -> Result<Graph> {
        if x + y != self.n {
            return Err(Error::invalid(format!("bipartition {x}+{y} != {}", self.n)));
        }
        let crosses = |v: Vertex| (v as usize) < x;
        if let Some(e) = self.edges.iter().find(|e| crosses(e.u()) == crosses(e.v())) {
            return Err(Error::invalid(format!("edge {e} lies inside a class")));
        }
        self.bipartition = Some((x, y));
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id as usize]
    }

    pub fn edge_id(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        let e = Edge::try_new(a, b).ok()?;
        self.index.get(&e).copied()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_id(a, b).is_some()
    }

    /// Neighbours of `v` with the connecting edge id, sorted by neighbour.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n as Vertex
    }

    /// Class sizes `(|X|, |Y|)` when the graph was built as bipartite.
    pub fn bipartition(&self) -> Option<(usize, usize)> {
        self.bipartition
    }

    /// `true` for `X`, `false` for `Y`. `None` if no bipartition is recorded.
    pub fn in_first_class(&self, v: Vertex) -> Option<bool> {
        self.bipartition.map(|(x, _)| (v as usize) < x)
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Same vertex set, complementary edge set. Bipartition tags are dropped.
    pub fn complement(&self) -> Graph {
        let n = self.n as Vertex;
        let mut edges = Vec::with_capacity(self.n * (self.n - 1) / 2 - self.m());
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push(Edge(u, v));
                }
            }
        }
        Self::from_sorted(self.n, edges)
    }

    /// Shortest cycle length by a BFS from every vertex, `O(n * m)`.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![u32::MAX; self.n];
        let mut parent_edge = vec![EdgeId::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            parent_edge.iter_mut().for_each(|e| *e = EdgeId::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root as Vertex);
            while let Some(u) = queue.pop_front() {
                let du = dist[u as usize];
                // any cycle closed from here on has length at least 2*du
                if 2 * du as usize >= best {
                    break;
                }
                for &(w, id) in &self.adj[u as usize] {
                    if id == parent_edge[u as usize] {
                        continue;
                    }
                    let dw = dist[w as usize];
                    if dw == u32::MAX {
                        dist[w as usize] = du + 1;
                        parent_edge[w as usize] = id;
                        queue.push_back(w);
                    } else {
                        best = best.min((du + dw + 1) as usize);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0 as Vertex];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(w, _) in &self.adj[u as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let n32 = n as Vertex;
    let edges = (0..n32).flat_map(|u| (u + 1..n32).map(move |v| Edge(u, v))).collect();
    Ok(Graph::from_sorted(n, edges))
}

/// `K_{m,n}` with `X = 0..m` and `Y = m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::invalid("complete bipartite graph needs two non-empty classes"));
    }
    let (m32, n32) = (m as Vertex, n as Vertex);
    let edges = (0..m32).flat_map(|x| (m32..m32 + n32).map(move |y| Edge(x, y))).collect();
    let mut g = Graph::from_sorted(m + n, edges);
    g.bipartition = Some((m, n));
    Ok(g)
}

/// `G(n, p)`: each pair, in canonical order, is kept when a uniform draw falls below `p`.
pub fn gnp_random(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("edge probability {p} outside [0, 1]")));
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = seed.rng();
    let n32 = n as Vertex;
    let mut edges = Vec::new();
    for u in 0..n32 {
        for v in u + 1..n32 {
            if rng.random::<f64>() < p {
                edges.push(Edge(u, v));
            }
        }
    }
    Ok(Graph::from_sorted(n, edges))
}

/// Cycle `0-1-..-(n-1)-0`; `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("cycle needs at least 3 vertices"));
    }
    let n32 = n as Vertex;
    Graph::from_edges(n, (0..n32).map(|i| (i, (i + 1) % n32)))
}

/// Path `0-1-..-(n-1)`.
pub fn path_graph(n: usize) -> Result<Graph> {
    let n32 = n as Vertex;
    Graph::from_edges(n, (1..n32).map(|i| (i - 1, i)))
}
