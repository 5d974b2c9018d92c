//! Immutable simple undirected graphs over bitset adjacency.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {} is out of range for a graph on {n} vertices", .vertex + 1)]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {}", .0 + 1)]
    SelfLoop(usize),
    #[error("edge {}-{} already present", .0 + 1, .1 + 1)]
    DuplicateEdge(usize, usize),
    #[error("edge {}-{} not present", .0 + 1, .1 + 1)]
    MissingEdge(usize, usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Vertices are 0-based internally; [`Graph::label`] renders the 1-based
/// names used in all user-facing output unless explicit labels were given.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Distance between two vertices, or the diameter of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Cheap structural facts used by the shortcut screens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralQueries {
    pub max_degree: usize,
    pub is_connected: bool,
    pub is_tree: bool,
    pub is_unicyclic: bool,
    pub is_cactus: bool,
    /// `|E| - |V| + #components`.
    pub cycle_count: usize,
    pub cut_vertices: VertexSet,
    pub is_path: bool,
    pub is_complete: bool,
    pub has_isolated_vertex: bool,
    pub pendant_vertices: VertexSet,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![VertexSet::new(n); n], labels: None }
    }

    /// Builds a graph from 0-based edges. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds a graph from an adjacency predicate over unordered pairs.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![VertexSet::new(n); n];
        for v in 0..n {
            for u in 0..v {
                if adjacent(u, v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount { expected: self.n(), got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.universe() != self.n() {
            // members beyond n would be out of range; members below are fine
            if let Some(v) = s.iter().find(|&v| v >= self.n()) {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
            }
        }
        Ok(())
    }

    /// Open neighborhood `N(S)`; may intersect `S`.
    pub fn neighborhood(&self, s: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(s)?;
        let mut out = VertexSet::new(self.n());
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        Ok(out)
    }

    /// Closed neighborhood `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> Result<VertexSet, GraphError> {
        let mut out = self.neighborhood(s)?;
        for v in s.iter() {
            out.insert(v);
        }
        Ok(out)
    }

    /// Connected components, each as a vertex set, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let comp = self.reach(start, &VertexSet::new(n));
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Components of `G - removed`, as sets in the original vertex ids.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = removed.clone();
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let comp = self.reach(start, removed);
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    fn reach(&self, start: usize, blocked: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(self.n(), start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in self.adj[v].iter() {
                if !comp.contains(u) && !blocked.contains(u) {
                    comp.insert(u);
                    stack.push(u);
                }
            }
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.reach(0, &VertexSet::new(self.n())).len() == self.n()
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in self.adj[v].iter() {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// A shortest path from `a` to `b` (inclusive), preferring smaller
    /// vertex ids at each BFS step.
    pub fn shortest_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n()];
        parent[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                break;
            }
            for u in self.adj[v].iter() {
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        if parent[b] == usize::MAX {
            return None;
        }
        let mut path = vec![b];
        let mut v = b;
        while v != a {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }

    /// Longest shortest-path distance. The empty graph has diameter 0;
    /// any disconnected graph has infinite diameter.
    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.distances_from(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Distance::Infinite,
                }
            }
        }
        Distance::Finite(best)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n()).all(|v| self.degree(v) + 1 == self.n())
    }

    /// Connected, acyclic and maximum degree at most two.
    pub fn is_path(&self) -> bool {
        self.is_connected() && self.m() + 1 == self.n() && self.max_degree() <= 2
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n()).any(|v| self.degree(v) == 0)
    }

    pub fn pendant_vertices(&self) -> VertexSet {
        VertexSet::from_members(self.n(), (0..self.n()).filter(|&v| self.degree(v) == 1))
    }

    /// Biconnected components as edge lists, plus the cut vertices.
    pub fn blocks(&self) -> (Vec<Vec<(usize, usize)>>, VertexSet) {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut cut = VertexSet::new(n);
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut timer = 0;
        let neighbors: Vec<Vec<usize>> = (0..n).map(|v| self.adj[v].iter().collect()).collect();

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
                if *next < neighbors[v].len() {
                    let u = neighbors[v][*next];
                    *next += 1;
                    if disc[u] == usize::MAX {
                        edge_stack.push((v, u));
                        disc[u] = timer;
                        low[u] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((u, v, 0));
                    } else if u != parent && disc[u] < disc[v] {
                        edge_stack.push((v, u));
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            if p != root {
                                cut.insert(p);
                            }
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == (p, v) {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children > 1 {
                cut.insert(root);
            }
        }
        (blocks, cut)
    }

    pub fn structural_queries(&self) -> StructuralQueries {
        let n = self.n();
        let m = self.m();
        let components = self.components().len();
        let is_connected = components == 1;
        let (blocks, cut_vertices) = self.blocks();
        let is_cactus = is_connected
            && blocks.iter().all(|block| {
                let mut verts = VertexSet::new(n);
                for &(u, v) in block {
                    verts.insert(u);
                    verts.insert(v);
                }
                block.len() <= verts.len()
            });
        StructuralQueries {
            max_degree: self.max_degree(),
            is_connected,
            is_tree: is_connected && m + 1 == n,
            is_unicyclic: is_connected && m == n,
            is_cactus,
            cycle_count: (m + components).saturating_sub(n),
            cut_vertices,
            is_path: self.is_path(),
            is_complete: self.is_complete(),
            has_isolated_vertex: self.has_isolated_vertex(),
            pendant_vertices: self.pendant_vertices(),
        }
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("permutation of a valid graph")
    }

    /// Induced subgraph on `keep`, with vertices renumbered in increasing order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let index: Vec<Option<usize>> = {
            let mut next = 0;
            (0..self.n())
                .map(|v| {
                    keep.contains(v).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        };
        let k = keep.len();
        let edges = self.edges().filter_map(|(u, v)| Some((index[u]?, index[v]?)));
        let mut g = Graph::from_edges(k, edges).expect("induced subgraph is simple");
        if let Some(labels) = &self.labels {
            g.labels = Some(keep.iter().map(|v| labels[v].clone()).collect());
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
        write!(f, "Graph(n={}, [{}])", self.n(), edges.join(" "))
    }
}

/// Standard named graphs.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    /// `C_n` for `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_fn(a + b, |u, v| (u < a) != (v < a))
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Graph {
        complete_bipartite(1, k)
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// `L_{n,l}`: `K_n` on `0..n` with a path of `l` vertices hanging off vertex `n-1`.
    pub fn lollipop(n: usize, l: usize) -> Graph {
        let clique = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let tail = (0..l).map(|i| if i == 0 { (n - 1, n) } else { (n + i - 1, n + i) });
        Graph::from_edges(n + l, clique.chain(tail)).unwrap()
    }

    /// Disjoint union, with `h`'s vertices shifted after `g`'s.
    pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
        let k = g.n();
        Graph::from_edges(k + h.n(), g.edges().chain(h.edges().map(|(u, v)| (u + k, v + k)))).unwrap()
    }

    /// `C_4` plus two pendant vertices on opposite cycle vertices.
    pub fn c4_with_opposite_pendants() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]).unwrap()
    }
}
