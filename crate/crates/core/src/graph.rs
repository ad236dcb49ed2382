//! Immutable simple undirected graphs, edge-list ingestion and BFS machinery.
//!
//! Vertices are dense ids `0..n`. Neighbor lists are kept sorted ascending, so
//! every traversal in this crate (and therefore every construction trace) is
//! deterministic.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed line {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: endpoint {vertex} out of range for n = {n}")]
    EndpointOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("seed set is empty")]
    EmptySeedSet,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),
}

/// Length of a shortest path, or `Infinite` between different components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
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
            Distance::Infinite => write!(f, "infinite"),
        }
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted `(u, v)` pairs with `u < v`; the position is the edge id.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            let line = i + 1;
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::EndpointOutOfRange { line, vertex: w, n });
                }
            }
            list.push((u.min(v), u.max(v), line));
        }
        list.sort_unstable();
        for pair in list.windows(2) {
            if pair[0].0 == pair[1].0 && pair[0].1 == pair[1].1 {
                let line = pair[0].2.max(pair[1].2);
                return Err(GraphError::DuplicateEdge { line, u: pair[0].0, v: pair[0].1 });
            }
        }
        Ok(Self::from_sorted_unique(n, list.into_iter().map(|(u, v, _)| (u, v)).collect()))
    }

    fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_sorted_unique(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Self::from_sorted_unique(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Self::from_sorted_unique(n, edges)
    }

    pub fn star(leaves: usize) -> Self {
        Self::from_sorted_unique(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    /// The Petersen graph: outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::new(10, edges).expect("petersen edges are simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Minimum degree; zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Id of edge `{u, v}` (position in [`Graph::edges`]).
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Same vertex set with the given edge ids removed.
    pub fn without_edges(&self, removed: &[usize]) -> Graph {
        let mut drop = vec![false; self.m()];
        for &e in removed {
            drop[e] = true;
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop[*i])
            .map(|(_, &e)| e)
            .collect();
        Self::from_sorted_unique(self.n, edges)
    }

    /// Same vertex set with one extra edge; `None` if it is a loop or already present.
    pub fn with_edge(&self, u: usize, v: usize) -> Option<Graph> {
        if u == v || u >= self.n || v >= self.n || self.has_edge(u, v) {
            return None;
        }
        let mut edges = self.edges.clone();
        let e = (u.min(v), u.max(v));
        let pos = edges.binary_search(&e).unwrap_err();
        edges.insert(pos, e);
        Some(Self::from_sorted_unique(self.n, edges))
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Single-source BFS distances.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        self.multi_source_distances(&[source])
    }

    fn multi_source_distances(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Whether the subgraph induced by `set` is connected (empty counts as connected).
    pub fn induced_is_connected(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return true;
        };
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == inside.iter().filter(|&&b| b).count()
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Multi-source BFS layers `N^0(D) .. N^3(D)` plus the remainder.
    pub fn bfs_layers(&self, seeds: &[usize]) -> Result<LayerDecomposition, GraphError> {
        if seeds.is_empty() {
            return Err(GraphError::EmptySeedSet);
        }
        if let Some(&bad) = seeds.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::UnknownVertex(bad));
        }
        let dist = self.multi_source_distances(seeds);
        let mut layers: [Vec<usize>; 4] = Default::default();
        let mut remainder = Vec::new();
        for (v, d) in dist.iter().enumerate() {
            match d {
                Some(d) if *d < 4 => layers[*d].push(v),
                _ => remainder.push(v),
            }
        }
        Ok(LayerDecomposition { layers, remainder, dist })
    }

    /// Largest eccentricity; `Infinite` when disconnected.
    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Distance::Infinite,
                }
            }
        }
        Distance::Finite(best)
    }

    pub fn distance(&self, u: usize, v: usize) -> Distance {
        match self.bfs_distances(u)[v] {
            Some(d) => Distance::Finite(d),
            None => Distance::Infinite,
        }
    }

    /// Members of `set` that have degree one.
    pub fn pendant_vertices(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().copied().filter(|&v| self.degree(v) == 1).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `e(X, Y)`: edges with one end in `x` and the other in `y`.
    pub fn edge_count_between(&self, x: &[usize], y: &[usize]) -> Result<usize, GraphError> {
        let mut in_y = vec![false; self.n];
        for &v in y {
            in_y[v] = true;
        }
        if let Some(&v) = x.iter().find(|&&v| in_y[v]) {
            return Err(GraphError::OverlappingSets(v));
        }
        let mut in_x = vec![false; self.n];
        for &v in x {
            in_x[v] = true;
        }
        Ok(self.edges.iter().filter(|&&(u, v)| (in_x[u] && in_y[v]) || (in_x[v] && in_y[u])).count())
    }

    /// Deterministic shortest path from `source` to `target` (smallest-id parents).
    pub fn shortest_path(&self, source: usize, target: usize) -> Option<Vec<usize>> {
        let dist = self.bfs_distances(target);
        dist[source]?;
        let mut path = vec![source];
        let mut cur = source;
        while cur != target {
            let d = dist[cur].unwrap();
            cur = *self.adj[cur].iter().find(|&&w| dist[w] == Some(d - 1)).unwrap();
            path.push(cur);
        }
        Some(path)
    }

    /// Serializes to the edge-list format with a `p n m` header.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {} {}\n", self.n, self.m());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses the edge-list format: `# comment`, blank lines, an optional leading
/// `p <n> <m>` header and `<u> <v>` lines.
pub fn load_graph(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut seen_content = false;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || GraphError::Malformed { line, text: raw.to_string() };
        let fields: Vec<&str> = trimmed.split(' ').collect();
        if fields[0] == "p" {
            if seen_content || fields.len() != 3 {
                return Err(malformed());
            }
            let n = fields[1].parse().map_err(|_| malformed())?;
            let m = fields[2].parse().map_err(|_| malformed())?;
            header = Some((n, m));
            seen_content = true;
            continue;
        }
        seen_content = true;
        if fields.len() != 2 {
            return Err(malformed());
        }
        let u: usize = fields[0].parse().map_err(|_| malformed())?;
        let v: usize = fields[1].parse().map_err(|_| malformed())?;
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if let Some((n, _)) = header {
            if let Some(w) = [u, v].into_iter().find(|&w| w >= n) {
                return Err(GraphError::EndpointOutOfRange { line, vertex: w, n });
            }
        }
        edges.push((u.min(v), u.max(v), line));
    }
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&i| (edges[i].0, edges[i].1, edges[i].2));
    for pair in order.windows(2) {
        let (a, b) = (edges[pair[0]], edges[pair[1]]);
        if a.0 == b.0 && a.1 == b.1 {
            return Err(GraphError::DuplicateEdge { line: b.2, u: b.0, v: b.1 });
        }
    }
    let n = match header {
        Some((n, m)) => {
            if m != edges.len() {
                return Err(GraphError::EdgeCountMismatch { declared: m, found: edges.len() });
            }
            n
        }
        None => edges.iter().map(|e| e.1 + 1).max().unwrap_or(0),
    };
    let mut sorted: Vec<(usize, usize)> = edges.iter().map(|e| (e.0, e.1)).collect();
    sorted.sort_unstable();
    Ok(Graph::from_sorted_unique(n, sorted))
}

/// Distance layers of a seed set `D`: `layers[k]` is `N^k(D)` for `k < 4`,
/// `remainder` holds everything at distance four or more (or unreachable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    layers: [Vec<usize>; 4],
    remainder: Vec<usize>,
    dist: Vec<Option<usize>>,
}

impl LayerDecomposition {
    pub fn layer(&self, k: usize) -> &[usize] {
        &self.layers[k]
    }

    pub fn seeds(&self) -> &[usize] {
        &self.layers[0]
    }

    pub fn remainder(&self) -> &[usize] {
        &self.remainder
    }

    /// `d(v, D)`, `None` if unreachable.
    pub fn distance(&self, v: usize) -> Option<usize> {
        self.dist[v]
    }

    /// Vertices at distance three or more from the seeds (including unreachable ones).
    pub fn beyond_two(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.layers[3].iter().chain(&self.remainder).copied().collect();
        out.sort_unstable();
        out
    }

    /// Every vertex lies within distance two of the seeds.
    pub fn is_two_step_dominated(&self) -> bool {
        self.layers[3].is_empty() && self.remainder.is_empty()
    }

    /// Smallest-id neighbor one layer closer to the seeds.
    pub fn parent(&self, g: &Graph, v: usize) -> Option<usize> {
        let d = self.dist[v]?;
        if d == 0 {
            return None;
        }
        g.neighbors(v).iter().copied().find(|&w| self.dist[w] == Some(d - 1))
    }

    /// Deterministic shortest path from `v` down to the seed set (inclusive of both ends).
    pub fn path_to_seeds(&self, g: &Graph, v: usize) -> Option<Vec<usize>> {
        self.dist[v]?;
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent(g, cur) {
            path.push(p);
            cur = p;
        }
        Some(path)
    }

    /// `e(v, N^1(D))` for a vertex `v`.
    pub fn neighbors_in_layer(&self, g: &Graph, v: usize, k: usize) -> usize {
        g.neighbors(v).iter().filter(|&&w| self.dist[w] == Some(k)).count()
    }
}

/// A path given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWitness {
    vertices: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("path is empty")]
    Empty,
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {0} repeats")]
    RepeatedVertex(usize),
}

impl PathWitness {
    pub fn new(vertices: Vec<usize>) -> Self {
        PathWitness { vertices }
    }

    /// Chronological loop erasure of a walk; the result uses a subset of the walk's edges.
    pub fn from_walk(walk: &[usize]) -> Self {
        let mut path: Vec<usize> = Vec::with_capacity(walk.len());
        for &v in walk {
            if let Some(pos) = path.iter().position(|&w| w == v) {
                path.truncate(pos + 1);
            } else {
                path.push(v);
            }
        }
        PathWitness { vertices: path }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn internal(&self) -> &[usize] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn endpoints(&self) -> Option<(usize, usize)> {
        Some((*self.vertices.first()?, *self.vertices.last()?))
    }

    /// Checks adjacency of consecutive vertices and absence of repeats.
    pub fn validate(&self, g: &Graph) -> Result<(), PathError> {
        if self.vertices.is_empty() {
            return Err(PathError::Empty);
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.vertices {
            if v >= g.n() || seen[v] {
                return Err(PathError::RepeatedVertex(v));
            }
            seen[v] = true;
        }
        for (u, v) in self.edges() {
            if !g.has_edge(u, v) {
                return Err(PathError::NotAdjacent(u, v));
            }
        }
        Ok(())
    }
}

/// BFS spanning tree of `g[set]` rooted at the smallest member; parents are
/// smallest-id. Used for the tree paths through a dominating set.
#[derive(Debug, Clone)]
pub struct InducedTree {
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    /// Tree edges in BFS discovery order, as `(parent, child)`.
    order: Vec<(usize, usize)>,
    members: Vec<bool>,
}

impl InducedTree {
    /// `None` when `set` is empty or does not induce a connected subgraph.
    pub fn new(g: &Graph, set: &[usize]) -> Option<Self> {
        let root = *set.iter().min()?;
        let mut members = vec![false; g.n()];
        for &v in set {
            members[v] = true;
        }
        let mut parent = vec![None; g.n()];
        let mut depth = vec![0; g.n()];
        let mut seen = vec![false; g.n()];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if members[w] && !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    depth[w] = depth[u] + 1;
                    order.push((u, w));
                    queue.push_back(w);
                }
            }
        }
        let size = members.iter().filter(|&&b| b).count();
        (order.len() + 1 == size).then_some(InducedTree { root, parent, depth, order, members })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.get(v).copied().unwrap_or(false)
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.order
    }

    /// The unique tree path from `a` to `b`.
    pub fn path(&self, a: usize, b: usize) -> Vec<usize> {
        let (mut x, mut y) = (a, b);
        let mut left = vec![x];
        let mut right = vec![y];
        while self.depth[x] > self.depth[y] {
            x = self.parent[x].unwrap();
            left.push(x);
        }
        while self.depth[y] > self.depth[x] {
            y = self.parent[y].unwrap();
            right.push(y);
        }
        while x != y {
            x = self.parent[x].unwrap();
            y = self.parent[y].unwrap();
            left.push(x);
            right.push(y);
        }
        right.pop();
        left.extend(right.into_iter().rev());
        left
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_path() {
        let g = load_graph("0 1\n1 2\n2 3").unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
    }

    #[test]
    fn rejects_duplicate_in_either_orientation() {
        assert_eq!(
            load_graph("0 1\n1 0").unwrap_err(),
            GraphError::DuplicateEdge { line: 2, u: 0, v: 1 }
        );
    }

    #[test]
    fn rejects_self_loop() {
        assert!(matches!(load_graph("0 0"), Err(GraphError::SelfLoop { line: 1, vertex: 0 })));
    }

    #[test]
    fn header_overrides_vertex_count() {
        let g = load_graph("# two isolated extras\np 5 1\n0 1\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(
            load_graph("p 2 1\n0 2").unwrap_err(),
            GraphError::EndpointOutOfRange { line: 2, vertex: 2, n: 2 }
        );
        assert!(matches!(load_graph("0 1\np 2 1"), Err(GraphError::Malformed { line: 2, .. })));
        assert!(matches!(load_graph("0  1"), Err(GraphError::Malformed { .. })));
        assert!(matches!(load_graph("0 x"), Err(GraphError::Malformed { .. })));
    }

    #[test]
    fn layers_on_small_graphs() {
        let p4 = Graph::path(4);
        let l = p4.bfs_layers(&[0]).unwrap();
        for k in 0..4 {
            assert_eq!(l.layer(k), &[k]);
        }
        assert!(l.remainder().is_empty());

        let c5 = Graph::cycle(5);
        let l = c5.bfs_layers(&[0]).unwrap();
        assert_eq!(l.layer(1), &[1, 4]);
        assert_eq!(l.layer(2), &[2, 3]);
        assert!(l.layer(3).is_empty());

        let pet = Graph::petersen();
        let l = pet.bfs_layers(&[0]).unwrap();
        assert_eq!((l.layer(1).len(), l.layer(2).len(), l.layer(3).len()), (3, 6, 0));

        assert_eq!(p4.bfs_layers(&[]).unwrap_err(), GraphError::EmptySeedSet);
    }

    #[test]
    fn diameters() {
        assert_eq!(Graph::path(4).diameter(), Distance::Finite(3));
        assert_eq!(Graph::empty(2).diameter(), Distance::Infinite);
        assert_eq!(Graph::petersen().diameter(), Distance::Finite(2));
    }

    #[test]
    fn pendants_and_cross_edges() {
        let p4 = Graph::path(4);
        assert_eq!(p4.pendant_vertices(&[0, 1, 2, 3]), vec![0, 3]);
        assert!(Graph::cycle(5).pendant_vertices(&[0, 1, 2, 3, 4]).is_empty());
        assert_eq!(p4.edge_count_between(&[0], &[1]).unwrap(), 1);
        assert_eq!(p4.edge_count_between(&[0], &[2, 3]).unwrap(), 0);
        assert_eq!(p4.edge_count_between(&[0, 1], &[1]), Err(GraphError::OverlappingSets(1)));
    }

    #[test]
    fn loop_erasure_and_tree_paths() {
        let w = PathWitness::from_walk(&[0, 1, 2, 1, 3]);
        assert_eq!(w.vertices(), &[0, 1, 3]);
        let p = Graph::path(5);
        let t = InducedTree::new(&p, &[1, 2, 3]).unwrap();
        assert_eq!(t.path(3, 1), vec![3, 2, 1]);
        assert!(InducedTree::new(&p, &[0, 2]).is_none());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::petersen();
        assert_eq!(load_graph(&g.to_edge_list()).unwrap(), g);
    }
}
