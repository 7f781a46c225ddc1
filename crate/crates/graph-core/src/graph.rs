use std::collections::VecDeque;
use std::fmt;

/// Girth of a graph: length of a shortest cycle, or `Infinite` for forests.
///
/// `Ord` puts every finite value below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { u: usize },
    DuplicateEdge { u: usize, v: usize },
    UnknownVertex { v: usize },
    UnknownEdge { index: usize },
    EndpointOutOfRange { u: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { u } => write!(f, "self-loop at vertex {u}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            GraphError::UnknownVertex { v } => write!(f, "unknown vertex id {v}"),
            GraphError::UnknownEdge { index } => write!(f, "unknown edge index {index}"),
            GraphError::EndpointOutOfRange { u, n } => {
                write!(f, "edge endpoint {u} out of range for {n} vertices")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// A simple undirected graph on dense 0-based vertex ids.
///
/// Edges are stored normalized (`u < v`); the position of an edge in the
/// list is its rank in the total order `≻` (later position = larger edge).
/// Values are immutable after construction; the edit operations return new
/// graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. The list order
    /// becomes the edge order. Rejects self-loops, duplicates and endpoints
    /// outside `0..n`.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in edge_list {
            if a >= n {
                return Err(GraphError::EndpointOutOfRange { u: a, n });
            }
            if b >= n {
                return Err(GraphError::EndpointOutOfRange { u: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { u: a });
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge { u: e.0, v: e.1 });
            }
            adj[a].push(b);
            adj[b].push(a);
            edges.push(e);
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge endpoints by order rank (0 = smallest edge).
    pub fn edge(&self, index: usize) -> Result<(usize, usize), GraphError> {
        self.edges
            .get(index)
            .copied()
            .ok_or(GraphError::UnknownEdge { index })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> Result<&[usize], GraphError> {
        self.adj
            .get(v)
            .map(|a| a.as_slice())
            .ok_or(GraphError::UnknownVertex { v })
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].contains(&b)
    }

    /// Rank of the edge `{a, b}` in the edge order, if present.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let e = (a.min(b), a.max(b));
        self.edges.iter().position(|&f| f == e)
    }

    /// Maximum vertex degree; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// BFS distances from `v` to every vertex (`None` = unreachable).
    pub fn bfs_distances(&self, v: usize) -> Result<Vec<Option<usize>>, GraphError> {
        if v >= self.n {
            return Err(GraphError::UnknownVertex { v });
        }
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest-path edge count between `v` and `w`; `None` when they lie in
    /// different components; `Some(0)` when `v == w`.
    pub fn distance(&self, v: usize, w: usize) -> Result<Option<usize>, GraphError> {
        if w >= self.n {
            return Err(GraphError::UnknownVertex { v: w });
        }
        Ok(self.bfs_distances(v)?[w])
    }

    /// Length of a shortest cycle via per-vertex BFS; `Infinite` when acyclic.
    pub fn girth(&self) -> Girth {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        // Non-tree edge: closed walk through s of this length
                        // contains a cycle no longer than it.
                        let c = dist[x] + dist[y] + 1;
                        if best.is_none_or(|b| c < b) {
                            best = Some(c);
                        }
                    }
                }
            }
        }
        match best {
            Some(g) => Girth::Finite(g),
            None => Girth::Infinite,
        }
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.component_count() == self.n
    }

    /// Removes one edge; surviving edges keep their relative order.
    pub fn delete_edge(&self, index: usize) -> Result<Graph, GraphError> {
        self.edge(index)?;
        let remaining: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(self.n, &remaining)
    }

    /// Contracts one edge: merges its endpoints, drops the resulting
    /// self-loop, and merges parallel edges into one (the earliest occurrence
    /// keeps its order position). Vertex ids above the removed endpoint shift
    /// down by one.
    pub fn contract_edge(&self, index: usize) -> Result<Graph, GraphError> {
        let (keep, gone) = self.edge(index)?;
        let relabel = |v: usize| -> usize {
            let v = if v == gone { keep } else { v };
            if v > gone {
                v - 1
            } else {
                v
            }
        };
        let mut seen = std::collections::HashSet::new();
        let mut edge_list = Vec::with_capacity(self.edges.len() - 1);
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i == index {
                continue;
            }
            let (a, b) = (relabel(a), relabel(b));
            if a == b {
                continue; // was parallel to the contracted edge
            }
            let e = (a.min(b), a.max(b));
            if seen.insert(e) {
                edge_list.push(e);
            }
        }
        Graph::new(self.n - 1, &edge_list)
    }

    /// Induced subgraph on `keep` (bool per vertex). Vertices are relabeled
    /// densely preserving id order; edges keep their relative order.
    pub fn induced(&self, keep: &[bool]) -> Graph {
        assert_eq!(keep.len(), self.n);
        let mut map = vec![usize::MAX; self.n];
        let mut m = 0;
        for v in 0..self.n {
            if keep[v] {
                map[v] = m;
                m += 1;
            }
        }
        let edge_list: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| keep[a] && keep[b])
            .map(|&(a, b)| (map[a], map[b]))
            .collect();
        Graph::new(m, &edge_list).expect("induced subgraph of a valid graph is valid")
    }

    /// Induced subgraph with one vertex removed.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::UnknownVertex { v });
        }
        let mut keep = vec![true; self.n];
        keep[v] = false;
        Ok(self.induced(&keep))
    }

    /// Same graph with the edge list permuted: `perm[i]` is the old index of
    /// the edge placed at new rank `i`.
    pub fn with_edge_order(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.edges.len() {
            return Err(GraphError::UnknownEdge { index: perm.len() });
        }
        let mut edge_list = Vec::with_capacity(perm.len());
        for &i in perm {
            edge_list.push(self.edge(i)?);
        }
        Graph::new(self.n, &edge_list)
    }
}
