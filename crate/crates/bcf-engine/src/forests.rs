//! Broken-circuit-free forest enumeration and the Whitney expansion.
//!
//! With edges processed in increasing order, a forest prefix dies exactly
//! when an edge arrives whose endpoints are already connected: including it
//! would close a cycle, and skipping it would leave the (unique, all-smaller)
//! path between its endpoints as a broken circuit. The DFS below branches
//! only while endpoints are disconnected, so its leaves are precisely the
//! BCF forests.

use graph_core::Graph;
use num_bigint::BigInt;

use crate::caps::{BcfError, EnumCaps};
use crate::poly::IntPoly;

/// An edge subset certified acyclic and broken-circuit-free under the
/// graph's edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestRecord {
    /// Edge order ranks, increasing.
    pub edges: Vec<usize>,
    /// Vertices covered by at least one edge (the support), increasing.
    pub vertex_support: Vec<usize>,
}

impl ForestRecord {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// Union-find over vertices with an undo stack (union by size, no path
/// compression so unions are reversible).
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    trail: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            trail: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Unions two roots; caller guarantees `ra != rb`.
    fn union_roots(&mut self, ra: usize, rb: usize) {
        let (small, big) = if self.size[ra] < self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.trail.push(small);
    }

    fn undo(&mut self) {
        let small = self.trail.pop().expect("undo without union");
        let big = self.parent[small];
        self.parent[small] = small;
        self.size[big] -= self.size[small];
    }
}

/// True iff the forest `tau` contains no broken circuit: no edge outside
/// `tau` with both endpoints in one tree of `tau` is larger than every edge
/// on its tau-path. Errors when `tau` is not acyclic.
pub fn is_bcf(g: &Graph, tau: &[usize]) -> Result<bool, BcfError> {
    let n = g.vertex_count();
    let mut dsu = Dsu::new(n);
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (neighbor, edge rank)
    let mut in_tau = vec![false; g.edge_count()];
    for &e in tau {
        let (a, b) = g.edge(e)?;
        let (ra, rb) = (dsu.find(a), dsu.find(b));
        if ra == rb {
            return Err(BcfError::CyclicSubset);
        }
        dsu.union_roots(ra, rb);
        adj[a].push((b, e));
        adj[b].push((a, e));
        in_tau[e] = true;
    }
    for (f, &used) in in_tau.iter().enumerate() {
        if used {
            continue;
        }
        let (x, y) = g.edge(f)?;
        if dsu.find(x) != dsu.find(y) {
            continue;
        }
        if f > path_max_rank(&adj, n, x, y) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest edge rank on the (unique) tau-path from `x` to `y`.
fn path_max_rank(adj: &[Vec<(usize, usize)>], n: usize, x: usize, y: usize) -> usize {
    // DFS carrying the running maximum; the path is unique in a forest.
    let mut stack = vec![(x, usize::MAX, 0usize)]; // (vertex, came_from, max_rank)
    let mut seen = vec![false; n];
    seen[x] = true;
    while let Some((v, from, max_rank)) = stack.pop() {
        for &(w, e) in &adj[v] {
            if w == from || seen[w] {
                continue;
            }
            let m = max_rank.max(e);
            if w == y {
                return m;
            }
            seen[w] = true;
            stack.push((w, v, m));
        }
    }
    unreachable!("endpoints were in the same component")
}

fn check_bcf_cap(g: &Graph, caps: &EnumCaps) -> Result<(), BcfError> {
    if g.edge_count() > caps.bcf_edges {
        return Err(BcfError::SizeCap {
            what: "bcf forest enumeration edge count",
            size: g.edge_count(),
            cap: caps.bcf_edges,
        });
    }
    Ok(())
}

/// All BCF forests of `g`, the empty forest first, in the deterministic
/// order of the pruned subset DFS (skip branch before include branch).
pub fn enumerate_bcf_forests(g: &Graph, caps: &EnumCaps) -> Result<Vec<ForestRecord>, BcfError> {
    check_bcf_cap(g, caps)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut dsu = Dsu::new(g.vertex_count());
    fn rec(
        g: &Graph,
        i: usize,
        dsu: &mut Dsu,
        current: &mut Vec<usize>,
        out: &mut Vec<ForestRecord>,
    ) {
        if i == g.edge_count() {
            let mut support: Vec<usize> = current
                .iter()
                .flat_map(|&e| {
                    let (a, b) = g.edge(e).unwrap();
                    [a, b]
                })
                .collect();
            support.sort_unstable();
            support.dedup();
            out.push(ForestRecord {
                edges: current.clone(),
                vertex_support: support,
            });
            return;
        }
        let (a, b) = g.edge(i).unwrap();
        let (ra, rb) = (dsu.find(a), dsu.find(b));
        if ra == rb {
            // including i closes a cycle; skipping it leaves a broken
            // circuit (the path edges all precede i) — dead branch
            return;
        }
        rec(g, i + 1, dsu, current, out);
        dsu.union_roots(ra, rb);
        current.push(i);
        rec(g, i + 1, dsu, current, out);
        current.pop();
        dsu.undo();
    }
    rec(g, 0, &mut dsu, &mut current, &mut out);
    Ok(out)
}

/// The forest generating function: coefficient of `z^k` counts BCF forests
/// with `k` edges. Order-free even though the forest sets are not.
pub fn forest_gf(g: &Graph, caps: &EnumCaps) -> Result<IntPoly, BcfError> {
    check_bcf_cap(g, caps)?;
    let mut counts = vec![0u64; g.edge_count() + 1];
    let mut dsu = Dsu::new(g.vertex_count());
    fn rec(g: &Graph, i: usize, k: usize, dsu: &mut Dsu, counts: &mut [u64]) {
        if i == g.edge_count() {
            counts[k] += 1;
            return;
        }
        let (a, b) = g.edge(i).unwrap();
        let (ra, rb) = (dsu.find(a), dsu.find(b));
        if ra == rb {
            return;
        }
        rec(g, i + 1, k, dsu, counts);
        dsu.union_roots(ra, rb);
        rec(g, i + 1, k + 1, dsu, counts);
        dsu.undo();
    }
    rec(g, 0, 0, &mut dsu, &mut counts);
    Ok(IntPoly::from_coeffs(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

/// Whitney expansion of the chromatic polynomial:
/// `P(q) = q^n F(-1/q)`, i.e. the coefficient of `q^(n-k)` is
/// `(-1)^k` times the number of BCF forests with `k` edges.
pub fn chromatic_whitney(g: &Graph, caps: &EnumCaps) -> Result<IntPoly, BcfError> {
    let f = forest_gf(g, caps)?;
    let n = g.vertex_count();
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for k in 0..=f.degree().unwrap_or(0) {
        let c = f.coeff(k);
        debug_assert!(k <= n);
        coeffs[n - k] = if k % 2 == 0 { c } else { -c };
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Number of spanning trees of `G|_R` that are broken-circuit-free under
/// the graph's edge order.
pub fn bcf_spanning_tree_count(g: &Graph, r: &[usize]) -> Result<u64, BcfError> {
    if r.len() < 2 {
        return Err(BcfError::SubsetTooSmall { size: r.len() });
    }
    let mut in_r = vec![false; g.vertex_count()];
    for &v in r {
        if v >= g.vertex_count() {
            return Err(BcfError::Graph(graph_core::GraphError::UnknownVertex { v }));
        }
        in_r[v] = true;
    }
    let edges_within: Vec<usize> = (0..g.edge_count())
        .filter(|&e| {
            let (a, b) = g.edge(e).unwrap();
            in_r[a] && in_r[b]
        })
        .collect();
    let k = r.len() - 1;
    let mut count = 0u64;
    let mut chosen = Vec::with_capacity(k);
    fn rec(
        g: &Graph,
        edges: &[usize],
        start: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        count: &mut u64,
    ) -> Result<(), BcfError> {
        if need == 0 {
            if spans_tree(g, chosen) && is_bcf(g, chosen)? {
                *count += 1;
            }
            return Ok(());
        }
        for i in start..edges.len() {
            if edges.len() - i < need {
                break;
            }
            chosen.push(edges[i]);
            rec(g, edges, i + 1, need - 1, chosen, count)?;
            chosen.pop();
        }
        Ok(())
    }
    fn spans_tree(g: &Graph, edges: &[usize]) -> bool {
        let mut dsu = Dsu::new(g.vertex_count());
        for &e in edges {
            let (a, b) = g.edge(e).unwrap();
            let (ra, rb) = (dsu.find(a), dsu.find(b));
            if ra == rb {
                return false;
            }
            dsu.union_roots(ra, rb);
        }
        true // |edges| = |R|-1 acyclic edges within R span R as one tree
    }
    rec(g, &edges_within, 0, k, &mut chosen, &mut count)?;
    Ok(count)
}

/// Penrose identity on the polymer `R`: the signed connected-spanning-
/// subgraph sum equals `(-1)^(|R|-1)` times the number of BCF spanning
/// trees of `G|_R`. Both sides computed by enumeration.
pub fn penrose_check(g: &Graph, r: &[usize]) -> Result<bool, BcfError> {
    let css = crate::polymer::css_signed_sum(g, r)?;
    let trees = bcf_spanning_tree_count(g, r)? as i64;
    let sign = if (r.len() - 1).is_multiple_of(2) { 1 } else { -1 };
    Ok(css == sign * trees)
}
