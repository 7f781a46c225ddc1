//! Exact chromatic polynomial by deletion–contraction.
//!
//! The recursion keys its memo table on a relabeled edge list: vertices are
//! renamed by (iterative-refinement color, original id) and edges sorted, so
//! equal keys are genuinely isomorphic graphs (the key *is* a labeled graph)
//! while the refinement makes isomorphic graphs from different recursion
//! paths usually agree. Misses only cost recomputation, never correctness.

use std::collections::HashMap;

use graph_core::Graph;
use num_bigint::BigInt;

use crate::caps::{BcfError, EnumCaps};
use crate::poly::IntPoly;

type Key = (usize, Vec<(u16, u16)>);

/// Exact chromatic polynomial of `g`. Degree `|V|`, leading coefficient 1.
pub fn chromatic_dc(g: &Graph, caps: &EnumCaps) -> Result<IntPoly, BcfError> {
    if g.edge_count() > caps.dc_edges {
        return Err(BcfError::SizeCap {
            what: "deletion-contraction edge count",
            size: g.edge_count(),
            cap: caps.dc_edges,
        });
    }
    let mut memo: HashMap<Key, IntPoly> = HashMap::new();
    Ok(chrom(g, &mut memo))
}

fn chrom(g: &Graph, memo: &mut HashMap<Key, IntPoly>) -> IntPoly {
    // components multiply; this also strips isolated vertices into q-factors
    let comps = components(g);
    if comps.len() > 1 {
        let mut acc = IntPoly::one();
        for comp in comps {
            acc = &acc * &chrom(&g.induced(&comp), memo);
        }
        return acc;
    }
    let n = g.vertex_count();
    if n == 0 {
        return IntPoly::one();
    }
    let m = g.edge_count();
    if m == 0 {
        return IntPoly::monomial(BigInt::from(1), 1); // single vertex: q
    }
    if m == n - 1 {
        // connected tree: q (q-1)^(n-1)
        let q_minus_1 = IntPoly::from_coeffs(vec![BigInt::from(-1), BigInt::from(1)]);
        let mut acc = IntPoly::monomial(BigInt::from(1), 1);
        for _ in 0..m {
            acc = &acc * &q_minus_1;
        }
        return acc;
    }
    let key = refine_key(g);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let e = cycle_edge(g).expect("non-tree connected graph has a cycle edge");
    let deleted = chrom(&g.delete_edge(e).unwrap(), memo);
    let contracted = chrom(&g.contract_edge(e).unwrap(), memo);
    let p = &deleted - &contracted;
    memo.insert(key, p.clone());
    p
}

/// Some edge lying on a cycle (its deletion keeps the component whole).
fn cycle_edge(g: &Graph) -> Option<usize> {
    for e in 0..g.edge_count() {
        let (a, b) = g.edge(e).unwrap();
        let h = g.delete_edge(e).unwrap();
        if h.distance(a, b).unwrap().is_some() {
            return Some(e);
        }
    }
    None
}

fn components(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut mask = vec![false; n];
        let mut stack = vec![s];
        seen[s] = true;
        mask[s] = true;
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x).unwrap() {
                if !seen[y] {
                    seen[y] = true;
                    mask[y] = true;
                    stack.push(y);
                }
            }
        }
        out.push(mask);
    }
    out
}

/// Memo key: vertices relabeled by (refinement color, id), edges sorted.
fn refine_key(g: &Graph) -> Key {
    let n = g.vertex_count();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v).unwrap()).collect();
    let mut classes = distinct(&color);
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = g.neighbors(v).unwrap().iter().map(|&w| color[w]).collect();
                nc.sort_unstable();
                (color[v], nc)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sig.iter().collect();
        sorted.sort();
        sorted.dedup();
        let rank: HashMap<&(usize, Vec<usize>), usize> =
            sorted.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let new_color: Vec<usize> = (0..n).map(|v| rank[&sig[v]]).collect();
        // refinement never merges classes, so an unchanged count means the
        // partition is stable
        let new_classes = distinct(&new_color);
        color = new_color;
        if new_classes == classes {
            break;
        }
        classes = new_classes;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (color[v], v));
    let mut new_id = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        new_id[v] = pos;
    }
    let mut edges: Vec<(u16, u16)> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (new_id[a] as u16, new_id[b] as u16);
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort_unstable();
    (n, edges)
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Brute-force reference implementations kept public so self-checks and
/// tests can cross-validate the fast paths against something independent.
pub mod brute {
    use graph_core::Graph;

    /// Counts proper colorings of `g` with `q` colors by backtracking.
    pub fn count_proper_colorings(g: &Graph, q: usize) -> u64 {
        fn rec(g: &Graph, q: usize, colors: &mut Vec<usize>, v: usize) -> u64 {
            if v == g.vertex_count() {
                return 1;
            }
            let mut total = 0;
            'color: for c in 0..q {
                for &w in g.neighbors(v).unwrap() {
                    if w < v && colors[w] == c {
                        continue 'color;
                    }
                }
                colors[v] = c;
                total += rec(g, q, colors, v + 1);
            }
            total
        }
        let mut colors = vec![usize::MAX; g.vertex_count()];
        rec(g, q, &mut colors, 0)
    }
}
