//! Anchored subtree polynomials on concrete graphs.
//!
//! `T_(G,v)(x)` sums `x^|τ|` over *all* subtrees (connected acyclic edge
//! sets) whose vertex set contains `v`, the empty tree included;
//! `T_(G,v,w)(x)` requires both anchors and excludes the empty tree.

use bcf_engine::IntPoly;
use graph_core::Graph;
use num_bigint::BigInt;

use crate::TreeGfError;

pub const DEFAULT_SUBTREE_EDGE_CAP: usize = 18;

fn check_cap(g: &Graph, cap: usize) -> Result<(), TreeGfError> {
    if g.edge_count() > cap {
        return Err(TreeGfError::SizeCap {
            size: g.edge_count(),
            cap,
        });
    }
    Ok(())
}

/// Enumerates every tree containing `v`, calling `emit(edge_count, vertex_set)`
/// once per tree. Trees grow edge by edge from the anchor; choosing candidate
/// `i` of the current frontier permanently bans candidates `0..i`, so each
/// tree arises exactly once.
fn enumerate_trees(g: &Graph, v: usize, emit: &mut impl FnMut(usize, &[bool])) {
    let mut in_tree = vec![false; g.vertex_count()];
    in_tree[v] = true;
    let mut banned = vec![false; g.edge_count()];
    fn rec(
        g: &Graph,
        in_tree: &mut Vec<bool>,
        banned: &mut Vec<bool>,
        size: usize,
        emit: &mut impl FnMut(usize, &[bool]),
    ) {
        emit(size, in_tree);
        let candidates: Vec<(usize, usize)> = (0..g.edge_count())
            .filter_map(|e| {
                if banned[e] {
                    return None;
                }
                let (a, b) = g.edge(e).unwrap();
                match (in_tree[a], in_tree[b]) {
                    (true, false) => Some((e, b)),
                    (false, true) => Some((e, a)),
                    _ => None,
                }
            })
            .collect();
        for (i, &(e, new_vertex)) in candidates.iter().enumerate() {
            in_tree[new_vertex] = true;
            for &(f, _) in &candidates[..i] {
                banned[f] = true;
            }
            banned[e] = true;
            rec(g, in_tree, banned, size + 1, emit);
            banned[e] = false;
            for &(f, _) in &candidates[..i] {
                banned[f] = false;
            }
            in_tree[new_vertex] = false;
        }
    }
    rec(g, &mut in_tree, &mut banned, 0, emit);
}

/// Exact coefficients of `T_(G,v)`: entry `k` counts the `k`-edge subtrees
/// containing `v` (entry 0 is the empty tree).
pub fn t_graph_v_poly(g: &Graph, v: usize, cap: usize) -> Result<IntPoly, TreeGfError> {
    check_cap(g, cap)?;
    if v >= g.vertex_count() {
        return Err(TreeGfError::Graph(graph_core::GraphError::UnknownVertex { v }));
    }
    let mut counts = vec![0u64; g.edge_count() + 1];
    enumerate_trees(g, v, &mut |size, _| counts[size] += 1);
    Ok(IntPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
}

/// Exact coefficients of `T_(G,v,w)`: subtrees containing both anchors.
/// The zero polynomial when `v` and `w` are disconnected.
pub fn t_graph_vw_poly(g: &Graph, v: usize, w: usize, cap: usize) -> Result<IntPoly, TreeGfError> {
    check_cap(g, cap)?;
    for z in [v, w] {
        if z >= g.vertex_count() {
            return Err(TreeGfError::Graph(graph_core::GraphError::UnknownVertex { v: z }));
        }
    }
    assert_ne!(v, w, "anchors must differ");
    let mut counts = vec![0u64; g.edge_count() + 1];
    enumerate_trees(g, v, &mut |size, in_tree| {
        if in_tree[w] {
            counts[size] += 1;
        }
    });
    Ok(IntPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
}

/// `T_(G,v)(x)` evaluated at `x`.
pub fn t_graph_v(g: &Graph, v: usize, x: f64, cap: usize) -> Result<f64, TreeGfError> {
    Ok(t_graph_v_poly(g, v, cap)?.eval_f64(x))
}

/// `T_(G,v,w)(x)` evaluated at `x`.
pub fn t_graph_vw(g: &Graph, v: usize, w: usize, x: f64, cap: usize) -> Result<f64, TreeGfError> {
    Ok(t_graph_vw_poly(g, v, w, cap)?.eval_f64(x))
}
