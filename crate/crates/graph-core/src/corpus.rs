//! Named test graphs and a small-order connected-graph generator.
//!
//! These are the concrete graphs the cross-module verification suites run
//! on. They live in the library (not test code) so the CLI selfcheck can use
//! the same corpus.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Star K_{1,k}: vertex 0 joined to k leaves.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::new(k + 1, &edges).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for x in 0..a {
        for y in 0..b {
            edges.push((x, a + y));
        }
    }
    Graph::new(a + b, &edges).unwrap()
}

/// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).unwrap()
}

/// The 3-dimensional hypercube Q3.
pub fn cube3() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in 0..3 {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::new(8, &edges).unwrap()
}

/// Wheel W_k: a k-cycle plus a hub joined to every rim vertex.
pub fn wheel(k: usize) -> Graph {
    assert!(k >= 3);
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    for i in 0..k {
        edges.push((i, k));
    }
    Graph::new(k + 1, &edges).unwrap()
}

/// Triangular prism: two triangles joined by a perfect matching.
pub fn prism3() -> Graph {
    Graph::new(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

/// A fixed non-path 6-vertex tree (a "spider" with legs 2, 2, 1).
pub fn tree6() -> Graph {
    Graph::new(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap()
}

/// The named corpus every cross-module suite sweeps over.
pub fn standard() -> Vec<(String, Graph)> {
    let mut v: Vec<(String, Graph)> = vec![
        ("K2".into(), complete(2)),
        ("P3".into(), path(3)),
        ("P4".into(), path(4)),
        ("star3".into(), star(3)),
        ("tree6".into(), tree6()),
        ("K3".into(), complete(3)),
        ("K4".into(), complete(4)),
        ("K5".into(), complete(5)),
        ("K33".into(), complete_bipartite(3, 3)),
        ("wheel5".into(), wheel(5)),
        ("prism3".into(), prism3()),
        ("cube3".into(), cube3()),
        ("petersen".into(), petersen()),
    ];
    for n in 4..=8 {
        v.push((format!("C{n}"), cycle(n)));
    }
    v
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// for `n <= 7`. Canonization is the minimum edge bitmask over all vertex
/// permutations, so the classes are exact.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "generator is exhaustive-permutation based");
    if n == 1 {
        return vec![Graph::new(1, &[]).unwrap()];
    }
    let pairs: Vec<(usize, usize)> = {
        let mut p = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                p.push((a, b));
            }
        }
        p
    };
    let m = pairs.len();
    let perms = permutations(n);
    // For each permutation, where each edge-bit lands after relabeling.
    let moved: Vec<Vec<usize>> = perms
        .iter()
        .map(|perm| {
            pairs
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
                    pairs.iter().position(|&q| q == (x, y)).unwrap()
                })
                .collect()
        })
        .collect();

    let mut canon_seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        if (mask.count_ones() as usize) < n - 1 {
            continue;
        }
        if !mask_connected(mask, &pairs, n) {
            continue;
        }
        let mut canon = u32::MAX;
        for mv in &moved {
            let mut relabeled = 0u32;
            let mut bits = mask;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                relabeled |= 1 << mv[i];
                bits &= bits - 1;
            }
            canon = canon.min(relabeled);
        }
        if canon_seen.insert(canon) {
            let edges: Vec<_> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            out.push(Graph::new(n, &edges).unwrap());
        }
    }
    out
}

/// All connected graphs on 1..=n vertices, one per isomorphism class.
pub fn all_connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(all_connected_graphs).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

fn mask_connected(mask: u32, pairs: &[(usize, usize)], n: usize) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            parent[x] = find(parent, parent[x]);
        }
        parent[x]
    }
    let mut comps = n;
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (a, b) = pairs[i];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            comps -= 1;
        }
    }
    comps == 1
}
