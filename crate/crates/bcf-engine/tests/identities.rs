//! Cross-route identities: the forest expansion against deletion–contraction,
//! the polymer partition function, the removal recursion, and the
//! normalization of forest weights.

use bcf_engine::{
    chromatic_dc, chromatic_whitney, enumerate_bcf_forests, forest_gf, xi_polymer, EnumCaps,
    IntPoly,
};
use graph_core::{corpus, Graph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

const CAPS: &EnumCaps = &EnumCaps::DEFAULT;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Induced subgraph plus the old-id of every new vertex.
fn induced_with_map(g: &Graph, keep: &[bool]) -> (Graph, Vec<usize>) {
    let old_of_new: Vec<usize> = (0..g.vertex_count()).filter(|&v| keep[v]).collect();
    (g.induced(keep), old_of_new)
}

#[test]
fn whitney_equals_deletion_contraction_across_orders() {
    for (name, g) in corpus::standard() {
        if g.edge_count() > CAPS.bcf_edges {
            continue;
        }
        let dc = chromatic_dc(&g, CAPS).unwrap();
        for seed in [11u64, 12] {
            let perm = graph_core::shuffled_indices(g.edge_count(), seed);
            let h = g.with_edge_order(&perm).unwrap();
            assert_eq!(chromatic_whitney(&h, CAPS).unwrap(), dc, "mismatch on {name}");
        }
    }
}

#[test]
fn partition_function_identity_exact() {
    for (name, g) in corpus::standard() {
        if g.vertex_count() > 9 {
            continue;
        }
        let p = chromatic_dc(&g, CAPS).unwrap();
        for q in [rat(1, 1), rat(2, 1), rat(3, 1), rat(-1, 1), rat(7, 3)] {
            let xi = xi_polymer(&g, &q, CAPS).unwrap();
            let qn = num_traits::pow::pow(q.clone(), g.vertex_count());
            assert_eq!(qn * xi, p.eval_rational(&q), "identity failed on {name} at q={q}");
        }
    }
}

#[test]
fn removal_recursion_holds_at_coefficient_level() {
    for (name, g) in [
        ("K4", corpus::complete(4)),
        ("C5", corpus::cycle(5)),
        ("prism3", corpus::prism3()),
        ("tree6", corpus::tree6()),
        ("K33", corpus::complete_bipartite(3, 3)),
    ] {
        let n = g.vertex_count();
        let lhs = forest_gf(&g, CAPS).unwrap();
        for u in 0..n {
            let mut rhs = forest_gf(&g.remove_vertex(u).unwrap(), CAPS).unwrap();
            for record in enumerate_bcf_forests(&g, CAPS).unwrap() {
                if record.edges.is_empty() || !record.vertex_support.contains(&u) {
                    continue;
                }
                // single-tree forests only: support size = edges + 1
                if record.vertex_support.len() != record.edge_count() + 1 {
                    continue;
                }
                let mut keep = vec![true; n];
                for &v in &record.vertex_support {
                    keep[v] = false;
                }
                let rest = forest_gf(&g.induced(&keep), CAPS).unwrap();
                rhs = &rhs + &rest.shift(record.edge_count());
            }
            assert_eq!(lhs, rhs, "recursion failed on {name} at u={u}");
        }
    }
}

/// Partition the forest's edges into trees and check each touches `s`.
fn every_tree_touches(g: &Graph, edges: &[usize], s: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &e in edges {
        let (a, b) = g.edge(e).unwrap();
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut support: Vec<usize> = edges
        .iter()
        .flat_map(|&e| {
            let (a, b) = g.edge(e).unwrap();
            [a, b]
        })
        .collect();
    support.sort_unstable();
    support.dedup();
    let s_roots: std::collections::HashSet<usize> =
        s.iter().map(|&v| find(&mut parent, v)).collect();
    support.iter().all(|&v| s_roots.contains(&find(&mut parent, v)))
}

#[test]
fn forest_weight_normalization_is_exactly_one() {
    let cases: Vec<(Graph, Vec<usize>, Vec<usize>)> = vec![
        (corpus::complete(4), (0..4).collect(), vec![0]),
        (corpus::complete(4), (0..4).collect(), vec![1, 2]),
        (corpus::cycle(5), (0..5).collect(), vec![0, 2]),
        (corpus::prism3(), (0..6).collect(), vec![0]),
        (corpus::prism3(), vec![0, 1, 2, 3], vec![0, 3]),
        (corpus::petersen(), vec![0, 1, 2, 5, 6, 7], vec![0, 6]),
    ];
    for (g, u_set, s) in cases {
        let mut keep = vec![false; g.vertex_count()];
        for &v in &u_set {
            keep[v] = true;
        }
        let (gu, old_of_new) = induced_with_map(&g, &keep);
        let s_new: Vec<usize> = s
            .iter()
            .map(|&v| old_of_new.iter().position(|&o| o == v).unwrap())
            .collect();
        // note -1/2 would sit exactly on a zero of F for non-2-colorable
        // graphs (F(-1/q) vanishes with the q-coloring count)
        for z in [rat(1, 1), rat(-1, 5), rat(2, 3)] {
            let f_u = forest_gf(&gu, CAPS).unwrap().eval_rational(&z);
            assert!(!f_u.is_zero());
            let mut total = BigRational::zero();
            for record in enumerate_bcf_forests(&gu, CAPS).unwrap() {
                if !every_tree_touches(&gu, &record.edges, &s_new) {
                    continue;
                }
                let mut keep_rest = vec![true; gu.vertex_count()];
                for &v in &s_new {
                    keep_rest[v] = false;
                }
                for &v in &record.vertex_support {
                    keep_rest[v] = false;
                }
                let rest = forest_gf(&gu.induced(&keep_rest), CAPS).unwrap().eval_rational(&z);
                let zk = num_traits::pow::pow(z.clone(), record.edge_count());
                total += zk * rest;
            }
            assert_eq!(total / f_u, BigRational::one());
        }
    }
}

#[test]
fn xi_matches_forest_gf_at_minus_one_over_q() {
    // Ξ(q) = F(-1/q): the polymer route against the forest route
    for (name, g) in corpus::standard() {
        if g.vertex_count() > 9 {
            continue;
        }
        let f = forest_gf(&g, CAPS).unwrap();
        for q in [rat(2, 1), rat(-3, 2), rat(7, 3)] {
            let xi = xi_polymer(&g, &q, CAPS).unwrap();
            let z = -q.recip();
            assert_eq!(f.eval_rational(&z), xi, "Xi != F(-1/q) on {name}");
        }
    }
}

#[test]
fn whitney_degrees_and_signs() {
    // coefficients of P alternate in sign and start at q^n with 1
    for (_, g) in corpus::standard() {
        if g.edge_count() > CAPS.bcf_edges {
            continue;
        }
        let p = chromatic_whitney(&g, CAPS).unwrap();
        let n = g.vertex_count();
        assert_eq!(p.degree(), Some(n));
        for k in 0..=n {
            let c = p.coeff(n - k);
            let expected_sign_nonneg = k % 2 == 0;
            assert!(
                if expected_sign_nonneg {
                    c >= BigInt::from(0)
                } else {
                    c <= BigInt::from(0)
                },
                "sign pattern broken"
            );
        }
    }
}

#[test]
fn empty_polynomial_edge_case() {
    let lone = Graph::new(1, &[]).unwrap();
    assert_eq!(forest_gf(&lone, CAPS).unwrap(), IntPoly::one());
}

/// Seeded sparse random graphs: the cross-route identities must hold on
/// arbitrary small graphs, not just the named corpus.
#[test]
fn identities_on_seeded_random_graphs() {
    let mut rng = graph_core::SplitMix64(0x1de57);
    for case in 0u64..40 {
        let n = 2 + rng.next_below(6); // 2..=7 vertices
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                // density varies across cases
                if rng.next_below(100) < (25 + (case % 4) * 15) as usize {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let dc = chromatic_dc(&g, CAPS).unwrap();

        // Whitney route, under a per-case shuffled edge order
        let perm = graph_core::shuffled_indices(g.edge_count(), 0xABCD + case);
        let h = g.with_edge_order(&perm).unwrap();
        assert_eq!(chromatic_whitney(&h, CAPS).unwrap(), dc, "case {case}");

        // polymer route at one exact rational point
        let q = rat(7, 2);
        let xi = xi_polymer(&g, &q, CAPS).unwrap();
        let qn = num_traits::pow::pow(q.clone(), n);
        assert_eq!(qn * xi, dc.eval_rational(&q), "case {case}");

        // coloring-count anchor at q = 3
        let colorings = bcf_engine::brute::count_proper_colorings(&g, 3);
        let p3 = dc.eval_rational(&rat(3, 1));
        assert_eq!(p3, BigRational::from_integer(colorings.into()), "case {case}");
    }
}
