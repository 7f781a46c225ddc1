//! The infinite-tree generating function dominates anchored subtree counts
//! on every graph of matching maximum degree.

use bound_engine::{big_r_delta, f_d_delta, rho_delta, x_delta, Dist};
use graph_core::corpus;
use tree_gf::{s_of_x, t_graph_v, t_graph_vw, DEFAULT_SUBTREE_EDGE_CAP};

const SLACK: f64 = 1e-9;

/// Covers the whole claimed domain (1, rho), small b included (quadratic
/// spacing toward 1, where the bounds are sharpest).
fn b_grid(delta: u32, points: usize) -> Vec<f64> {
    if delta == 2 {
        return (0..points)
            .map(|i| 1.01 * (1e4f64 / 1.01).powf(i as f64 / (points - 1) as f64))
            .collect();
    }
    let hi = rho_delta(delta) * (1.0 - 1e-4);
    (1..=points)
        .map(|i| {
            let frac = i as f64 / points as f64;
            1.0 + (hi - 1.0) * frac * frac
        })
        .collect()
}

#[test]
fn inversion_identity_on_b_grid() {
    for delta in 2..=30 {
        for b in b_grid(delta, 12) {
            let x = x_delta(delta, b).unwrap();
            let s = s_of_x(delta, x).unwrap();
            assert!(
                (s - b).abs() < 1e-10,
                "S(x_delta(b)) = {s} != {b} at delta={delta}"
            );
        }
    }
}

#[test]
fn anchored_counts_stay_below_b() {
    for (name, g) in corpus::standard() {
        let delta = g.max_degree() as u32;
        if delta < 2 || g.edge_count() > DEFAULT_SUBTREE_EDGE_CAP {
            continue;
        }
        for b in b_grid(delta, 8) {
            let x = x_delta(delta, b).unwrap();
            for v in 0..g.vertex_count() {
                let t = t_graph_v(&g, v, x, DEFAULT_SUBTREE_EDGE_CAP).unwrap();
                assert!(t <= b + SLACK, "T_v = {t} > b = {b} on {name} at v={v}");
            }
        }
    }
}

// The two-anchor inequality holds when no pair has more geodesics than
// (delta-1)^(d-1): trees, odd cycles, girth-5 Petersen, cliques. Even
// cycles, K33 and Q3 exceed that budget and genuinely break it near b = 1
// (the acceptance sweep demonstrates the counterexample).
#[test]
fn two_anchor_counts_stay_below_b_f_d() {
    for (name, g) in [
        ("petersen", corpus::petersen()),
        ("K4", corpus::complete(4)),
        ("K5", corpus::complete(5)),
        ("C5", corpus::cycle(5)),
        ("C7", corpus::cycle(7)),
        ("tree6", corpus::tree6()),
        ("star3", corpus::star(3)),
    ] {
        let delta = g.max_degree() as u32;
        for b in b_grid(delta, 6) {
            let x = x_delta(delta, b).unwrap();
            for v in 0..g.vertex_count() {
                for w in 0..g.vertex_count() {
                    if v == w {
                        continue;
                    }
                    let Some(d) = g.distance(v, w).unwrap() else { continue };
                    let t = t_graph_vw(&g, v, w, x, DEFAULT_SUBTREE_EDGE_CAP).unwrap();
                    let bound = b * f_d_delta(delta, Dist::Finite(d), b).unwrap();
                    assert!(
                        t <= bound + SLACK,
                        "T_vw = {t} > {bound} on {name} at ({v},{w}), b={b}"
                    );
                }
            }
        }
    }
}

#[test]
fn domain_guard_keeps_x_inside_radius() {
    for delta in 2..=30 {
        for b in b_grid(delta, 12) {
            assert!(b <= rho_delta(delta) * (1.0 - 1e-9));
            let x = x_delta(delta, b).unwrap();
            assert!(x < big_r_delta(delta));
        }
    }
}
