//! Cross-module verification suites shared by the `selfcheck` subcommand and
//! the acceptance test target. Each check pins its tolerances as constants;
//! the quick level only thins grids and corpora, never loosens a tolerance.

use bcf_engine::{
    chromatic_dc, chromatic_whitney, penrose_check, ratio_r_u, xi_polymer, EnumCaps,
};
use bound_engine::{
    c_delta_g, c_delta_g_with_grid, f_d_delta, k_g_jpr, k_g_jpr_with_grid, rho_delta, x_delta,
    z_delta_g, Dist, Girth,
};
use graph_core::{corpus, shuffled_indices, Graph};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use tree_gf::{count_rooted_subtrees, s_of_x, solve_u, t_graph_v, t_graph_vw, u_coeff};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

pub struct Check {
    pub name: &'static str,
    pub run: fn(Level) -> Result<(), String>,
}

pub fn all_checks() -> Vec<Check> {
    vec![
        Check { name: "reference-table", run: check_reference_table },
        Check { name: "comparator-anchors", run: check_comparator_anchors },
        Check { name: "whitney-equals-dc", run: check_whitney_equals_dc },
        Check { name: "partition-function", run: check_partition_function },
        Check { name: "penrose-identity", run: check_penrose },
        Check { name: "ratio-bound", run: check_ratio_bound },
        Check { name: "zero-free-corpus", run: check_zero_free },
        Check { name: "series-identities", run: check_series_identities },
        Check { name: "monotonicity", run: check_monotonicity },
        Check { name: "subtree-bounds", run: check_subtree_bounds },
    ]
}

/// Runs every check, printing one line each; returns the failed names.
pub fn run_all(level: Level, out: &mut dyn std::io::Write) -> Vec<&'static str> {
    let mut failed = Vec::new();
    for check in all_checks() {
        let started = std::time::Instant::now();
        match (check.run)(level) {
            Ok(()) => {
                writeln!(out, "PASS {} ({:.2?})", check.name, started.elapsed()).ok();
            }
            Err(msg) => {
                writeln!(out, "FAIL {} ({:.2?}): {msg}", check.name, started.elapsed()).ok();
                failed.push(check.name);
            }
        }
    }
    failed
}

const CAPS: EnumCaps = EnumCaps::DEFAULT;

/// Reference values for the bound table: (delta, g, a*, b*, C/delta, K_g),
/// asserted to 1e-3 absolute per cell.
pub const REFERENCE_ROWS: [(u32, usize, f64, f64, f64, f64); 10] = [
    (3, 3, 0.39625, 1.57848, 4.55449, 5.93148),
    (4, 3, 0.37712, 1.53409, 4.89965, 5.93148),
    (5, 3, 0.36658, 1.5107, 5.10631, 5.93148),
    (6, 3, 0.35989, 1.49623, 5.24396, 5.93148),
    (20, 3, 0.33838, 1.45155, 5.72529, 5.93148),
    (3, 4, 0.39082, 1.76326, 3.83755, 5.23445),
    (3, 5, 0.39411, 1.92992, 3.48035, 4.87264),
    (3, 10, 0.41768, 2.59496, 2.88884, 4.26121),
    (3, 25, 0.44373, 3.80294, 2.60289, 3.97497),
    (3, 100, 0.45824, 5.81488, 2.49247, 3.87487),
];

pub const TABLE_CELL_TOL: f64 = 1e-3;

fn check_reference_table(level: Level) -> Result<(), String> {
    let rows: Vec<usize> = match level {
        Level::Quick => vec![0, 6, 9],
        Level::Full => (0..REFERENCE_ROWS.len()).collect(),
    };
    for i in rows {
        let (delta, g, a, b, cd, kg) = REFERENCE_ROWS[i];
        let r = c_delta_g(delta, Girth::Finite(g)).map_err(|e| e.to_string())?;
        let got_kg = k_g_jpr(g).map_err(|e| e.to_string())?;
        for (what, got, want) in [
            ("a*", r.a_star, a),
            ("b*", r.b_star, b),
            ("C/delta", r.c_over_delta, cd),
            ("K_g", got_kg, kg),
        ] {
            if (got - want).abs() >= TABLE_CELL_TOL {
                return Err(format!(
                    "row (delta={delta}, g={g}) {what}: got {got}, want {want}"
                ));
            }
        }
    }
    Ok(())
}

fn check_comparator_anchors(_level: Level) -> Result<(), String> {
    let k3 = k_g_jpr(3).map_err(|e| e.to_string())?;
    if (k3 - 5.93148).abs() >= 1e-3 {
        return Err(format!("K_3 = {k3}"));
    }
    let k_large = k_g_jpr(10_000).map_err(|e| e.to_string())?;
    if (k_large - 3.85977).abs() >= 5e-3 {
        return Err(format!("K_10000 = {k_large}, limit anchor 3.85977"));
    }
    Ok(())
}

fn three_orders(g: &Graph) -> Vec<Graph> {
    let m = g.edge_count();
    let reversed: Vec<usize> = (0..m).rev().collect();
    vec![
        g.clone(),
        g.with_edge_order(&reversed).unwrap(),
        g.with_edge_order(&shuffled_indices(m, 0xBCF)).unwrap(),
    ]
}

fn check_whitney_equals_dc(level: Level) -> Result<(), String> {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    match level {
        Level::Quick => {
            for g in corpus::all_connected_graphs_up_to(5) {
                graphs.push((format!("connected<=5 #{}", graphs.len()), g));
            }
        }
        Level::Full => {
            for g in corpus::all_connected_graphs_up_to(6) {
                graphs.push((format!("connected<=6 #{}", graphs.len()), g));
            }
            for n in 4..=8 {
                graphs.push((format!("C{n}"), corpus::cycle(n)));
            }
            graphs.push(("petersen".into(), corpus::petersen()));
            graphs.push(("K4".into(), corpus::complete(4)));
            graphs.push(("K33".into(), corpus::complete_bipartite(3, 3)));
            graphs.push(("cube3".into(), corpus::cube3()));
        }
    }
    for (name, g) in graphs {
        let dc = chromatic_dc(&g, &CAPS).map_err(|e| format!("{name}: {e}"))?;
        for (k, h) in three_orders(&g).iter().enumerate() {
            let wh = chromatic_whitney(h, &CAPS).map_err(|e| format!("{name}: {e}"))?;
            if wh != dc {
                return Err(format!("{name} order #{k}: whitney {wh} != dc {dc}"));
            }
        }
    }
    Ok(())
}

fn check_partition_function(_level: Level) -> Result<(), String> {
    let qs = [
        BigRational::from_integer(1.into()),
        BigRational::from_integer(2.into()),
        BigRational::from_integer(3.into()),
        BigRational::from_integer(BigInt::from(-1)),
        BigRational::new(7.into(), 3.into()),
    ];
    for (name, g) in corpus::standard() {
        if g.vertex_count() > 9 {
            continue;
        }
        let p = chromatic_dc(&g, &CAPS).map_err(|e| e.to_string())?;
        for q in &qs {
            let xi = xi_polymer(&g, q, &CAPS).map_err(|e| format!("{name}: {e}"))?;
            let qn = num_traits::pow::pow(q.clone(), g.vertex_count());
            if qn * xi != p.eval_rational(q) {
                return Err(format!("{name}: q^n Xi != P at q = {q}"));
            }
        }
    }
    Ok(())
}

fn connected_subsets_up_to(g: &Graph, max_size: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 || size > max_size {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        // connectivity of the induced subgraph
        let mut seen = vec![false; n];
        let mut stack = vec![verts[0]];
        seen[verts[0]] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x).unwrap() {
                if mask >> y & 1 == 1 && !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached == size {
            out.push(verts);
        }
    }
    out
}

fn check_penrose(level: Level) -> Result<(), String> {
    let max_size = match level {
        Level::Quick => 5,
        Level::Full => 7,
    };
    for (name, g) in corpus::standard() {
        for r in connected_subsets_up_to(&g, max_size) {
            if !penrose_check(&g, &r).map_err(|e| format!("{name}: {e}"))? {
                return Err(format!("{name}: penrose identity failed on {r:?}"));
            }
        }
    }
    Ok(())
}

pub const RATIO_SLACK: f64 = 1e-9;

fn check_ratio_bound(level: Level) -> Result<(), String> {
    let (a_grid, points): (Vec<f64>, usize) = match level {
        Level::Quick => (vec![0.3, 0.6, 0.9], 8),
        Level::Full => ((1..=9).map(|i| i as f64 / 10.0).collect(), 16),
    };
    for (name, g) in corpus::standard() {
        if g.edge_count() == 0 || g.edge_count() > CAPS.bcf_edges {
            continue;
        }
        let delta = g.max_degree() as u32;
        let girth = g.girth();
        for &a in &a_grid {
            let radius = z_delta_g(delta, girth, a).map_err(|e| e.to_string())?;
            for k in 0..points {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / points as f64;
                let z = Complex64::from_polar(radius, theta);
                for u in 0..g.vertex_count() {
                    let r = ratio_r_u(&g, u, z, &CAPS).map_err(|e| format!("{name}: {e}"))?;
                    if r.norm() > a + RATIO_SLACK {
                        return Err(format!(
                            "{name}: |R^u| = {} > a = {a} at u={u}, z={z}",
                            r.norm()
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_zero_free(_level: Level) -> Result<(), String> {
    for (name, g) in corpus::standard() {
        if g.edge_count() == 0 {
            continue;
        }
        let report =
            root_locator::verify_zero_free(&g, &name, &CAPS).map_err(|e| format!("{name}: {e}"))?;
        if !report.pass {
            return Err(format!(
                "{name}: margin {} (C = {}, max root {})",
                report.margin, report.c, report.max_abs_root
            ));
        }
    }
    Ok(())
}

/// Grid of b values inside (1, rho); stops at rho (1 - 1e-4) where the
/// inversion is still well-conditioned in f64 (the guard 1e-9 is respected).
fn b_grid(delta: u32, points: usize) -> Vec<f64> {
    if delta == 2 {
        // rho_2 is infinite; log-spaced grid
        return (1..=points)
            .map(|i| 10f64.powf(4.0 * i as f64 / points as f64))
            .collect();
    }
    let hi = rho_delta(delta) * (1.0 - 1e-4);
    (1..=points).map(|i| 1.0 + (hi - 1.0) * i as f64 / points as f64).collect()
}

const INVERSION_TOL: f64 = 1e-10;
const CLOSED_FORM_TOL: f64 = 1e-12;

fn check_series_identities(level: Level) -> Result<(), String> {
    let (points, n_max) = match level {
        Level::Quick => (12, 6),
        Level::Full => (50, 8),
    };
    for delta in 2..=30 {
        for b in b_grid(delta, points) {
            let x = x_delta(delta, b).map_err(|e| e.to_string())?;
            let s = s_of_x(delta, x).map_err(|e| e.to_string())?;
            if (s - b).abs() >= INVERSION_TOL {
                return Err(format!("S(x_{delta}(b)) = {s} != b = {b}"));
            }
        }
    }
    for delta in [3u32, 4, 5] {
        for n in 1..=n_max {
            let closed = u_coeff(delta, n).map_err(|e| e.to_string())?;
            let counted = count_rooted_subtrees(delta, n).map_err(|e| e.to_string())?;
            if closed != BigInt::from(counted) {
                return Err(format!(
                    "u_coeff({delta},{n}) = {closed} vs enumeration {counted}"
                ));
            }
        }
    }
    for i in 0..=18 {
        let x = 0.05 * i as f64;
        let p = solve_u(2, x).map_err(|e| e.to_string())?;
        if (p.u - x / (1.0 - x)).abs() >= CLOSED_FORM_TOL {
            return Err(format!("u_2({x}) closed form off: {}", p.u));
        }
        if (p.s - 1.0 / ((1.0 - x) * (1.0 - x))).abs() >= CLOSED_FORM_TOL {
            return Err(format!("S_2({x}) closed form off: {}", p.s));
        }
    }
    Ok(())
}

const Z_SLACK: f64 = 1e-12;
const CD_SLACK: f64 = 1e-6;

fn check_monotonicity(level: Level) -> Result<(), String> {
    let (delta_max, gs, cd_delta_max, cd_gs, grid) = match level {
        Level::Quick => (
            10u32,
            vec![Girth::Finite(3), Girth::Finite(4), Girth::Finite(5), Girth::Infinite],
            12u32,
            vec![3usize],
            257,
        ),
        Level::Full => {
            let mut gs: Vec<Girth> = (3..=12).map(Girth::Finite).collect();
            gs.push(Girth::Finite(25));
            gs.push(Girth::Infinite);
            (30, gs, 50, vec![3, 4, 5, 10], 2049)
        }
    };
    for i in 1..=19 {
        let a = 0.05 * i as f64;
        for &g in &gs {
            let mut prev = f64::INFINITY;
            for delta in 1..=delta_max {
                let z = z_delta_g(delta, g, a).map_err(|e| e.to_string())?;
                if z > prev + Z_SLACK {
                    return Err(format!("z not decreasing in delta at ({delta},{g},{a})"));
                }
                prev = z;
            }
        }
        for delta in 1..=delta_max {
            let z_inf = z_delta_g(delta, Girth::Infinite, a).map_err(|e| e.to_string())?;
            let mut prev = -f64::INFINITY;
            for &g in &gs {
                let z = z_delta_g(delta, g, a).map_err(|e| e.to_string())?;
                if z < prev - Z_SLACK {
                    return Err(format!("z not increasing in g at ({delta},{g},{a})"));
                }
                if z > z_inf + Z_SLACK {
                    return Err(format!("z exceeds infinite-girth value at ({delta},{g},{a})"));
                }
                prev = z;
            }
        }
    }
    for &g in &cd_gs {
        let kg = k_g_jpr_with_grid(g, grid).map_err(|e| e.to_string())?;
        let mut prev = -f64::INFINITY;
        for delta in 3..=cd_delta_max {
            let r = c_delta_g_with_grid(delta, Girth::Finite(g), grid).map_err(|e| e.to_string())?;
            if r.c_over_delta < prev - CD_SLACK {
                return Err(format!("C/delta decreased at (delta={delta}, g={g})"));
            }
            if r.c_over_delta > kg + CD_SLACK {
                return Err(format!(
                    "C/delta = {} above K_g = {kg} at (delta={delta}, g={g})",
                    r.c_over_delta
                ));
            }
            prev = r.c_over_delta;
        }
    }
    Ok(())
}

const SUBTREE_SLACK: f64 = 1e-9;

/// Grid for the subtree sweeps: covers the *whole* claimed domain
/// (1, rho_delta), small b included — the two-anchor inequality is sharpest
/// (and, with multiple geodesics, breaks) as b -> 1.
fn sweep_b_grid(delta: u32, points: usize) -> Vec<f64> {
    if delta == 2 {
        return (0..points)
            .map(|i| 1.05 * (1e4f64 / 1.05).powf(i as f64 / (points - 1) as f64))
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

/// Number of shortest v-w paths (for the failure diagnostics).
fn geodesic_count(g: &Graph, v: usize, w: usize) -> u64 {
    let dist = g.bfs_distances(v).unwrap();
    let mut order: Vec<usize> = (0..g.vertex_count()).filter(|&x| dist[x].is_some()).collect();
    order.sort_by_key(|&x| dist[x]);
    let mut count = vec![0u64; g.vertex_count()];
    count[v] = 1;
    for &x in &order {
        if x == v {
            continue;
        }
        for &y in g.neighbors(x).unwrap() {
            if dist[y].map(|d| d + 1) == dist[x] {
                count[x] += count[y];
            }
        }
    }
    count[w]
}

fn check_subtree_bounds(level: Level) -> Result<(), String> {
    let points = match level {
        Level::Quick => 5,
        Level::Full => 10,
    };
    for (name, g) in corpus::standard() {
        let delta = g.max_degree() as u32;
        if delta < 2 || g.edge_count() > tree_gf::DEFAULT_SUBTREE_EDGE_CAP {
            continue;
        }
        for b in sweep_b_grid(delta, points) {
            let x = x_delta(delta, b).map_err(|e| e.to_string())?;
            for v in 0..g.vertex_count() {
                let t = t_graph_v(&g, v, x, tree_gf::DEFAULT_SUBTREE_EDGE_CAP)
                    .map_err(|e| format!("{name}: {e}"))?;
                if t > b + SUBTREE_SLACK {
                    return Err(format!("{name}: T_v({v}) = {t} > b = {b}"));
                }
            }
        }
        for b in sweep_b_grid(delta, points) {
            let x = x_delta(delta, b).map_err(|e| e.to_string())?;
            for v in 0..g.vertex_count() {
                for w in 0..g.vertex_count() {
                    if w == v {
                        continue;
                    }
                    let Some(d) = g.distance(v, w).map_err(|e| e.to_string())? else {
                        continue;
                    };
                    let t2 = t_graph_vw(&g, v, w, x, tree_gf::DEFAULT_SUBTREE_EDGE_CAP)
                        .map_err(|e| format!("{name}: {e}"))?;
                    let cap = b * f_d_delta(delta, Dist::Finite(d), b).map_err(|e| e.to_string())?;
                    if t2 > cap + SUBTREE_SLACK {
                        let c_d = geodesic_count(&g, v, w);
                        let budget = ((delta - 1) as f64).powi(d as i32 - 1);
                        return Err(format!(
                            "{name}: T_vw({v},{w}) = {t2} > b f^d = {cap} at b = {b}, d = {d}; \
                             the pair has {c_d} geodesics while the bound only accounts for \
                             (delta-1)^(d-1) = {budget}, so the swept inequality undercounts \
                             geodesic multiplicity"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Runs one named check; panics on unknown names (a test wiring bug).
pub fn run_check(name: &str, level: Level) -> Result<(), String> {
    let check = all_checks()
        .into_iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("no check named {name}"));
    (check.run)(level)
}
