//! CSV/JSON assembly for the table and sweep subcommands.

use bound_engine::{c_delta_g_with_grid, k_g_jpr_with_grid, BoundError, Girth};

/// Rounds to 9 significant digits, then prints the shortest string that
/// round-trips to that rounded value. Keeps goldens comparable without
/// dragging 17-digit noise into the CSV.
pub fn sig9(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let rounded: f64 = format!("{x:.8e}").parse().expect("round-trip");
    format!("{rounded}")
}

pub fn parse_girth(s: &str) -> Result<Girth, String> {
    if s == "inf" {
        return Ok(Girth::Infinite);
    }
    let v: usize = s.parse().map_err(|_| format!("invalid girth {s:?}"))?;
    if v < 3 {
        return Err(format!("girth {v} below 3"));
    }
    Ok(Girth::Finite(v))
}

/// Parses `"3:3,4:3,3:inf"` into (delta, girth) pairs.
pub fn parse_pairs(s: &str) -> Result<Vec<(u32, Girth)>, String> {
    s.split(',')
        .map(|item| {
            let (d, g) = item
                .split_once(':')
                .ok_or_else(|| format!("expected delta:g, got {item:?}"))?;
            let delta: u32 = d.trim().parse().map_err(|_| format!("invalid delta {d:?}"))?;
            if delta < 1 {
                return Err(format!("delta {delta} below 1"));
            }
            Ok((delta, parse_girth(g.trim())?))
        })
        .collect()
}

/// The default table rows.
pub fn default_pairs() -> Vec<(u32, Girth)> {
    [
        (3, 3),
        (4, 3),
        (5, 3),
        (6, 3),
        (20, 3),
        (3, 4),
        (3, 5),
        (3, 10),
        (3, 25),
        (3, 100),
    ]
    .into_iter()
    .map(|(d, g)| (d, Girth::Finite(g)))
    .collect()
}

pub struct TableRow {
    pub delta: u32,
    pub g: Girth,
    pub a_star: f64,
    pub b_star: f64,
    pub c_over_delta: f64,
    /// None for infinite girth (the comparator constant needs finite g).
    pub k_g: Option<f64>,
}

pub fn table_rows(pairs: &[(u32, Girth)], grid: usize) -> Result<Vec<TableRow>, BoundError> {
    pairs
        .iter()
        .map(|&(delta, g)| {
            let r = c_delta_g_with_grid(delta, g, grid)?;
            let k_g = match g {
                Girth::Finite(gv) => Some(k_g_jpr_with_grid(gv, grid)?),
                Girth::Infinite => None,
            };
            Ok(TableRow {
                delta,
                g,
                a_star: r.a_star,
                b_star: r.b_star,
                c_over_delta: r.c_over_delta,
                k_g,
            })
        })
        .collect()
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("delta,g,a_star,b_star,c_over_delta,k_g\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.delta,
            r.g,
            sig9(r.a_star),
            sig9(r.b_star),
            sig9(r.c_over_delta),
            r.k_g.map(sig9).unwrap_or_default()
        ));
    }
    out
}

pub fn table_json(rows: &[TableRow]) -> String {
    let items: Vec<serde_json::Value> = rows
        .iter()
        .map(|r| {
            serde_json::json!({
                "delta": r.delta,
                "g": match r.g { Girth::Finite(v) => serde_json::json!(v), Girth::Infinite => serde_json::json!("inf") },
                "a_star": r.a_star,
                "b_star": r.b_star,
                "c_over_delta": r.c_over_delta,
                "k_g": r.k_g,
            })
        })
        .collect();
    serde_json::to_string_pretty(&items).expect("json")
}

pub enum SweepMode {
    /// vary delta at fixed girth
    ByDelta { g: Girth },
    /// vary (finite) girth at fixed delta
    ByG { delta: u32 },
}

pub const SWEEP_RANGE_CAP: usize = 100_000;

/// An inverted range (`from > to`) is the empty sweep and yields no rows.
pub fn sweep_rows(mode: &SweepMode, from: usize, to: usize, grid: usize) -> Result<Vec<(usize, f64)>, String> {
    if to.saturating_sub(from) > SWEEP_RANGE_CAP {
        return Err(format!("range wider than {SWEEP_RANGE_CAP}"));
    }
    let mut rows = Vec::new();
    if from > to {
        return Ok(rows);
    }
    for v in from..=to {
        let r = match mode {
            SweepMode::ByDelta { g } => {
                if v < 1 {
                    return Err("delta below 1".into());
                }
                c_delta_g_with_grid(v as u32, *g, grid).map_err(|e| e.to_string())?
            }
            SweepMode::ByG { delta } => {
                if v < 3 {
                    return Err(format!("girth {v} below 3"));
                }
                c_delta_g_with_grid(*delta, Girth::Finite(v), grid).map_err(|e| e.to_string())?
            }
        };
        rows.push((v, r.c_over_delta));
    }
    Ok(rows)
}

pub fn sweep_csv(mode: &SweepMode, rows: &[(usize, f64)]) -> String {
    let header = match mode {
        SweepMode::ByDelta { .. } => "delta,c_over_delta\n",
        SweepMode::ByG { .. } => "g,c_over_delta\n",
    };
    let mut out = String::from(header);
    for (v, c) in rows {
        out.push_str(&format!("{},{}\n", v, sig9(*c)));
    }
    out
}
