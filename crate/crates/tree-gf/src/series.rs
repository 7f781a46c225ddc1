use bound_engine::big_r_delta;

use crate::TreeGfError;

/// A solved point of the rooted-subtree series: the root `u` of
/// `u = x (1+u)^(Δ-1)` on the combinatorial branch, with the derived values
/// `S = (1+u)^Δ`, `W = (1+u)^(Δ-1)`, `W* = (1+u)^(Δ-2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPoint {
    pub delta: u32,
    pub x: f64,
    pub u: f64,
    pub s: f64,
    pub w: f64,
    pub w_star: f64,
}

/// Solves `u = x (1+u)^(Δ-1)` for the small root.
///
/// For Δ ≥ 3 this inverts the bijection `f(u) = u/(1+u)^(Δ-1)` from
/// `[0, (Δ-2)^-1]` onto `[0, R_Δ]` by bisection — the fixed-point equation
/// has a second, non-combinatorial root beyond the branch point, which the
/// bracketed search can never land on. Δ = 2 uses the closed form
/// `u = x/(1-x)`.
pub fn solve_u(delta: u32, x: f64) -> Result<SeriesPoint, TreeGfError> {
    if delta < 2 {
        return Err(TreeGfError::DeltaTooSmall { delta, min: 2 });
    }
    let r = big_r_delta(delta);
    if !(0.0..r).contains(&x) {
        return Err(TreeGfError::XOutOfDomain { x, delta });
    }
    let u = if x == 0.0 {
        0.0
    } else if delta == 2 {
        x / (1.0 - x)
    } else {
        let dm1 = (delta - 1) as f64;
        let f = |u: f64| u / (dm1 * u.ln_1p()).exp();
        let mut lo = 0.0f64;
        let mut hi = 1.0 / (delta as f64 - 2.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if f(mid) < x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };
    let d = delta as f64;
    Ok(SeriesPoint {
        delta,
        x,
        u,
        s: (d * u.ln_1p()).exp(),
        w: ((d - 1.0) * u.ln_1p()).exp(),
        w_star: ((d - 2.0) * u.ln_1p()).exp(),
    })
}

/// `S(x) = T(x)/x = (1+u(x))^Δ`; satisfies `S(x_Δ(b)) = b`.
pub fn s_of_x(delta: u32, x: f64) -> Result<f64, TreeGfError> {
    Ok(solve_u(delta, x)?.s)
}

/// `W(x) = u(x)/x = (1+u(x))^(Δ-1)`; satisfies `W(x_Δ(b)) = b^(1-1/Δ)`.
pub fn w_of_x(delta: u32, x: f64) -> Result<f64, TreeGfError> {
    Ok(solve_u(delta, x)?.w)
}

/// `W*(x) = (1+u(x))^(Δ-2)`; satisfies `W*(x_Δ(b)) = b^(1-2/Δ)`.
pub fn w_star_of_x(delta: u32, x: f64) -> Result<f64, TreeGfError> {
    Ok(solve_u(delta, x)?.w_star)
}
