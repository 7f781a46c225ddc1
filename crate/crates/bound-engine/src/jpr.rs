use crate::bounds::BoundError;
use crate::scalar::{bisect_increasing, golden_section_max};
use crate::DEFAULT_GRID;

/// `K^g_∞(a, b) = exp((1-a) ln b / b) - 1 + b (ln b)^(g-1) / (2 (1 - ln b))`
/// on `b ∈ [1, e)`; monotone increasing in `b` with `K^g_∞(a, 1) = 0`.
pub fn k_inf_g(g: usize, a: f64, b: f64) -> Result<f64, BoundError> {
    if g < 3 {
        return Err(BoundError::GirthOutOfDomain { g });
    }
    if !(0.0..=1.0).contains(&a) {
        return Err(BoundError::AOutOfDomain { a });
    }
    if !(1.0..std::f64::consts::E).contains(&b) {
        return Err(BoundError::BOutOfDomain { b, delta: 0 });
    }
    let lb = b.ln();
    // (ln b)^(g-1) through powf underflows to 0 for large g, which is the
    // correct limit of the (nonnegative, additive) tail term.
    Ok(((1.0 - a) * lb / b).exp_m1() + b * lb.powf((g - 1) as f64) / (2.0 * (1.0 - lb)))
}

/// Root `b^g_∞(a)` of `K^g_∞(a, b) = a` in `(1, e)`.
pub fn solve_b_inf(g: usize, a: f64) -> Result<f64, BoundError> {
    if g < 3 {
        return Err(BoundError::GirthOutOfDomain { g });
    }
    if !(0.0..=1.0).contains(&a) {
        return Err(BoundError::AOutOfDomain { a });
    }
    if a == 0.0 {
        return Ok(1.0);
    }
    let hi = std::f64::consts::E * (1.0 - 1e-12);
    Ok(bisect_increasing(1.0, hi, a, |b| {
        k_inf_g(g, a, b).unwrap_or(f64::INFINITY)
    }))
}

/// The comparator constant `K_g = [max_a (1-a) ln b^g_∞(a) / b^g_∞(a)]^(-1)`,
/// equivalently `min_a b_g(a) / ((1-a) ln b_g(a))`.
pub fn k_g_jpr(g: usize) -> Result<f64, BoundError> {
    k_g_jpr_with_grid(g, DEFAULT_GRID)
}

pub fn k_g_jpr_with_grid(g: usize, grid: usize) -> Result<f64, BoundError> {
    if g < 3 {
        return Err(BoundError::GirthOutOfDomain { g });
    }
    assert!(grid >= 33);
    let phi = |a: f64| -> f64 {
        let b = solve_b_inf(g, a).unwrap_or(1.0);
        if b <= 1.0 {
            0.0
        } else {
            (1.0 - a) * b.ln() / b
        }
    };
    let mut best_i = 0;
    let mut best_v = f64::NEG_INFINITY;
    for i in 0..grid {
        let v = phi(i as f64 / (grid - 1) as f64);
        if v > best_v {
            best_v = v;
            best_i = i;
        }
    }
    let lo = best_i.saturating_sub(1) as f64 / (grid - 1) as f64;
    let hi = (best_i + 1).min(grid - 1) as f64 / (grid - 1) as f64;
    let (_, v) = golden_section_max(lo, hi, 1e-12, phi);
    Ok(1.0 / v.max(best_v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_inf_basics() {
        assert_eq!(k_inf_g(5, 0.3, 1.0).unwrap(), 0.0);
        // a = 1 kills the exponential term
        let b = 1.5f64;
        let tail = b * b.ln().powi(9) / (2.0 * (1.0 - b.ln()));
        assert!((k_inf_g(10, 1.0, b).unwrap() - tail).abs() < 1e-15);
        assert!(k_inf_g(5, 0.3, 2.8).is_err());
        assert!(k_inf_g(2, 0.3, 1.5).is_err());
    }

    #[test]
    fn k_inf_term_by_term_oracle() {
        // recompute the three pieces with plain operators
        let (g, a, b) = (3usize, 0.5, 1.5);
        let lb: f64 = 1.5f64.ln();
        let expected = ((1.0 - a) * lb / b).exp() - 1.0 + b * lb * lb / (2.0 * (1.0 - lb));
        assert!((k_inf_g(g, a, b).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn k_inf_monotone_in_b() {
        let mut prev = -1.0;
        for i in 0..200 {
            let b = 1.0 + (std::f64::consts::E * (1.0 - 1e-6) - 1.0) * i as f64 / 199.0;
            let k = k_inf_g(4, 0.37, b).unwrap();
            assert!(k >= prev);
            prev = k;
        }
    }

    #[test]
    fn solve_b_inf_residual() {
        for g in [3usize, 7, 50] {
            for a in [0.1, 0.5, 0.93] {
                let b = solve_b_inf(g, a).unwrap();
                assert!((k_inf_g(g, a, b).unwrap() - a).abs() < 1e-11);
            }
        }
    }

    // K^g_inf does NOT dominate K^g_delta pointwise (it fails for ~a quarter
    // of the (a, b) grid: ln b/(delta b) sits below x_delta(b), so the
    // delta-form sees a larger radius). What the limit argument really
    // provides, and what these two tests pin down, is (1) the delta-form
    // evaluated at the smaller radius ln b/(delta b) is dominated by
    // K^g_inf, and (2) the resulting certified radius (1-a) ln b_inf /
    // (delta b_inf) never exceeds z^g_delta(a) — which is exactly what the
    // C/delta <= K_g comparison needs.
    #[test]
    fn k_inf_dominates_the_substituted_radius_chain() {
        use crate::bounds::{f_d_delta, rho_delta, Dist};
        for delta in 3..=30u32 {
            let b_hi = rho_delta(delta).min(std::f64::consts::E) * (1.0 - 1e-9);
            let d = delta as f64;
            for g in [3usize, 5, 12] {
                for ai in 0..=10 {
                    let a = ai as f64 / 10.0;
                    for bi in 1..=12 {
                        let b = 1.0 + (b_hi - 1.0) * bi as f64 / 12.0;
                        let lb = b.ln();
                        let first = (1.0 + (1.0 - a) * lb / (d * b)).powi(delta as i32) - 1.0;
                        let tail = f_d_delta(delta, Dist::Finite(g - 2), b).unwrap()
                            * (d * (d - 1.0) / 2.0)
                            * (lb / d)
                            * (1.0 + lb / d).powi(delta as i32 - 1);
                        let upper = k_inf_g(g, a, b).unwrap();
                        assert!(
                            first + tail <= upper + 1e-12,
                            "chain failed at delta={delta} g={g} a={a} b={b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn jpr_radius_never_exceeds_z_radius() {
        use crate::bounds::z_delta_g;
        use graph_core::Girth;
        for delta in 3..=30u32 {
            for g in [3usize, 5, 12] {
                for ai in 0..=20 {
                    let a = ai as f64 / 20.0;
                    let b_inf = solve_b_inf(g, a).unwrap();
                    let lhs = if b_inf > 1.0 {
                        (1.0 - a) * b_inf.ln() / (delta as f64 * b_inf)
                    } else {
                        0.0
                    };
                    let rhs = z_delta_g(delta, Girth::Finite(g), a).unwrap();
                    assert!(
                        lhs <= rhs + 1e-12,
                        "radius comparison failed at delta={delta} g={g} a={a}"
                    );
                }
            }
        }
    }

    #[test]
    fn published_k_g_anchors() {
        assert!((k_g_jpr(3).unwrap() - 5.93148).abs() < 1e-3);
        assert!((k_g_jpr(5).unwrap() - 4.87264).abs() < 1e-3);
        assert!((k_g_jpr(100).unwrap() - 3.87487).abs() < 1e-3);
    }

    #[test]
    fn k_g_limit() {
        assert!((k_g_jpr(10_000).unwrap() - 3.85977).abs() < 5e-3);
    }
}
