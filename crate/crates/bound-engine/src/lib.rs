//! Scalar machinery for the certified zero-free radius `C(Δ, g)`.
//!
//! Everything here is pure `f64` arithmetic: the characteristic functions
//! `x_Δ`, `f^d_Δ`, `K^g_Δ`, their root solves and the maximization defining
//! `C(Δ, g)`, plus the comparator constant `K_g`. Bisection is used for every
//! root (the functions are monotone in the solved variable, so bracketing is
//! guaranteed); the maximization over `a` is a dense grid followed by
//! golden-section refinement of the bracketing cell.

mod bounds;
mod jpr;
mod scalar;

pub use bounds::{
    a_delta, big_r_delta, c_delta_g, c_delta_g_with_grid, f_d_delta, k_delta_g, rho_delta,
    solve_b, x_delta, z_delta_g, BoundError, BoundResult, Dist, DEFAULT_GRID,
};
pub use jpr::{k_g_jpr, k_g_jpr_with_grid, k_inf_g, solve_b_inf};
pub use scalar::{bisect_increasing, golden_section_max};

pub use graph_core::Girth;
