//! Generating functions for subtrees of the Δ-regular infinite tree and
//! subtree counters on concrete graphs.
//!
//! On the infinite side: the rooted-subtree series `u(x) = x (1+u)^(Δ-1)`,
//! its Lagrange-inversion coefficients, and the derived `W`, `W*`, `S`
//! values with their closed-form inversions. On the concrete side: the
//! anchored subtree polynomials `T_(G,v)` and `T_(G,v,w)` that the infinite
//! tree dominates.

mod coeffs;
mod graphs;
mod series;

pub use coeffs::{count_rooted_subtrees, u_coeff};
pub use graphs::{
    t_graph_v, t_graph_v_poly, t_graph_vw, t_graph_vw_poly, DEFAULT_SUBTREE_EDGE_CAP,
};
pub use series::{s_of_x, solve_u, w_of_x, w_star_of_x, SeriesPoint};

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum TreeGfError {
    /// `x` outside `[0, R_Δ)`.
    XOutOfDomain { x: f64, delta: u32 },
    /// Δ below the operation's minimum.
    DeltaTooSmall { delta: u32, min: u32 },
    /// brute-force subtree count requested above its cap.
    NTooLarge { n: usize, cap: usize },
    /// graph enumeration above the edge cap.
    SizeCap { size: usize, cap: usize },
    Graph(graph_core::GraphError),
}

impl fmt::Display for TreeGfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeGfError::XOutOfDomain { x, delta } => {
                write!(f, "x = {x} outside [0, R) for delta = {delta}")
            }
            TreeGfError::DeltaTooSmall { delta, min } => {
                write!(f, "delta = {delta} below minimum {min}")
            }
            TreeGfError::NTooLarge { n, cap } => {
                write!(f, "subtree size {n} above brute-force cap {cap}")
            }
            TreeGfError::SizeCap { size, cap } => {
                write!(f, "graph has {size} edges, above subtree enumeration cap {cap}")
            }
            TreeGfError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TreeGfError {}

impl From<graph_core::GraphError> for TreeGfError {
    fn from(e: graph_core::GraphError) -> Self {
        TreeGfError::Graph(e)
    }
}
