//! Exact chromatic-polynomial machinery on concrete graphs.
//!
//! Two independent routes to the chromatic polynomial live here — the
//! deletion–contraction recursion and the Whitney broken-circuit-free forest
//! expansion — together with the polymer-gas partition function that ties
//! them to statistical mechanics. Identities between the routes hold
//! bit-exactly in integer/rational arithmetic; only the final complex
//! evaluation of the ratio `R^u` is floating point.

mod caps;
mod chromatic;
mod forests;
mod poly;
mod polymer;
mod ratio;

pub use caps::{BcfError, EnumCaps};
pub use chromatic::{brute, chromatic_dc};
pub use forests::{
    bcf_spanning_tree_count, chromatic_whitney, enumerate_bcf_forests, forest_gf, is_bcf,
    penrose_check, ForestRecord,
};
pub use poly::IntPoly;
pub use polymer::{activity, css_signed_sum, xi_polymer, ActivityValue};
pub use ratio::ratio_r_u;
