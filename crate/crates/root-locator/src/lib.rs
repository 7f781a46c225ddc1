//! Complex root extraction for integer polynomials and the zero-free
//! verification report tying chromatic roots to the certified radius.

mod report;
mod roots;

pub use report::{
    verify_zero_free, verify_zero_free_with_tolerance, RootEntry, ZeroFreeReport,
};
pub use roots::{find_roots, RootFind, RESIDUAL_TOL};

use std::fmt;

#[derive(Debug)]
pub enum RootError {
    /// Root extraction needs degree >= 1.
    DegreeTooSmall,
    /// Zero-free verification needs at least one edge.
    NoEdges,
    Bcf(bcf_engine::BcfError),
    Bound(bound_engine::BoundError),
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::DegreeTooSmall => write!(f, "polynomial degree below 1"),
            RootError::NoEdges => write!(f, "graph has no edges"),
            RootError::Bcf(e) => write!(f, "{e}"),
            RootError::Bound(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for RootError {}
