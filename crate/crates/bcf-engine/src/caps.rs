use std::fmt;

use graph_core::GraphError;

/// Limits on the exponential enumerations. Everything in this crate is
/// desk-scale by design; these caps turn runaway inputs into clean errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCaps {
    /// Maximum |E| for full broken-circuit-free forest enumeration.
    pub bcf_edges: usize,
    /// Maximum |V| for polymer-gas partition function enumeration.
    pub polymer_vertices: usize,
    /// Maximum |E| for the deletion–contraction recursion.
    pub dc_edges: usize,
}

impl EnumCaps {
    pub const DEFAULT: EnumCaps = EnumCaps {
        bcf_edges: 20,
        polymer_vertices: 12,
        dc_edges: 40,
    };

    /// One number overriding both edge-based caps (the polymer cap is
    /// vertex-based and stays).
    pub fn with_max_edges(self, max_edges: usize) -> Self {
        EnumCaps {
            bcf_edges: max_edges,
            dc_edges: max_edges,
            ..self
        }
    }
}

impl Default for EnumCaps {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BcfError {
    /// An enumeration would exceed its configured cap.
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    /// The vertex subset is not connected in the graph.
    NotConnected,
    /// The vertex subset has fewer than two vertices.
    SubsetTooSmall { size: usize },
    /// Activities are undefined at q = 0.
    ZeroQ,
    /// The edge subset passed as a forest contains a cycle.
    CyclicSubset,
    /// The ratio denominator is within tolerance of zero.
    SingularRatio { denominator: f64, scale: f64 },
    Graph(GraphError),
}

impl fmt::Display for BcfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BcfError::SizeCap { what, size, cap } => {
                write!(f, "{what} size {size} exceeds enumeration cap {cap}")
            }
            BcfError::NotConnected => write!(f, "vertex subset is not connected"),
            BcfError::SubsetTooSmall { size } => {
                write!(f, "vertex subset has {size} < 2 vertices")
            }
            BcfError::ZeroQ => write!(f, "activity undefined at q = 0"),
            BcfError::CyclicSubset => write!(f, "edge subset contains a cycle"),
            BcfError::SingularRatio { denominator, scale } => {
                write!(f, "ratio denominator {denominator:e} below tolerance {scale:e}")
            }
            BcfError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for BcfError {}

impl From<GraphError> for BcfError {
    fn from(e: GraphError) -> Self {
        BcfError::Graph(e)
    }
}
