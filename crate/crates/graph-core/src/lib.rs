//! Simple undirected graphs carrying a total edge order.
//!
//! The edge order (position in the edge list; later position = larger edge)
//! is part of the graph value: broken-circuit computations downstream depend
//! on it, so edit operations preserve the relative order of surviving edges.

mod graph;
mod io;
mod order;

pub mod corpus;

pub use graph::{Girth, Graph, GraphError};
pub use io::{parse_dimacs_col, parse_edge_list, serialize_edge_list, ParseError, ParsedGraph};
pub use order::{shuffled_indices, EdgeOrderPolicy, SplitMix64};
