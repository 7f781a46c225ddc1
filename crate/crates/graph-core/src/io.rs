use std::collections::HashMap;
use std::fmt;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Line did not contain exactly two non-negative integers.
    Malformed { line: usize, content: String },
    SelfLoop { line: usize, label: u64 },
    DuplicateEdge { line: usize, a: u64, b: u64 },
    /// DIMACS-specific: missing/invalid problem line or vertex out of range.
    BadHeader { line: usize, content: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Malformed { line, content } => {
                write!(f, "line {line}: malformed edge line {content:?}")
            }
            ParseError::SelfLoop { line, label } => {
                write!(f, "line {line}: self-loop at vertex {label}")
            }
            ParseError::DuplicateEdge { line, a, b } => {
                write!(f, "line {line}: duplicate edge {{{a}, {b}}}")
            }
            ParseError::BadHeader { line, content } => {
                write!(f, "line {line}: bad header {content:?}")
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Result of file ingestion: the dense-id graph plus the original labels in
/// id order (`labels[i]` is the file label of vertex `i`).
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

/// Parses the edge-list format: one edge per line as two whitespace-separated
/// non-negative integers; `#` starts a comment line; blank lines ignored.
/// Arbitrary labels are remapped to dense 0-based ids by first appearance.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut labels: Vec<u64> = Vec::new();
    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut it = trimmed.split_whitespace();
        let (a, b) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    content: trimmed.to_string(),
                })
            }
        };
        let parse = |s: &str| -> Result<u64, ParseError> {
            s.parse().map_err(|_| ParseError::Malformed {
                line,
                content: trimmed.to_string(),
            })
        };
        let (la, lb) = (parse(a)?, parse(b)?);
        if la == lb {
            return Err(ParseError::SelfLoop { line, label: la });
        }
        let mut id = |label: u64| -> usize {
            *index.entry(label).or_insert_with(|| {
                labels.push(label);
                labels.len() - 1
            })
        };
        let (u, v) = (id(la), id(lb));
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge {
                line,
                a: la.min(lb),
                b: la.max(lb),
            });
        }
        edges.push((u, v));
    }
    let graph = Graph::new(labels.len(), &edges).expect("remapped edges are valid");
    Ok(ParsedGraph { graph, labels })
}

/// Serializes a graph back to the edge-list format using its canonical dense
/// ids, one edge per line in edge order. Isolated vertices do not appear.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

/// Reads the DIMACS `.col` format: a `p edge <n> <m>` problem line, then
/// `e <u> <v>` lines with 1-based vertices; `c` lines are comments.
pub fn parse_dimacs_col(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields.as_slice() {
            ["p", "edge", nv, _m] => {
                if n.is_some() {
                    return Err(ParseError::BadHeader {
                        line,
                        content: trimmed.to_string(),
                    });
                }
                n = Some(nv.parse().map_err(|_| ParseError::BadHeader {
                    line,
                    content: trimmed.to_string(),
                })?);
            }
            ["e", a, b] => {
                let n = n.ok_or(ParseError::BadHeader {
                    line,
                    content: "edge before problem line".to_string(),
                })?;
                let parse = |s: &str| -> Result<usize, ParseError> {
                    let v: usize = s.parse().map_err(|_| ParseError::Malformed {
                        line,
                        content: trimmed.to_string(),
                    })?;
                    if v == 0 || v > n {
                        return Err(ParseError::BadHeader {
                            line,
                            content: trimmed.to_string(),
                        });
                    }
                    Ok(v - 1)
                };
                let (u, v) = (parse(a)?, parse(b)?);
                if u == v {
                    return Err(ParseError::SelfLoop {
                        line,
                        label: (u + 1) as u64,
                    });
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        a: (u.min(v) + 1) as u64,
                        b: (u.max(v) + 1) as u64,
                    });
                }
                edges.push((u, v));
            }
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    content: trimmed.to_string(),
                })
            }
        }
    }
    let n = n.ok_or(ParseError::BadHeader {
        line: 0,
        content: "missing problem line".to_string(),
    })?;
    let graph = Graph::new(n, &edges).map_err(|e| match e {
        GraphError::EndpointOutOfRange { u, .. } => ParseError::BadHeader {
            line: 0,
            content: format!("vertex {u} out of range"),
        },
        _ => ParseError::Malformed {
            line: 0,
            content: "invalid edge set".to_string(),
        },
    })?;
    Ok(ParsedGraph {
        graph,
        labels: (1..=n as u64).collect(),
    })
}
