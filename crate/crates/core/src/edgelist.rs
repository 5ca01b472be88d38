//! Canonical edge-list text format.
//!
//! Line 1 is a header `U n m` (undirected) or `D n m` (directed), followed
//! by exactly `m` lines `u v` with `0 <= u,v < n` and `u != v`; undirected
//! lines require `u < v`. UTF-8, LF line endings, no trailing whitespace.
//! Serialization sorts edges, so `parse(serialize(g)) == g` exactly.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Digraph, GraphError, UndirectedGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line 1: malformed header {0:?}")]
    MalformedHeader(String),
    #[error("line {line}: malformed edge line {text:?}")]
    MalformedEdgeLine { line: usize, text: String },
    #[error("line {line}: node {node} out of range for n={n}")]
    NodeOutOfRange { line: usize, node: usize, n: usize },
    #[error("line {line}: self-loop at node {node}")]
    SelfLoop { line: usize, node: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: undirected endpoints must satisfy u < v, got {u} {v}")]
    UnorderedEndpoints { line: usize, u: usize, v: usize },
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("carriage return found; LF line endings required")]
    CarriageReturn,
}

/// Result of parsing an edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Undirected(UndirectedGraph),
    Directed(Digraph),
}

impl ParsedGraph {
    pub fn node_count(&self) -> usize {
        match self {
            ParsedGraph::Undirected(g) => g.node_count(),
            ParsedGraph::Directed(d) => d.node_count(),
        }
    }

    pub fn as_undirected(&self) -> Option<&UndirectedGraph> {
        match self {
            ParsedGraph::Undirected(g) => Some(g),
            ParsedGraph::Directed(_) => None,
        }
    }

    pub fn as_digraph(&self) -> Option<&Digraph> {
        match self {
            ParsedGraph::Directed(d) => Some(d),
            ParsedGraph::Undirected(_) => None,
        }
    }
}

fn parse_header(line: &str) -> Option<(bool, usize, usize)> {
    let mut it = line.split(' ');
    let kind = it.next()?;
    let directed = match kind {
        "U" => false,
        "D" => true,
        _ => return None,
    };
    let n = it.next()?.parse().ok()?;
    let m = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((directed, n, m))
}

fn parse_endpoints(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split(' ');
    let u = it.next()?.parse().ok()?;
    let v = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((u, v))
}

/// Parse the canonical edge-list format. A single trailing newline is
/// tolerated; carriage returns are not.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, ParseError> {
    if text.contains('\r') {
        return Err(ParseError::CarriageReturn);
    }
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    let (directed, n, m) =
        parse_header(header).ok_or_else(|| ParseError::MalformedHeader(header.to_string()))?;

    let mut pairs = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    let mut found = 0usize;
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        found += 1;
        if found > m {
            return Err(ParseError::EdgeCountMismatch { expected: m, found });
        }
        let (u, v) = parse_endpoints(line).ok_or_else(|| ParseError::MalformedEdgeLine {
            line: line_no,
            text: line.to_string(),
        })?;
        for node in [u, v] {
            if node >= n {
                return Err(ParseError::NodeOutOfRange { line: line_no, node, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line: line_no, node: u });
        }
        if !directed && u > v {
            return Err(ParseError::UnorderedEndpoints { line: line_no, u, v });
        }
        if !seen.insert((u, v)) {
            return Err(ParseError::DuplicateEdge { line: line_no, u, v });
        }
        pairs.push((u, v));
    }
    if found != m {
        return Err(ParseError::EdgeCountMismatch { expected: m, found });
    }

    let invalid = |e: GraphError| -> ! { unreachable!("edge validity checked line by line: {e}") };
    if directed {
        Ok(ParsedGraph::Directed(Digraph::new(n, pairs).unwrap_or_else(|e| invalid(e))))
    } else {
        Ok(ParsedGraph::Undirected(UndirectedGraph::new(n, pairs).unwrap_or_else(|e| invalid(e))))
    }
}

impl UndirectedGraph {
    /// Canonical edge-list text: header then edges in sorted order, LF
    /// separated, no trailing newline.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("U {} {}", self.node_count(), self.edge_count());
        for (u, v) in self.edges() {
            write!(out, "\n{u} {v}").expect("write to string");
        }
        out
    }
}

impl Digraph {
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("D {} {}", self.node_count(), self.arc_count());
        for (u, v) in self.arcs() {
            write!(out, "\n{u} {v}").expect("write to string");
        }
        out
    }
}
