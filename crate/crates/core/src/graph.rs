//! Core graph value types shared by every other module.
//!
//! Graphs live on dense integer node ids `0..n` and are immutable once
//! built; role metadata (which node is a copy, which gadget a node belongs
//! to) is kept in wrapper types so the connectivity machinery stays
//! generic. Builders accumulate edges and then freeze.

use std::collections::BTreeSet;
use std::ops::Range;

use serde::Serialize;
use thiserror::Error;

/// Errors raised while constructing or slicing graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("node {node} out of range for a graph on {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("self-loop at node {node}")]
    SelfLoop { node: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("duplicate arc {u}->{v}")]
    DuplicateArc { u: usize, v: usize },
}

/// Simple undirected graph: no self-loops, no parallel edges.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v`; adjacency is
/// kept symmetric. Equality is edge-set equality, which matches the
/// canonical sorted serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<BTreeSet<usize>>,
}

impl UndirectedGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut builder = UndirectedBuilder::new(n);
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.freeze())
    }

    pub fn empty(n: usize) -> Self {
        UndirectedBuilder::new(n).freeze()
    }

    /// Complete graph on `n` nodes.
    pub fn complete(n: usize) -> Self {
        let ids: BTreeSet<usize> = (0..n).collect();
        Self::new(n, clique_edges(&ids)).expect("clique edges are valid")
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> Range<usize> {
        0..self.n
    }

    /// Edges in sorted order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.contains(&(a, b))
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().copied()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// New graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((u, v));
        Self::new(self.n, edges)
    }

    /// New graph with the edge removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let edges = self.edges().filter(|&e| e != (a, b));
        Self::new(self.n, edges).expect("removing an edge preserves validity")
    }

    /// Subgraph induced by `ids`, relabeled to `0..|ids|` in ascending
    /// original-id order. Returns the graph together with the relabeling
    /// map: entry `i` of the map is the original id of new node `i`.
    pub fn induced_subgraph(
        &self,
        ids: &BTreeSet<usize>,
    ) -> Result<(UndirectedGraph, Vec<usize>), GraphError> {
        for &id in ids {
            if id >= self.n {
                return Err(GraphError::NodeOutOfRange { node: id, n: self.n });
            }
        }
        let map: Vec<usize> = ids.iter().copied().collect();
        let index_of = |orig: usize| map.binary_search(&orig).expect("id in map");
        let edges = self
            .edges()
            .filter(|(u, v)| ids.contains(u) && ids.contains(v))
            .map(|(u, v)| (index_of(u), index_of(v)));
        let sub = UndirectedGraph::new(map.len(), edges)?;
        Ok((sub, map))
    }
}

/// Accumulates edges for an [`UndirectedGraph`], then freezes.
#[derive(Debug, Clone)]
pub struct UndirectedBuilder {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl UndirectedBuilder {
    pub fn new(n: usize) -> Self {
        Self { n, edges: BTreeSet::new() }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::NodeOutOfRange { node: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::NodeOutOfRange { node: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { node: u });
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if !self.edges.insert((a, b)) {
            return Err(GraphError::DuplicateEdge { u: a, v: b });
        }
        Ok(())
    }

    pub fn freeze(self) -> UndirectedGraph {
        let mut adj = vec![BTreeSet::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        UndirectedGraph { n: self.n, edges: self.edges, adj }
    }
}

/// Simple directed graph: no self-loops, no parallel arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
    out_adj: Vec<BTreeSet<usize>>,
}

impl Digraph {
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            if u >= n {
                return Err(GraphError::NodeOutOfRange { node: u, n });
            }
            if v >= n {
                return Err(GraphError::NodeOutOfRange { node: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { node: u });
            }
            if !set.insert((u, v)) {
                return Err(GraphError::DuplicateArc { u, v });
            }
        }
        let mut out_adj = vec![BTreeSet::new(); n];
        for &(u, v) in &set {
            out_adj[u].insert(v);
        }
        Ok(Digraph { n, arcs: set, out_adj })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, std::iter::empty()).expect("empty digraph is valid")
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn nodes(&self) -> Range<usize> {
        0..self.n
    }

    /// Arcs in sorted order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_adj[u].iter().copied()
    }

    /// New digraph with the arc removed (no-op if absent).
    pub fn without_arc(&self, u: usize, v: usize) -> Self {
        let arcs = self.arcs().filter(|&a| a != (u, v));
        Self::new(self.n, arcs).expect("removing an arc preserves validity")
    }

    /// True iff the digraph has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        // colors: 0 unvisited, 1 on stack, 2 done
        let mut color = vec![0u8; self.n];
        fn visit(d: &Digraph, u: usize, color: &mut [u8]) -> bool {
            color[u] = 1;
            for v in d.out_neighbors(u) {
                if color[v] == 1 {
                    return false;
                }
                if color[v] == 0 && !visit(d, v, color) {
                    return false;
                }
            }
            color[u] = 2;
            true
        }
        (0..self.n).all(|u| color[u] != 0 || visit(self, u, &mut color))
    }
}

/// All unordered pairs over `ids`: the edge set of a clique.
pub fn clique_edges(ids: &BTreeSet<usize>) -> Vec<(usize, usize)> {
    let v: Vec<usize> = ids.iter().copied().collect();
    let mut out = Vec::with_capacity(v.len() * v.len().saturating_sub(1) / 2);
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            out.push((v[i], v[j]));
        }
    }
    out
}

/// A claimed partition `(S, C, T)` of a graph's nodes witnessing that the
/// graph is not k-connected: `|C| < k`, `S` and `T` nonempty, and no edge
/// joins `S` to `T`. Produced by separator search, checked by
/// [`crate::connectivity::verify_separator`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorWitness {
    pub s: BTreeSet<usize>,
    pub c: BTreeSet<usize>,
    pub t: BTreeSet<usize>,
}

impl SeparatorWitness {
    pub fn new(s: BTreeSet<usize>, c: BTreeSet<usize>, t: BTreeSet<usize>) -> Self {
        Self { s, c, t }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_rejects_bad_edges() {
        let mut b = UndirectedBuilder::new(3);
        assert_eq!(b.add_edge(0, 3), Err(GraphError::NodeOutOfRange { node: 3, n: 3 }));
        assert_eq!(b.add_edge(1, 1), Err(GraphError::SelfLoop { node: 1 }));
        b.add_edge(2, 0).unwrap();
        assert_eq!(b.add_edge(0, 2), Err(GraphError::DuplicateEdge { u: 0, v: 2 }));
    }

    #[test]
    fn adjacency_is_symmetric_and_normalized() {
        let g = UndirectedGraph::new(4, [(2, 0), (1, 3)]).unwrap();
        assert!(g.has_edge(0, 2) && g.has_edge(2, 0));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn degree_sum_equals_twice_edge_count() {
        let g = UndirectedGraph::complete(6);
        let sum: usize = g.nodes().map(|u| g.degree(u)).sum();
        assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn clique_edge_counts() {
        let ids: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
        assert_eq!(clique_edges(&ids), vec![(0, 1), (0, 2), (1, 2)]);
        let singleton: BTreeSet<usize> = [5].into_iter().collect();
        assert!(clique_edges(&singleton).is_empty());
        let six: BTreeSet<usize> = (0..6).collect();
        assert_eq!(clique_edges(&six).len(), 15);
    }

    #[test]
    fn induced_subgraph_of_k4_is_k3() {
        let g = UndirectedGraph::complete(4);
        let ids: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
        let (sub, map) = g.induced_subgraph(&ids).unwrap();
        assert_eq!(sub, UndirectedGraph::complete(3));
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn induced_subgraph_handles_empty_and_bad_ids() {
        let g = UndirectedGraph::complete(4);
        let (sub, map) = g.induced_subgraph(&BTreeSet::new()).unwrap();
        assert_eq!(sub.node_count(), 0);
        assert!(map.is_empty());
        let bad: BTreeSet<usize> = [1, 9].into_iter().collect();
        assert!(g.induced_subgraph(&bad).is_err());
    }

    #[test]
    fn digraph_basics() {
        let d = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(d.has_arc(0, 1) && !d.has_arc(1, 0));
        assert!(d.is_acyclic());
        let cyc = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert!(!cyc.is_acyclic());
        assert!(Digraph::new(2, [(0, 1), (0, 1)]).is_err());
        assert!(Digraph::new(2, [(1, 1)]).is_err());
    }

    #[test]
    fn without_edge_and_with_edge_roundtrip() {
        let g = UndirectedGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let smaller = g.without_edge(2, 1);
        assert_eq!(smaller.edge_count(), 1);
        let back = smaller.with_edge(1, 2).unwrap();
        assert_eq!(back, g);
    }
}
