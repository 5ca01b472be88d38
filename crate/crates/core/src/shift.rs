//! The connectivity-shift construction and its empirical verifiers.
//!
//! The shift graph of a digraph D on node set R places a copy R' next to
//! R, replaces every arc (u,v) by the undirected edge {u, v'}, and adds a
//! clique on each of R and R' plus the matching {v, v'}. Pairwise
//! connectivities move up by exactly |R|: kappa_G(u, v') equals
//! kappa_D(u, v) + |R|, and globally kappa(G) = kappa(D) + |R|. The
//! verifiers here check both identities by exact max-flow computation,
//! and an analytic cut generator rebuilds minimum cuts in G from minimum
//! cuts in D as a second, flow-free certificate.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{
    digraph_reachable_avoiding, kappa_global, kappa_global_digraph, kappa_st, kappa_st_digraph,
    reachable_avoiding,
};
use crate::graph::{clique_edges, Digraph, UndirectedGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShiftError {
    #[error("the digraph needs at least {min} nodes, got {k}")]
    TooFewNodes { k: usize, min: usize },
    #[error("the digraph must be acyclic")]
    CyclicDigraph,
    #[error("endpoints must differ")]
    SameEndpoints,
    #[error("node {node} out of range for a digraph on {k} nodes")]
    NodeOutOfRange { node: usize, k: usize },
    #[error(
        "arc {u}->{v} is present, so {u} and the copy of {v} are adjacent and admit no vertex cut"
    )]
    AdjacentEndpoints { u: usize, v: usize },
}

/// Undirected graph on 2k nodes built from a k-node digraph.
///
/// Id convention: original node `u` keeps id `u` (0 <= u < k); its copy
/// has id `u + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftGraph {
    base: UndirectedGraph,
    k: usize,
}

impl ShiftGraph {
    pub fn base(&self) -> &UndirectedGraph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Id of the copy of original node `v`.
    pub fn copy_id(&self, v: usize) -> usize {
        debug_assert!(v < self.k);
        v + self.k
    }
}

/// Build the connectivity-shift graph of `d`. The edge set is the clique
/// on the originals, the clique on the copies, the original-copy
/// matching, and one edge {u, v+k} per arc (u,v); its size is therefore
/// 2*C(k,2) + k + |arcs|.
pub fn build_shift_graph(d: &Digraph) -> ShiftGraph {
    let k = d.node_count();
    let mut edges = clique_edges(&(0..k).collect());
    edges.extend(clique_edges(&(k..2 * k).collect()));
    edges.extend((0..k).map(|v| (v, v + k)));
    edges.extend(d.arcs().map(|(u, v)| (u, v + k)));
    let base = UndirectedGraph::new(2 * k, edges).expect("shift edges are pairwise distinct");
    debug_assert_eq!(base.edge_count(), k * k.saturating_sub(1) + k + d.arc_count());
    ShiftGraph { base, k }
}

/// One ordered-pair comparison inside a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub u: usize,
    pub v: usize,
    pub kappa_shift: usize,
    pub kappa_digraph: usize,
    pub pass: bool,
}

/// Pairwise and global comparison of shift-graph connectivities against
/// digraph connectivities plus k.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftConnectivityReport {
    pub k: usize,
    pub pairs: Vec<PairCheck>,
    pub kappa_shift_graph: usize,
    pub kappa_digraph_global: usize,
    pub global_pass: bool,
    pub pass: bool,
}

/// Check kappa_G(u, v+k) == kappa_D(u, v) + k for every ordered pair
/// u != v, and kappa(G) == kappa(D) + k. Pairs with u == v are skipped:
/// kappa of a node to itself is undefined.
pub fn verify_shift_connectivity(d: &Digraph) -> Result<ShiftConnectivityReport, ShiftError> {
    let k = d.node_count();
    if k < 2 {
        return Err(ShiftError::TooFewNodes { k, min: 2 });
    }
    let shift = build_shift_graph(d);
    let mut pairs = Vec::with_capacity(k * (k - 1));
    for u in 0..k {
        for v in 0..k {
            if u == v {
                continue;
            }
            let kappa_shift =
                kappa_st(shift.base(), u, shift.copy_id(v)).expect("valid pair").value;
            let kappa_digraph = kappa_st_digraph(d, u, v).expect("valid pair").value;
            pairs.push(PairCheck {
                u,
                v,
                kappa_shift,
                kappa_digraph,
                pass: kappa_shift == kappa_digraph + k,
            });
        }
    }
    let kappa_shift_graph = kappa_global(shift.base()).expect("2k >= 4 nodes");
    let kappa_digraph_global = kappa_global_digraph(d).expect("k >= 2 nodes");
    let global_pass = kappa_shift_graph == kappa_digraph_global + k;
    let pass = global_pass && pairs.iter().all(|p| p.pass);
    Ok(ShiftConnectivityReport {
        k,
        pairs,
        kappa_shift_graph,
        kappa_digraph_global,
        global_pass,
        pass,
    })
}

/// Analytic minimum cut separating `u` from the copy of `v` in the shift
/// graph, built without max-flow on the shift graph itself: take a
/// minimum vertex cut C for u->v in `d` (empty when v is unreachable),
/// let X be the nodes reachable from u in d - C and Y the rest of R, and
/// return N = Y + C + copies of (X + C). Then |N| = k + |C| and deleting
/// N disconnects u from v+k; both are asserted before returning.
///
/// When the arc u->v is present the pair {u, v+k} is an edge of the shift
/// graph, no vertex cut exists, and `AdjacentEndpoints` is returned.
pub fn shift_cut_witness(d: &Digraph, u: usize, v: usize) -> Result<BTreeSet<usize>, ShiftError> {
    let k = d.node_count();
    for node in [u, v] {
        if node >= k {
            return Err(ShiftError::NodeOutOfRange { node, k });
        }
    }
    if u == v {
        return Err(ShiftError::SameEndpoints);
    }
    if d.has_arc(u, v) {
        return Err(ShiftError::AdjacentEndpoints { u, v });
    }
    let cut = kappa_st_digraph(d, u, v)
        .expect("valid pair")
        .cut
        .expect("non-adjacent digraph pairs always carry a cut");
    let reached = digraph_reachable_avoiding(d, u, &cut);
    let mut witness = BTreeSet::new();
    for w in 0..k {
        if cut.contains(&w) {
            // C itself and its copies.
            witness.insert(w);
            witness.insert(w + k);
        } else if reached[w] {
            // X contributes its copies only.
            witness.insert(w + k);
        } else {
            // Y contributes its originals only.
            witness.insert(w);
        }
    }
    assert_eq!(witness.len(), k + cut.len(), "witness size must be k + |C|");
    let shift = build_shift_graph(d);
    let separated = !reachable_avoiding(shift.base(), u, &witness)[shift.copy_id(v)];
    assert!(separated, "witness must disconnect u from the copy of v");
    Ok(witness)
}

/// DAG specialization report: the shift graph of a k-node DAG has exactly
/// 2k nodes and global connectivity k.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DagShiftReport {
    pub k: usize,
    pub node_count: usize,
    pub node_count_pass: bool,
    pub kappa: usize,
    pub kappa_pass: bool,
    pub kappa_digraph_global: usize,
    pub pairs: Vec<PairCheck>,
    pub pass: bool,
}

/// Verify the DAG case: node count 2k, kappa(G) = k (a DAG with k >= 2
/// has kappa(D) = 0), and the pairwise shift identity.
pub fn verify_dag_shift(d: &Digraph) -> Result<DagShiftReport, ShiftError> {
    if !d.is_acyclic() {
        return Err(ShiftError::CyclicDigraph);
    }
    let report = verify_shift_connectivity(d)?;
    let k = report.k;
    let shift = build_shift_graph(d);
    let node_count = shift.base().node_count();
    let node_count_pass = node_count == 2 * k;
    let kappa_pass = report.kappa_shift_graph == k && report.kappa_digraph_global == 0;
    let pass = node_count_pass && kappa_pass && report.pairs.iter().all(|p| p.pass);
    Ok(DagShiftReport {
        k,
        node_count,
        node_count_pass,
        kappa: report.kappa_shift_graph,
        kappa_pass,
        kappa_digraph_global: report.kappa_digraph_global,
        pairs: report.pairs,
        pass,
    })
}
