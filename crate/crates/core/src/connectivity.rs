//! Exact node-connectivity queries via Menger's theorem reduced to
//! max-flow, plus separator witnesses and exhaustive brute-force oracles
//! for cross-checking.
//!
//! kappa(s,t) is the maximum number of internally-disjoint s-t paths. A
//! direct s-t edge counts as one such path, so adjacent pairs are handled
//! by a capacity-1 source-to-sink arc; for adjacent pairs no vertex cut
//! exists and the result carries a "no cut" marker instead. kappa(s,s) is
//! undefined and rejected.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::flow::{max_flow, FlowNetwork};
use crate::graph::{Digraph, SeparatorWitness, UndirectedGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("endpoints must differ")]
    SameEndpoints,
    #[error("node {node} out of range for a graph on {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("graph on {n} nodes is too small; need at least {min}")]
    TooFewNodes { n: usize, min: usize },
    #[error("graph on {n} nodes is too large for brute force (max {max})")]
    GraphTooLarge { n: usize, max: usize },
    #[error("witness sets do not partition the node set")]
    NotAPartition,
}

/// Result of a pairwise connectivity query.
///
/// When `cut` is present it is a minimum vertex cut: `cut.len() == value`
/// and deleting it disconnects the queried pair. Adjacent pairs carry
/// `None` (the direct edge cannot be separated by node deletions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaResult {
    pub value: usize,
    pub cut: Option<BTreeSet<usize>>,
}

fn check_pair(n: usize, s: usize, t: usize) -> Result<(), ConnectivityError> {
    for node in [s, t] {
        if node >= n {
            return Err(ConnectivityError::NodeOutOfRange { node, n });
        }
    }
    if s == t {
        return Err(ConnectivityError::SameEndpoints);
    }
    Ok(())
}

/// Menger reduction for an undirected graph: every node other than `s`,`t`
/// is split into an in/out pair joined by a unit arc; an edge `{u,v}`
/// between internal nodes becomes unit arcs in both directions; edges at
/// `s` leave the source directly, edges at `t` enter the sink directly,
/// and a direct `{s,t}` edge becomes a single unit source-to-sink arc.
///
/// Network ids: node `v` maps to `2v` (in side) and `2v+1` (out side);
/// the source is `2s` and the sink `2t`.
pub fn node_split_undirected(
    g: &UndirectedGraph,
    s: usize,
    t: usize,
) -> Result<FlowNetwork, ConnectivityError> {
    check_pair(g.node_count(), s, t)?;
    let mut net =
        FlowNetwork::new(2 * g.node_count(), 2 * s, 2 * t).expect("endpoints checked above");
    let mut arc = |from, to| net.add_arc(from, to, 1).expect("ids in range");
    for v in g.nodes() {
        if v != s && v != t {
            arc(2 * v, 2 * v + 1);
        }
    }
    for (u, v) in g.edges() {
        match ((u == s, u == t), (v == s, v == t)) {
            ((true, _), (_, true)) | ((_, true), (true, _)) => arc(2 * s, 2 * t),
            ((true, _), _) => arc(2 * s, 2 * v),
            (_, (true, _)) => arc(2 * s, 2 * u),
            ((_, true), _) => arc(2 * v + 1, 2 * t),
            (_, (_, true)) => arc(2 * u + 1, 2 * t),
            _ => {
                arc(2 * u + 1, 2 * v);
                arc(2 * v + 1, 2 * u);
            }
        }
    }
    Ok(net)
}

/// Menger reduction for a digraph; arcs into the source and out of the
/// sink cannot lie on a simple s-t path and are dropped.
pub fn node_split_digraph(
    d: &Digraph,
    s: usize,
    t: usize,
) -> Result<FlowNetwork, ConnectivityError> {
    check_pair(d.node_count(), s, t)?;
    let mut net =
        FlowNetwork::new(2 * d.node_count(), 2 * s, 2 * t).expect("endpoints checked above");
    let mut arc = |from, to| net.add_arc(from, to, 1).expect("ids in range");
    for v in d.nodes() {
        if v != s && v != t {
            arc(2 * v, 2 * v + 1);
        }
    }
    for (u, v) in d.arcs() {
        if v == s || u == t {
            continue;
        }
        match (u == s, v == t) {
            (true, true) => arc(2 * s, 2 * t),
            (true, false) => arc(2 * s, 2 * v),
            (false, true) => arc(2 * u + 1, 2 * t),
            (false, false) => arc(2 * u + 1, 2 * v),
        }
    }
    Ok(net)
}

/// Nodes reachable from `start` when the nodes in `removed` are deleted.
/// `start` itself must not be in `removed`.
pub(crate) fn reachable_avoiding(
    g: &UndirectedGraph,
    start: usize,
    removed: &BTreeSet<usize>,
) -> Vec<bool> {
    debug_assert!(!removed.contains(&start));
    let mut reached = vec![false; g.node_count()];
    reached[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u) {
            if !reached[v] && !removed.contains(&v) {
                reached[v] = true;
                stack.push(v);
            }
        }
    }
    reached
}

pub(crate) fn digraph_reachable_avoiding(
    d: &Digraph,
    start: usize,
    removed: &BTreeSet<usize>,
) -> Vec<bool> {
    debug_assert!(!removed.contains(&start));
    let mut reached = vec![false; d.node_count()];
    reached[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for v in d.out_neighbors(u) {
            if !reached[v] && !removed.contains(&v) {
                reached[v] = true;
                stack.push(v);
            }
        }
    }
    reached
}

/// Map a min-cut arc of a node-split network back to the graph node it
/// stands for. Arcs into the sink charge their tail's node; every other
/// arc charges its head's node.
fn cut_arc_to_node(arc: (usize, usize), source: usize, sink: usize) -> usize {
    let (a, b) = arc;
    assert!(!(a == source && b == sink), "direct source-sink arcs carry no node");
    if b == sink {
        a / 2
    } else {
        b / 2
    }
}

fn kappa_from_network(
    net: &FlowNetwork,
    adjacent: bool,
    separation_check: impl Fn(&BTreeSet<usize>) -> bool,
) -> KappaResult {
    let outcome = max_flow(net);
    let value = outcome.value as usize;
    let cut = if adjacent {
        None
    } else {
        let nodes: BTreeSet<usize> = outcome
            .min_cut_arcs
            .iter()
            .map(|&arc| cut_arc_to_node(arc, net.source(), net.sink()))
            .collect();
        assert_eq!(nodes.len(), value, "minimum vertex cut size must equal the flow value");
        assert!(separation_check(&nodes), "deleting the cut must separate the pair");
        Some(nodes)
    };
    KappaResult { value, cut }
}

/// kappa(s,t): the maximum number of internally-disjoint s-t paths.
pub fn kappa_st(g: &UndirectedGraph, s: usize, t: usize) -> Result<KappaResult, ConnectivityError> {
    let net = node_split_undirected(g, s, t)?;
    let adjacent = g.has_edge(s, t);
    Ok(kappa_from_network(&net, adjacent, |cut| !reachable_avoiding(g, s, cut)[t]))
}

/// kappa(u,v) in a digraph: internally-disjoint directed u-to-v paths.
pub fn kappa_st_digraph(d: &Digraph, u: usize, v: usize) -> Result<KappaResult, ConnectivityError> {
    let net = node_split_digraph(d, u, v)?;
    let adjacent = d.has_arc(u, v);
    Ok(kappa_from_network(&net, adjacent, |cut| !digraph_reachable_avoiding(d, u, cut)[v]))
}

/// Global connectivity kappa(G) = min over all ordered pairs s != t of
/// kappa(s,t). Scans every ordered pair; at desk scale this needs no
/// pair-pruning.
pub fn kappa_global(g: &UndirectedGraph) -> Result<usize, ConnectivityError> {
    let n = g.node_count();
    if n < 2 {
        return Err(ConnectivityError::TooFewNodes { n, min: 2 });
    }
    let mut min = usize::MAX;
    for s in 0..n {
        for t in 0..n {
            if s != t {
                let r = kappa_st(g, s, t).expect("pair is valid");
                min = min.min(r.value);
            }
        }
    }
    Ok(min)
}

pub fn kappa_global_digraph(d: &Digraph) -> Result<usize, ConnectivityError> {
    let n = d.node_count();
    if n < 2 {
        return Err(ConnectivityError::TooFewNodes { n, min: 2 });
    }
    let mut min = usize::MAX;
    for s in 0..n {
        for t in 0..n {
            if s != t {
                let r = kappa_st_digraph(d, s, t).expect("pair is valid");
                min = min.min(r.value);
            }
        }
    }
    Ok(min)
}

/// Search for a witness that `g` is not k-connected: a partition
/// `(S, C, T)` with `|C| < k`, `S`,`T` nonempty, and no S-T edge, built
/// from a minimum vertex cut (`C` = cut, `S` = one component of `g - C`,
/// `T` = the rest). Returns `None` when `g` is k-connected.
///
/// Complete graphs admit no such partition at all (every candidate S-T
/// pair is adjacent), so they always yield `None`; kappa(K_n) = n-1, so
/// the answer is still correct for every k <= n-1.
pub fn find_separator(g: &UndirectedGraph, k: usize) -> Option<SeparatorWitness> {
    let n = g.node_count();
    if n < 2 {
        return None;
    }
    let mut best: Option<(usize, BTreeSet<usize>, usize)> = None;
    let mut min_adjacent = usize::MAX;
    for s in 0..n {
        for t in (s + 1)..n {
            let r = kappa_st(g, s, t).expect("pair is valid");
            if g.has_edge(s, t) {
                min_adjacent = min_adjacent.min(r.value);
            } else if best.as_ref().is_none_or(|(v, _, _)| r.value < *v) {
                let cut = r.cut.expect("non-adjacent pairs always carry a cut");
                best = Some((r.value, cut, s));
            }
        }
    }
    let (value, cut, anchor) = best?;
    // Non-adjacent pairs attain the global minimum; adjacent pairs can
    // only sit above it.
    assert!(min_adjacent >= value, "adjacent pair below the global minimum cut");
    if value >= k {
        return None;
    }
    let reached = reachable_avoiding(g, anchor, &cut);
    let mut s_side = BTreeSet::new();
    let mut t_side = BTreeSet::new();
    for v in g.nodes() {
        if cut.contains(&v) {
            continue;
        }
        if reached[v] {
            s_side.insert(v);
        } else {
            t_side.insert(v);
        }
    }
    let witness = SeparatorWitness::new(s_side, cut, t_side);
    debug_assert_eq!(verify_separator(g, &witness, k), Ok(true));
    Some(witness)
}

/// Check a claimed witness: errors unless `(S, C, T)` partitions the node
/// set; then true iff `S`,`T` nonempty, `|C| < k`, and no edge joins `S`
/// to `T`.
pub fn verify_separator(
    g: &UndirectedGraph,
    witness: &SeparatorWitness,
    k: usize,
) -> Result<bool, ConnectivityError> {
    let n = g.node_count();
    let SeparatorWitness { s, c, t } = witness;
    let total = s.len() + c.len() + t.len();
    let in_range = s.iter().chain(c).chain(t).all(|&v| v < n);
    let disjoint = s.intersection(c).next().is_none()
        && s.intersection(t).next().is_none()
        && c.intersection(t).next().is_none();
    if total != n || !in_range || !disjoint {
        return Err(ConnectivityError::NotAPartition);
    }
    if s.is_empty() || t.is_empty() || c.len() >= k {
        return Ok(false);
    }
    let crossing = s.iter().any(|&u| g.neighbors(u).any(|v| t.contains(&v)));
    Ok(!crossing)
}

const BRUTE_FORCE_MAX_NODES: usize = 10;

/// Exhaustive kappa(s,t) oracle, independent of the max-flow path: if s,t
/// are adjacent, count the direct edge and recurse without it; otherwise
/// take the smallest node subset whose deletion disconnects the pair.
pub fn brute_force_kappa(
    g: &UndirectedGraph,
    s: usize,
    t: usize,
) -> Result<usize, ConnectivityError> {
    let n = g.node_count();
    if n > BRUTE_FORCE_MAX_NODES {
        return Err(ConnectivityError::GraphTooLarge { n, max: BRUTE_FORCE_MAX_NODES });
    }
    check_pair(n, s, t)?;
    fn inner(g: &UndirectedGraph, s: usize, t: usize) -> usize {
        if g.has_edge(s, t) {
            return 1 + inner(&g.without_edge(s, t), s, t);
        }
        let others: Vec<usize> = g.nodes().filter(|&v| v != s && v != t).collect();
        let mut best = usize::MAX;
        for mask in 0u32..(1 << others.len()) {
            let removed: BTreeSet<usize> = others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if removed.len() < best && !reachable_avoiding(g, s, &removed)[t] {
                best = removed.len();
            }
        }
        best
    }
    Ok(inner(g, s, t))
}

/// Digraph counterpart of [`brute_force_kappa`].
pub fn brute_force_kappa_digraph(
    d: &Digraph,
    s: usize,
    t: usize,
) -> Result<usize, ConnectivityError> {
    let n = d.node_count();
    if n > BRUTE_FORCE_MAX_NODES {
        return Err(ConnectivityError::GraphTooLarge { n, max: BRUTE_FORCE_MAX_NODES });
    }
    check_pair(n, s, t)?;
    fn inner(d: &Digraph, s: usize, t: usize) -> usize {
        if d.has_arc(s, t) {
            return 1 + inner(&d.without_arc(s, t), s, t);
        }
        let others: Vec<usize> = d.nodes().filter(|&v| v != s && v != t).collect();
        let mut best = usize::MAX;
        for mask in 0u32..(1 << others.len()) {
            let removed: BTreeSet<usize> = others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if removed.len() < best && !digraph_reachable_avoiding(d, s, &removed)[t] {
                best = removed.len();
            }
        }
        best
    }
    Ok(inner(d, s, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::clique_edges;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn path(n: usize) -> UndirectedGraph {
        UndirectedGraph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> UndirectedGraph {
        UndirectedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn node_split_on_path_and_triangle_and_square() {
        let net = node_split_undirected(&path(3), 0, 2).unwrap();
        assert_eq!(max_flow(&net).value, 1);

        let k3 = UndirectedGraph::complete(3);
        let net = node_split_undirected(&k3, 0, 1).unwrap();
        assert_eq!(max_flow(&net).value, 2);

        let net = node_split_undirected(&cycle(4), 0, 2).unwrap();
        assert_eq!(max_flow(&net).value, 2);
    }

    #[test]
    fn kappa_on_k4_pairs() {
        let k4 = UndirectedGraph::complete(4);
        for s in 0..4 {
            for t in 0..4 {
                if s != t {
                    let r = kappa_st(&k4, s, t).unwrap();
                    assert_eq!(r.value, 3);
                    assert!(r.cut.is_none());
                }
            }
        }
    }

    #[test]
    fn kappa_cut_on_nonadjacent_pair() {
        // Two triangles sharing the cut {2,3}.
        let g = UndirectedGraph::new(
            6,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (0, 3),
                (1, 3),
                (3, 4),
                (3, 5),
                (4, 5),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let r = kappa_st(&g, 0, 5).unwrap();
        let cut = r.cut.unwrap();
        assert_eq!(cut.len(), r.value);
        assert!(!reachable_avoiding(&g, 0, &cut)[5]);
    }

    #[test]
    fn kappa_rejects_bad_pairs() {
        let g = UndirectedGraph::complete(3);
        assert_eq!(kappa_st(&g, 1, 1).unwrap_err(), ConnectivityError::SameEndpoints);
        assert!(matches!(
            kappa_st(&g, 0, 9),
            Err(ConnectivityError::NodeOutOfRange { node: 9, .. })
        ));
    }

    #[test]
    fn kappa_digraph_basics() {
        let d = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(kappa_st_digraph(&d, 0, 1).unwrap().value, 1);
        assert_eq!(kappa_st_digraph(&d, 1, 0).unwrap().value, 0);
        // Unreachable pair carries the empty cut.
        assert_eq!(kappa_st_digraph(&d, 1, 0).unwrap().cut, Some(BTreeSet::new()));
    }

    #[test]
    fn kappa_digraph_chain_closure() {
        // Transitive closure of 0->1->2->3.
        let d = Digraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(kappa_st_digraph(&d, 0, 3).unwrap().value, 3);
        assert_eq!(brute_force_kappa_digraph(&d, 0, 3).unwrap(), 3);
        assert_eq!(path_packing_kappa(&d, 0, 3), 3);
    }

    #[test]
    fn kappa_global_examples() {
        assert_eq!(kappa_global(&UndirectedGraph::complete(5)).unwrap(), 4);
        assert_eq!(kappa_global(&cycle(6)).unwrap(), 2);
        assert_eq!(kappa_global(&UndirectedGraph::complete(2)).unwrap(), 1);
        assert!(matches!(
            kappa_global(&UndirectedGraph::empty(1)),
            Err(ConnectivityError::TooFewNodes { .. })
        ));
    }

    #[test]
    fn separator_on_p3_and_k4() {
        let w = find_separator(&path(3), 2).unwrap();
        assert_eq!(w.c, [1].into_iter().collect());
        assert_eq!(verify_separator(&path(3), &w, 2), Ok(true));
        assert_eq!(verify_separator(&path(3), &w, 1), Ok(false));
        assert!(find_separator(&UndirectedGraph::complete(4), 3).is_none());
    }

    #[test]
    fn verify_separator_rejects_non_partitions() {
        let g = path(3);
        let w = SeparatorWitness::new(
            [0].into_iter().collect(),
            [1].into_iter().collect(),
            [1, 2].into_iter().collect(),
        );
        assert_eq!(verify_separator(&g, &w, 2), Err(ConnectivityError::NotAPartition));
        let w = SeparatorWitness::new(
            [0].into_iter().collect(),
            BTreeSet::new(),
            [2].into_iter().collect(),
        );
        assert_eq!(verify_separator(&g, &w, 2), Err(ConnectivityError::NotAPartition));
    }

    #[test]
    fn crossing_edge_fails_verification() {
        let g = UndirectedGraph::new(3, [(0, 2)]).unwrap();
        let w = SeparatorWitness::new(
            [0].into_iter().collect(),
            [1].into_iter().collect(),
            [2].into_iter().collect(),
        );
        assert_eq!(verify_separator(&g, &w, 5), Ok(false));
    }

    #[test]
    fn brute_force_examples() {
        let k4 = UndirectedGraph::complete(4);
        assert_eq!(brute_force_kappa(&k4, 0, 3).unwrap(), 3);
        let star = UndirectedGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(brute_force_kappa(&star, 0, 1).unwrap(), 1);
        assert_eq!(brute_force_kappa(&star, 1, 2).unwrap(), 1);
        let big = UndirectedGraph::empty(11);
        assert!(matches!(
            brute_force_kappa(&big, 0, 1),
            Err(ConnectivityError::GraphTooLarge { .. })
        ));
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> UndirectedGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        UndirectedGraph::new(n, edges).unwrap()
    }

    #[test]
    fn flow_kappa_matches_brute_force_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for round in 0..60 {
            let n = rng.random_range(2..=7usize);
            let g = random_graph(&mut rng, n, 0.2 + 0.1 * f64::from(round % 7));
            for s in 0..n {
                for t in (s + 1)..n {
                    let flow = kappa_st(&g, s, t).unwrap().value;
                    let brute = brute_force_kappa(&g, s, t).unwrap();
                    assert_eq!(
                        flow,
                        brute,
                        "graph {:?} pair {s},{t}",
                        g.edges().collect::<Vec<_>>()
                    );
                }
            }
        }
    }

    /// Second digraph oracle: enumerate simple paths and pack a maximum
    /// internally-disjoint family by backtracking.
    fn path_packing_kappa(d: &Digraph, s: usize, t: usize) -> usize {
        fn simple_paths(d: &Digraph, s: usize, t: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut stack = vec![s];
            fn go(d: &Digraph, t: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                let u = *stack.last().unwrap();
                if u == t {
                    out.push(stack.clone());
                    return;
                }
                for v in d.out_neighbors(u) {
                    if !stack.contains(&v) {
                        stack.push(v);
                        go(d, t, stack, out);
                        stack.pop();
                    }
                }
            }
            go(d, t, &mut stack, &mut out);
            out
        }
        fn pack(paths: &[Vec<usize>], used: &mut BTreeSet<usize>, from: usize) -> usize {
            let mut best = 0;
            for i in from..paths.len() {
                let interior = paths[i][1..paths[i].len() - 1].to_vec();
                if interior.iter().any(|v| used.contains(v)) {
                    continue;
                }
                for &v in &interior {
                    used.insert(v);
                }
                best = best.max(1 + pack(paths, used, i + 1));
                for &v in &interior {
                    used.remove(&v);
                }
            }
            best
        }
        let paths = simple_paths(d, s, t);
        pack(&paths, &mut BTreeSet::new(), 0)
    }

    #[test]
    fn digraph_kappa_matches_path_packing() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.random_range(2..=6usize);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.random_bool(0.3) {
                        arcs.push((u, v));
                    }
                }
            }
            let d = Digraph::new(n, arcs).unwrap();
            for s in 0..n {
                for t in 0..n {
                    if s != t {
                        assert_eq!(
                            kappa_st_digraph(&d, s, t).unwrap().value,
                            path_packing_kappa(&d, s, t),
                            "digraph {:?} pair {s}->{t}",
                            d.arcs().collect::<Vec<_>>()
                        );
                    }
                }
            }
        }
    }

    prop_compose! {
        fn small_graph()(n in 2usize..8)(
            n in Just(n),
            picks in proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
        ) -> UndirectedGraph {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if picks[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            UndirectedGraph::new(n, edges).unwrap()
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn adding_an_edge_never_decreases_kappa(g in small_graph(), a in 0usize..8, b in 0usize..8) {
            let n = g.node_count();
            let (a, b) = (a % n, b % n);
            prop_assume!(a != b && !g.has_edge(a, b));
            let bigger = g.with_edge(a, b).unwrap();
            for s in 0..n {
                for t in (s + 1)..n {
                    let before = kappa_st(&g, s, t).unwrap().value;
                    let after = kappa_st(&bigger, s, t).unwrap().value;
                    prop_assert!(after >= before);
                }
            }
        }

        #[test]
        fn kappa_bounded_by_min_degree_when_nonadjacent(g in small_graph()) {
            let n = g.node_count();
            for s in 0..n {
                for t in (s + 1)..n {
                    if !g.has_edge(s, t) {
                        let r = kappa_st(&g, s, t).unwrap();
                        prop_assert!(r.value <= g.degree(s).min(g.degree(t)));
                    }
                }
            }
        }

        #[test]
        fn separator_search_is_consistent_with_global_kappa(g in small_graph(), k in 1usize..6) {
            let global = kappa_global(&g).unwrap();
            let complete = g.edge_count() == g.node_count() * (g.node_count() - 1) / 2;
            match find_separator(&g, k) {
                Some(w) => {
                    prop_assert!(global < k);
                    prop_assert_eq!(verify_separator(&g, &w, k), Ok(true));
                }
                None => prop_assert!(global >= k || complete),
            }
        }
    }

    #[test]
    fn complete_graph_has_no_separator_even_below_k() {
        // kappa(K_2) = 1 < 3, yet no (S,C,T) partition without an S-T edge
        // exists; the search reports None.
        assert!(find_separator(&UndirectedGraph::complete(2), 3).is_none());
        let k4 = UndirectedGraph::new(4, clique_edges(&(0..4).collect())).unwrap();
        assert!(find_separator(&k4, 5).is_none());
    }
}
