//! Integer-capacity max-flow via Dinic's blocking-flow algorithm.
//!
//! Deterministic for a fixed network: arcs are scanned in insertion order,
//! so the computed flow and the extracted minimum cut never depend on hash
//! ordering or thread count.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlowError {
    #[error("source and sink must differ")]
    SourceEqualsSink,
    #[error("node {node} out of range for a network on {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
}

/// Directed flow network with nonnegative integer capacities and a single
/// source/sink pair.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    n: usize,
    source: usize,
    sink: usize,
    arcs: Vec<(usize, usize, u64)>,
}

impl FlowNetwork {
    pub fn new(n: usize, source: usize, sink: usize) -> Result<Self, FlowError> {
        if source == sink {
            return Err(FlowError::SourceEqualsSink);
        }
        for node in [source, sink] {
            if node >= n {
                return Err(FlowError::NodeOutOfRange { node, n });
            }
        }
        Ok(Self { n, source, sink, arcs: Vec::new() })
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: u64) -> Result<(), FlowError> {
        for node in [from, to] {
            if node >= self.n {
                return Err(FlowError::NodeOutOfRange { node, n: self.n });
            }
        }
        self.arcs.push((from, to, capacity));
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.arcs.iter().copied()
    }
}

/// Max-flow value together with a minimum cut over the original arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFlowOutcome {
    pub value: u64,
    /// Positive-capacity arcs crossing from the residual-reachable side to
    /// the rest, in insertion order. Their capacities sum to `value`.
    pub min_cut_arcs: Vec<(usize, usize)>,
}

struct Dinic {
    graph: Vec<Vec<Slot>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

#[derive(Clone, Copy)]
struct Slot {
    to: usize,
    cap: u64,
    rev: usize,
}

impl Dinic {
    fn new(net: &FlowNetwork) -> Self {
        let mut graph = vec![Vec::new(); net.n];
        for &(from, to, cap) in &net.arcs {
            let rev_from = graph[to].len();
            let rev_to = graph[from].len();
            graph[from].push(Slot { to, cap, rev: rev_from });
            graph[to].push(Slot { to: from, cap: 0, rev: rev_to });
        }
        Dinic { level: vec![-1; net.n], iter: vec![0; net.n], graph }
    }

    fn bfs(&mut self, source: usize) {
        self.level.fill(-1);
        self.level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for slot in &self.graph[u] {
                if slot.cap > 0 && self.level[slot.to] < 0 {
                    self.level[slot.to] = self.level[u] + 1;
                    queue.push_back(slot.to);
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, sink: usize, limit: u64) -> u64 {
        if u == sink {
            return limit;
        }
        while self.iter[u] < self.graph[u].len() {
            let i = self.iter[u];
            let Slot { to, cap, rev } = self.graph[u][i];
            if cap > 0 && self.level[u] < self.level[to] {
                let pushed = self.dfs(to, sink, limit.min(cap));
                if pushed > 0 {
                    self.graph[u][i].cap -= pushed;
                    self.graph[to][rev].cap += pushed;
                    return pushed;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    fn run(&mut self, source: usize, sink: usize) -> u64 {
        let mut value = 0;
        loop {
            self.bfs(source);
            if self.level[sink] < 0 {
                return value;
            }
            self.iter.fill(0);
            loop {
                let pushed = self.dfs(source, sink, u64::MAX);
                if pushed == 0 {
                    break;
                }
                value += pushed;
            }
        }
    }

    fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut reached = vec![false; self.graph.len()];
        reached[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for slot in &self.graph[u] {
                if slot.cap > 0 && !reached[slot.to] {
                    reached[slot.to] = true;
                    queue.push_back(slot.to);
                }
            }
        }
        reached
    }
}

/// Exact maximum flow and a minimum cut. Checks flow/cut duality: the
/// returned cut's capacity equals the flow value.
pub fn max_flow(net: &FlowNetwork) -> MaxFlowOutcome {
    let mut dinic = Dinic::new(net);
    let value = dinic.run(net.source, net.sink);
    let reached = dinic.residual_reachable(net.source);
    let mut cut_capacity = 0u64;
    let mut min_cut_arcs = Vec::new();
    for &(from, to, cap) in &net.arcs {
        if cap > 0 && reached[from] && !reached[to] {
            cut_capacity += cap;
            min_cut_arcs.push((from, to));
        }
    }
    assert!(!reached[net.sink], "sink must be unreachable in the residual network");
    assert_eq!(cut_capacity, value, "max-flow/min-cut duality violated");
    MaxFlowOutcome { value, min_cut_arcs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn net(n: usize, s: usize, t: usize, arcs: &[(usize, usize, u64)]) -> FlowNetwork {
        let mut net = FlowNetwork::new(n, s, t).unwrap();
        for &(u, v, c) in arcs {
            net.add_arc(u, v, c).unwrap();
        }
        net
    }

    #[test]
    fn single_arc() {
        let outcome = max_flow(&net(2, 0, 1, &[(0, 1, 1)]));
        assert_eq!(outcome.value, 1);
        assert_eq!(outcome.min_cut_arcs, vec![(0, 1)]);
    }

    #[test]
    fn disconnected_source_sink() {
        let outcome = max_flow(&net(4, 0, 3, &[(0, 1, 5), (2, 3, 5)]));
        assert_eq!(outcome.value, 0);
        assert!(outcome.min_cut_arcs.is_empty());
    }

    #[test]
    fn classic_textbook_network() {
        let arcs = [
            (0, 1, 10),
            (0, 2, 10),
            (1, 3, 4),
            (1, 4, 8),
            (2, 4, 9),
            (3, 5, 10),
            (4, 3, 6),
            (4, 5, 10),
        ];
        assert_eq!(max_flow(&net(6, 0, 5, &arcs)).value, 19);
    }

    #[test]
    fn rejects_bad_endpoints() {
        assert_eq!(FlowNetwork::new(3, 1, 1).unwrap_err(), FlowError::SourceEqualsSink);
        assert!(matches!(FlowNetwork::new(2, 0, 5), Err(FlowError::NodeOutOfRange { .. })));
        let mut ok = FlowNetwork::new(2, 0, 1).unwrap();
        assert!(ok.add_arc(0, 7, 1).is_err());
    }

    /// Independent oracle for unit-capacity networks: the max flow equals
    /// the largest net out-degree of the source over all arc subsets that
    /// conserve in/out degree at every internal node (supports of integral
    /// unit flows).
    fn flow_by_arc_subsets(net: &FlowNetwork) -> u64 {
        let arcs: Vec<(usize, usize)> = net.arcs().map(|(u, v, _)| (u, v)).collect();
        assert!(arcs.len() <= 20, "oracle is exponential in the arc count");
        let mut best = 0u64;
        for mask in 0u32..(1 << arcs.len()) {
            let mut out_deg = vec![0i64; net.node_count()];
            let mut in_deg = vec![0i64; net.node_count()];
            for (i, &(u, v)) in arcs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    out_deg[u] += 1;
                    in_deg[v] += 1;
                }
            }
            let conserved = (0..net.node_count())
                .filter(|&w| w != net.source() && w != net.sink())
                .all(|w| out_deg[w] == in_deg[w]);
            if conserved {
                let surplus = out_deg[net.source()] - in_deg[net.source()];
                if surplus > 0 {
                    best = best.max(surplus as u64);
                }
            }
        }
        best
    }

    #[test]
    fn matches_arc_subset_oracle_on_random_unit_networks() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xf10);
        for _ in 0..50 {
            let n = rng.random_range(2..=8usize);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.random_bool(0.28) && arcs.len() < 16 {
                        arcs.push((u, v, 1u64));
                    }
                }
            }
            let s = 0;
            let t = n - 1;
            let network = net(n, s, t, &arcs);
            assert_eq!(max_flow(&network).value, flow_by_arc_subsets(&network));
        }
    }
}
