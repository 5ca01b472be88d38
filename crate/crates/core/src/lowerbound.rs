//! Composition of p shift gadgets over a shared hub into the k-connected
//! family graph G(k,p), oracle answer tables over the in-gadget query
//! pairs, and the fingerprint-injectivity demonstration that pins the
//! oracle's bit cost.
//!
//! Id convention: the hub R is `0..k`; gadget copy i (1-based) occupies
//! `i*k..(i+1)*k`, and node v's copy in gadget i is `i*k + v`. Gadgets
//! never touch each other outside the hub.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{find_separator, kappa_global, kappa_st, kappa_st_digraph};
use crate::graph::{clique_edges, Digraph, SeparatorWitness, UndirectedGraph};
use crate::poset::{enumerate_posets, reachability, PosetError};

/// Exhaustive fingerprint runs are capped at this many tuples.
pub const MAX_EXHAUSTIVE_TUPLES: u128 = 50_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LowerboundError {
    #[error("a family needs at least one gadget")]
    EmptyFamily,
    #[error("hub size must be at least 1, got {k}")]
    KTooSmall { k: usize },
    #[error("gadget {index} has {found} nodes, expected {expected}")]
    GadgetSizeMismatch { index: usize, expected: usize, found: usize },
    #[error(
        "threshold mismatch in gadget {gadget}: kappa({u}, copy of {v}) = {kappa} but \
         reachability says {reachable}"
    )]
    ThresholdViolation { gadget: usize, u: usize, v: usize, kappa: usize, reachable: bool },
    #[error("infeasible fingerprint run: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// The composed graph on k(p+1) nodes: one hub clique shared by p shift
/// gadgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    base: UndirectedGraph,
    k: usize,
    p: usize,
    gadget_dags: Vec<Digraph>,
}

impl FamilyGraph {
    pub fn base(&self) -> &UndirectedGraph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn node_count(&self) -> usize {
        self.base.node_count()
    }

    pub fn gadget_dags(&self) -> &[Digraph] {
        &self.gadget_dags
    }

    /// Id of node v's copy inside gadget `i` (1-based).
    pub fn copy_id(&self, gadget: usize, v: usize) -> usize {
        debug_assert!((1..=self.p).contains(&gadget) && v < self.k);
        gadget * self.k + v
    }

    pub fn hub(&self) -> std::ops::Range<usize> {
        0..self.k
    }

    pub fn gadget_nodes(&self, gadget: usize) -> std::ops::Range<usize> {
        debug_assert!((1..=self.p).contains(&gadget));
        gadget * self.k..(gadget + 1) * self.k
    }
}

/// Compose the gadget digraphs over a shared hub. Every digraph must have
/// exactly `k` nodes; the hub clique appears once, and gadget i
/// contributes its copy clique, the hub-copy matching, and one edge
/// {u, i*k+v} per arc (u,v).
pub fn build_family_graph(k: usize, dags: Vec<Digraph>) -> Result<FamilyGraph, LowerboundError> {
    if k == 0 {
        return Err(LowerboundError::KTooSmall { k });
    }
    let p = dags.len();
    if p == 0 {
        return Err(LowerboundError::EmptyFamily);
    }
    for (index, d) in dags.iter().enumerate() {
        if d.node_count() != k {
            return Err(LowerboundError::GadgetSizeMismatch {
                index,
                expected: k,
                found: d.node_count(),
            });
        }
    }
    let n = k * (p + 1);
    let mut edges = clique_edges(&(0..k).collect());
    for (index, d) in dags.iter().enumerate() {
        let offset = (index + 1) * k;
        edges.extend(clique_edges(&(offset..offset + k).collect()));
        edges.extend((0..k).map(|v| (v, offset + v)));
        edges.extend(d.arcs().map(|(u, v)| (u, offset + v)));
    }
    let base = UndirectedGraph::new(n, edges).expect("family edges are pairwise distinct");
    Ok(FamilyGraph { base, k, p, gadget_dags: dags })
}

/// True iff `p` respects the construction's stated range
/// p <= 2^(k^2/4), decided exactly as p^4 <= 2^(k^2).
pub fn p_within_poset_range(k: usize, p: usize) -> bool {
    if k * k >= 128 {
        return true;
    }
    (p as u128).pow(4) <= 1u128 << (k * k)
}

/// Packed answer bits over the in-gadget query pairs: bit (i, u, v) for
/// gadget i and ordered hub pair u != v records whether
/// kappa(u, copy_i(v)) exceeds k. Index order is gadget-major, then u,
/// then v.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnswerTable {
    k: usize,
    p: usize,
    blocks: Vec<u64>,
}

impl AnswerTable {
    fn empty(k: usize, p: usize) -> Self {
        let bits = p * k * (k - 1);
        Self { k, p, blocks: vec![0; bits.div_ceil(64)] }
    }

    pub fn bit_len(&self) -> usize {
        self.p * self.k * (self.k - 1)
    }

    /// Flat index of the bit for gadget `i` (1-based) and ordered pair
    /// `(u, v)`.
    pub fn index(&self, gadget: usize, u: usize, v: usize) -> usize {
        debug_assert!((1..=self.p).contains(&gadget));
        debug_assert!(u != v && u < self.k && v < self.k);
        let pair = u * (self.k - 1) + if v < u { v } else { v - 1 };
        (gadget - 1) * self.k * (self.k - 1) + pair
    }

    pub fn bit(&self, gadget: usize, u: usize, v: usize) -> bool {
        let idx = self.index(gadget, u, v);
        self.blocks[idx / 64] >> (idx % 64) & 1 == 1
    }

    fn set(&mut self, idx: usize) {
        self.blocks[idx / 64] |= 1 << (idx % 64);
    }
}

/// Compute the oracle answer table of a family graph by exact kappa
/// queries. Each bit is validated against the corresponding gadget
/// digraph's reachability entry in both directions: the composed graph
/// answers "kappa > k" exactly where the gadget digraph has a path.
pub fn answer_table(g: &FamilyGraph) -> Result<AnswerTable, LowerboundError> {
    let k = g.k();
    let mut table = AnswerTable::empty(k, g.p());
    for gadget in 1..=g.p() {
        let reach = reachability(&g.gadget_dags()[gadget - 1]);
        for u in 0..k {
            for v in 0..k {
                if u == v {
                    continue;
                }
                let kappa = kappa_st(g.base(), u, g.copy_id(gadget, v)).expect("valid pair").value;
                let over = kappa > k;
                if over != reach[u][v] {
                    return Err(LowerboundError::ThresholdViolation {
                        gadget,
                        u,
                        v,
                        kappa,
                        reachable: reach[u][v],
                    });
                }
                if over {
                    let idx = table.index(gadget, u, v);
                    table.set(idx);
                }
            }
        }
    }
    Ok(table)
}

/// Distribution of kappa(u, copy_i(v)) - kappa_{D_i}(u, v) - k over all
/// in-gadget pairs. The shift identity is proved for a single gadget;
/// in the composed graph cross-gadget detours could only push the value
/// up, so the excess is nonnegative. Measured, not assumed.
pub fn kappa_excess_distribution(
    g: &FamilyGraph,
) -> Result<BTreeMap<usize, usize>, LowerboundError> {
    let k = g.k();
    let mut histogram = BTreeMap::new();
    for gadget in 1..=g.p() {
        let d = &g.gadget_dags()[gadget - 1];
        for u in 0..k {
            for v in 0..k {
                if u == v {
                    continue;
                }
                let in_family =
                    kappa_st(g.base(), u, g.copy_id(gadget, v)).expect("valid pair").value;
                let in_gadget = kappa_st_digraph(d, u, v).expect("valid pair").value;
                let excess = in_family
                    .checked_sub(in_gadget + k)
                    .expect("composed kappa cannot drop below the single-gadget value");
                *histogram.entry(excess).or_insert(0) += 1;
            }
        }
    }
    Ok(histogram)
}

/// Report of the k-connectedness check for one family graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub k: usize,
    pub p: usize,
    pub n: usize,
    pub separator_found: bool,
    pub witness: Option<SeparatorWitness>,
    pub kappa: usize,
    pub kappa_expected: usize,
    pub pass: bool,
}

/// Check that the family graph is k-connected: no separator witness below
/// k exists, and the exact global connectivity equals k.
pub fn verify_family_k_connected(g: &FamilyGraph) -> FamilyReport {
    let witness = find_separator(g.base(), g.k());
    let kappa = kappa_global(g.base()).expect("family graphs have at least 2 nodes");
    FamilyReport {
        k: g.k(),
        p: g.p(),
        n: g.node_count(),
        separator_found: witness.is_some(),
        pass: witness.is_none() && kappa == g.k(),
        witness,
        kappa,
        kappa_expected: g.k(),
    }
}

/// How to sweep poset tuples in [`fingerprint_injectivity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FingerprintMode {
    /// Every tuple in posets(k)^p. Feasible for k <= 3 and small p.
    Exhaustive,
    /// `pairs` seeded random tuple pairs, resampled to be distinct.
    Sample { pairs: usize, seed: u64 },
}

/// A pair of distinct poset tuples that produced the same answer table.
/// Tuples are reported as hex code lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollisionRecord {
    pub tuple_a: Vec<String>,
    pub tuple_b: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FingerprintReport {
    pub k: usize,
    pub p: usize,
    pub mode: String,
    pub seed: Option<u64>,
    pub pairs_sampled: Option<usize>,
    pub tuples_evaluated: usize,
    pub distinct_tables: usize,
    pub collisions: Vec<CollisionRecord>,
    /// Required bits as the exact rational p*k^2 / 4.
    pub bound_bits_num: u64,
    pub bound_bits_den: u64,
    pub bound_bits: f64,
    pub achieved_bits: f64,
    pub distinct_meets_bound: bool,
    pub p_within_poset_range: bool,
    pub pass: bool,
}

fn tuple_from_index(mut index: u128, p: usize, radix: usize) -> Vec<usize> {
    let mut digits = vec![0usize; p];
    for slot in digits.iter_mut().rev() {
        *slot = (index % radix as u128) as usize;
        index /= radix as u128;
    }
    digits
}

/// Build G(k,p) for poset tuples, compute their answer tables, and look
/// for collisions. Distinct tuples must give distinct tables; the number
/// of distinct tables then implies a bit lower bound of log2(#distinct),
/// which must reach p*k^2/4. Tuple evaluations run in parallel; the
/// report is deterministic for a fixed seed regardless of thread count.
pub fn fingerprint_injectivity(
    k: usize,
    p: usize,
    mode: FingerprintMode,
) -> Result<FingerprintReport, LowerboundError> {
    if p == 0 {
        return Err(LowerboundError::EmptyFamily);
    }
    let posets = enumerate_posets(k)?;
    let tuples: Vec<Vec<usize>> = match mode {
        FingerprintMode::Exhaustive => {
            if k > 3 {
                return Err(LowerboundError::Infeasible(format!(
                    "exhaustive mode supports k <= 3, got k={k}"
                )));
            }
            let total = (posets.len() as u128).pow(p as u32);
            if total > MAX_EXHAUSTIVE_TUPLES {
                return Err(LowerboundError::Infeasible(format!(
                    "{total} tuples exceed the exhaustive cap of {MAX_EXHAUSTIVE_TUPLES}"
                )));
            }
            (0..total).map(|i| tuple_from_index(i, p, posets.len())).collect()
        }
        FingerprintMode::Sample { pairs, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let draw = |rng: &mut ChaCha8Rng| -> Vec<usize> {
                (0..p).map(|_| rng.random_range(0..posets.len())).collect()
            };
            let mut tuples = Vec::with_capacity(2 * pairs);
            for _ in 0..pairs {
                let a = draw(&mut rng);
                let mut b = draw(&mut rng);
                while b == a {
                    b = draw(&mut rng);
                }
                tuples.push(a);
                tuples.push(b);
            }
            tuples
        }
    };

    let tables: Result<Vec<AnswerTable>, LowerboundError> = tuples
        .par_iter()
        .map(|tuple| {
            let dags: Vec<Digraph> = tuple.iter().map(|&i| posets[i].to_digraph()).collect();
            answer_table(&build_family_graph(k, dags)?)
        })
        .collect();
    let tables = tables?;

    let tuple_codes = |tuple: &[usize]| -> Vec<String> {
        tuple.iter().map(|&i| posets[i].code().to_hex()).collect()
    };
    let mut first_seen: HashMap<&AnswerTable, usize> = HashMap::new();
    let mut collisions = Vec::new();
    let mut distinct_tables = 0usize;
    for (idx, table) in tables.iter().enumerate() {
        match first_seen.get(table) {
            None => {
                first_seen.insert(table, idx);
                distinct_tables += 1;
            }
            Some(&prev) => {
                if tuples[prev] != tuples[idx] {
                    collisions.push(CollisionRecord {
                        tuple_a: tuple_codes(&tuples[prev]),
                        tuple_b: tuple_codes(&tuples[idx]),
                    });
                }
            }
        }
    }

    let exponent = p * k * k;
    let distinct_meets_bound =
        if exponent >= 124 { false } else { (distinct_tables as u128).pow(4) >= 1u128 << exponent };
    let (mode_name, seed, pairs_sampled) = match mode {
        FingerprintMode::Exhaustive => ("exhaustive", None, None),
        FingerprintMode::Sample { pairs, seed } => ("sample", Some(seed), Some(pairs)),
    };
    Ok(FingerprintReport {
        k,
        p,
        mode: mode_name.to_string(),
        seed,
        pairs_sampled,
        tuples_evaluated: tuples.len(),
        distinct_tables,
        pass: collisions.is_empty() && distinct_meets_bound,
        collisions,
        bound_bits_num: (p * k * k) as u64,
        bound_bits_den: 4,
        bound_bits: (p * k * k) as f64 / 4.0,
        achieved_bits: (distinct_tables as f64).log2(),
        distinct_meets_bound,
        p_within_poset_range: p_within_poset_range(k, p),
    })
}

/// Parameter accounting for G(k,p): node count n = k(p+1) and the bit
/// bound p*k^2/4, checked in exact rational arithmetic against the
/// equivalent form (1 - 1/(p+1)) * k*n/4.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyParameters {
    pub k: usize,
    pub p: usize,
    pub n: usize,
    pub bound_bits_num: u64,
    pub bound_bits_den: u64,
    pub bound_bits: f64,
    pub fraction_identity_holds: bool,
    pub p_within_poset_range: bool,
}

pub fn family_parameters(k: usize, p: usize) -> FamilyParameters {
    let n = k * (p + 1);
    // p*k^2/4 vs p*k*n / (4(p+1)), cross-multiplied exactly.
    let lhs_num = (p as u128) * (k as u128) * (k as u128);
    let lhs_den = 4u128;
    let rhs_num = (p as u128) * (k as u128) * (n as u128);
    let rhs_den = 4u128 * (p as u128 + 1);
    let fraction_identity_holds = lhs_num * rhs_den == rhs_num * lhs_den;
    FamilyParameters {
        k,
        p,
        n,
        bound_bits_num: (p * k * k) as u64,
        bound_bits_den: 4,
        bound_bits: (p * k * k) as f64 / 4.0,
        fraction_identity_holds,
        p_within_poset_range: p_within_poset_range(k, p),
    }
}
