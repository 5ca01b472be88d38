//! Exact vertex-connectivity toolkit.
//!
//! Builds connectivity-shift graphs of digraphs, composes them into
//! k-connected family graphs sharing a common hub, answers exact
//! node-connectivity queries by Menger's theorem reduced to max-flow, and
//! demonstrates at desk scale that connectivity-oracle answer tables over
//! poset tuples are injective, which pins down the oracle's bit cost.
//!
//! Graph values are immutable after construction and safe to share across
//! threads; every query is a pure function of its inputs.

// Relation/reachability code walks square matrices with symmetric
// (u, v, w) index triples; iterator rewrites would hide that symmetry.
#![allow(clippy::needless_range_loop)]

pub mod connectivity;
pub mod edgelist;
pub mod flow;
pub mod graph;
pub mod lowerbound;
pub mod poset;
pub mod shift;

pub use connectivity::{
    brute_force_kappa, brute_force_kappa_digraph, find_separator, kappa_global,
    kappa_global_digraph, kappa_st, kappa_st_digraph, node_split_digraph, node_split_undirected,
    verify_separator, ConnectivityError, KappaResult,
};
pub use edgelist::{parse_edge_list, ParseError, ParsedGraph};
pub use flow::{max_flow, FlowError, FlowNetwork, MaxFlowOutcome};
pub use graph::{clique_edges, Digraph, GraphError, SeparatorWitness, UndirectedGraph};
pub use lowerbound::{
    answer_table, build_family_graph, family_parameters, fingerprint_injectivity,
    kappa_excess_distribution, p_within_poset_range, verify_family_k_connected, AnswerTable,
    CollisionRecord, FamilyGraph, FamilyParameters, FamilyReport, FingerprintMode,
    FingerprintReport, LowerboundError,
};
pub use poset::{
    check_poset_count_bound, enumerate_dags, enumerate_posets, enumerate_posets_by_extension,
    is_poset, random_dag, reachability, PosetCode, PosetCountReport, PosetDag, PosetError,
};
pub use shift::{
    build_shift_graph, shift_cut_witness, verify_dag_shift, verify_shift_connectivity,
    DagShiftReport, PairCheck, ShiftConnectivityReport, ShiftError, ShiftGraph,
};
