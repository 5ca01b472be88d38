//! Labeled posets on k elements as transitively closed DAGs, with
//! canonical bit-string codes, exhaustive enumeration, and the
//! 2^(k^2/4) count check.
//!
//! Posets are labeled: elements are distinguishable, so two distinct
//! strict orders on the same ids count separately. That is exactly what
//! the fingerprint argument needs, since it distinguishes reachability
//! relations, not isomorphism classes.

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Digraph;

/// Exhaustive enumeration is supported up to this size (4231 posets).
pub const MAX_ENUMERATION_K: usize = 5;
/// All DAGs (not only transitively closed ones) are enumerable up to here.
pub const MAX_DAG_ENUMERATION_K: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("element count {k} outside the supported range 1..={max}")]
    UnsupportedSize { k: usize, max: usize },
    #[error("relation is not a strict partial order")]
    NotAPoset,
    #[error("code has wrong length: expected {expected} bits, got {found}")]
    CodeLength { expected: usize, found: usize },
    #[error("invalid code string {0:?}")]
    BadCode(String),
}

/// Position of the ordered pair `(u, v)` in the row-major, diagonal-free
/// flattening of a k-by-k relation matrix.
fn pair_position(k: usize, u: usize, v: usize) -> usize {
    debug_assert!(u != v && u < k && v < k);
    u * (k - 1) + if v < u { v } else { v - 1 }
}

fn rows_are_poset(rows: &[u32]) -> bool {
    let k = rows.len();
    for (u, &row) in rows.iter().enumerate() {
        if row >> k != 0 || row >> u & 1 != 0 {
            return false;
        }
    }
    for u in 0..k {
        for v in (u + 1)..k {
            if rows[u] >> v & 1 == 1 && rows[v] >> u & 1 == 1 {
                return false;
            }
        }
    }
    for u in 0..k {
        let mut successors = rows[u];
        while successors != 0 {
            let v = successors.trailing_zeros() as usize;
            successors &= successors - 1;
            if rows[v] & !rows[u] != 0 {
                return false;
            }
        }
    }
    true
}

/// A labeled strict partial order on `0..k`, stored as its full relation
/// (so the relation equals its own transitive closure).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PosetDag {
    k: usize,
    rows: Vec<u32>,
}

impl PosetDag {
    /// Validates irreflexivity, antisymmetry, and transitivity.
    pub fn from_relation_matrix(matrix: &[Vec<bool>]) -> Result<Self, PosetError> {
        if !is_poset(matrix) {
            return Err(PosetError::NotAPoset);
        }
        let k = matrix.len();
        let rows = matrix
            .iter()
            .map(|row| row.iter().enumerate().fold(0u32, |m, (v, &b)| m | (u32::from(b) << v)))
            .collect();
        Ok(Self { k, rows })
    }

    pub fn element_count(&self) -> usize {
        self.k
    }

    /// True iff `u < v` in the order.
    pub fn relates(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn relation_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn relation_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.k).map(|u| (0..self.k).map(|v| self.relates(u, v)).collect()).collect()
    }

    /// The relation as a digraph: one arc per related pair.
    pub fn to_digraph(&self) -> Digraph {
        let arcs = (0..self.k)
            .flat_map(|u| (0..self.k).filter(move |&v| v != u).map(move |v| (u, v)))
            .filter(|&(u, v)| self.relates(u, v));
        Digraph::new(self.k, arcs).expect("poset relation is a valid digraph")
    }

    pub fn code(&self) -> PosetCode {
        let mut bits = Vec::with_capacity(self.k * (self.k - 1));
        for u in 0..self.k {
            for v in 0..self.k {
                if v != u {
                    bits.push(self.relates(u, v));
                }
            }
        }
        PosetCode { k: self.k, bits }
    }

    pub fn from_code(code: &PosetCode) -> Result<Self, PosetError> {
        let k = code.k;
        let expected = k * k.saturating_sub(1);
        if code.bits.len() != expected {
            return Err(PosetError::CodeLength { expected, found: code.bits.len() });
        }
        let mut rows = vec![0u32; k];
        for u in 0..k {
            for v in 0..k {
                if v != u && code.bits[pair_position(k, u, v)] {
                    rows[u] |= 1 << v;
                }
            }
        }
        if !rows_are_poset(&rows) {
            return Err(PosetError::NotAPoset);
        }
        Ok(Self { k, rows })
    }
}

/// Canonical bit-string of length k(k-1): the relation matrix row-major
/// with the diagonal omitted. Ordering is lexicographic on the bits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosetCode {
    k: usize,
    bits: Vec<bool>,
}

impl PosetCode {
    pub fn element_count(&self) -> usize {
        self.k
    }

    pub fn bit_len(&self) -> usize {
        self.bits.len()
    }

    /// Hex string, bits packed most-significant first, zero-padded at the
    /// tail; the empty code (k = 1) prints as "0".
    pub fn to_hex(&self) -> String {
        if self.bits.is_empty() {
            return "0".to_string();
        }
        self.bits
            .chunks(4)
            .map(|chunk| {
                let mut nibble = 0u8;
                for (i, &b) in chunk.iter().enumerate() {
                    nibble |= u8::from(b) << (3 - i);
                }
                char::from_digit(u32::from(nibble), 16).expect("nibble is a hex digit")
            })
            .collect()
    }

    pub fn from_hex(k: usize, text: &str) -> Result<Self, PosetError> {
        let len = k * k.saturating_sub(1);
        let expected_digits = std::cmp::max(1, len.div_ceil(4));
        if text.len() != expected_digits {
            return Err(PosetError::BadCode(text.to_string()));
        }
        let mut bits = Vec::with_capacity(expected_digits * 4);
        for ch in text.chars() {
            let nibble = ch.to_digit(16).ok_or_else(|| PosetError::BadCode(text.to_string()))?;
            for shift in (0..4).rev() {
                bits.push(nibble >> shift & 1 == 1);
            }
        }
        if bits[len..].iter().any(|&b| b) {
            return Err(PosetError::BadCode(text.to_string()));
        }
        bits.truncate(len);
        Ok(Self { k, bits })
    }
}

/// True iff the square matrix is irreflexive, antisymmetric, and
/// transitive. Non-square input is not a poset.
pub fn is_poset(matrix: &[Vec<bool>]) -> bool {
    let k = matrix.len();
    if matrix.iter().any(|row| row.len() != k) {
        return false;
    }
    for u in 0..k {
        if matrix[u][u] {
            return false;
        }
        for v in (u + 1)..k {
            if matrix[u][v] && matrix[v][u] {
                return false;
            }
        }
    }
    for u in 0..k {
        for v in 0..k {
            if matrix[u][v] {
                for w in 0..k {
                    if matrix[v][w] && !matrix[u][w] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn check_enumeration_size(k: usize, max: usize) -> Result<(), PosetError> {
    if k == 0 || k > max {
        return Err(PosetError::UnsupportedSize { k, max });
    }
    Ok(())
}

/// All labeled posets on `k` elements, each exactly once, in ascending
/// code order. Filters every irreflexive relation through the poset
/// axioms.
pub fn enumerate_posets(k: usize) -> Result<Vec<PosetDag>, PosetError> {
    check_enumeration_size(k, MAX_ENUMERATION_K)?;
    let len = k * (k - 1);
    let mut out = Vec::new();
    for mask in 0u64..(1 << len) {
        let mut rows = [0u32; MAX_ENUMERATION_K];
        for u in 0..k {
            for v in 0..k {
                if v != u {
                    let bit = len - 1 - pair_position(k, u, v);
                    if mask >> bit & 1 == 1 {
                        rows[u] |= 1 << v;
                    }
                }
            }
        }
        if rows_are_poset(&rows[..k]) {
            out.push(PosetDag { k, rows: rows[..k].to_vec() });
        }
    }
    Ok(out)
}

/// Second, independent enumeration: grow posets one element at a time.
/// Element `j` is added to a poset on `0..j` by choosing a down-set `B`
/// (everything below the new element) and a disjoint up-set `A`
/// (everything above it) with `B x A` already in the relation.
pub fn enumerate_posets_by_extension(k: usize) -> Result<Vec<PosetDag>, PosetError> {
    check_enumeration_size(k, MAX_ENUMERATION_K)?;
    let mut current: Vec<Vec<u32>> = vec![vec![]];
    for size in 1..=k {
        let prev_len = size - 1;
        let mut next = Vec::new();
        for rows in &current {
            let mut preds = vec![0u32; prev_len];
            for (u, &row) in rows.iter().enumerate() {
                for v in 0..prev_len {
                    if row >> v & 1 == 1 {
                        preds[v] |= 1 << u;
                    }
                }
            }
            for below in 0u32..(1 << prev_len) {
                let down_closed =
                    (0..prev_len).all(|y| below >> y & 1 == 0 || preds[y] & !below == 0);
                if !down_closed {
                    continue;
                }
                for above in 0u32..(1 << prev_len) {
                    if below & above != 0 {
                        continue;
                    }
                    let up_closed =
                        (0..prev_len).all(|y| above >> y & 1 == 0 || rows[y] & !above == 0);
                    if !up_closed {
                        continue;
                    }
                    let bridged =
                        (0..prev_len).all(|y| below >> y & 1 == 0 || above & !rows[y] == 0);
                    if !bridged {
                        continue;
                    }
                    let mut grown = rows.clone();
                    for (y, row) in grown.iter_mut().enumerate() {
                        if below >> y & 1 == 1 {
                            *row |= 1 << prev_len;
                        }
                    }
                    grown.push(above);
                    next.push(grown);
                }
            }
        }
        current = next;
    }
    let mut posets: Vec<PosetDag> = current
        .into_iter()
        .map(|rows| {
            debug_assert!(rows_are_poset(&rows));
            PosetDag { k, rows }
        })
        .collect();
    posets.sort_by_key(PosetDag::code);
    Ok(posets)
}

/// All labeled DAGs on `k` nodes (not only transitively closed ones), in
/// ascending code order.
pub fn enumerate_dags(k: usize) -> Result<Vec<Digraph>, PosetError> {
    check_enumeration_size(k, MAX_DAG_ENUMERATION_K)?;
    let len = k * (k - 1);
    let mut out = Vec::new();
    for mask in 0u64..(1 << len) {
        let mut arcs = Vec::new();
        for u in 0..k {
            for v in 0..k {
                if v != u {
                    let bit = len - 1 - pair_position(k, u, v);
                    if mask >> bit & 1 == 1 {
                        arcs.push((u, v));
                    }
                }
            }
        }
        let d = Digraph::new(k, arcs).expect("mask encodes a simple digraph");
        if d.is_acyclic() {
            out.push(d);
        }
    }
    Ok(out)
}

/// Seeded random DAG: draw a random topological order, then keep each
/// forward pair as an arc with probability 1/2.
pub fn random_dag(k: usize, rng: &mut impl Rng) -> Digraph {
    let mut order: Vec<usize> = (0..k).collect();
    for i in (1..k).rev() {
        let j = rng.random_range(0..=i);
        order.swap(i, j);
    }
    let mut arcs = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            if rng.random_bool(0.5) {
                arcs.push((order[i], order[j]));
            }
        }
    }
    Digraph::new(k, arcs).expect("forward arcs form a DAG")
}

/// Reachability matrix of a digraph: entry `(u, v)` is true iff a
/// directed path from `u` to `v` exists, for `u != v` (the diagonal is
/// kept false). For a poset's relation digraph this is the relation
/// itself.
pub fn reachability(d: &Digraph) -> Vec<Vec<bool>> {
    let n = d.node_count();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in d.arcs() {
        m[u][v] = true;
    }
    for w in 0..n {
        for u in 0..n {
            if m[u][w] {
                for v in 0..n {
                    if m[w][v] {
                        m[u][v] = true;
                    }
                }
            }
        }
    }
    for (u, row) in m.iter_mut().enumerate() {
        row[u] = false;
    }
    m
}

/// Count report for the poset lower bound: `count >= 2^(k^2/4)`, decided
/// in exact integer arithmetic as `count^4 >= 2^(k^2)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PosetCountReport {
    pub k: usize,
    pub count: usize,
    pub bound: f64,
    pub holds: bool,
}

pub fn check_poset_count_bound(k: usize) -> Result<PosetCountReport, PosetError> {
    let count = enumerate_posets(k)?.len();
    let holds = (count as u128).pow(4) >= 1u128 << (k * k);
    let bound = 2f64.powf((k * k) as f64 / 4.0);
    Ok(PosetCountReport { k, count, bound, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn matrix_from(k: usize, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; k]; k];
        for &(u, v) in pairs {
            m[u][v] = true;
        }
        m
    }

    #[test]
    fn is_poset_examples() {
        assert!(is_poset(&matrix_from(3, &[])));
        assert!(is_poset(&matrix_from(2, &[(0, 1)])));
        assert!(!is_poset(&matrix_from(3, &[(0, 1), (1, 2)])));
        assert!(is_poset(&matrix_from(3, &[(0, 1), (1, 2), (0, 2)])));
        assert!(!is_poset(&matrix_from(2, &[(0, 1), (1, 0)])));
        assert!(!is_poset(&matrix_from(2, &[(1, 1)])));
        assert!(!is_poset(&[vec![false, false], vec![false]]));
    }

    #[test]
    fn enumeration_counts_small() {
        assert_eq!(enumerate_posets(1).unwrap().len(), 1);
        assert_eq!(enumerate_posets(2).unwrap().len(), 3);
        assert_eq!(enumerate_posets(3).unwrap().len(), 19);
        assert_eq!(enumerate_posets(4).unwrap().len(), 219);
        assert!(matches!(enumerate_posets(6), Err(PosetError::UnsupportedSize { .. })));
        assert!(matches!(enumerate_posets(0), Err(PosetError::UnsupportedSize { .. })));
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        for k in 1..=4 {
            let posets = enumerate_posets(k).unwrap();
            let codes: Vec<PosetCode> = posets.iter().map(PosetDag::code).collect();
            let mut sorted = codes.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(codes, sorted, "codes must ascend without repeats at k={k}");
            for p in &posets {
                assert!(is_poset(&p.relation_matrix()));
            }
        }
    }

    #[test]
    fn extension_strategy_agrees_with_filtering() {
        for k in 1..=4 {
            let a = enumerate_posets(k).unwrap();
            let b = enumerate_posets_by_extension(k).unwrap();
            assert_eq!(a, b, "strategies disagree at k={k}");
        }
    }

    #[test]
    fn dag_enumeration_counts() {
        assert_eq!(enumerate_dags(1).unwrap().len(), 1);
        assert_eq!(enumerate_dags(2).unwrap().len(), 3);
        assert_eq!(enumerate_dags(3).unwrap().len(), 25);
        assert_eq!(enumerate_dags(4).unwrap().len(), 543);
        assert!(enumerate_dags(5).is_err());
    }

    #[test]
    fn poset_relation_equals_reachability() {
        for p in enumerate_posets(3).unwrap() {
            assert_eq!(reachability(&p.to_digraph()), p.relation_matrix());
        }
    }

    #[test]
    fn posets_round_trip_through_edge_list_files() {
        for p in enumerate_posets(3).unwrap() {
            let text = p.to_digraph().to_edge_list();
            let parsed = crate::edgelist::parse_edge_list(&text).unwrap();
            let d = parsed.as_digraph().unwrap();
            assert_eq!(reachability(d), p.relation_matrix());
        }
    }

    #[test]
    fn reachability_examples() {
        let chain = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let m = reachability(&chain);
        assert!(m[0][1] && m[1][2] && m[0][2]);
        assert!(!m[2][0] && !m[0][0]);
        let arcless = Digraph::empty(3);
        assert!(reachability(&arcless).iter().flatten().all(|&b| !b));
    }

    #[test]
    fn reachability_is_idempotent_even_with_cycles() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let n = rng.random_range(1..=6usize);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.random_bool(0.3) {
                        arcs.push((u, v));
                    }
                }
            }
            let d = Digraph::new(n, arcs).unwrap();
            let once = reachability(&d);
            let closure_digraph = Digraph::new(
                n,
                (0..n)
                    .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
                    .filter(|&(u, v)| once[u][v]),
            )
            .unwrap();
            assert_eq!(reachability(&closure_digraph), once);
        }
    }

    #[test]
    fn count_bound_reports() {
        let r2 = check_poset_count_bound(2).unwrap();
        assert!(r2.holds && r2.count == 3);
        assert!((r2.bound - 2.0).abs() < 1e-12);
        let r3 = check_poset_count_bound(3).unwrap();
        assert!(r3.holds && r3.count == 19);
        assert!((r3.bound - 2f64.powf(2.25)).abs() < 1e-9);
        let r4 = check_poset_count_bound(4).unwrap();
        assert!(r4.holds && r4.count == 219 && (r4.bound - 16.0).abs() < 1e-9);
        // k=1 is the degenerate case: one poset, bound 2^(1/4) > 1, so the
        // literal inequality fails; the report says so honestly.
        let r1 = check_poset_count_bound(1).unwrap();
        assert_eq!(r1.count, 1);
        assert!(!r1.holds);
    }

    #[test]
    fn codes_roundtrip_through_hex() {
        for k in 1..=4 {
            for p in enumerate_posets(k).unwrap() {
                let code = p.code();
                let hex = code.to_hex();
                let back = PosetCode::from_hex(k, &hex).unwrap();
                assert_eq!(back, code);
                assert_eq!(PosetDag::from_code(&back).unwrap(), p);
            }
        }
    }

    #[test]
    fn hex_rejects_garbage() {
        assert!(PosetCode::from_hex(2, "zz").is_err());
        assert!(PosetCode::from_hex(2, "123").is_err());
        // Padding bits beyond k(k-1) must be zero.
        assert!(PosetCode::from_hex(2, "1").is_err());
        assert_eq!(PosetCode::from_hex(1, "0").unwrap().bit_len(), 0);
    }

    #[test]
    fn non_poset_code_is_rejected() {
        // k=3: bits for (0,1) and (1,2) without (0,2) is not transitive.
        let mut bits = vec![false; 6];
        bits[pair_position(3, 0, 1)] = true;
        bits[pair_position(3, 1, 2)] = true;
        let code = PosetCode { k: 3, bits };
        assert_eq!(PosetDag::from_code(&code), Err(PosetError::NotAPoset));
    }

    #[test]
    fn random_dags_are_acyclic_and_seed_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let da = random_dag(5, &mut a);
            let db = random_dag(5, &mut b);
            assert!(da.is_acyclic());
            assert_eq!(da, db);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn enumerated_posets_decode_from_their_own_codes(idx in 0usize..219) {
            let posets = enumerate_posets(4).unwrap();
            let p = &posets[idx % posets.len()];
            prop_assert_eq!(&PosetDag::from_code(&p.code()).unwrap(), p);
        }
    }
}
