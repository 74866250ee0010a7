//! Desk-scale searches and audits: diagonal and bipartite Ramsey-style
//! witness searches, the two-star cross-edge reduction check, inequality
//! audits over exhaustive labeled corpora, and extremal profiles for
//! forbidden-family classes.
//!
//! Everything here is deterministic. Exhaustive scans enumerate labeled
//! graphs in edge-bit order and report the first hit in that order even
//! when running on multiple threads; sampled scans derive every sample
//! from a fixed seed.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::codec::emit_graph6;
use crate::families::{BistarVariantFamily, FamilyError, FamilySpec};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::hfree::{
    contains_bistar_variant, contains_induced, independent_subset, is_isomorphic, ForbiddenFamily,
    HfreeError,
};
use crate::matching::{matching_number, BipartiteError, BipartiteView};
use crate::solvers::{
    compute, domination_number, full_report, independence_number, independence_saturation_at,
    independent_domination, subsets_of_size, Parameter, SolverError,
};

#[derive(Debug, Error)]
pub enum RamseyError {
    #[error("order {order} exceeds the exhaustive enumeration window (max {max})")]
    OrderCap { order: usize, max: usize },
    #[error("side length {side} exceeds the exhaustive pattern window (max {max})")]
    SideCap { side: usize, max: usize },
    #[error("the supporting search did not decide within its cap; the dependent check cannot run")]
    Undecided,
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Hfree(#[from] HfreeError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Bipartite(#[from] BipartiteError),
}

/// Largest order at which every labeled graph is enumerated rather than
/// sampled: 2^15 graphs at order 6.
pub const EXHAUSTIVE_ORDER_MAX: usize = 6;

/// Largest order for exhaustive scans restricted to connected or bipartite
/// graphs: 2^21 labeled graphs at order 7.
pub const EXHAUSTIVE_CONNECTED_MAX: usize = 7;

/// Largest bi-adjacency side for which all 2^(side^2) patterns fit a scan.
pub const EXHAUSTIVE_SIDE_MAX: usize = 5;

const SAMPLES_PER_ORDER: u64 = 1 << 16;
const SAMPLE_SEED: u64 = 0x9E37_79B9_7F4A_7C15;

/// Stride between members that get the full isomorphism re-check during a
/// reduction sweep; every member still gets the cheap structural check.
const DEEP_CHECK_STRIDE: u64 = 1024;

/// Number of labeled graphs on `order` vertices.
pub fn labeled_graph_count(order: usize) -> u64 {
    let pairs = order * order.saturating_sub(1) / 2;
    assert!(pairs < 64, "order {order} has too many vertex pairs to index in 64 bits");
    1u64 << pairs
}

/// The labeled graph whose edge set is encoded by `bits`: pair `(u, w)`
/// with `u < w` occupies the next bit in lexicographic pair order.
pub fn graph_from_edge_bits(order: usize, bits: u64) -> Graph {
    debug_assert!(bits < labeled_graph_count(order));
    let mut adjacency = vec![0u32; order];
    let mut bit = 0;
    for u in 0..order {
        for w in u + 1..order {
            if bits >> bit & 1 == 1 {
                adjacency[u] |= 1 << w;
                adjacency[w] |= 1 << u;
            }
            bit += 1;
        }
    }
    Graph::from_adjacency(adjacency)
}

/// Outcome of one witness search or extremal profile. For a threshold
/// search the stored graph is the last counterexample found below the
/// decided value; for a profile it is the graph attaining the extremum.
#[derive(Debug, Clone, Serialize)]
pub struct EmpiricalBound {
    pub symbol: String,
    pub observed: usize,
    /// True only when the search space below the decision was exhausted.
    pub exact: bool,
    pub witness_graph6: Option<String>,
    pub witness_order: Option<usize>,
}

/// Lowest-first search for a clique of size `k` inside `cand`.
fn clique_subset(g: &Graph, cand: u32, k: usize) -> Option<u32> {
    if k == 0 {
        return Some(0);
    }
    if (cand.count_ones() as usize) < k {
        return None;
    }
    let v = cand.trailing_zeros() as usize;
    let without_v = cand & !(1 << v);
    if let Some(rest) = clique_subset(g, without_v & g.neighbors(v).mask(), k - 1) {
        return Some(rest | 1 << v);
    }
    clique_subset(g, without_v, k)
}

/// True when `g` has no clique on `m` vertices and no independent set on
/// `n` vertices.
pub fn is_ramsey_counterexample(g: &Graph, m: usize, n: usize) -> bool {
    let full = g.vertex_set().mask();
    clique_subset(g, full, m).is_none() && independent_subset(g, full, n).is_none()
}

/// Least order at which every scanned graph contains a clique on `m`
/// vertices or an independent set on `n` vertices. Orders up to
/// [`EXHAUSTIVE_ORDER_MAX`] are enumerated completely; above that a fixed
/// pseudorandom sample stands in and the result is marked inexact. If
/// every order up to `order_cap` still has a counterexample the result is
/// the lower bound `order_cap + 1`, also inexact.
pub fn ramsey_witness_search(
    m: usize,
    n: usize,
    order_cap: usize,
) -> Result<EmpiricalBound, RamseyError> {
    assert!(m >= 1 && n >= 1, "clique and independent targets must be positive");
    let max_cap = 11;
    if order_cap == 0 || order_cap > max_cap {
        return Err(RamseyError::OrderCap { order: order_cap, max: max_cap });
    }
    let symbol = format!("R({m},{n})");
    let mut last_counterexample: Option<(usize, Graph)> = None;
    for order in 1..=order_cap {
        let found = if order <= EXHAUSTIVE_ORDER_MAX {
            (0..labeled_graph_count(order))
                .into_par_iter()
                .find_first(|&bits| is_ramsey_counterexample(&graph_from_edge_bits(order, bits), m, n))
                .map(|bits| graph_from_edge_bits(order, bits))
        } else {
            let pair_bits = order * (order - 1) / 2;
            (0..SAMPLES_PER_ORDER)
                .into_par_iter()
                .find_map_first(|index| {
                    let mut rng =
                        ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ ((order as u64) << 48) ^ index);
                    let bits = rng.gen::<u64>() & ((1u64 << pair_bits) - 1);
                    let g = graph_from_edge_bits(order, bits);
                    is_ramsey_counterexample(&g, m, n).then_some(g)
                })
        };
        match found {
            Some(g) => last_counterexample = Some((order, g)),
            None => {
                return Ok(EmpiricalBound {
                    symbol,
                    observed: order,
                    // A found counterexample certifies its order outright,
                    // so only the deciding scan needs to be exhaustive.
                    exact: order <= EXHAUSTIVE_ORDER_MAX,
                    witness_graph6: last_counterexample.as_ref().map(|(_, g)| emit_graph6(g)),
                    witness_order: last_counterexample.as_ref().map(|(o, _)| *o),
                });
            }
        }
    }
    Ok(EmpiricalBound {
        symbol,
        observed: order_cap + 1,
        exact: false,
        witness_graph6: last_counterexample.as_ref().map(|(_, g)| emit_graph6(g)),
        witness_order: last_counterexample.as_ref().map(|(o, _)| *o),
    })
}

/// First all-ones or all-zeros `n` by `n` sub-block of the `side` by
/// `side` bi-adjacency `pattern`, as (row mask, column mask, filled).
/// Bit `i * side + j` of the pattern is cell `(i, j)`. Returns `None`
/// when no such block exists; in particular whenever `n > side`.
pub fn mono_block(pattern: u64, side: usize, n: usize) -> Option<(u32, u32, bool)> {
    if n > side {
        return None;
    }
    let full = (1u32 << side) - 1;
    for row_set in subsets_of_size(side, n) {
        let mut ones = full;
        let mut zeros = full;
        let mut bits = row_set;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let row = (pattern >> (i * side)) as u32 & full;
            ones &= row;
            zeros &= !row & full;
        }
        if ones.count_ones() as usize >= n {
            return Some((row_set, lowest_bits(ones, n), true));
        }
        if zeros.count_ones() as usize >= n {
            return Some((row_set, lowest_bits(zeros, n), false));
        }
    }
    None
}

fn lowest_bits(mut mask: u32, k: usize) -> u32 {
    let mut out = 0;
    for _ in 0..k {
        let low = mask & mask.wrapping_neg();
        out |= low;
        mask ^= low;
    }
    out
}

/// The bipartite graph of a pattern: left vertices `0..side`, right
/// vertices `side..2*side`, edge `(i, side + j)` iff cell `(i, j)` is set.
pub fn pattern_graph(side: usize, pattern: u64) -> Graph {
    let mut adjacency = vec![0u32; 2 * side];
    for i in 0..side {
        for j in 0..side {
            if pattern >> (i * side + j) & 1 == 1 {
                adjacency[i] |= 1 << (side + j);
                adjacency[side + j] |= 1 << i;
            }
        }
    }
    Graph::from_adjacency(adjacency)
}

/// Least side `m` such that every `m` by `m` 0/1 matrix contains an `n` by
/// `n` all-ones or all-zeros sub-block. Every side up to `side_cap` (at
/// most [`EXHAUSTIVE_SIDE_MAX`]) is scanned exhaustively, so a decided
/// result is exact; running out of cap yields the lower bound
/// `side_cap + 1`, inexact. A side smaller than `n` never decides: it has
/// no `n` by `n` sub-block at all, so every pattern is a counterexample.
pub fn bipartite_ramsey_search(n: usize, side_cap: usize) -> Result<EmpiricalBound, RamseyError> {
    assert!(n >= 1, "block size must be positive");
    if side_cap == 0 || side_cap > EXHAUSTIVE_SIDE_MAX {
        return Err(RamseyError::SideCap { side: side_cap, max: EXHAUSTIVE_SIDE_MAX });
    }
    let symbol = format!("BR({n})");
    let mut last_counterexample: Option<(usize, u64)> = None;
    for side in 1..=side_cap {
        let found = (0..1u64 << (side * side))
            .into_par_iter()
            .find_first(|&pattern| mono_block(pattern, side, n).is_none());
        match found {
            Some(pattern) => last_counterexample = Some((side, pattern)),
            None => {
                return Ok(EmpiricalBound {
                    symbol,
                    observed: side,
                    exact: true,
                    witness_graph6: last_counterexample
                        .map(|(s, p)| emit_graph6(&pattern_graph(s, p))),
                    witness_order: last_counterexample.map(|(s, _)| 2 * s),
                });
            }
        }
    }
    Ok(EmpiricalBound {
        symbol,
        observed: side_cap + 1,
        exact: false,
        witness_graph6: last_counterexample.map(|(s, p)| emit_graph6(&pattern_graph(s, p))),
        witness_order: last_counterexample.map(|(s, _)| 2 * s),
    })
}

/// Result of sweeping every cross-edge two-star variant at the decided
/// bipartite threshold and certifying the forced sub-structure.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub leaves: usize,
    pub path: usize,
    /// Side size fed to the variant family: the exact threshold found by
    /// the bipartite pattern search.
    pub threshold: usize,
    pub members_checked: u64,
    /// Members whose certificate was additionally re-verified with the
    /// full induced-subgraph matcher.
    pub deep_checked: u64,
    /// graph6 of every member whose certificate failed, sorted.
    pub violations: Vec<String>,
}

/// Checks that every two-star variant with `threshold = BR(n)` leaves per
/// side contains, induced, either the complete bipartite graph on `n + n`
/// vertices or the plain two-star with `n` leaves per side on a path of
/// `path` vertices. The monochromatic block of the member's cross pattern
/// names the certificate vertices; each certificate is re-checked
/// structurally, and a fixed stride of members gets the full matcher.
pub fn verify_lemma_bistar_reduction(n: usize, path: usize) -> Result<ReductionReport, RamseyError> {
    assert!(n >= 1 && path >= 2, "need at least one leaf per side and a two-vertex path");
    let br = bipartite_ramsey_search(n, EXHAUSTIVE_SIDE_MAX)?;
    if !br.exact {
        return Err(RamseyError::Undecided);
    }
    let side = br.observed;
    let family = BistarVariantFamily::new(side as u32, path as u32)?;
    let block_target = FamilySpec::CompleteBipartite(n as u32, n as u32).build()?;
    let two_star_target =
        FamilySpec::Bistar { leaves: n as u32, path: path as u32 }.build()?;

    let total = family.pattern_count();
    let (deep_checked, mut violations) = (0..total)
        .into_par_iter()
        .map(|pattern| {
            let deep = pattern % DEEP_CHECK_STRIDE == 0;
            let outcome = certify_member(
                &family,
                pattern,
                side,
                n,
                path,
                &block_target,
                &two_star_target,
                deep,
            );
            let deep_count = u64::from(deep);
            match outcome {
                Ok(()) => (deep_count, Vec::new()),
                Err(detail) => (deep_count, vec![detail]),
            }
        })
        .reduce(
            || (0u64, Vec::new()),
            |(da, mut va), (db, vb)| {
                va.extend(vb);
                (da + db, va)
            },
        );
    violations.sort();
    Ok(ReductionReport {
        leaves: n,
        path,
        threshold: side,
        members_checked: total,
        deep_checked,
        violations,
    })
}

#[allow(clippy::too_many_arguments)]
fn certify_member(
    family: &BistarVariantFamily,
    pattern: u64,
    side: usize,
    n: usize,
    path: usize,
    block_target: &Graph,
    two_star_target: &Graph,
    deep: bool,
) -> Result<(), String> {
    let member = family.member(pattern);
    let Some((rows, cols, filled)) = mono_block(pattern, side, n) else {
        return Err(format!("pattern {pattern} has no monochromatic block: {}", emit_graph6(&member)));
    };
    // Leaf i of the first centre sits at path + i, leaf j of the second at
    // path + side + j, so the block masks translate directly.
    let mut witness = 0u32;
    let mut bits = rows;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        witness |= 1 << (path + i);
    }
    let mut bits = cols;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        witness |= 1 << (path + side + j);
    }
    let target = if filled {
        block_target
    } else {
        for x in 0..path {
            witness |= 1 << x;
        }
        two_star_target
    };
    let induced = member.induced_subgraph(VertexSet::from_mask(witness));
    // Leaves on one side are never adjacent to each other or to interior
    // path vertices, so order plus edge count already pins the shape.
    if induced.order() != target.order() || induced.edge_count() != target.edge_count() {
        return Err(format!(
            "pattern {pattern} certificate mismatch ({} vertices, {} edges): {}",
            induced.order(),
            induced.edge_count(),
            emit_graph6(&member)
        ));
    }
    if deep {
        if !is_isomorphic(&induced, target) {
            return Err(format!(
                "pattern {pattern} certificate is not isomorphic to the target: {}",
                emit_graph6(&member)
            ));
        }
        if contains_induced(&member, target).is_none() {
            return Err(format!(
                "pattern {pattern} does not contain the target at all: {}",
                emit_graph6(&member)
            ));
        }
    }
    Ok(())
}

/// An audit stopping point: the offending graph and what went wrong.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AuditViolation {
    pub graph6: String,
    pub details: String,
}

/// Outcome of the independent-domination inequality audit.
#[derive(Debug, Clone, Serialize)]
pub struct ZverovichReport {
    pub k: usize,
    pub graphs_checked: u64,
    /// Graphs in scope that avoid every cross-edge two-star variant with
    /// k - 1 leaves per side and adjacent centres.
    pub free_class_size: u64,
    /// Free graphs attaining the bound with equality.
    pub tight_count: u64,
    pub violation: Option<AuditViolation>,
}

/// Whether `g` belongs to the free class for level `k`, and if so whether
/// the inequality `i <= gamma * (k - 2) - (k - 3)` is tight or violated.
fn zverovich_one(g: &Graph, k: usize) -> Option<(bool, bool)> {
    if g.order() == 0 || contains_bistar_variant(g, k - 1, 2).is_some() {
        return None;
    }
    let i = independent_domination(g).expect("order checked above").value;
    let gamma = domination_number(g).expect("order checked above").value;
    let bound = gamma * (k - 2) - (k - 3);
    Some((i == bound, i > bound))
}

#[derive(Default)]
struct ZverovichAccum {
    checked: u64,
    free: u64,
    tight: u64,
    violation: Option<(u64, AuditViolation)>,
}

impl ZverovichAccum {
    fn merge(mut self, other: Self) -> Self {
        self.checked += other.checked;
        self.free += other.free;
        self.tight += other.tight;
        self.violation = match (self.violation, other.violation) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }

    fn absorb(mut self, rank: u64, g: &Graph, k: usize) -> Self {
        self.checked += 1;
        if let Some((tight, violated)) = zverovich_one(g, k) {
            self.free += 1;
            self.tight += u64::from(tight);
            if violated && self.violation.is_none() {
                let i = independent_domination(g).expect("nonempty").value;
                let gamma = domination_number(g).expect("nonempty").value;
                self.violation = Some((
                    rank,
                    AuditViolation {
                        graph6: emit_graph6(g),
                        details: format!(
                            "i = {i} exceeds gamma*(k-2)-(k-3) = {} at k = {k}",
                            gamma * (k - 2) - (k - 3)
                        ),
                    },
                ));
            }
        }
        self
    }
}

fn zverovich_report(k: usize, accum: ZverovichAccum) -> ZverovichReport {
    ZverovichReport {
        k,
        graphs_checked: accum.checked,
        free_class_size: accum.free,
        tight_count: accum.tight,
        violation: accum.violation.map(|(_, v)| v),
    }
}

/// Audits `i <= gamma * (k - 2) - (k - 3)` over the graphs of `corpus`
/// that lie in the level-`k` free class. Order-0 graphs are skipped.
pub fn zverovich_audit(corpus: &[Graph], k: usize) -> Result<ZverovichReport, RamseyError> {
    assert!(k >= 3, "the inequality needs k >= 3");
    let accum = corpus
        .par_iter()
        .enumerate()
        .fold(ZverovichAccum::default, |acc, (rank, g)| acc.absorb(rank as u64, g, k))
        .reduce(ZverovichAccum::default, ZverovichAccum::merge);
    Ok(zverovich_report(k, accum))
}

/// Same audit over every connected labeled graph up to `max_order`.
pub fn zverovich_audit_exhaustive(
    max_order: usize,
    k: usize,
) -> Result<ZverovichReport, RamseyError> {
    assert!(k >= 3, "the inequality needs k >= 3");
    if max_order > EXHAUSTIVE_CONNECTED_MAX {
        return Err(RamseyError::OrderCap { order: max_order, max: EXHAUSTIVE_CONNECTED_MAX });
    }
    let mut total = ZverovichAccum::default();
    for order in 1..=max_order {
        let accum = (0..labeled_graph_count(order))
            .into_par_iter()
            .fold(ZverovichAccum::default, |acc, bits| {
                let g = graph_from_edge_bits(order, bits);
                if g.is_connected() {
                    acc.absorb(bits, &g, k)
                } else {
                    acc
                }
            })
            .reduce(ZverovichAccum::default, ZverovichAccum::merge);
        total = total.merge(accum);
        if total.violation.is_some() {
            break;
        }
    }
    Ok(zverovich_report(k, total))
}

/// Outcome of the independence-plus-matching identity audit.
#[derive(Debug, Clone, Serialize)]
pub struct KonigReport {
    pub graphs_checked: u64,
    pub violation: Option<AuditViolation>,
}

/// Checks `alpha + matching = order` on one bipartite graph; returns the
/// discrepancy description when it fails and errors on non-bipartite
/// input.
pub fn konig_check(g: &Graph) -> Result<Option<String>, RamseyError> {
    let view = BipartiteView::from_graph(g)?;
    let nu = view.matching_number();
    let alpha = if g.order() == 0 { 0 } else { independence_number(g)?.value };
    if alpha + nu == g.order() {
        Ok(None)
    } else {
        Ok(Some(format!(
            "independence {alpha} plus matching {nu} differs from order {}",
            g.order()
        )))
    }
}

/// Audits the identity over a corpus; every graph must be bipartite.
pub fn konig_audit(corpus: &[Graph]) -> Result<KonigReport, RamseyError> {
    let hit = corpus
        .par_iter()
        .enumerate()
        .map(|(rank, g)| konig_check(g).map(|viol| viol.map(|details| (rank, emit_graph6(g), details))))
        .try_reduce(
            || None,
            |a, b| {
                Ok(match (a, b) {
                    (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                    (x, y) => x.or(y),
                })
            },
        )?;
    Ok(KonigReport {
        graphs_checked: corpus.len() as u64,
        violation: hit.map(|(_, graph6, details)| AuditViolation { graph6, details }),
    })
}

/// Same audit over every bipartite labeled graph (connected or not) up to
/// `max_order`.
pub fn konig_audit_exhaustive(max_order: usize) -> Result<KonigReport, RamseyError> {
    if max_order > EXHAUSTIVE_CONNECTED_MAX {
        return Err(RamseyError::OrderCap { order: max_order, max: EXHAUSTIVE_CONNECTED_MAX });
    }
    let mut graphs_checked = 0u64;
    for order in 1..=max_order {
        let outcome = (0..labeled_graph_count(order))
            .into_par_iter()
            .fold(
                || (0u64, None::<(u64, AuditViolation)>),
                |(count, hit), bits| {
                    let g = graph_from_edge_bits(order, bits);
                    if g.bipartition().is_none() {
                        return (count, hit);
                    }
                    let new_hit = if hit.is_none() {
                        konig_check(&g)
                            .expect("bipartition verified")
                            .map(|details| (bits, AuditViolation { graph6: emit_graph6(&g), details }))
                    } else {
                        None
                    };
                    (count + 1, hit.or(new_hit))
                },
            )
            .reduce(
                || (0u64, None),
                |(ca, ha), (cb, hb)| {
                    let hit = match (ha, hb) {
                        (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                        (x, y) => x.or(y),
                    };
                    (ca + cb, hit)
                },
            );
        graphs_checked += outcome.0;
        if let Some((_, violation)) = outcome.1 {
            return Ok(KonigReport { graphs_checked, violation: Some(violation) });
        }
    }
    Ok(KonigReport { graphs_checked, violation: None })
}

/// Largest matching number over the bipartite members of `corpus` that
/// avoid both the `n`-edge induced matching and the `n` by `n` complete
/// bipartite block, plus one. Always inexact: a corpus never exhausts the
/// class. An empty qualifying set yields the trivial bound 1.
pub fn lozin_q_profile(n: u32, corpus: &[Graph]) -> Result<EmpiricalBound, RamseyError> {
    assert!(n >= 1, "block size must be positive");
    let matching_target =
        FamilySpec::DisjointCopies(n, Box::new(FamilySpec::Complete(2))).build()?;
    let block_target = FamilySpec::CompleteBipartite(n, n).build()?;
    let best = corpus
        .par_iter()
        .fold(
            || None::<(usize, String)>,
            |best, g| {
                if g.bipartition().is_none()
                    || contains_induced(g, &matching_target).is_some()
                    || contains_induced(g, &block_target).is_some()
                {
                    return best;
                }
                let nu = matching_number(g).expect("bipartition verified");
                merge_attainer(best, (nu, emit_graph6(g)))
            },
        )
        .reduce(|| None, |a, b| match (a, b) {
            (Some(x), Some(y)) => merge_attainer(Some(x), y),
            (x, y) => x.or(y),
        });
    Ok(lozin_bound(n, best))
}

/// Same profile over every bipartite labeled graph up to `max_order`.
pub fn lozin_q_exhaustive(n: u32, max_order: usize) -> Result<EmpiricalBound, RamseyError> {
    if max_order > EXHAUSTIVE_CONNECTED_MAX {
        return Err(RamseyError::OrderCap { order: max_order, max: EXHAUSTIVE_CONNECTED_MAX });
    }
    let matching_target =
        FamilySpec::DisjointCopies(n, Box::new(FamilySpec::Complete(2))).build()?;
    let block_target = FamilySpec::CompleteBipartite(n, n).build()?;
    let mut best: Option<(usize, String)> = None;
    for order in 1..=max_order {
        let order_best = (0..labeled_graph_count(order))
            .into_par_iter()
            .fold(
                || None::<(usize, String)>,
                |acc, bits| {
                    let g = graph_from_edge_bits(order, bits);
                    if g.bipartition().is_none()
                        || contains_induced(&g, &matching_target).is_some()
                        || contains_induced(&g, &block_target).is_some()
                    {
                        return acc;
                    }
                    let nu = matching_number(&g).expect("bipartition verified");
                    merge_attainer(acc, (nu, emit_graph6(&g)))
                },
            )
            .reduce(|| None, |a, b| match (a, b) {
                (Some(x), Some(y)) => merge_attainer(Some(x), y),
                (x, y) => x.or(y),
            });
        if let Some(candidate) = order_best {
            best = merge_attainer(best, candidate);
        }
    }
    Ok(lozin_bound(n, best))
}

/// Keeps the larger value; ties keep the lexicographically smaller graph6.
fn merge_attainer(
    best: Option<(usize, String)>,
    candidate: (usize, String),
) -> Option<(usize, String)> {
    match best {
        None => Some(candidate),
        Some(current) => {
            if candidate.0 > current.0 || (candidate.0 == current.0 && candidate.1 < current.1) {
                Some(candidate)
            } else {
                Some(current)
            }
        }
    }
}

fn lozin_bound(n: u32, best: Option<(usize, String)>) -> EmpiricalBound {
    let witness_order = best
        .as_ref()
        .map(|(_, g6)| crate::codec::parse_graph6(g6).expect("round trip").order());
    EmpiricalBound {
        symbol: format!("q({n})"),
        observed: best.as_ref().map_or(0, |(nu, _)| *nu) + 1,
        exact: false,
        witness_graph6: best.map(|(_, g6)| g6),
        witness_order,
    }
}

/// Per-order maxima of one parameter over the connected, family-free
/// members of a corpus, with a graph6 witness for each order.
#[derive(Debug, Clone, Serialize)]
pub struct ScanResult {
    pub family: String,
    pub parameter: String,
    pub maxima: BTreeMap<usize, usize>,
    pub witnesses: BTreeMap<usize, String>,
}

impl ScanResult {
    /// Largest value across all orders; `None` when no graph qualified.
    pub fn overall_max(&self) -> Option<usize> {
        self.maxima.values().copied().max()
    }

    /// True when the last `tail` recorded orders all share one maximum,
    /// i.e. the profile has stopped growing. Vacuously true with fewer
    /// than two entries.
    pub fn is_flat_tail(&self, tail: usize) -> bool {
        let values: Vec<usize> = self.maxima.values().copied().collect();
        if values.len() < 2 || tail < 2 {
            return true;
        }
        let take = tail.min(values.len());
        let slice = &values[values.len() - take..];
        slice.iter().all(|&v| v == slice[0])
    }
}

type OrderBest = BTreeMap<usize, (usize, String)>;

fn merge_order_best(mut a: OrderBest, b: OrderBest) -> OrderBest {
    for (order, candidate) in b {
        match a.get(&order) {
            Some(current)
                if current.0 > candidate.0
                    || (current.0 == candidate.0 && current.1 <= candidate.1) => {}
            _ => {
                a.insert(order, candidate);
            }
        }
    }
    a
}

fn scan_result(fam: &ForbiddenFamily, param: Parameter, best: OrderBest) -> ScanResult {
    let mut maxima = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for (order, (value, g6)) in best {
        maxima.insert(order, value);
        witnesses.insert(order, g6);
    }
    ScanResult {
        family: fam.label.clone(),
        parameter: param.key().to_string(),
        maxima,
        witnesses,
    }
}

/// Profiles `param` over the connected members of `corpus` that avoid
/// every member of `fam`, keyed by order. Ties on value keep the
/// lexicographically smallest graph6.
pub fn bound_profile(
    corpus: &[Graph],
    fam: &ForbiddenFamily,
    param: Parameter,
) -> Result<ScanResult, RamseyError> {
    let best = corpus
        .par_iter()
        .map(|g| -> Result<OrderBest, RamseyError> {
            let mut out = OrderBest::new();
            if g.order() > 0 && g.is_connected() && fam.is_free(g)? {
                let value = compute(g, param)?.value;
                out.insert(g.order(), (value, emit_graph6(g)));
            }
            Ok(out)
        })
        .try_reduce(OrderBest::new, |a, b| Ok(merge_order_best(a, b)))?;
    Ok(scan_result(fam, param, best))
}

/// Same profile over every connected labeled graph up to `max_order`.
pub fn bound_profile_exhaustive_connected(
    max_order: usize,
    fam: &ForbiddenFamily,
    param: Parameter,
) -> Result<ScanResult, RamseyError> {
    if max_order > EXHAUSTIVE_CONNECTED_MAX {
        return Err(RamseyError::OrderCap { order: max_order, max: EXHAUSTIVE_CONNECTED_MAX });
    }
    let mut best = OrderBest::new();
    for order in 1..=max_order {
        let order_best = (0..labeled_graph_count(order))
            .into_par_iter()
            .map(|bits| -> Result<OrderBest, RamseyError> {
                let g = graph_from_edge_bits(order, bits);
                let mut out = OrderBest::new();
                if g.is_connected() && fam.is_free(&g)? {
                    let value = compute(&g, param)?.value;
                    out.insert(order, (value, emit_graph6(&g)));
                }
                Ok(out)
            })
            .try_reduce(OrderBest::new, |a, b| Ok(merge_order_best(a, b)))?;
        best = merge_order_best(best, order_best);
    }
    Ok(scan_result(fam, param, best))
}

/// Outcome of one exhaustive labeled-graph audit.
#[derive(Debug, Clone, Serialize)]
pub struct ExhaustiveAudit {
    pub max_order: usize,
    /// Labeled graphs cleared before any violation stopped the scan.
    pub graphs_checked: u64,
    pub violation: Option<AuditViolation>,
}

fn scan_labeled<F>(max_order: usize, check: F) -> Result<ExhaustiveAudit, RamseyError>
where
    F: Fn(&Graph) -> Option<String> + Sync,
{
    if max_order > EXHAUSTIVE_ORDER_MAX {
        return Err(RamseyError::OrderCap { order: max_order, max: EXHAUSTIVE_ORDER_MAX });
    }
    let mut graphs_checked = 0u64;
    for order in 1..=max_order {
        let total = labeled_graph_count(order);
        let hit = (0..total).into_par_iter().find_map_first(|bits| {
            let g = graph_from_edge_bits(order, bits);
            check(&g).map(|details| (bits, details))
        });
        if let Some((bits, details)) = hit {
            return Ok(ExhaustiveAudit {
                max_order,
                graphs_checked: graphs_checked + bits,
                violation: Some(AuditViolation {
                    graph6: emit_graph6(&graph_from_edge_bits(order, bits)),
                    details,
                }),
            });
        }
        graphs_checked += total;
    }
    Ok(ExhaustiveAudit { max_order, graphs_checked, violation: None })
}

/// Runs the nine-parameter report on every labeled graph up to
/// `max_order`. The report constructor enforces the chain ordering, the
/// doubling bound and the saturation sandwich, so any breach stops the
/// scan at the first offending graph in enumeration order.
pub fn chain_audit_exhaustive(max_order: usize) -> Result<ExhaustiveAudit, RamseyError> {
    scan_labeled(max_order, |g| match full_report(g) {
        Ok(_) => None,
        Err(SolverError::ChainViolation { details }) => Some(details),
        Err(other) => Some(format!("solver failure: {other}")),
    })
}

/// Checks at every vertex of every labeled graph up to `max_order` that
/// the forced-vertex independence value equals one plus the independence
/// number of the graph left after deleting the closed neighbourhood.
pub fn saturation_audit_exhaustive(max_order: usize) -> Result<ExhaustiveAudit, RamseyError> {
    scan_labeled(max_order, |g| {
        for v in 0..g.order() {
            let forced = independence_saturation_at(g, v).expect("vertex in range").value;
            let rest = VertexSet::from_mask(
                g.vertex_set().mask() & !g.closed_neighbors(v).mask(),
            );
            let alpha_rest = if rest.is_empty() {
                0
            } else {
                independence_number(&g.induced_subgraph(rest))
                    .expect("nonempty remainder")
                    .value
            };
            if forced != 1 + alpha_rest {
                return Some(format!(
                    "forced independence at vertex {v} is {forced}, expected {}",
                    1 + alpha_rest
                ));
            }
        }
        None
    })
}
