//! Exact solvers for the nine parameters around the domination chain:
//! ir, gamma, i, alpha, Gamma, IR, OIR, IS, IRS. All searches are
//! exhaustive over bit-mask subsets with pruning; nothing here is a
//! heuristic. Witness sets are deterministic: among all optimal sets the
//! one with the numerically smallest bit mask is returned.
//!
//! Search shapes, each justified by a lemma that the test suite checks
//! exhaustively on small orders:
//! - gamma scans subset sizes upward over all dominating sets (minimum
//!   over minimal dominating sets = minimum over all dominating sets,
//!   since supersets of dominating sets dominate).
//! - i scans over independent dominating sets (maximal independent =
//!   independent + dominating).
//! - ir scans over irredundant sets with an explicit maximality check.
//! - alpha / IR / OIR take maxima over hereditary properties, so plain
//!   pruned DFS over all such sets is complete.
//! - Gamma is the maximum over sets both dominating and irredundant
//!   (= minimal dominating sets).

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet, SOFT_VERTEX_LIMIT};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("parameters are undefined on the order-0 graph")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("solver produced inconsistent values: {details}")]
    ChainViolation { details: String },
}

/// The nine parameters, in domination-chain order followed by the three
/// chain relatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Parameter {
    LowerIrredundance,
    Domination,
    IndependentDomination,
    Independence,
    UpperDomination,
    UpperIrredundance,
    OpenIrredundance,
    IndependenceSaturation,
    IrredundanceSaturation,
}

impl Parameter {
    pub const ALL: [Parameter; 9] = [
        Parameter::LowerIrredundance,
        Parameter::Domination,
        Parameter::IndependentDomination,
        Parameter::Independence,
        Parameter::UpperDomination,
        Parameter::UpperIrredundance,
        Parameter::OpenIrredundance,
        Parameter::IndependenceSaturation,
        Parameter::IrredundanceSaturation,
    ];

    /// Short conventional symbol, also the JSON/CSV column name.
    pub fn key(self) -> &'static str {
        match self {
            Parameter::LowerIrredundance => "ir",
            Parameter::Domination => "gamma",
            Parameter::IndependentDomination => "i",
            Parameter::Independence => "alpha",
            Parameter::UpperDomination => "Gamma",
            Parameter::UpperIrredundance => "IR",
            Parameter::OpenIrredundance => "OIR",
            Parameter::IndependenceSaturation => "IS",
            Parameter::IrredundanceSaturation => "IRS",
        }
    }
}

impl std::fmt::Display for Parameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.key())
    }
}

impl std::str::FromStr for Parameter {
    type Err = String;

    /// Keys are case-sensitive: "ir" and "IR" are different parameters.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parameter::ALL
            .into_iter()
            .find(|p| p.key() == s)
            .ok_or_else(|| format!("unknown parameter {s:?}, expected one of ir, gamma, i, alpha, Gamma, IR, OIR, IS, IRS"))
    }
}

/// One solved parameter: its value and the lexicographically smallest
/// optimal set (by bit-mask value).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solved {
    pub value: usize,
    pub witness: VertexSet,
}

/// A solved saturation parameter: the minimum is attained at `vertex`
/// (lowest such index); `witness` contains `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SaturationSolved {
    pub value: usize,
    pub vertex: usize,
    pub witness: VertexSet,
}

fn require_nonempty(g: &Graph) -> Result<(), SolverError> {
    if g.order() == 0 {
        Err(SolverError::EmptyGraph)
    } else {
        Ok(())
    }
}

/// Ascending masks with exactly k bits inside 0..2^n (Gosper's hack).
/// Ascending mask order makes the first hit the lex-min witness for free.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    debug_assert!(k <= n && n <= 32);
    let limit: u64 = 1 << n;
    let mut cur: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut done = false;
    std::iter::from_fn(move || {
        if done || cur >= limit {
            return None;
        }
        let out = cur as u32;
        if k == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = r | ((cur ^ r) >> 2) / c;
        }
        Some(out)
    })
}

fn min_satisfying(g: &Graph, mut pred: impl FnMut(VertexSet) -> bool) -> Solved {
    let n = g.order();
    for k in 1..=n {
        for mask in subsets_of_size(n, k) {
            let s = VertexSet::from_mask(mask);
            if pred(s) {
                return Solved { value: k, witness: s };
            }
        }
    }
    unreachable!("the full vertex set satisfies every predicate used here")
}

/// gamma: minimum dominating set.
pub fn domination_number(g: &Graph) -> Result<Solved, SolverError> {
    require_nonempty(g)?;
    Ok(min_satisfying(g, |s| g.is_dominating(s)))
}

/// i: minimum maximal independent set = minimum independent dominating set.
pub fn independent_domination(g: &Graph) -> Result<Solved, SolverError> {
    require_nonempty(g)?;
    Ok(min_satisfying(g, |s| g.is_independent(s) && g.is_dominating(s)))
}

/// S is maximal irredundant if no one-vertex extension stays irredundant.
fn is_maximal_irredundant(g: &Graph, s: VertexSet) -> bool {
    debug_assert!(g.is_irredundant(s));
    (g.vertex_set() - s).iter().all(|v| !g.is_irredundant(s.insert(v)))
}

/// ir: minimum maximal irredundant set. Maximality cannot be dropped
/// here (irredundance is hereditary, so the plain minimum would be 0).
pub fn lower_irredundance(g: &Graph) -> Result<Solved, SolverError> {
    require_nonempty(g)?;
    Ok(min_satisfying(g, |s| g.is_irredundant(s) && is_maximal_irredundant(g, s)))
}

/// Max-degree vertex within `allowed`, ties to the lowest index.
fn branch_vertex(g: &Graph, allowed: u32) -> usize {
    let mut best = usize::MAX;
    let mut best_deg = usize::MAX;
    for v in VertexSet::from_mask(allowed).iter() {
        let deg = (g.neighbors(v).mask() & allowed).count_ones() as usize;
        if best == usize::MAX || deg > best_deg {
            best = v;
            best_deg = deg;
        }
    }
    best
}

/// Branch and bound for maximum independent subsets of `allowed`:
/// branch on a maximum-degree vertex, bound by |current| + |allowed|.
/// In feasibility mode (`target`) it stops as soon as `target` is reached.
struct AlphaSearch<'g> {
    g: &'g Graph,
    best: usize,
    best_set: u32,
    target: Option<usize>,
    hit: bool,
}

impl<'g> AlphaSearch<'g> {
    fn run(g: &'g Graph, allowed: u32, seed: u32, target: Option<usize>) -> Self {
        let mut s = AlphaSearch { g, best: 0, best_set: 0, target, hit: false };
        // `seed` counts toward sizes but is fixed; it must be independent
        // and disjoint from `allowed`'s closed neighborhood constraints.
        debug_assert!(g.is_independent(VertexSet::from_mask(seed)));
        debug_assert_eq!(g.closed_neighborhood(VertexSet::from_mask(seed)).mask() & allowed, 0);
        s.best = seed.count_ones() as usize;
        s.best_set = seed;
        if let Some(t) = target {
            if s.best >= t {
                s.hit = true;
                return s;
            }
        }
        s.go(allowed, seed, seed.count_ones() as usize);
        s
    }

    fn go(&mut self, allowed: u32, cur: u32, cur_len: usize) {
        if self.hit {
            return;
        }
        if cur_len > self.best {
            self.best = cur_len;
            self.best_set = cur;
            if let Some(t) = self.target {
                if cur_len >= t {
                    self.hit = true;
                    return;
                }
            }
        }
        let bound = cur_len + allowed.count_ones() as usize;
        let needed = self.target.unwrap_or(self.best + 1);
        if bound < needed || allowed == 0 {
            return;
        }
        let v = branch_vertex(self.g, allowed);
        self.go(allowed & !self.g.closed_neighbors(v).mask(), cur | 1 << v, cur_len + 1);
        self.go(allowed & !(1 << v), cur, cur_len);
    }
}

/// alpha: maximum independent set.
pub fn independence_number(g: &Graph) -> Result<Solved, SolverError> {
    require_nonempty(g)?;
    let full = g.vertex_set().mask();
    let value = AlphaSearch::run(g, full, 0, None).best;
    let witness = refine_lex_min(g.order(), 0, |req, exc| {
        AlphaSearch::run(g, full & !exc & !g.closed_neighborhood(VertexSet::from_mask(req)).mask(), req, Some(value)).hit
    });
    Ok(Solved { value, witness: VertexSet::from_mask(witness) })
}

/// DFS over irredundant (mode Closed), open irredundant (mode Open), or
/// dominating-irredundant (mode Dominating) sets. All three property
/// families are explored through irredundant supersets, which is complete
/// because irredundance and open irredundance are hereditary.
#[derive(Clone, Copy, PartialEq)]
enum IrrMode {
    Closed,
    Open,
    Dominating,
}

struct IrrSearch<'g> {
    g: &'g Graph,
    n: usize,
    mode: IrrMode,
    excluded: u32,
    /// Union of closed neighborhoods of vertices >= index, for the
    /// "domination still reachable" prune.
    suffix_cover: Vec<u32>,
    best: usize,
    best_set: u32,
    target: Option<usize>,
    hit: bool,
    /// (vertex, private neighborhood) per current member.
    pn: Vec<(usize, u32)>,
}

impl<'g> IrrSearch<'g> {
    fn run(g: &'g Graph, mode: IrrMode, required: u32, excluded: u32, target: Option<usize>) -> Self {
        let n = g.order();
        let mut suffix_cover = vec![0u32; n + 1];
        for v in (0..n).rev() {
            suffix_cover[v] = suffix_cover[v + 1] | g.closed_neighbors(v).mask();
        }
        let mut s = IrrSearch {
            g,
            n,
            mode,
            excluded: excluded | required,
            suffix_cover,
            best: 0,
            best_set: 0,
            target,
            hit: false,
            pn: Vec::with_capacity(n),
        };
        // Seed with the required vertices (ascending), abandoning the run
        // if they already violate the property.
        let mut cover = 0u32;
        for v in VertexSet::from_mask(required).iter() {
            if !s.try_push(v, cover) {
                s.best = 0;
                return s;
            }
            cover |= g.closed_neighbors(v).mask();
        }
        s.record(required, cover);
        if !s.hit {
            s.go(0, required, cover);
        }
        s
    }

    /// Updates pn state for adding v; false if some member would lose its
    /// last (outside-S where required) private neighbor.
    fn try_push(&mut self, v: usize, cover: u32) -> bool {
        let nv = self.g.closed_neighbors(v).mask();
        let pn_v = nv & !cover;
        if !self.viable(v, pn_v) {
            return false;
        }
        for &(u, pu) in &self.pn {
            if !self.viable(u, pu & !nv) {
                return false;
            }
        }
        for entry in &mut self.pn {
            entry.1 &= !nv;
        }
        self.pn.push((v, pn_v));
        true
    }

    fn viable(&self, v: usize, pn: u32) -> bool {
        match self.mode {
            IrrMode::Closed | IrrMode::Dominating => pn != 0,
            // Only v itself can sit inside S among v's private neighbors.
            IrrMode::Open => pn & !(1 << v) != 0,
        }
    }

    fn record(&mut self, s: u32, cover: u32) {
        if self.mode == IrrMode::Dominating && cover != self.g.vertex_set().mask() {
            return;
        }
        let len = s.count_ones() as usize;
        if let Some(t) = self.target {
            if len == t {
                self.best = len;
                self.best_set = s;
                self.hit = true;
            }
            return;
        }
        if len > self.best {
            self.best = len;
            self.best_set = s;
        }
    }

    fn go(&mut self, from: usize, s: u32, cover: u32) {
        if self.hit {
            return;
        }
        let len = s.count_ones() as usize;
        let cap = self.target.unwrap_or(self.best + 1);
        if len + (self.n - from) < cap {
            return;
        }
        if self.mode == IrrMode::Dominating && cover | self.suffix_cover[from] != self.g.vertex_set().mask() {
            return;
        }
        for v in from..self.n {
            if self.excluded >> v & 1 != 0 {
                continue;
            }
            let depth = self.pn.len();
            if self.try_push(v, cover) {
                let nv = self.g.closed_neighbors(v).mask();
                self.record(s | 1 << v, cover | nv);
                self.go(v + 1, s | 1 << v, cover | nv);
                self.pn.truncate(depth);
                // Restore the private neighborhoods clipped by v.
                for entry in &mut self.pn {
                    entry.1 = self.g.private_neighborhood(entry.0, VertexSet::from_mask(s)).mask();
                }
                if self.hit {
                    return;
                }
            }
        }
    }
}

fn max_irredundant_like(g: &Graph, mode: IrrMode, required: u32) -> Solved {
    let run = IrrSearch::run(g, mode, required, 0, None);
    let value = run.best;
    let witness = refine_lex_min(g.order(), required, |req, exc| {
        IrrSearch::run(g, mode, req, exc, Some(value)).hit
    });
    Solved { value, witness: VertexSet::from_mask(witness) }
}

/// IR: maximum irredundant set (maximal ones realize the maximum since
/// irredundance is hereditary).
pub fn upper_irredundance(g: &Graph) -> Result<Solved, SolverError> {
    require_nonempty(g)?;
    Ok(max_irredundant_like(g, IrrMode::Closed, 0))
}

/// OIR: maximum open irredundant set; 0 with an empty witness when only
/// the empty set qualifies (the convention for e.g. K1).
pub fn open_irredundance(g: &Graph) -> Result<Solved, SolverError> {
    require_nonempty(g)?;
    Ok(max_irredundant_like(g, IrrMode::Open, 0))
}

/// Gamma: maximum set that is simultaneously dominating and irredundant,
/// i.e. the largest minimal dominating set.
pub fn upper_domination(g: &Graph) -> Result<Solved, SolverError> {
    require_nonempty(g)?;
    Ok(max_irredundant_like(g, IrrMode::Dominating, 0))
}

/// IS(v): largest independent set containing v. Computed by forced-vertex
/// branch and bound, NOT via alpha on a reduced graph, so the identity
/// IS(v) = 1 + alpha(G - N[v]) stays a meaningful cross-check.
pub fn independence_saturation_at(g: &Graph, v: usize) -> Result<Solved, SolverError> {
    require_nonempty(g)?;
    let n = g.order();
    if v >= n {
        return Err(SolverError::VertexOutOfRange { vertex: v, order: n });
    }
    let seed = 1u32 << v;
    let allowed0 = g.vertex_set().mask() & !g.closed_neighbors(v).mask();
    let value = AlphaSearch::run(g, allowed0, seed, None).best;
    let witness = refine_lex_min(n, seed, |req, exc| {
        let allowed = allowed0 & !exc & !g.closed_neighborhood(VertexSet::from_mask(req)).mask();
        AlphaSearch::run(g, allowed, req, Some(value)).hit
    });
    Ok(Solved { value, witness: VertexSet::from_mask(witness) })
}

/// IS(G) = min over v of IS(v); reports the lowest minimizing vertex.
pub fn independence_saturation(g: &Graph) -> Result<SaturationSolved, SolverError> {
    require_nonempty(g)?;
    let mut best: Option<SaturationSolved> = None;
    for v in 0..g.order() {
        let solved = independence_saturation_at(g, v)?;
        if best.map_or(true, |b| solved.value < b.value) {
            best = Some(SaturationSolved { value: solved.value, vertex: v, witness: solved.witness });
        }
    }
    Ok(best.expect("order >= 1"))
}

/// IRS(v): largest irredundant set containing v.
pub fn irredundance_saturation_at(g: &Graph, v: usize) -> Result<Solved, SolverError> {
    require_nonempty(g)?;
    if v >= g.order() {
        return Err(SolverError::VertexOutOfRange { vertex: v, order: g.order() });
    }
    Ok(max_irredundant_like(g, IrrMode::Closed, 1 << v))
}

/// IRS(G) = min over v of IRS(v); reports the lowest minimizing vertex.
pub fn irredundance_saturation(g: &Graph) -> Result<SaturationSolved, SolverError> {
    require_nonempty(g)?;
    let mut best: Option<SaturationSolved> = None;
    for v in 0..g.order() {
        let solved = irredundance_saturation_at(g, v)?;
        if best.map_or(true, |b| solved.value < b.value) {
            best = Some(SaturationSolved { value: solved.value, vertex: v, witness: solved.witness });
        }
    }
    Ok(best.expect("order >= 1"))
}

/// Greedy lexicographic refinement: processes vertices from high to low,
/// excluding each when a target-sized solution still exists without it.
/// The surviving vertices form the minimum-bit-mask optimal set.
/// `feasible(required, excluded)` must answer whether some valid set of
/// the target size contains `required` and avoids `excluded`.
fn refine_lex_min(n: usize, seed: u32, mut feasible: impl FnMut(u32, u32) -> bool) -> u32 {
    let mut required = seed;
    let mut excluded = 0u32;
    for v in (0..n).rev() {
        let bit = 1u32 << v;
        if required & bit != 0 || excluded & bit != 0 {
            continue;
        }
        if feasible(required, excluded | bit) {
            excluded |= bit;
        } else {
            required |= bit;
        }
    }
    required
}

/// Dispatch by parameter name.
pub fn compute(g: &Graph, param: Parameter) -> Result<Solved, SolverError> {
    match param {
        Parameter::LowerIrredundance => lower_irredundance(g),
        Parameter::Domination => domination_number(g),
        Parameter::IndependentDomination => independent_domination(g),
        Parameter::Independence => independence_number(g),
        Parameter::UpperDomination => upper_domination(g),
        Parameter::UpperIrredundance => upper_irredundance(g),
        Parameter::OpenIrredundance => open_irredundance(g),
        Parameter::IndependenceSaturation => {
            independence_saturation(g).map(|s| Solved { value: s.value, witness: s.witness })
        }
        Parameter::IrredundanceSaturation => {
            irredundance_saturation(g).map(|s| Solved { value: s.value, witness: s.witness })
        }
    }
}

/// Witness sets for all nine parameters, serialized as sorted vertex lists.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Witnesses {
    pub ir: VertexSet,
    pub gamma: VertexSet,
    pub i: VertexSet,
    pub alpha: VertexSet,
    #[serde(rename = "Gamma")]
    pub upper_domination: VertexSet,
    #[serde(rename = "IR")]
    pub upper_irredundance: VertexSet,
    #[serde(rename = "OIR")]
    pub open_irredundance: VertexSet,
    #[serde(rename = "IS")]
    pub independence_saturation: VertexSet,
    #[serde(rename = "IRS")]
    pub irredundance_saturation: VertexSet,
}

/// All nine parameter values of one graph, plus witnesses.
/// The flat JSON layout is stable; `schema` gates future changes.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ParameterReport {
    pub schema: u32,
    pub order: usize,
    pub connected: bool,
    pub ir: usize,
    pub gamma: usize,
    pub i: usize,
    pub alpha: usize,
    #[serde(rename = "Gamma")]
    pub upper_domination: usize,
    #[serde(rename = "IR")]
    pub upper_irredundance: usize,
    #[serde(rename = "OIR")]
    pub open_irredundance: usize,
    #[serde(rename = "IS")]
    pub independence_saturation: usize,
    #[serde(rename = "IRS")]
    pub irredundance_saturation: usize,
    pub witnesses: Witnesses,
}

pub const REPORT_SCHEMA_VERSION: u32 = 1;
pub const CSV_HEADER: &str = "order,connected,ir,gamma,i,alpha,Gamma,IR,OIR,IS,IRS";

impl ParameterReport {
    pub fn value(&self, param: Parameter) -> usize {
        match param {
            Parameter::LowerIrredundance => self.ir,
            Parameter::Domination => self.gamma,
            Parameter::IndependentDomination => self.i,
            Parameter::Independence => self.alpha,
            Parameter::UpperDomination => self.upper_domination,
            Parameter::UpperIrredundance => self.upper_irredundance,
            Parameter::OpenIrredundance => self.open_irredundance,
            Parameter::IndependenceSaturation => self.independence_saturation,
            Parameter::IrredundanceSaturation => self.irredundance_saturation,
        }
    }

    pub fn witness(&self, param: Parameter) -> VertexSet {
        match param {
            Parameter::LowerIrredundance => self.witnesses.ir,
            Parameter::Domination => self.witnesses.gamma,
            Parameter::IndependentDomination => self.witnesses.i,
            Parameter::Independence => self.witnesses.alpha,
            Parameter::UpperDomination => self.witnesses.upper_domination,
            Parameter::UpperIrredundance => self.witnesses.upper_irredundance,
            Parameter::OpenIrredundance => self.witnesses.open_irredundance,
            Parameter::IndependenceSaturation => self.witnesses.independence_saturation,
            Parameter::IrredundanceSaturation => self.witnesses.irredundance_saturation,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.order,
            self.connected,
            self.ir,
            self.gamma,
            self.i,
            self.alpha,
            self.upper_domination,
            self.upper_irredundance,
            self.open_irredundance,
            self.independence_saturation,
            self.irredundance_saturation,
        )
    }
}

/// All nine parameters of one graph. Every known inequality between the
/// values is re-checked before returning; a violation means a solver bug
/// and comes back as `ChainViolation`.
pub fn full_report(g: &Graph) -> Result<ParameterReport, SolverError> {
    require_nonempty(g)?;
    if g.order() > SOFT_VERTEX_LIMIT {
        log::warn!(
            "graph order {} above the soft limit {}; exact search may take a long time",
            g.order(),
            SOFT_VERTEX_LIMIT
        );
    }
    let ir = lower_irredundance(g)?;
    let gamma = domination_number(g)?;
    let i = independent_domination(g)?;
    let alpha = independence_number(g)?;
    let upper_dom = upper_domination(g)?;
    let upper_irr = upper_irredundance(g)?;
    let oir = open_irredundance(g)?;
    let is_sat = independence_saturation(g)?;
    let irs_sat = irredundance_saturation(g)?;

    let chain = [
        ("ir <= gamma", ir.value <= gamma.value),
        ("gamma <= i", gamma.value <= i.value),
        ("i <= alpha", i.value <= alpha.value),
        ("alpha <= Gamma", alpha.value <= upper_dom.value),
        ("Gamma <= IR", upper_dom.value <= upper_irr.value),
        ("gamma <= 2*ir - 1", gamma.value <= 2 * ir.value - 1),
        ("i <= IS", i.value <= is_sat.value),
        ("IS <= alpha", is_sat.value <= alpha.value),
        ("ir <= IRS", ir.value <= irs_sat.value),
        ("IRS <= IR", irs_sat.value <= upper_irr.value),
        ("IS <= IRS", is_sat.value <= irs_sat.value),
        ("OIR <= IR", oir.value <= upper_irr.value),
    ];
    if let Some((label, _)) = chain.iter().find(|(_, ok)| !ok) {
        return Err(SolverError::ChainViolation { details: format!("{label} failed on {g:?}") });
    }

    Ok(ParameterReport {
        schema: REPORT_SCHEMA_VERSION,
        order: g.order(),
        connected: g.is_connected(),
        ir: ir.value,
        gamma: gamma.value,
        i: i.value,
        alpha: alpha.value,
        upper_domination: upper_dom.value,
        upper_irredundance: upper_irr.value,
        open_irredundance: oir.value,
        independence_saturation: is_sat.value,
        irredundance_saturation: irs_sat.value,
        witnesses: Witnesses {
            ir: ir.witness,
            gamma: gamma.witness,
            i: i.witness,
            alpha: alpha.witness,
            upper_domination: upper_dom.witness,
            upper_irredundance: upper_irr.witness,
            open_irredundance: oir.witness,
            independence_saturation: is_sat.witness,
            irredundance_saturation: irs_sat.witness,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Two K3's joined by a perfect matching: cliques {0,1,2} and {3,4,5}.
    fn ck3() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    fn values(g: &Graph) -> [usize; 9] {
        let r = full_report(g).unwrap();
        [
            r.ir,
            r.gamma,
            r.i,
            r.alpha,
            r.upper_domination,
            r.upper_irredundance,
            r.open_irredundance,
            r.independence_saturation,
            r.irredundance_saturation,
        ]
    }

    #[test]
    fn resolves_frozen_rows_on_small_graphs() {
        // Rows frozen from an independent brute-force enumeration of all
        // subsets, parameter by parameter. Order: ir gamma i alpha Gamma
        // IR OIR IS IRS.
        assert_eq!(values(&path(4)), [2, 2, 2, 2, 2, 2, 2, 2, 2]);
        assert_eq!(values(&path(6)), [2, 2, 2, 3, 3, 3, 3, 3, 3]);
        assert_eq!(values(&cycle(5)), [2, 2, 2, 2, 2, 2, 2, 2, 2]);
        assert_eq!(values(&ck3()), [2, 2, 2, 2, 3, 3, 3, 2, 3]);
        assert_eq!(values(&complete(5)), [1, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(values(&complete(1)), [1, 1, 1, 1, 1, 1, 0, 1, 1]);
        assert_eq!(values(&Graph::empty(4).unwrap()), [4, 4, 4, 4, 4, 4, 0, 4, 4]);
        assert_eq!(values(&cycle(6)), [2, 2, 2, 3, 3, 3, 2, 3, 3]);
    }

    #[test]
    fn star_values() {
        // K_{1,5}: center 0.
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(values(&star), [1, 1, 1, 5, 5, 5, 1, 1, 1]);
        assert_eq!(lower_irredundance(&star).unwrap().witness.to_vec(), vec![0]);
    }

    #[test]
    fn witnesses_are_lex_min_by_mask() {
        let p6 = path(6);
        assert_eq!(domination_number(&p6).unwrap().witness.to_vec(), vec![1, 4]);
        assert_eq!(independence_number(&p6).unwrap().witness.to_vec(), vec![0, 2, 4]);
        let is_sat = independence_saturation(&p6).unwrap();
        assert_eq!(is_sat.vertex, 0);
        assert_eq!(is_sat.witness.to_vec(), vec![0, 2, 4]);
        // OIR(P6) = 3; {0,3,4} is open irredundant (private neighbors
        // 1, 2, 5) and no smaller 3-bit mask qualifies.
        let oir = open_irredundance(&p6).unwrap();
        assert_eq!(oir.value, 3);
        assert_eq!(oir.witness.to_vec(), vec![0, 3, 4]);
    }

    #[test]
    fn witnesses_certify_their_predicates() {
        for g in [path(7), cycle(6), ck3(), complete(4)] {
            let r = full_report(&g).unwrap();
            assert!(g.is_dominating(r.witnesses.gamma));
            assert!(g.is_independent(r.witnesses.i) && g.is_dominating(r.witnesses.i));
            assert!(g.is_independent(r.witnesses.alpha));
            assert!(g.is_irredundant(r.witnesses.ir));
            assert!(is_maximal_irredundant(&g, r.witnesses.ir));
            assert!(g.is_dominating(r.witnesses.upper_domination));
            assert!(g.is_irredundant(r.witnesses.upper_domination));
            assert!(g.is_irredundant(r.witnesses.upper_irredundance));
            assert!(g.is_open_irredundant(r.witnesses.open_irredundance));
            assert_eq!(r.witnesses.alpha.len(), r.alpha);
            assert_eq!(r.witnesses.open_irredundance.len(), r.open_irredundance);
        }
    }

    #[test]
    fn saturation_solvers_report_minimizing_vertex() {
        // Bistar with 3 leaves per center, centers adjacent (0-1; leaves
        // of 0: 2,3,4; leaves of 1: 5,6,7). IS at a center is 4; at a
        // leaf it is 6; minimum 4 attained first at vertex 0.
        let bs = Graph::from_edges(
            8,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)],
        )
        .unwrap();
        let is_sat = independence_saturation(&bs).unwrap();
        assert_eq!((is_sat.value, is_sat.vertex), (4, 0));
        assert!(bs.is_independent(is_sat.witness));
        assert!(is_sat.witness.contains(0));
        assert_eq!(independence_saturation_at(&bs, 2).unwrap().value, 6);
        let irs = irredundance_saturation(&bs).unwrap();
        assert_eq!(irs.value, 4);
        assert!(bs.is_irredundant(irs.witness));
    }

    #[test]
    fn saturation_at_checks_vertex_range() {
        let g = path(3);
        assert_eq!(
            independence_saturation_at(&g, 3).unwrap_err(),
            SolverError::VertexOutOfRange { vertex: 3, order: 3 }
        );
        assert_eq!(
            irredundance_saturation_at(&g, 9).unwrap_err(),
            SolverError::VertexOutOfRange { vertex: 9, order: 3 }
        );
    }

    #[test]
    fn order_zero_is_rejected() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(full_report(&g).unwrap_err(), SolverError::EmptyGraph);
        assert_eq!(domination_number(&g).unwrap_err(), SolverError::EmptyGraph);
    }

    #[test]
    fn parameter_keys_round_trip() {
        for p in Parameter::ALL {
            assert_eq!(p.key().parse::<Parameter>().unwrap(), p);
        }
        assert!("IRX".parse::<Parameter>().is_err());
        // Case matters: "Ir" is neither ir nor IR.
        assert!("Ir".parse::<Parameter>().is_err());
    }

    #[test]
    fn report_serializes_with_conventional_keys() {
        let r = full_report(&cycle(5)).unwrap();
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["order"], 5);
        assert_eq!(json["connected"], true);
        assert_eq!(json["gamma"], 2);
        assert_eq!(json["Gamma"], 2);
        assert_eq!(json["IR"], 2);
        assert_eq!(json["OIR"], 2);
        assert_eq!(json["IS"], 2);
        assert_eq!(json["IRS"], 2);
        assert_eq!(json["schema"], 1);
        assert!(json["witnesses"]["alpha"].is_array());
        assert_eq!(r.csv_row(), "5,true,2,2,2,2,2,2,2,2,2");
        assert_eq!(CSV_HEADER.split(',').count(), 11);
    }

    #[test]
    fn subset_scan_is_ascending() {
        let masks: Vec<u32> = subsets_of_size(4, 2).collect();
        assert_eq!(masks, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(subsets_of_size(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(3, 3).collect::<Vec<_>>(), vec![0b111]);
        assert_eq!(subsets_of_size(32, 1).count(), 32);
    }
}
