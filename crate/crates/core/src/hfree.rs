//! Induced-subgraph containment, freeness against finite forbidden
//! families, the order relation between families, and a structural detector
//! for cross-edge variants of two-star graphs.

use thiserror::Error;

use crate::families::{BistarVariantFamily, FamilyError, FamilySpec};
use crate::graph::{Graph, VertexSet};
use crate::solvers::Parameter;

#[derive(Debug, Error)]
pub enum HfreeError {
    #[error("a forbidden family needs at least one member")]
    EmptyFamily,
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// A vertex set of `g` inducing a subgraph isomorphic to `h`, if one
/// exists. Backtracking matcher; candidates are filtered by degree and by
/// adjacency masks against the partial map, and tried lowest vertex first,
/// so the result is deterministic.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<VertexSet> {
    if h.order() > g.order() {
        return None;
    }
    if h.order() == 0 {
        return Some(VertexSet::EMPTY);
    }
    let order = matching_order(h);
    let mut map = vec![usize::MAX; h.order()];
    embed(g, h, &order, 0, &mut map, 0).map(VertexSet::from_mask)
}

/// Pattern vertices sorted so each one touches as many already-placed
/// vertices as possible; keeps the candidate masks tight early.
fn matching_order(h: &Graph) -> Vec<usize> {
    let n = h.order();
    let mut order = Vec::with_capacity(n);
    let mut chosen = VertexSet::EMPTY;
    for _ in 0..n {
        let best = (0..n)
            .filter(|&v| !chosen.contains(v))
            .max_by_key(|&v| {
                let placed = (h.neighbors(v).mask() & chosen.mask()).count_ones();
                (placed, h.degree(v), usize::MAX - v)
            })
            .expect("unchosen vertex remains");
        order.push(best);
        chosen = chosen.insert(best);
    }
    order
}

fn embed(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: u32,
) -> Option<u32> {
    if depth == order.len() {
        return Some(used);
    }
    let hv = order[depth];
    let mut cand = g.vertex_set().mask() & !used;
    for &hu in &order[..depth] {
        let mapped = g.neighbors(map[hu]).mask();
        if h.has_edge(hv, hu) {
            cand &= mapped;
        } else {
            cand &= !mapped;
        }
    }
    let needed = h.degree(hv);
    while cand != 0 {
        let gv = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if g.degree(gv) < needed {
            continue;
        }
        map[hv] = gv;
        if let Some(hit) = embed(g, h, order, depth + 1, map, used | 1 << gv) {
            return Some(hit);
        }
    }
    map[hv] = usize::MAX;
    None
}

/// Equal orders plus an induced embedding is a full isomorphism.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && contains_induced(g, h).is_some()
}

/// Maximum `k` such that the path on `k` vertices occurs induced in `g`.
/// DFS from every start vertex; everything adjacent to the path interior is
/// permanently blocked, which is exactly the induced condition.
pub fn longest_induced_path(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let mut best = 1;
    for start in 0..g.order() {
        extend_path(g, start, 1 << start, 1, &mut best);
    }
    best
}

fn extend_path(g: &Graph, last: usize, blocked: u32, len: usize, best: &mut usize) {
    *best = (*best).max(len);
    // Once the tip stops being the tip, its whole closed neighborhood is
    // off limits; that is exactly the induced-path condition.
    let next_blocked = blocked | g.closed_neighbors(last).mask();
    let mut cand = g.neighbors(last).mask() & !blocked;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        extend_path(g, v, next_blocked, len + 1, best);
    }
}

/// One member of a forbidden family.
#[derive(Debug, Clone)]
pub enum FamilyMember {
    /// A parametric instance, expanded on demand.
    Spec(FamilySpec),
    /// An explicit graph with a display label.
    Concrete { label: String, graph: Graph },
    /// Every cross-edge variant of a two-star base, detected structurally
    /// instead of by enumeration.
    BistarVariants(BistarVariantFamily),
}

impl FamilyMember {
    pub fn label(&self) -> String {
        match self {
            FamilyMember::Spec(spec) => spec.to_string(),
            FamilyMember::Concrete { label, .. } => label.clone(),
            FamilyMember::BistarVariants(f) => format!("BS{}^{}+cross", f.leaves(), f.path()),
        }
    }

    /// Smallest order any concrete expansion of this member has.
    fn min_order(&self) -> usize {
        match self {
            FamilyMember::Spec(spec) => spec.order() as usize,
            FamilyMember::Concrete { graph, .. } => graph.order(),
            FamilyMember::BistarVariants(f) => f.member_order(),
        }
    }
}

/// A finite family of forbidden induced subgraphs.
#[derive(Debug, Clone)]
pub struct ForbiddenFamily {
    pub label: String,
    pub members: Vec<FamilyMember>,
}

/// Location of a family member inside a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyHit {
    pub member_index: usize,
    pub member_label: String,
    pub witness: VertexSet,
}

impl ForbiddenFamily {
    pub fn new(label: impl Into<String>, members: Vec<FamilyMember>) -> Result<Self, HfreeError> {
        if members.is_empty() {
            return Err(HfreeError::EmptyFamily);
        }
        for member in &members {
            if let FamilyMember::Spec(spec) = member {
                spec.validate()?;
            }
        }
        Ok(Self { label: label.into(), members })
    }

    pub fn from_specs(
        label: impl Into<String>,
        specs: Vec<FamilySpec>,
    ) -> Result<Self, HfreeError> {
        Self::new(label, specs.into_iter().map(FamilyMember::Spec).collect())
    }

    /// First member occurring induced in `g`, in member order.
    pub fn find_member_in(&self, g: &Graph) -> Result<Option<FamilyHit>, HfreeError> {
        for (member_index, member) in self.members.iter().enumerate() {
            if member.min_order() > g.order() {
                continue;
            }
            let witness = match member {
                FamilyMember::Spec(spec) => contains_induced(g, &spec.build()?),
                FamilyMember::Concrete { graph, .. } => contains_induced(g, graph),
                FamilyMember::BistarVariants(f) => {
                    contains_bistar_variant(g, f.leaves() as usize, f.path() as usize)
                }
            };
            if let Some(witness) = witness {
                return Ok(Some(FamilyHit {
                    member_index,
                    member_label: member.label(),
                    witness,
                }));
            }
        }
        Ok(None)
    }

    pub fn is_free(&self, g: &Graph) -> Result<bool, HfreeError> {
        Ok(self.find_member_in(g)?.is_none())
    }

    /// The family with one member removed; needs at least two members.
    pub fn dropping(&self, index: usize) -> Result<ForbiddenFamily, HfreeError> {
        let mut members = self.members.clone();
        if index >= members.len() {
            return Err(HfreeError::EmptyFamily);
        }
        let dropped = members.remove(index);
        ForbiddenFamily::new(format!("{} minus {}", self.label, dropped.label()), members)
    }
}

/// Outcome of comparing two forbidden families.
#[derive(Debug, Clone)]
pub struct FamilyOrder {
    pub holds: bool,
    /// A member of the right family containing no member of the left one.
    pub counterexample: Option<(String, Graph)>,
}

/// Does every concrete member of `larger` contain some member of `smaller`
/// induced? Variant members of `larger` are fully enumerated, so keep those
/// small here; the big enumerations live in the dedicated verifiers.
pub fn family_leq(
    smaller: &ForbiddenFamily,
    larger: &ForbiddenFamily,
) -> Result<FamilyOrder, HfreeError> {
    for member in &larger.members {
        let check = |g: Graph| -> Result<Option<FamilyOrder>, HfreeError> {
            if smaller.find_member_in(&g)?.is_none() {
                Ok(Some(FamilyOrder {
                    holds: false,
                    counterexample: Some((member.label(), g)),
                }))
            } else {
                Ok(None)
            }
        };
        match member {
            FamilyMember::Spec(spec) => {
                if let Some(order) = check(spec.build()?)? {
                    return Ok(order);
                }
            }
            FamilyMember::Concrete { graph, .. } => {
                if let Some(order) = check(graph.clone())? {
                    return Ok(order);
                }
            }
            FamilyMember::BistarVariants(f) => {
                for g in f.iter() {
                    if let Some(order) = check(g)? {
                        return Ok(order);
                    }
                }
            }
        }
    }
    Ok(FamilyOrder { holds: true, counterexample: None })
}

/// Witness that some cross-edge variant of the two-star family (`leaves`
/// leaves per side, centres at the ends of an induced path on `path`
/// vertices) occurs induced in `g`. The two leaf sets must be independent,
/// attached to their own centre only, and disjoint from the path; edges
/// between the two leaf sets are unconstrained.
pub fn contains_bistar_variant(g: &Graph, leaves: usize, path: usize) -> Option<VertexSet> {
    assert!(leaves >= 1, "need at least one leaf per side");
    assert!(path >= 2, "the centre path needs at least 2 vertices");
    if g.order() < 2 * leaves + path {
        return None;
    }
    let mut stack = Vec::with_capacity(path);
    for start in 0..g.order() {
        stack.push(start);
        if let Some(hit) = grow_centre_path(g, &mut stack, 1 << start, leaves, path) {
            return Some(hit);
        }
        stack.pop();
    }
    None
}

fn grow_centre_path(
    g: &Graph,
    stack: &mut Vec<usize>,
    blocked: u32,
    leaves: usize,
    path: usize,
) -> Option<VertexSet> {
    let last = *stack.last().expect("path is nonempty");
    if stack.len() == path {
        return leaf_sets_at(g, stack, leaves);
    }
    // Anything adjacent to the path minus its tip would break inducedness.
    let next_blocked = blocked | g.closed_neighbors(last).mask();
    let mut cand = g.neighbors(last).mask() & !blocked;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        stack.push(v);
        if let Some(hit) = grow_centre_path(g, stack, next_blocked, leaves, path) {
            return Some(hit);
        }
        stack.pop();
    }
    None
}

fn leaf_sets_at(g: &Graph, stack: &[usize], leaves: usize) -> Option<VertexSet> {
    let first = stack[0];
    let last = stack[stack.len() - 1];
    let mut cand_a = g.neighbors(first).mask();
    for &x in &stack[1..] {
        cand_a &= !g.closed_neighbors(x).mask();
    }
    let mut cand_b = g.neighbors(last).mask();
    for &x in &stack[..stack.len() - 1] {
        cand_b &= !g.closed_neighbors(x).mask();
    }
    // cand_a avoids N[last], so the two candidate pools never overlap.
    let a = independent_subset(g, cand_a, leaves)?;
    let b = independent_subset(g, cand_b, leaves)?;
    let mut witness = a | b;
    for &x in stack {
        witness |= 1 << x;
    }
    Some(VertexSet::from_mask(witness))
}

/// Lowest-first search for an independent set of size `k` inside `cand`.
pub(crate) fn independent_subset(g: &Graph, cand: u32, k: usize) -> Option<u32> {
    if k == 0 {
        return Some(0);
    }
    if (cand.count_ones() as usize) < k {
        return None;
    }
    let v = cand.trailing_zeros() as usize;
    let without_v = cand & !(1 << v);
    if let Some(rest) = independent_subset(g, without_v & !g.neighbors(v).mask(), k - 1) {
        return Some(rest | 1 << v);
    }
    independent_subset(g, without_v, k)
}

/// The finite forbidden family whose exclusion keeps `param` bounded over
/// connected graphs, instantiated at size `n`.
pub fn bounding_family(param: Parameter, n: u32) -> Result<ForbiddenFamily, HfreeError> {
    use FamilySpec::*;
    use Parameter::*;
    let mut specs = match param {
        LowerIrredundance | Domination => vec![StarPendant(n), CliquePendant(n), Path(n)],
        Independence => vec![CompleteBipartite(1, n), CliquePendant(n), Path(n)],
        IndependentDomination => vec![
            StarPendant(n),
            CliquePendant(n),
            Path(n),
            CompleteBipartite(n, n),
            Bistar { leaves: n, path: 2 },
        ],
        UpperDomination | UpperIrredundance => {
            vec![CompleteBipartite(1, n), CliquePendant(n), Path(n), CliqueMatching(n)]
        }
        OpenIrredundance => {
            vec![StarPendant(n), CliquePendant(n), Path(n), CliqueMatching(n), Fan(n)]
        }
        IndependenceSaturation | IrredundanceSaturation => {
            let mut specs =
                vec![StarPendant(n), CliquePendant(n), Path(n), CompleteBipartite(n, n)];
            if param == IrredundanceSaturation {
                specs.push(CliqueMatching(n));
            }
            specs.extend((2..=n.saturating_sub(3)).map(|p| Bistar { leaves: n, path: p }));
            specs
        }
    };
    specs.dedup();
    ForbiddenFamily::from_specs(format!("{}-bounding({n})", param.key()), specs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(text: &str) -> Graph {
        text.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn finds_paths_and_rejects_triangles_in_bipartite_hosts() {
        let p5 = build("P5");
        let p3 = build("P3");
        let hit = contains_induced(&p5, &p3).expect("P3 inside P5");
        assert!(is_isomorphic(&p5.induced_subgraph(hit), &p3));

        let k33 = build("K3,3");
        assert_eq!(contains_induced(&k33, &build("K3")), None);

        // CK2 and K2,2 are both the 4-cycle.
        assert!(contains_induced(&build("K2,2"), &build("CK2")).is_some());
        assert!(is_isomorphic(&build("CK2"), &build("K2,2")));
        assert!(!is_isomorphic(&build("P4"), &build("K1,3")));
    }

    #[test]
    fn witnesses_induce_the_pattern() {
        let cases = [
            ("CK3", "P4"),
            ("K1,4*", "K1,3"),
            ("BS3^2", "BS2^2"),
            ("F3", "K3"),
            ("C6", "P5"),
        ];
        for (host, pattern) in cases {
            let g = build(host);
            let h = build(pattern);
            let hit = contains_induced(&g, &h)
                .unwrap_or_else(|| panic!("{pattern} should occur in {host}"));
            assert!(
                is_isomorphic(&g.induced_subgraph(hit), &h),
                "witness for {pattern} in {host} does not induce it"
            );
        }
    }

    #[test]
    fn matcher_agrees_with_subset_brute_force_on_small_hosts() {
        // Every labeled host of order 4, every pattern of order <= 3.
        let patterns: Vec<Graph> = ["P3", "K3", "E3", "P2", "E2", "K1"]
            .iter()
            .map(|t| build(t))
            .collect();
        for bits in 0u32..1 << 6 {
            let mut g = Graph::empty(4).unwrap();
            let mut bit = 0;
            for u in 0..4 {
                for w in u + 1..4 {
                    if bits >> bit & 1 == 1 {
                        g.add_edge(u, w).unwrap();
                    }
                    bit += 1;
                }
            }
            for h in &patterns {
                let brute = (0u32..16)
                    .filter(|m| m.count_ones() as usize == h.order())
                    .any(|m| is_isomorphic(&g.induced_subgraph(VertexSet::from_mask(m)), h));
                assert_eq!(
                    contains_induced(&g, h).is_some(),
                    brute,
                    "disagreement on host bits {bits:#b} pattern order {}",
                    h.order()
                );
            }
        }
    }

    #[test]
    fn freeness_follows_member_order_and_reports_hits() {
        let c7 = build("C7");
        let triangle_only = ForbiddenFamily::from_specs(
            "triangles",
            vec![FamilySpec::Complete(3)],
        )
        .unwrap();
        assert!(triangle_only.is_free(&c7).unwrap());

        let self_family = ForbiddenFamily::from_specs(
            "pendant family",
            vec!["K1,3*".parse().unwrap(), "K3*".parse().unwrap(), "P3".parse().unwrap()],
        )
        .unwrap();
        let host = build("K1,3*");
        let hit = self_family.find_member_in(&host).unwrap().expect("self containment");
        // P3 sits inside K1,3* and is checked before... members run in
        // order, so the first listed member containing a hit wins.
        assert_eq!(hit.member_index, 0);
        assert_eq!(hit.member_label, "K1,3*");

        let ck3 = build("CK3");
        let upper_family = ForbiddenFamily::from_specs(
            "upper bound family at 3",
            vec!["K1,3".parse().unwrap(), "K3*".parse().unwrap(), "P6".parse().unwrap()],
        )
        .unwrap();
        assert!(upper_family.is_free(&ck3).unwrap());

        assert!(ForbiddenFamily::from_specs("empty", vec![]).is_err());
    }

    #[test]
    fn family_order_relation_matches_hand_checks() {
        let edges = ForbiddenFamily::from_specs("one edge", vec![FamilySpec::Path(2)]).unwrap();
        let some_graphs = ForbiddenFamily::from_specs(
            "graphs with an edge",
            vec!["K3".parse().unwrap(), "C5".parse().unwrap(), "K2,3".parse().unwrap()],
        )
        .unwrap();
        assert!(family_leq(&edges, &some_graphs).unwrap().holds);

        let triangles = ForbiddenFamily::from_specs("triangles", vec![FamilySpec::Complete(3)])
            .unwrap();
        let bipartite = ForbiddenFamily::from_specs(
            "a bipartite member",
            vec![FamilySpec::CompleteBipartite(3, 3)],
        )
        .unwrap();
        let order = family_leq(&triangles, &bipartite).unwrap();
        assert!(!order.holds);
        let (label, counterexample) = order.counterexample.unwrap();
        assert_eq!(label, "K3,3");
        assert_eq!(counterexample.order(), 6);

        // Two vertices are adjacent or not: {K2, E2} sits below any family
        // of graphs on at least two vertices.
        let pair = ForbiddenFamily::from_specs(
            "edge or non-edge",
            vec!["K1,1".parse().unwrap(), "E2".parse().unwrap()],
        )
        .unwrap();
        let bigger = ForbiddenFamily::from_specs(
            "order two and up",
            vec!["P5".parse().unwrap(), "K4".parse().unwrap(), "E2".parse().unwrap()],
        )
        .unwrap();
        assert!(family_leq(&pair, &bigger).unwrap().holds);
    }

    #[test]
    fn variant_detector_matches_enumeration_on_small_hosts() {
        // Spot cases first.
        assert!(contains_bistar_variant(&build("BS2^2"), 2, 2).is_some());
        assert!(contains_bistar_variant(&build("C4"), 1, 2).is_some());
        assert_eq!(contains_bistar_variant(&build("K4"), 1, 2), None);
        assert_eq!(contains_bistar_variant(&build("K1,4"), 2, 2), None);
        assert!(contains_bistar_variant(&build("P7"), 1, 3).is_some());

        // Exhaustive agreement with member-by-member matching at one leaf
        // per side, over every labeled graph of order 5.
        let members: Vec<Graph> =
            crate::families::enumerate_bistar_variants(1, 2).unwrap().collect();
        for bits in 0u32..1 << 10 {
            let mut g = Graph::empty(5).unwrap();
            let mut bit = 0;
            for u in 0..5 {
                for w in u + 1..5 {
                    if bits >> bit & 1 == 1 {
                        g.add_edge(u, w).unwrap();
                    }
                    bit += 1;
                }
            }
            let direct = contains_bistar_variant(&g, 1, 2).is_some();
            let by_members = members.iter().any(|m| contains_induced(&g, m).is_some());
            assert_eq!(direct, by_members, "host bits {bits:#b}");
        }
    }

    #[test]
    fn variant_witnesses_are_structurally_sound() {
        let host = build("BS3^4");
        let hit = contains_bistar_variant(&host, 2, 4).expect("base member inside");
        assert_eq!(hit.len(), 8);
        let sub = host.induced_subgraph(hit);
        // The witness must itself contain the structure it certifies.
        assert!(contains_bistar_variant(&sub, 2, 4).is_some());
    }

    #[test]
    fn longest_induced_path_handles_cliques_cycles_and_paths() {
        assert_eq!(longest_induced_path(&build("P7")), 7);
        assert_eq!(longest_induced_path(&build("K5")), 2);
        assert_eq!(longest_induced_path(&build("C6")), 5);
        assert_eq!(longest_induced_path(&build("E3")), 1);
        assert_eq!(longest_induced_path(&build("K1")), 1);
        assert_eq!(longest_induced_path(&build("K1,3")), 3);

        // Cross-check against the generic matcher on assorted hosts.
        for host in ["CK3", "BS2^3", "F3", "K1,3*", "C7", "K3,3"] {
            let g = build(host);
            let mut by_matcher = 1;
            for k in 2..=g.order() {
                let path = FamilySpec::Path(k as u32).build().unwrap();
                if contains_induced(&g, &path).is_some() {
                    by_matcher = k;
                }
            }
            assert_eq!(longest_induced_path(&g), by_matcher, "host {host}");
        }
    }

    #[test]
    fn bounding_families_have_the_published_shape() {
        use Parameter::*;
        let labels = |fam: &ForbiddenFamily| -> Vec<String> {
            fam.members.iter().map(|m| m.label()).collect()
        };

        let gamma2 = bounding_family(Domination, 2).unwrap();
        assert_eq!(labels(&gamma2), ["K1,2*", "K2*", "P2"]);
        assert_eq!(labels(&bounding_family(LowerIrredundance, 2).unwrap()), labels(&gamma2));

        assert_eq!(labels(&bounding_family(Independence, 3).unwrap()), ["K1,3", "K3*", "P3"]);
        assert_eq!(
            labels(&bounding_family(IndependentDomination, 2).unwrap()),
            ["K1,2*", "K2*", "P2", "K2,2", "BS2^2"]
        );
        assert_eq!(
            labels(&bounding_family(UpperIrredundance, 2).unwrap()),
            ["K1,2", "K2*", "P2", "CK2"]
        );
        assert_eq!(
            labels(&bounding_family(UpperDomination, 2).unwrap()),
            ["K1,2", "K2*", "P2", "CK2"]
        );
        assert_eq!(
            labels(&bounding_family(OpenIrredundance, 2).unwrap()),
            ["K1,2*", "K2*", "P2", "CK2", "F2"]
        );
        // The two-star tail appears once the leaf count reaches 5.
        assert_eq!(
            labels(&bounding_family(IndependenceSaturation, 2).unwrap()),
            ["K1,2*", "K2*", "P2", "K2,2"]
        );
        assert_eq!(
            labels(&bounding_family(IndependenceSaturation, 5).unwrap()),
            ["K1,5*", "K5*", "P5", "K5,5", "BS5^2"]
        );
        assert_eq!(
            labels(&bounding_family(IndependenceSaturation, 6).unwrap()),
            ["K1,6*", "K6*", "P6", "K6,6", "BS6^2", "BS6^3"]
        );
        assert_eq!(
            labels(&bounding_family(IrredundanceSaturation, 5).unwrap()),
            ["K1,5*", "K5*", "P5", "K5,5", "CK5", "BS5^2"]
        );
    }

    #[test]
    fn dropping_members_relabels_and_shrinks() {
        let fam = bounding_family(Parameter::OpenIrredundance, 2).unwrap();
        let smaller = fam.dropping(2).unwrap();
        assert_eq!(smaller.members.len(), fam.members.len() - 1);
        assert!(smaller.label.contains("minus P2"));
        // K2 avoids every remaining member once P2 is gone.
        let k2 = build("K2");
        assert!(!fam.is_free(&k2).unwrap());
        assert!(smaller.is_free(&k2).unwrap());
    }
}
