//! Maximum matching on bipartite graphs by augmenting paths. This is the
//! only matching the crate needs (the Konig-style audits all run on
//! bipartite graphs), so there is no general-graph algorithm here.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BipartiteError {
    #[error("vertex {vertex} appears on both sides of the bipartition")]
    SidesOverlap { vertex: usize },
    #[error("vertex {vertex} belongs to neither side of the bipartition")]
    SidesDoNotCover { vertex: usize },
    #[error("side vertex {vertex} is out of range for a graph of order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("edge {u}-{v} lies inside one side of the claimed bipartition")]
    EdgeWithinSide { u: usize, v: usize },
    #[error("graph is not bipartite (it contains an odd cycle)")]
    NotBipartite,
}

/// A graph together with a verified bipartition. Construction checks the
/// claim, so a held view is proof the graph is bipartite with these sides.
#[derive(Debug)]
pub struct BipartiteView<'a> {
    graph: &'a Graph,
    left: VertexSet,
    right: VertexSet,
}

impl<'a> BipartiteView<'a> {
    /// Sides must be disjoint, cover every vertex, and contain no edge.
    pub fn new(graph: &'a Graph, left: VertexSet, right: VertexSet) -> Result<Self, BipartiteError> {
        let order = graph.order();
        if let Some(v) = (left & right).smallest() {
            return Err(BipartiteError::SidesOverlap { vertex: v });
        }
        if let Some(v) = ((left | right) - graph.vertex_set()).smallest() {
            return Err(BipartiteError::OutOfRange { vertex: v, order });
        }
        if let Some(v) = (graph.vertex_set() - (left | right)).smallest() {
            return Err(BipartiteError::SidesDoNotCover { vertex: v });
        }
        for side in [left, right] {
            for u in side.iter() {
                if let Some(v) = (graph.neighbors(u) & side).smallest() {
                    return Err(BipartiteError::EdgeWithinSide { u: u.min(v), v: u.max(v) });
                }
            }
        }
        Ok(BipartiteView { graph, left, right })
    }

    /// The canonical bipartition from `Graph::bipartition` (vertex 0 of
    /// each component on the left).
    pub fn from_graph(graph: &'a Graph) -> Result<Self, BipartiteError> {
        let (left, right) = graph.bipartition().ok_or(BipartiteError::NotBipartite)?;
        BipartiteView::new(graph, left, right)
    }

    pub fn left(&self) -> VertexSet {
        self.left
    }

    pub fn right(&self) -> VertexSet {
        self.right
    }

    /// Size of a maximum matching, by repeated augmenting-path search from
    /// each left vertex in ascending order.
    pub fn matching_number(&self) -> usize {
        self.maximum_matching().len()
    }

    /// The matching itself as (left, right) pairs, ascending by left vertex.
    pub fn maximum_matching(&self) -> Vec<(usize, usize)> {
        let n = self.graph.order();
        // partner[v] = matched left vertex of right vertex v.
        let mut partner = vec![usize::MAX; n];
        for u in self.left.iter() {
            let mut visited = VertexSet::EMPTY;
            self.augment(u, &mut visited, &mut partner);
        }
        let mut pairs: Vec<(usize, usize)> = partner
            .iter()
            .enumerate()
            .filter(|&(_, &u)| u != usize::MAX)
            .map(|(v, &u)| (u, v))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    fn augment(&self, u: usize, visited: &mut VertexSet, partner: &mut [usize]) -> bool {
        for v in (self.graph.neighbors(u) & self.right).iter() {
            if visited.contains(v) {
                continue;
            }
            *visited = visited.insert(v);
            if partner[v] == usize::MAX || self.augment(partner[v], visited, partner) {
                partner[v] = u;
                return true;
            }
        }
        false
    }
}

/// Matching number with the bipartition discovered automatically.
pub fn matching_number(g: &Graph) -> Result<usize, BipartiteError> {
    Ok(BipartiteView::from_graph(g)?.matching_number())
}
