//! Simple undirected graphs on at most 32 vertices, stored as one
//! adjacency bitmask per vertex. Everything downstream leans on the
//! masks, so the solvers get set algebra at word speed.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Hard capacity. Adjacency rows are `u32`, so vertex indices live in `0..32`.
pub const MAX_VERTICES: usize = 32;

/// Orders above this are legal but exact search times stop being interactive.
pub const SOFT_VERTEX_LIMIT: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {order} exceeds the capacity of {max} vertices")]
    TooManyVertices { order: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex} is not allowed in a simple graph")]
    SelfLoop { vertex: usize },
}

/// Set of vertex indices packed into a `u32`. Bit `v` set means vertex `v`
/// is a member. Ordering is by mask value, which downstream code uses as
/// the canonical tie-break between witness sets.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u32) -> Self {
        VertexSet(mask)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    #[must_use]
    pub fn insert(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1 << v))
    }

    #[must_use]
    pub fn remove(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1 << v))
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest-index member.
    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending vertex indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.insert(v);
        }
        s
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Undirected simple graph. Invariants: `adj.len() == n <= 32`,
/// `adj[v]` never contains bit `v`, and adjacency is symmetric.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { order: n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adjacency rows must already be symmetric and loop-free; checked in debug.
    pub(crate) fn from_adjacency(adj: Vec<u32>) -> Self {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        #[cfg(debug_assertions)]
        for u in 0..n {
            debug_assert_eq!(adj[u] & (1 << u), 0, "self-loop at {u}");
            debug_assert_eq!(adj[u] >> n, 0, "row {u} mentions out-of-range vertices");
            for v in 0..n {
                debug_assert_eq!(adj[u] >> v & 1, adj[v] >> u & 1, "asymmetric pair {u},{v}");
            }
        }
        Graph { n, adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, order: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | (1 << v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = VertexSet(self.adj[u] & !((1u64 << (u + 1)) as u32).wrapping_sub(1));
            for v in above.iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// N[S]: S together with every neighbor of S.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = s.mask();
        for v in s.iter() {
            out |= self.adj[v];
        }
        VertexSet(out)
    }

    pub fn is_dominating(&self, s: VertexSet) -> bool {
        self.closed_neighborhood(s) == self.vertex_set()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        for v in s.iter() {
            if self.adj[v] & s.mask() != 0 {
                return false;
            }
        }
        true
    }

    /// Closed private neighborhood PN[v, S] = N[v] - N[S - {v}].
    /// Pre: `s` contains `v`.
    pub fn private_neighborhood(&self, v: usize, s: VertexSet) -> VertexSet {
        debug_assert!(s.contains(v));
        let others = self.closed_neighborhood(s.remove(v));
        self.closed_neighbors(v) - others
    }

    /// Every member keeps a closed private neighbor.
    pub fn is_irredundant(&self, s: VertexSet) -> bool {
        for v in s.iter() {
            if self.private_neighborhood(v, s).is_empty() {
                return false;
            }
        }
        true
    }

    /// Every member keeps a private neighbor outside S itself.
    pub fn is_open_irredundant(&self, s: VertexSet) -> bool {
        for v in s.iter() {
            if (self.private_neighborhood(v, s) - s).is_empty() {
                return false;
            }
        }
        true
    }

    /// Subgraph induced on `s`, vertices relabeled to `0..s.len()` in
    /// ascending order of their original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let keep = s.to_vec();
        let mut adj = vec![0u32; keep.len()];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.adj[u] & (1 << v) != 0 {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph { n: keep.len(), adj }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_set().mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { order: n, max: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|row| (*row as u64) << self.n).map(|r| r as u32));
        Ok(Graph { n, adj })
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        debug_assert!(start < self.n);
        let mut seen = 1u32 << start;
        loop {
            let mut grown = seen;
            for v in VertexSet(seen).iter() {
                grown |= self.adj[v];
            }
            if grown == seen {
                return VertexSet(seen);
            }
            seen = grown;
        }
    }

    /// Order 0 and order 1 count as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == self.vertex_set()
    }

    /// Two-coloring by BFS if one exists. Vertex 0 of each component goes
    /// left, so the output is unique. Isolated-free not required.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![None::<bool>; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u).iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut left = VertexSet::EMPTY;
        let mut right = VertexSet::EMPTY;
        for (v, c) in color.iter().enumerate() {
            match c {
                Some(false) => left = left.insert(v),
                Some(true) => right = right.insert(v),
                None => unreachable!(),
            }
        }
        Some((left, right))
    }

    /// Degree sequence, descending. Equal for isomorphic graphs.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
