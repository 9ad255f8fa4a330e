//! Finite simple undirected graphs on dense vertex indices `0..n`.

mod enumerate;
mod ops;
mod path;
mod vertex_set;

pub use enumerate::{edge_slots, enumerate_graphs, enumerate_graphs_bounded, GraphEnumeration, DEFAULT_ENUMERATION_BOUND};
pub use ops::{
    connected_components, induced_subgraph, is_homomorphism, is_spanning_subgraph, is_transitive,
    is_weak_homomorphism, strong_product, tensor_product, transitivity_witness, VertexFunction,
};
pub use path::{find_path, StepPath};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// Simple undirected graph. Rows are bit sets; the relation is kept
/// symmetric and irreflexive by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            rows: (0..n).map(|_| VertexSet::empty(n)).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`; duplicate edges are ignored.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::InvalidInput(format!("loop at vertex {u}")));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            g.rows[u] = VertexSet::full(n);
            g.rows[u].remove(u);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges: Vec<_> = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::from_edges(shift + other.n(), &edges).expect("shifted edges are valid")
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() == self.n() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "vertex set over {} vertices used with graph on {}",
                set.universe(),
                self.n()
            )))
        }
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut s = self.rows[v].clone();
        s.insert(v);
        Ok(s)
    }

    /// `N[U] = U ∪ ⋃_{v∈U} N(v)`.
    pub fn neighborhood_of_set(&self, set: &VertexSet) -> Result<VertexSet> {
        self.check_set(set)?;
        let mut out = set.clone();
        for v in set {
            out.union_with(&self.rows[v]);
        }
        Ok(out)
    }

    pub fn is_connected(&self) -> bool {
        self.n() >= 1 && connected_components(self).len() == 1
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}
