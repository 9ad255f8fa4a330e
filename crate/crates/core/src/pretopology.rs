//! The pretopology a graph induces: a net converges to `v` when some tail
//! lies in `N[v]`, so the adherence of a set is its closed neighborhood.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{connected_components, transitivity_witness, Graph, VertexSet};

/// `adh(A) = N[A]`.
pub fn adherence(g: &Graph, a: &VertexSet) -> Result<VertexSet> {
    g.neighborhood_of_set(a)
}

/// `adh` applied `k` times; stabilizes at the union of components meeting `A`.
pub fn iterated_adherence(g: &Graph, a: &VertexSet, k: usize) -> Result<VertexSet> {
    let mut cur = a.clone();
    for _ in 0..k {
        let next = adherence(g, &cur)?;
        if next == cur {
            break;
        }
        cur = next;
    }
    Ok(cur)
}

/// Open iff `N[v] ⊆ U` for every `v ∈ U`.
pub fn is_open(g: &Graph, u: &VertexSet) -> Result<bool> {
    Ok(adherence(g, u)?.is_subset(u))
}

/// Closed iff a union of components.
pub fn is_closed(g: &Graph, f: &VertexSet) -> Result<bool> {
    topological_modification(g).is_open(f)
}

/// `{v ∈ A : N[v] ⊆ A}`.
pub fn interior(g: &Graph, a: &VertexSet) -> Result<VertexSet> {
    g.check_set(a)?;
    Ok(VertexSet::from_members(
        g.n(),
        a.iter().filter(|&v| g.neighbors(v).is_subset(a)),
    ))
}

/// The topological modification, stored as its component partition; the
/// open sets are the unions of blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    n: usize,
    blocks: Vec<VertexSet>,
    block_of: Vec<usize>,
}

impl Topology {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// Membership in the topology: is `set` a union of blocks?
    pub fn is_open(&self, set: &VertexSet) -> Result<bool> {
        if set.universe() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "vertex set over {} vertices, topology over {}",
                set.universe(),
                self.n
            )));
        }
        Ok(set
            .iter()
            .all(|v| self.blocks[self.block_of[v]].is_subset(set)))
    }

    /// Open and closed sets coincide.
    pub fn is_closed(&self, set: &VertexSet) -> Result<bool> {
        self.is_open(set)
    }

    /// log2 of the number of open sets.
    pub fn open_count_log2(&self) -> usize {
        self.blocks.len()
    }

    /// Number of open sets, when it fits in a `u128`.
    pub fn open_count(&self) -> Option<u128> {
        1u128.checked_shl(self.blocks.len() as u32)
    }

    /// Smallest open set containing `set`.
    pub fn closure(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in set {
            out.union_with(&self.blocks[self.block_of[v]]);
        }
        out
    }
}

pub fn topological_modification(g: &Graph) -> Topology {
    let blocks = connected_components(g);
    let mut block_of = vec![0; g.n()];
    for (i, b) in blocks.iter().enumerate() {
        for v in b {
            block_of[v] = i;
        }
    }
    Topology {
        n: g.n(),
        blocks,
        block_of,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologicalCheck {
    pub topological: bool,
    /// Least `(x, y, z)` with `xy, yz` edges and `xz` missing.
    pub witness: Option<(usize, usize, usize)>,
}

/// The convergence is topological exactly when the graph is transitive.
pub fn is_convergence_topological(g: &Graph) -> TopologicalCheck {
    let witness = transitivity_witness(g);
    TopologicalCheck {
        topological: witness.is_none(),
        witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvergenceOrder {
    Equal,
    StrictlyFiner,
    StrictlyCoarser,
    Incomparable,
}

impl ConvergenceOrder {
    pub fn reversed(self) -> Self {
        match self {
            Self::StrictlyFiner => Self::StrictlyCoarser,
            Self::StrictlyCoarser => Self::StrictlyFiner,
            other => other,
        }
    }

    pub fn is_finer_or_equal(self) -> bool {
        matches!(self, Self::Equal | Self::StrictlyFiner)
    }
}

/// Compares the convergence of `h` against that of `g` on the same vertex
/// set. `h` is finer when every `h`-convergent net also converges in `g`,
/// i.e. `N_H[v] ⊆ N_G[v]` for all `v`.
pub fn compare_convergence(h: &Graph, g: &Graph) -> Result<ConvergenceOrder> {
    if h.n() != g.n() {
        return Err(Error::DimensionMismatch(format!(
            "convergences on {} and {} vertices",
            h.n(),
            g.n()
        )));
    }
    let finer = (0..g.n()).all(|v| h.neighbors(v).is_subset(g.neighbors(v)));
    let coarser = (0..g.n()).all(|v| g.neighbors(v).is_subset(h.neighbors(v)));
    Ok(match (finer, coarser) {
        (true, true) => ConvergenceOrder::Equal,
        (true, false) => ConvergenceOrder::StrictlyFiner,
        (false, true) => ConvergenceOrder::StrictlyCoarser,
        (false, false) => ConvergenceOrder::Incomparable,
    })
}
