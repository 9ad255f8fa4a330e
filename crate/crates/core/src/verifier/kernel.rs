use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::pretopology;
use crate::solvers;

/// The library operations the catalog checks are routed through, so that a
/// corrupted implementation can be swapped in and caught.
pub trait Kernel: Send + Sync {
    fn name(&self) -> &str;

    fn closed_neighborhood(&self, g: &Graph, v: usize) -> VertexSet;

    fn adherence(&self, g: &Graph, a: &VertexSet) -> VertexSet;

    fn min_dominating_set(&self, g: &Graph) -> VertexSet;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Reference;

impl Kernel for Reference {
    fn name(&self) -> &str {
        "reference"
    }

    fn closed_neighborhood(&self, g: &Graph, v: usize) -> VertexSet {
        g.closed_neighborhood(v).expect("vertex in range")
    }

    fn adherence(&self, g: &Graph, a: &VertexSet) -> VertexSet {
        pretopology::adherence(g, a).expect("set over the graph's vertices")
    }

    fn min_dominating_set(&self, g: &Graph) -> VertexSet {
        solvers::min_dominating_set(g).expect("within the exact bound").set
    }
}

/// Deliberately broken kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mutant {
    /// `adh(A) = ⋃ N(v)`, forgetting `A` itself.
    AdherenceDropsSelf,
    /// `N[v]` keeps only neighbors above `v`.
    AsymmetricNeighborhood,
    /// The exact dominating set loses its largest vertex.
    DominatingOffByOne,
}

impl Mutant {
    pub const ALL: [Mutant; 3] = [
        Mutant::AdherenceDropsSelf,
        Mutant::AsymmetricNeighborhood,
        Mutant::DominatingOffByOne,
    ];
}

impl Kernel for Mutant {
    fn name(&self) -> &str {
        match self {
            Mutant::AdherenceDropsSelf => "adherence_drops_self",
            Mutant::AsymmetricNeighborhood => "asymmetric_neighborhood",
            Mutant::DominatingOffByOne => "dominating_off_by_one",
        }
    }

    fn closed_neighborhood(&self, g: &Graph, v: usize) -> VertexSet {
        let mut s = Reference.closed_neighborhood(g, v);
        if *self == Mutant::AsymmetricNeighborhood {
            for w in 0..v {
                s.remove(w);
            }
        }
        s
    }

    fn adherence(&self, g: &Graph, a: &VertexSet) -> VertexSet {
        match self {
            Mutant::AdherenceDropsSelf => {
                let mut out = VertexSet::empty(g.n());
                for v in a {
                    out.union_with(g.neighbors(v));
                }
                out
            }
            Mutant::AsymmetricNeighborhood => {
                let mut out = VertexSet::empty(g.n());
                for v in a {
                    out.union_with(&self.closed_neighborhood(g, v));
                }
                out
            }
            Mutant::DominatingOffByOne => Reference.adherence(g, a),
        }
    }

    fn min_dominating_set(&self, g: &Graph) -> VertexSet {
        let mut d = Reference.min_dominating_set(g);
        if *self == Mutant::DominatingOffByOne {
            if let Some(last) = d.iter().last() {
                d.remove(last);
            }
        }
        d
    }
}
