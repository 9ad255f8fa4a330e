use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Total map `0..domain → 0..codomain`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexFunction {
    codomain: usize,
    values: Vec<usize>,
}

impl VertexFunction {
    pub fn new(codomain: usize, values: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|&&v| v >= codomain) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: codomain });
        }
        Ok(Self { codomain, values })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            codomain: n,
            values: (0..n).collect(),
        }
    }

    pub fn constant(domain: usize, codomain: usize, value: usize) -> Result<Self> {
        Self::new(codomain, vec![value; domain])
    }

    pub fn domain(&self) -> usize {
        self.values.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, v: usize) -> usize {
        self.values[v]
    }

    /// Image `f(A)` of a vertex set.
    pub fn image(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_members(self.codomain, set.iter().map(|v| self.values[v]))
    }

    pub(crate) fn check_dims(&self, g: &Graph, h: &Graph) -> Result<()> {
        if self.domain() != g.n() || self.codomain != h.n() {
            return Err(Error::DimensionMismatch(format!(
                "function {}→{} used with graphs on {} and {} vertices",
                self.domain(),
                self.codomain,
                g.n(),
                h.n()
            )));
        }
        Ok(())
    }
}

/// Categorical (tensor) product. Pair `(u, v)` gets index `u * n_H + v`.
pub fn tensor_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.n(), h.n());
    let n = ng.checked_mul(nh).ok_or(Error::SizeLimit {
        what: "tensor product vertex count",
        size: usize::MAX,
        limit: usize::MAX,
    })?;
    let mut p = Graph::empty(n);
    for (u, u2) in g.edges() {
        for (v, v2) in h.edges() {
            p.add_edge(u * nh + v, u2 * nh + v2)?;
            p.add_edge(u * nh + v2, u2 * nh + v)?;
        }
    }
    Ok(p)
}

/// Strong product: `(u,v) ~ (u',v')` iff `u' ∈ N[u]`, `v' ∈ N[v]` and the
/// pairs differ. Its closed neighborhoods are exactly `N[u] × N[v]`.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.n(), h.n());
    let n = ng.checked_mul(nh).ok_or(Error::SizeLimit {
        what: "strong product vertex count",
        size: usize::MAX,
        limit: usize::MAX,
    })?;
    let mut p = Graph::empty(n);
    for u in 0..ng {
        let nu = g.closed_neighborhood(u)?;
        for v in 0..nh {
            let nv = h.closed_neighborhood(v)?;
            for u2 in &nu {
                for v2 in &nv {
                    let (a, b) = (u * nh + v, u2 * nh + v2);
                    if a < b {
                        p.add_edge(a, b)?;
                    }
                }
            }
        }
    }
    Ok(p)
}

/// Induced subgraph `G[W]` plus the old→new index map (`None` outside `W`).
pub fn induced_subgraph(g: &Graph, w: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
    g.check_set(w)?;
    let mut map = vec![None; g.n()];
    for (new, old) in w.iter().enumerate() {
        map[old] = Some(new);
    }
    let mut sub = Graph::empty(w.len());
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (map[u], map[v]) {
            sub.add_edge(a, b)?;
        }
    }
    Ok((sub, map))
}

/// Strict homomorphism: every edge maps onto an edge. `H` has no loops, so
/// collapsing an edge to a single vertex is rejected.
pub fn is_homomorphism(f: &VertexFunction, g: &Graph, h: &Graph) -> Result<bool> {
    f.check_dims(g, h)?;
    Ok(g.edges().all(|(x, y)| h.has_edge(f.apply(x), f.apply(y))))
}

/// Every edge maps onto an edge or collapses onto one vertex.
pub fn is_weak_homomorphism(f: &VertexFunction, g: &Graph, h: &Graph) -> Result<bool> {
    f.check_dims(g, h)?;
    Ok(g.edges().all(|(x, y)| {
        let (a, b) = (f.apply(x), f.apply(y));
        a == b || h.has_edge(a, b)
    }))
}

/// Components as vertex sets, ordered by least vertex.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = VertexSet::empty(n);
    let mut blocks = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let mut block = VertexSet::singleton(n, start);
        let mut frontier = block.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(n);
            for v in &frontier {
                next.union_with(g.neighbors(v));
            }
            next.difference_with(&block);
            block.union_with(&next);
            frontier = next;
        }
        seen.union_with(&block);
        blocks.push(block);
    }
    blocks
}

pub fn is_spanning_subgraph(h: &Graph, g: &Graph) -> bool {
    h.n() == g.n() && h.edges().all(|(u, v)| g.has_edge(u, v))
}

/// Lexicographically least `(x, y, z)` with `xy, yz ∈ E`, `x ≠ z`, `xz ∉ E`.
pub fn transitivity_witness(g: &Graph) -> Option<(usize, usize, usize)> {
    (0..g.n()).find_map(|x| {
        g.neighbors(x).iter().find_map(|y| {
            g.neighbors(y)
                .iter()
                .find(|&z| z != x && !g.has_edge(x, z))
                .map(|z| (x, y, z))
        })
    })
}

pub fn is_transitive(g: &Graph) -> bool {
    transitivity_witness(g).is_none()
}
