use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::dominating::min_dominating_set;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const EXACT_SPANNING_TREE_BOUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningTreeResult {
    pub edges: Vec<(usize, usize)>,
    /// Vertices of tree degree at least two.
    pub internal: Vec<usize>,
    pub leaf_count: usize,
}

impl SpanningTreeResult {
    /// Derives internal vertices and leaves from an edge list on `n` vertices.
    pub fn from_edges(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        Self {
            internal: (0..n).filter(|&v| degree[v] >= 2).collect(),
            leaf_count: degree.iter().filter(|&&d| d == 1).count(),
            edges,
        }
    }

    pub fn internal_count(&self) -> usize {
        self.internal.len()
    }

    /// Is this a spanning tree of `g`?
    pub fn is_spanning_tree_of(&self, g: &Graph) -> bool {
        let n = g.n();
        if n == 0 || self.edges.len() != n - 1 {
            return false;
        }
        if !self.edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
            return false;
        }
        let t = Graph::from_edges(n, &self.edges).expect("edges of g");
        t.is_connected()
    }
}

/// Spanning tree of a connected `g` whose internal vertices form `core`:
/// breadth-first tree of `g[core]` from its least vertex, then every other
/// vertex hangs off its least neighbor in `core`.
pub fn tree_from_connected_dominating_set(g: &Graph, core: &VertexSet) -> Result<SpanningTreeResult> {
    let n = g.n();
    g.check_set(core)?;
    let Some(root) = core.first() else {
        return Err(Error::InvalidInput("empty core".into()));
    };
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut reached = VertexSet::singleton(n, root);
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x).intersection(core).iter() {
            if reached.insert(y) {
                edges.push((x, y));
                queue.push_back(y);
            }
        }
    }
    if reached != *core {
        return Err(Error::InvalidInput("core does not induce a connected subgraph".into()));
    }
    for v in 0..n {
        if core.contains(v) {
            continue;
        }
        let Some(anchor) = g.neighbors(v).intersection(core).first() else {
            return Err(Error::InvalidInput(format!("vertex {v} is not dominated by the core")));
        };
        edges.push((anchor, v));
    }
    Ok(SpanningTreeResult::from_edges(n, edges))
}

fn induces_connected(g: &Graph, s: u64) -> bool {
    if s == 0 {
        return false;
    }
    let start = s.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= g.neighbors(v).to_mask() & s;
        }
        next &= !seen;
        seen |= next;
        frontier = next;
    }
    seen == s
}

pub fn min_internal_spanning_tree(g: &Graph) -> Result<SpanningTreeResult> {
    min_internal_spanning_tree_bounded(g, EXACT_SPANNING_TREE_BOUND)
}

/// Spanning tree with the fewest internal vertices (most leaves). For
/// `n ≥ 3` the internal vertices of such a tree form a minimum connected
/// dominating set, so the search runs over connected dominating sets by
/// increasing size, starting at the domination number as a lower bound.
pub fn min_internal_spanning_tree_bounded(g: &Graph, bound: usize) -> Result<SpanningTreeResult> {
    let n = g.n();
    let limit = bound.min(63);
    if n > limit {
        return Err(Error::SizeLimit {
            what: "exact spanning tree",
            size: n,
            limit,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n <= 2 {
        let edges = if n == 2 { vec![(0, 1)] } else { vec![] };
        return Ok(SpanningTreeResult::from_edges(n, edges));
    }
    let closed: Vec<u64> = (0..n)
        .map(|v| g.closed_neighborhood(v).expect("in range").to_mask())
        .collect();
    let full = (1u64 << n) - 1;
    let start = min_dominating_set(g)?.size.max(1);
    for k in start..=n {
        // Gosper's hack: k-subsets in increasing mask order
        let mut s: u64 = (1u64 << k) - 1;
        while s <= full {
            let mut covered = 0u64;
            let mut bits = s;
            while bits != 0 {
                covered |= closed[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            if covered == full && induces_connected(g, s) {
                return tree_from_connected_dominating_set(g, &VertexSet::from_mask(n, s));
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("the whole vertex set of a connected graph is a connected dominating set")
}
