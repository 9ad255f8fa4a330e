//! Finitely presented infinite graphs: neighbor oracles, a catalog of named
//! families with analytic certificates, finite windows, and semi-decisions.

mod analysis;
mod families;
mod flow;

pub use analysis::{
    edge_end_bound_check, eventually_finite_check, is_compact, is_dominating_oracle, rayless_spanning_tree,
    rays_equivalent, EdgeEndReport, EventualFiniteness, RaylessTree, DEFAULT_RADIUS, TAIL_DEPTHS,
};
pub use families::{Family, Ray};
pub use flow::FlowNetwork;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Windows are stored as dense adjacency matrices, so they stay small.
pub const DEFAULT_VERTEX_CAP: usize = 16_384;

pub type Membership = Arc<dyn Fn(usize) -> bool + Send + Sync>;

/// Neighborhood of a single vertex.
#[derive(Clone)]
pub enum Adjacency {
    Finite(Vec<usize>),
    /// `exceptional ∪ {w : member(w)}`, infinite.
    Infinite { exceptional: Vec<usize>, member: Membership },
}

impl Adjacency {
    pub fn contains(&self, w: usize) -> bool {
        match self {
            Adjacency::Finite(list) => list.contains(&w),
            Adjacency::Infinite { exceptional, member } => exceptional.contains(&w) || member(w),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            Adjacency::Finite(list) => Some(list.len()),
            Adjacency::Infinite { .. } => None,
        }
    }
}

impl fmt::Debug for Adjacency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Adjacency::Finite(list) => f.debug_tuple("Finite").field(list).finish(),
            Adjacency::Infinite { exceptional, .. } => f.debug_struct("Infinite").field("exceptional", exceptional).finish_non_exhaustive(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutMode {
    Vertex,
    Edge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Separator {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
}

impl Separator {
    pub fn len(&self) -> usize {
        match self {
            Separator::Vertices(v) => v.len(),
            Separator::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Vertices are natural numbers. Every vertex has a level, and only finitely
/// many vertices share a level: all of them have ids below `level_bound`.
/// Windows are cut by level, which keeps infinite neighborhoods finite.
pub trait NeighborOracle: Send + Sync {
    fn neighbors(&self, v: usize) -> Adjacency;

    fn level(&self, v: usize) -> usize;

    /// Every vertex of level at most `level` has id below this.
    fn level_bound(&self, level: usize) -> usize;

    /// A finite set whose closed neighborhood is provably everything.
    fn dominating_certificate(&self) -> Option<Vec<usize>> {
        None
    }

    /// A finite separator between two named rays, proven for the whole graph.
    fn separator(&self, _r1: &str, _r2: &str, _mode: CutMode) -> Option<Separator> {
        None
    }
}

/// An oracle plus the declared local finiteness and the truncation root.
/// Queries are cached; symmetry, looplessness and the local finiteness flag
/// are checked on every neighborhood that is actually used.
pub struct OracleGraph {
    oracle: Arc<dyn NeighborOracle>,
    locally_finite: bool,
    root: usize,
    cache: Mutex<HashMap<usize, Adjacency>>,
}

impl fmt::Debug for OracleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OracleGraph")
            .field("locally_finite", &self.locally_finite)
            .field("root", &self.root)
            .finish_non_exhaustive()
    }
}

impl OracleGraph {
    pub fn new(oracle: Arc<dyn NeighborOracle>, locally_finite: bool, root: usize) -> Self {
        Self {
            oracle,
            locally_finite,
            root,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn locally_finite(&self) -> bool {
        self.locally_finite
    }

    pub fn oracle(&self) -> &dyn NeighborOracle {
        self.oracle.as_ref()
    }

    pub fn level(&self, v: usize) -> usize {
        self.oracle.level(v)
    }

    pub fn adjacency(&self, v: usize) -> Result<Adjacency> {
        if let Some(a) = self.cache.lock().expect("cache lock").get(&v) {
            return Ok(a.clone());
        }
        let a = self.oracle.neighbors(v);
        if a.contains(v) {
            return Err(Error::Oracle(format!("loop at vertex {v}")));
        }
        if self.locally_finite && a.degree().is_none() {
            return Err(Error::Oracle(format!(
                "vertex {v} has infinite degree in a graph declared locally finite"
            )));
        }
        self.cache.lock().expect("cache lock").insert(v, a.clone());
        Ok(a)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> Result<bool> {
        Ok(self.adjacency(u)?.contains(v))
    }

    /// Neighbors of `v` of level at most `level`, ascending. Each listed
    /// neighbor is checked to list `v` back.
    pub fn neighbors_within(&self, v: usize, level: usize) -> Result<Vec<usize>> {
        let mut out: Vec<usize> = match self.adjacency(v)? {
            Adjacency::Finite(list) => list.into_iter().filter(|&w| self.level(w) <= level).collect(),
            Adjacency::Infinite { exceptional, member } => exceptional
                .into_iter()
                .filter(|&w| self.level(w) <= level)
                .chain((0..self.oracle.level_bound(level)).filter(|&w| self.level(w) <= level && member(w)))
                .collect(),
        };
        out.sort_unstable();
        out.dedup();
        for &w in &out {
            if !self.adjacency(w)?.contains(v) {
                return Err(Error::Oracle(format!("asymmetric adjacency: {v} lists {w} but not conversely")));
            }
        }
        Ok(out)
    }

    pub fn truncate(&self, radius: usize) -> Result<Truncation> {
        self.truncate_capped(radius, DEFAULT_VERTEX_CAP)
    }

    /// Breadth-first ball of the given radius around the root, moving only
    /// through vertices of level at most `radius`; induced edges only.
    pub fn truncate_capped(&self, radius: usize, cap: usize) -> Result<Truncation> {
        let mut dist: HashMap<usize, usize> = HashMap::from([(self.root, 0)]);
        let mut queue = VecDeque::from([self.root]);
        let mut lists: HashMap<usize, Vec<usize>> = HashMap::new();
        while let Some(x) = queue.pop_front() {
            let dx = dist[&x];
            let nbrs = self.neighbors_within(x, radius)?;
            if dx < radius {
                for &y in &nbrs {
                    if !dist.contains_key(&y) {
                        dist.insert(y, dx + 1);
                        if dist.len() > cap {
                            return Err(Error::SizeLimit {
                                what: "truncation window",
                                size: dist.len(),
                                limit: cap,
                            });
                        }
                        queue.push_back(y);
                    }
                }
            }
            lists.insert(x, nbrs);
        }
        let mut vertices: Vec<usize> = dist.keys().copied().collect();
        vertices.sort_unstable();
        let index: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut edges = Vec::new();
        for (i, v) in vertices.iter().enumerate() {
            for w in &lists[v] {
                if let Some(&j) = index.get(w) {
                    adj[i].push(j);
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let graph = Graph::from_edges(vertices.len(), &edges)?;
        let distance = vertices.iter().map(|v| dist[v]).collect();
        Ok(Truncation {
            radius,
            graph,
            adj,
            distance,
            vertices,
            index,
        })
    }
}

/// A finite window, re-indexed `0..n` in increasing vertex id order.
#[derive(Debug, Clone)]
pub struct Truncation {
    pub radius: usize,
    pub graph: Graph,
    /// Local adjacency lists, ascending.
    pub adj: Vec<Vec<usize>>,
    /// Distance from the root inside the window, per local vertex.
    pub distance: Vec<usize>,
    /// Local index to oracle vertex.
    pub vertices: Vec<usize>,
    index: HashMap<usize, usize>,
}

impl Truncation {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn local(&self, v: usize) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn global(&self, i: usize) -> usize {
        self.vertices[i]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.index.contains_key(&v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `set` contains the family's proven dominating set `proof`.
    Dominating { set: Vec<usize>, proof: Vec<usize> },
    /// At least `k` disjoint paths between the tails at every tested depth.
    DisjointPaths { mode: CutMode, k: usize, depths: Vec<usize>, flows: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `vertex` lies outside `N[D]`. `window` is the level bound below which
    /// `D` was taken, when the set is implicit.
    Undominated { vertex: usize, window: Option<usize> },
    /// A proven separator of size below `k`, checked against the window.
    Separator { separator: Separator, k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "data", rename_all = "snake_case")]
pub enum TriVerdict {
    Verified(Certificate),
    Refuted(Witness),
    UnknownUpTo(usize),
}

impl TriVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, TriVerdict::Verified(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, TriVerdict::Refuted(_))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Asym;
    impl NeighborOracle for Asym {
        fn neighbors(&self, v: usize) -> Adjacency {
            Adjacency::Finite(if v == 0 { vec![1] } else { vec![] })
        }
        fn level(&self, v: usize) -> usize {
            v
        }
        fn level_bound(&self, level: usize) -> usize {
            level + 1
        }
    }

    struct Looped;
    impl NeighborOracle for Looped {
        fn neighbors(&self, v: usize) -> Adjacency {
            Adjacency::Finite(vec![v])
        }
        fn level(&self, v: usize) -> usize {
            v
        }
        fn level_bound(&self, level: usize) -> usize {
            level + 1
        }
    }

    #[test]
    fn oracle_consistency_is_checked() {
        let g = OracleGraph::new(Arc::new(Asym), true, 0);
        assert!(matches!(g.truncate(3), Err(Error::Oracle(_))));
        let g = OracleGraph::new(Arc::new(Looped), true, 0);
        assert!(matches!(g.truncate(3), Err(Error::Oracle(_))));
        let fan = Family::FanRay.oracle();
        let lying = OracleGraph::new(fan.oracle.clone(), true, 0);
        assert!(matches!(lying.truncate(2), Err(Error::Oracle(_))));
    }

    #[test]
    fn truncation_examples() {
        let ray = Family::Ray.oracle().truncate(3).unwrap();
        assert_eq!(ray.graph, Graph::path(4));
        let tree = Family::BinaryTree.oracle().truncate(2).unwrap();
        assert_eq!(tree.n(), 7);
        assert_eq!(tree.graph.edge_count(), 6);
        assert_eq!(tree.graph.degree(0), 2);
        let fan = Family::FanRay.oracle().truncate(1).unwrap();
        // apex 0 with ray vertices 1, 2
        assert_eq!(fan.vertices, vec![0, 1, 2]);
        assert_eq!(fan.graph, Graph::complete(3));
    }

    #[test]
    fn cap_is_enforced() {
        let tree = Family::BinaryTree.oracle();
        assert!(matches!(tree.truncate_capped(10, 100), Err(Error::SizeLimit { .. })));
        assert!(matches!(tree.truncate(64), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn windows_grow_and_keep_interior_neighborhoods() {
        for family in Family::catalog() {
            let og = family.oracle();
            let mut prev: Vec<usize> = Vec::new();
            for r in 0..=8 {
                let t = og.truncate(r).unwrap();
                assert!(prev.iter().all(|v| t.contains(*v)), "{family:?} r={r}");
                for (i, &v) in t.vertices.iter().enumerate() {
                    if t.distance[i] < r && og.level(v) < r {
                        let inside: Vec<usize> = t.adj[i].iter().map(|&j| t.global(j)).collect();
                        let expected: Vec<usize> = og
                            .neighbors_within(v, r)
                            .unwrap()
                            .into_iter()
                            .filter(|w| t.contains(*w))
                            .collect();
                        assert_eq!(inside, expected);
                    }
                }
                prev = t.vertices.clone();
            }
        }
    }

    #[test]
    fn concurrent_queries_agree() {
        let og = Arc::new(Family::StarOfRays(3).oracle());
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let og = Arc::clone(&og);
                std::thread::spawn(move || og.truncate(12).unwrap().vertices)
            })
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }
}
