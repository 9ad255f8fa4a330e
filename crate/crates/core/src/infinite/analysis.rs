use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Adjacency, Certificate, CutMode, Family, FlowNetwork, OracleGraph, Ray, Separator, Truncation, TriVerdict, Witness};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::solvers::{tree_from_connected_dominating_set, SpanningTreeResult};

pub const DEFAULT_RADIUS: usize = 64;
pub const TAIL_DEPTHS: [usize; 3] = [8, 16, 32];

const INF: u64 = u64::MAX / 4;

/// Refuted when some window vertex escapes `N[D]`; Verified only when `D`
/// contains the oracle's proven dominating set.
pub fn is_dominating_oracle(og: &OracleGraph, d: &[usize], bound: usize) -> Result<TriVerdict> {
    let window = match og.truncate(bound) {
        Ok(w) => w,
        Err(Error::SizeLimit { .. }) => return Ok(TriVerdict::UnknownUpTo(bound)),
        Err(e) => return Err(e),
    };
    for &v in &window.vertices {
        let mut dominated = d.contains(&v);
        for &x in d {
            if dominated {
                break;
            }
            dominated = og.is_adjacent(x, v)?;
        }
        if !dominated {
            return Ok(TriVerdict::Refuted(Witness::Undominated { vertex: v, window: None }));
        }
    }
    if let Some(proof) = og.oracle().dominating_certificate() {
        if proof.iter().all(|x| d.contains(x)) {
            let mut set = d.to_vec();
            set.sort_unstable();
            set.dedup();
            return Ok(TriVerdict::Verified(Certificate::Dominating { set, proof }));
        }
    }
    Ok(TriVerdict::UnknownUpTo(bound))
}

/// Compact families carry a finite dominating set. For the others, the
/// witness is a vertex no set of vertices of level at most `bound` dominates.
pub fn is_compact(family: Family, bound: usize) -> TriVerdict {
    if let Some(d) = family.dominating_set() {
        return TriVerdict::Verified(Certificate::Dominating { set: d.clone(), proof: d });
    }
    match family.escape(bound) {
        Some(vertex) => TriVerdict::Refuted(Witness::Undominated {
            vertex,
            window: Some(bound),
        }),
        None => TriVerdict::UnknownUpTo(bound),
    }
}

/// Tail of `r` from index `depth` onward, as long as it stays in the window.
fn tail(t: &Truncation, r: &Ray, depth: usize) -> Vec<usize> {
    (depth..)
        .map(|i| t.local(r.vertex(i)))
        .take_while(Option::is_some)
        .flatten()
        .collect()
}

fn disjoint_paths(t: &Truncation, from: &[usize], to: &[usize], mode: CutMode, limit: u64) -> u64 {
    let n = t.n();
    match mode {
        CutMode::Vertex => {
            let (s, sink) = (2 * n, 2 * n + 1);
            let mut net = FlowNetwork::new(2 * n + 2);
            for i in 0..n {
                net.add_arc(2 * i, 2 * i + 1, 1);
                for &j in &t.adj[i] {
                    net.add_arc(2 * i + 1, 2 * j, INF);
                }
            }
            for &v in from {
                net.add_arc(s, 2 * v, INF);
            }
            for &v in to {
                net.add_arc(2 * v + 1, sink, INF);
            }
            net.max_flow(s, sink, limit)
        }
        CutMode::Edge => {
            let (s, sink) = (n, n + 1);
            let mut net = FlowNetwork::new(n + 2);
            for i in 0..n {
                for &j in &t.adj[i] {
                    net.add_arc(i, j, 1);
                }
            }
            for &v in from {
                net.add_arc(s, v, INF);
            }
            for &v in to {
                net.add_arc(v, sink, INF);
            }
            net.max_flow(s, sink, limit)
        }
    }
}

/// Does removing `sep` disconnect `from` and `to` inside the window?
fn separates(t: &Truncation, sep: &Separator, from: &[usize], to: &[usize]) -> bool {
    let n = t.n();
    let mut blocked = vec![false; n];
    let mut cut_edges = Vec::new();
    match sep {
        Separator::Vertices(vs) => {
            for v in vs {
                if let Some(i) = t.local(*v) {
                    blocked[i] = true;
                }
            }
        }
        Separator::Edges(es) => {
            for &(u, v) in es {
                if let (Some(i), Some(j)) = (t.local(u), t.local(v)) {
                    cut_edges.push((i.min(j), i.max(j)));
                }
            }
        }
    }
    if from.iter().chain(to).any(|&v| blocked[v]) {
        return false;
    }
    let mut seen = vec![false; n];
    let mut queue: VecDeque<usize> = from.iter().copied().collect();
    for &v in from {
        seen[v] = true;
    }
    while let Some(x) = queue.pop_front() {
        for &y in &t.adj[x] {
            if seen[y] || blocked[y] || cut_edges.contains(&(x.min(y), x.max(y))) {
                continue;
            }
            seen[y] = true;
            queue.push_back(y);
        }
    }
    to.iter().all(|&v| !seen[v])
}

/// Counts disjoint paths between the tails of two rays inside the window of
/// the given radius, at each tail depth in the sweep that fits. At least `k`
/// paths at every depth is Verified at level `k`. A separator smaller than
/// `k` is Refuted only when the oracle proves it for the whole graph and it
/// also separates the tails in the window.
pub fn rays_equivalent(
    og: &OracleGraph,
    r1: &Ray,
    r2: &Ray,
    mode: CutMode,
    k: usize,
    radius: usize,
) -> Result<TriVerdict> {
    let depths: Vec<usize> = TAIL_DEPTHS.iter().copied().filter(|&d| 2 * d <= radius).collect();
    let Some(&deepest) = depths.last() else {
        return Err(Error::SizeLimit {
            what: "ray window radius",
            size: radius,
            limit: 2 * TAIL_DEPTHS[0],
        });
    };
    let t = og.truncate(radius)?;
    for r in [r1, r2] {
        r.check(og, deepest + 1)?;
        if let Some(i) = (0..=deepest + 1).find(|&i| !t.contains(r.vertex(i))) {
            return Err(Error::SizeLimit {
                what: "ray leaves the truncation window at index",
                size: i,
                limit: radius,
            });
        }
    }
    let tails: Vec<(Vec<usize>, Vec<usize>)> = depths.iter().map(|&d| (tail(&t, r1, d), tail(&t, r2, d))).collect();
    let flows: Vec<usize> = tails
        .iter()
        .map(|(a, b)| disjoint_paths(&t, a, b, mode, k as u64) as usize)
        .collect();
    if flows.iter().all(|&f| f >= k) {
        return Ok(TriVerdict::Verified(Certificate::DisjointPaths {
            mode,
            k,
            depths,
            flows,
        }));
    }
    if let Some(sep) = og.oracle().separator(&r1.name, &r2.name, mode) {
        let kind_ok = matches!(
            (&sep, mode),
            (Separator::Vertices(_), CutMode::Vertex) | (Separator::Edges(_), CutMode::Edge)
        );
        if kind_ok && sep.len() < k && tails.iter().all(|(a, b)| separates(&t, &sep, a, b)) {
            return Ok(TriVerdict::Refuted(Witness::Separator { separator: sep, k }));
        }
    }
    Ok(TriVerdict::UnknownUpTo(radius))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEndReport {
    pub family: String,
    pub declared_edge_ends: Option<usize>,
    pub dominating_set_size: usize,
    /// Classes of the family's named rays under edge-equivalence at level 2.
    pub observed_classes: usize,
    pub rays_examined: usize,
    /// Declared and observed counts are both at most `|D|`.
    pub holds: bool,
}

pub fn edge_end_bound_check(family: Family, radius: usize) -> Result<EdgeEndReport> {
    let d = family.dominating_set().ok_or_else(|| Error::NotCompact(family.to_string()))?;
    let og = family.oracle();
    let rays = family.rays();
    let mut class: Vec<usize> = (0..rays.len()).collect();
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            if class[j] != j {
                continue;
            }
            if rays_equivalent(&og, &rays[i], &rays[j], CutMode::Edge, 2, radius)?.is_verified() {
                class[j] = class[i];
            }
        }
    }
    let observed = (0..rays.len()).filter(|&i| class[i] == i).count();
    let declared = family.declared_edge_ends();
    Ok(EdgeEndReport {
        family: family.to_string(),
        declared_edge_ends: declared,
        dominating_set_size: d.len(),
        observed_classes: observed,
        rays_examined: rays.len(),
        holds: declared.is_some_and(|c| c <= d.len()) && observed <= d.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaylessTree {
    pub family: String,
    pub radius: usize,
    pub window_vertices: usize,
    /// Spanning tree of the window, in oracle vertex ids.
    pub tree: SpanningTreeResult,
    pub compared_radius: usize,
    /// The internal vertex set is the same at `compared_radius`.
    pub stable: bool,
}

fn tree_in_window(og: &OracleGraph, d: &[usize], radius: usize) -> Result<(usize, SpanningTreeResult)> {
    let t = og.truncate(radius)?;
    let n = t.n();
    let local: Vec<usize> = d
        .iter()
        .map(|&v| {
            t.local(v)
                .ok_or_else(|| Error::InvalidInput(format!("dominating vertex {v} outside the window")))
        })
        .collect::<Result<_>>()?;
    // join D along breadth-first paths from its first vertex
    let mut parent = vec![usize::MAX; n];
    let start = local[0];
    parent[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in &t.adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut core = VertexSet::empty(n);
    for &v in &local {
        let mut x = v;
        if parent[x] == usize::MAX {
            return Err(Error::Disconnected);
        }
        while core.insert(x) && x != start {
            x = parent[x];
        }
        core.insert(start);
    }
    let tree = tree_from_connected_dominating_set(&t.graph, &core)?;
    // local order is id order, so sorted local lists stay sorted
    Ok((
        n,
        SpanningTreeResult {
            edges: tree.edges.iter().map(|&(u, v)| (t.global(u), t.global(v))).collect(),
            internal: tree.internal.iter().map(|&v| t.global(v)).collect(),
            leaf_count: tree.leaf_count,
        },
    ))
}

/// Spanning tree of the window whose internal vertices come from the
/// dominating set and the paths joining it, compared against the next radius.
pub fn rayless_spanning_tree(family: Family, radius: usize) -> Result<RaylessTree> {
    let d = family.dominating_set().ok_or_else(|| Error::NotCompact(family.to_string()))?;
    let og = family.oracle();
    let (window_vertices, tree) = tree_in_window(&og, &d, radius)?;
    let (_, next) = tree_in_window(&og, &d, radius + 1)?;
    Ok(RaylessTree {
        family: family.to_string(),
        radius,
        window_vertices,
        stable: tree.internal == next.internal,
        tree,
        compared_radius: radius + 1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventualFiniteness {
    pub vertex: usize,
    pub degree: Option<usize>,
    /// `N[v]`, when finite: every net converging to `v` has a tail inside it.
    pub closed_neighborhood: Option<Vec<usize>>,
    /// For infinite degree: distinct neighbors of `v`, a sequence converging
    /// to `v` with no tail inside any finite set.
    pub injective_sequence: Option<Vec<usize>>,
}

pub fn eventually_finite_check(og: &OracleGraph, v: usize, bound: usize) -> Result<EventualFiniteness> {
    match og.adjacency(v)? {
        Adjacency::Finite(list) => {
            let mut closed = list.clone();
            closed.push(v);
            closed.sort_unstable();
            Ok(EventualFiniteness {
                vertex: v,
                degree: Some(list.len()),
                closed_neighborhood: Some(closed),
                injective_sequence: None,
            })
        }
        Adjacency::Infinite { exceptional, member } => {
            let scan = og.oracle().level_bound(bound);
            let mut seq: Vec<usize> = exceptional;
            seq.extend((0..scan).filter(|&w| member(w)));
            seq.sort_unstable();
            seq.dedup();
            seq.truncate(bound);
            Ok(EventualFiniteness {
                vertex: v,
                degree: None,
                closed_neighborhood: None,
                injective_sequence: Some(seq),
            })
        }
    }
}
