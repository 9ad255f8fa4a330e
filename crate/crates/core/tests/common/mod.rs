//! Brute-force oracles shared by the integration targets. They use only
//! `has_edge` and plain enumeration, never the solvers under test.
#![allow(dead_code)]

use graphconv::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn brute_connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for y in 0..n {
            if g.has_edge(x, y) && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let p = rng.random_range(0.25..0.9);
        let g = random_graph(rng, n, p);
        if brute_connected(&g) {
            return g;
        }
    }
}

pub fn closed_mask(g: &Graph, v: usize) -> u64 {
    (0..g.n()).filter(|&w| w == v || g.has_edge(v, w)).fold(0, |m, w| m | 1 << w)
}

pub fn adherence_mask(g: &Graph, a: u64) -> u64 {
    (0..g.n()).filter(|&v| a >> v & 1 == 1).fold(0, |m, v| m | closed_mask(g, v))
}

/// Smallest dominating set size over all `2^n` subsets.
pub fn brute_domination_number(g: &Graph) -> usize {
    let n = g.n();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let closed: Vec<u64> = (0..n).map(|v| closed_mask(g, v)).collect();
    (0..1u64 << n)
        .filter(|&m| (0..n).filter(|&v| m >> v & 1 == 1).fold(0, |acc, v| acc | closed[v]) == full)
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    r
}

/// Fewest internal vertices over every spanning tree, enumerated by
/// include/exclude branching on the edge list with a union-find.
pub fn brute_min_internal(g: &Graph) -> Option<usize> {
    let n = g.n();
    if !brute_connected(g) {
        return None;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = usize::MAX;
    let mut chosen = Vec::new();
    fn go(
        i: usize,
        n: usize,
        edges: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        parent: &mut Vec<usize>,
        best: &mut usize,
    ) {
        if chosen.len() == n - 1 {
            let mut deg = vec![0; n];
            for &(u, v) in chosen.iter() {
                deg[u] += 1;
                deg[v] += 1;
            }
            *best = (*best).min(deg.iter().filter(|&&d| d >= 2).count());
            return;
        }
        if edges.len() - i < n - 1 - chosen.len() {
            return;
        }
        let (u, v) = edges[i];
        let (ru, rv) = (find(parent, u), find(parent, v));
        if ru != rv {
            let saved = parent.clone();
            parent[ru] = rv;
            chosen.push((u, v));
            go(i + 1, n, edges, chosen, parent, best);
            chosen.pop();
            *parent = saved;
        }
        go(i + 1, n, edges, chosen, parent, best);
    }
    if n == 1 {
        return Some(0);
    }
    let mut parent: Vec<usize> = (0..n).collect();
    go(0, n, &edges, &mut chosen, &mut parent, &mut best);
    Some(best)
}
