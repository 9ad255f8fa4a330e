use std::collections::VecDeque;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// A piecewise-constant map `[0,1] → V(G)`: `pieces[i]` is taken on the
/// interval between consecutive breakpoints. Consecutive pieces are equal or
/// adjacent, which is what makes the map continuous into the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepPath {
    pub pieces: Vec<usize>,
    pub breakpoints: Vec<Ratio<u64>>,
}

impl StepPath {
    /// Uniform breakpoints `k / len` for `k = 1..len`.
    pub fn uniform(pieces: Vec<usize>) -> Self {
        let len = pieces.len() as u64;
        let breakpoints = (1..len).map(|k| Ratio::new(k, len)).collect();
        Self { pieces, breakpoints }
    }

    /// Value at parameter `t ∈ [0,1]`; breakpoints belong to the left piece.
    pub fn value_at(&self, t: Ratio<u64>) -> usize {
        let idx = self.breakpoints.iter().take_while(|&&b| b < t).count();
        self.pieces[idx]
    }

    pub fn start(&self) -> usize {
        self.pieces[0]
    }

    pub fn end(&self) -> usize {
        *self.pieces.last().expect("step paths are nonempty")
    }

    /// Checks the structural invariants against `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        !self.pieces.is_empty()
            && self.pieces.iter().all(|&v| v < g.n())
            && self.breakpoints.len() + 1 == self.pieces.len()
            && self.breakpoints.windows(2).all(|w| w[0] < w[1])
            && self
                .breakpoints
                .iter()
                .all(|&b| b > Ratio::from_integer(0) && b < Ratio::from_integer(1))
            && self
                .pieces
                .windows(2)
                .all(|w| w[0] == w[1] || g.has_edge(w[0], w[1]))
    }
}

/// Shortest path from `u` to `v` as a step path, or `None` across components.
pub fn find_path(g: &Graph, u: usize, v: usize) -> Result<Option<StepPath>> {
    for x in [u, v] {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
        }
    }
    let mut parent = vec![usize::MAX; g.n()];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for y in g.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[v] == usize::MAX {
        return Ok(None);
    }
    let mut pieces = vec![v];
    let mut x = v;
    while x != u {
        x = parent[x];
        pieces.push(x);
    }
    pieces.reverse();
    Ok(Some(StepPath::uniform(pieces)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_p3() {
        let p = find_path(&Graph::path(3), 0, 2).unwrap().unwrap();
        assert_eq!(p.pieces, vec![0, 1, 2]);
        assert_eq!(p.breakpoints, vec![Ratio::new(1, 3), Ratio::new(2, 3)]);
        assert_eq!(p.value_at(Ratio::new(1, 2)), 1);
        assert_eq!(p.value_at(Ratio::new(1, 3)), 0);
        assert_eq!(p.value_at(Ratio::from_integer(1)), 2);
    }

    #[test]
    fn constant_path() {
        let p = find_path(&Graph::complete(4), 2, 2).unwrap().unwrap();
        assert_eq!(p.pieces, vec![2]);
        assert!(p.breakpoints.is_empty());
    }

    #[test]
    fn no_path_across_components() {
        let g = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(find_path(&g, 0, 2).unwrap(), None);
        assert!(find_path(&g, 0, 9).is_err());
    }
}
