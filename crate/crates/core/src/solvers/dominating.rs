use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const EXACT_DOMINATION_BOUND: usize = 32;

const MEMO_CAP: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DominationMethod {
    Exact,
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominatingSetResult {
    pub set: VertexSet,
    pub size: usize,
    /// No smaller dominating set exists.
    pub optimal: bool,
    pub method: DominationMethod,
}

pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    g.neighborhood_of_set(d).is_ok_and(|c| c.len() == g.n())
}

/// Repeatedly takes the vertex covering the most undominated vertices,
/// breaking ties by least index.
pub fn greedy_dominating_set(g: &Graph) -> DominatingSetResult {
    let n = g.n();
    let mut undominated = VertexSet::full(n);
    let mut set = VertexSet::empty(n);
    while !undominated.is_empty() {
        let best = (0..n)
            .map(|w| {
                let gain = g
                    .closed_neighborhood(w)
                    .expect("in range")
                    .intersection(&undominated)
                    .len();
                (gain, std::cmp::Reverse(w))
            })
            .max()
            .map(|(_, std::cmp::Reverse(w))| w)
            .expect("nonempty graph while vertices remain");
        set.insert(best);
        undominated.difference_with(&g.closed_neighborhood(best).expect("in range"));
    }
    DominatingSetResult {
        size: set.len(),
        set,
        optimal: false,
        method: DominationMethod::Greedy,
    }
}

pub fn min_dominating_set(g: &Graph) -> Result<DominatingSetResult> {
    min_dominating_set_bounded(g, EXACT_DOMINATION_BOUND)
}

/// Exact minimum dominating set by branch and bound. Branches on the
/// closed neighborhood of the least undominated vertex; the incumbent comes
/// from the greedy rule and the lower bound counts a packing of pairwise
/// disjoint closed neighborhoods among undominated vertices.
pub fn min_dominating_set_bounded(g: &Graph, bound: usize) -> Result<DominatingSetResult> {
    let n = g.n();
    let limit = bound.min(64);
    if n > limit {
        return Err(Error::SizeLimit {
            what: "exact dominating set",
            size: n,
            limit,
        });
    }
    let greedy = greedy_dominating_set(g);
    let closed: Vec<u64> = (0..n)
        .map(|v| g.closed_neighborhood(v).expect("in range").to_mask())
        .collect();
    let mut search = DomSearch {
        full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        closed,
        best_size: greedy.size,
        best_set: greedy.set.to_mask(),
        memo: HashMap::new(),
    };
    search.run(0, 0, 0);
    let set = VertexSet::from_mask(n, search.best_set);
    Ok(DominatingSetResult {
        size: set.len(),
        set,
        optimal: true,
        method: DominationMethod::Exact,
    })
}

struct DomSearch {
    full: u64,
    closed: Vec<u64>,
    best_size: usize,
    best_set: u64,
    memo: HashMap<u64, usize>,
}

impl DomSearch {
    fn packing_bound(&self, dominated: u64) -> usize {
        let mut open = self.full & !dominated;
        let mut used = 0u64;
        let mut count = 0;
        while open != 0 {
            let u = open.trailing_zeros() as usize;
            open &= open - 1;
            if self.closed[u] & used == 0 {
                used |= self.closed[u];
                count += 1;
            }
        }
        count
    }

    fn run(&mut self, dominated: u64, chosen: u64, count: usize) {
        if dominated == self.full {
            if count < self.best_size {
                self.best_size = count;
                self.best_set = chosen;
            }
            return;
        }
        if count + self.packing_bound(dominated) >= self.best_size {
            return;
        }
        match self.memo.get(&dominated) {
            Some(&seen) if seen <= count => return,
            _ => {
                if self.memo.len() < MEMO_CAP || self.memo.contains_key(&dominated) {
                    self.memo.insert(dominated, count);
                }
            }
        }
        let u = (self.full & !dominated).trailing_zeros() as usize;
        let mut candidates: Vec<(u32, usize)> = Vec::new();
        let mut opts = self.closed[u];
        while opts != 0 {
            let w = opts.trailing_zeros() as usize;
            opts &= opts - 1;
            let gain = (self.closed[w] & !dominated).count_ones();
            candidates.push((gain, w));
        }
        candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, w) in candidates {
            self.run(dominated | self.closed[w], chosen | 1 << w, count + 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;

    /// Smallest dominating set size by trying every subset.
    fn brute_gamma(g: &Graph) -> usize {
        let n = g.n();
        (0..1u64 << n)
            .filter(|&m| is_dominating(g, &VertexSet::from_mask(n, m)))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn exact_examples() {
        let star = min_dominating_set(&Graph::star(5)).unwrap();
        assert_eq!((star.size, star.set.to_vec()), (1, vec![0]));
        assert_eq!(min_dominating_set(&Graph::path(4)).unwrap().size, 2);
        assert_eq!(min_dominating_set(&Graph::cycle(6)).unwrap().size, 2);
        assert_eq!(min_dominating_set(&Graph::empty(1)).unwrap().size, 1);
        assert_eq!(min_dominating_set(&Graph::empty(0)).unwrap().size, 0);
        assert!(min_dominating_set(&Graph::empty(33)).is_err());
    }

    #[test]
    fn greedy_examples() {
        let k5 = greedy_dominating_set(&Graph::complete(5));
        assert_eq!(k5.size, 1);
        assert!(!k5.optimal);
        assert_eq!(greedy_dominating_set(&Graph::empty(4)).size, 4);
        // P4: vertex 1 covers {0,1,2}, then 2 is the least vertex covering 3
        assert_eq!(greedy_dominating_set(&Graph::path(4)).set.to_vec(), vec![1, 2]);
    }

    #[test]
    fn exact_matches_enumeration_up_to_six() {
        for n in 0..=6 {
            for g in enumerate_graphs(n).unwrap() {
                let r = min_dominating_set(&g).unwrap();
                assert!(is_dominating(&g, &r.set));
                assert_eq!(r.size, brute_gamma(&g), "{g:?}");
                assert!(greedy_dominating_set(&g).size >= r.size);
            }
        }
    }

    #[test]
    fn handles_the_size_bound() {
        let g = Graph::cycle(32);
        // γ(C_n) = ⌈n/3⌉
        assert_eq!(min_dominating_set(&g).unwrap().size, 11);
    }
}
