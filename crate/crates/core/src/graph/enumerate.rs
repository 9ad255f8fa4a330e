use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_BOUND: usize = 7;

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order; bit `i` of an
/// edge mask refers to the `i`-th pair.
pub fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// All labeled graphs on `n` vertices in increasing edge-mask order.
#[derive(Debug, Clone)]
pub struct GraphEnumeration {
    n: usize,
    slots: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl GraphEnumeration {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Mask of the graph the next call to `next` will yield.
    pub fn position(&self) -> u64 {
        self.next
    }

    pub fn graph_from_mask(&self, mask: u64) -> Graph {
        let mut g = Graph::empty(self.n);
        for (i, &(u, v)) in self.slots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v).expect("slot pairs are valid");
            }
        }
        g
    }
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.graph_from_mask(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GraphEnumeration {}

pub fn enumerate_graphs(n: usize) -> Result<GraphEnumeration> {
    enumerate_graphs_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_graphs_bounded(n: usize, bound: usize) -> Result<GraphEnumeration> {
    // 2^(n(n-1)/2) must fit in a u64 counter
    let limit = bound.min(11);
    if n > limit {
        return Err(Error::SizeLimit {
            what: "graph enumeration",
            size: n,
            limit,
        });
    }
    let slots = edge_slots(n);
    Ok(GraphEnumeration {
        n,
        end: 1u64 << slots.len(),
        slots,
        next: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_graphs(0).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_graphs(4).unwrap().count(), 64);
        assert!(enumerate_graphs(8).is_err());
        assert_eq!(enumerate_graphs_bounded(3, 3).unwrap().len(), 8);
    }

    #[test]
    fn distinct_and_ordered() {
        let graphs: Vec<Graph> = enumerate_graphs(4).unwrap().collect();
        let unique: HashSet<_> = graphs.iter().cloned().collect();
        assert_eq!(unique.len(), 64);
        assert_eq!(graphs[0], Graph::empty(4));
        assert_eq!(graphs[1].edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(graphs[63], Graph::complete(4));
    }
}
