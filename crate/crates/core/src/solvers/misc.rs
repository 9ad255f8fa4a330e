use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{connected_components, induced_subgraph, Graph, VertexFunction, VertexSet};

pub const TWO_COLORING_BOUND: usize = 20;

/// Breadth-first two-coloring, component by component from the least
/// vertex. `None` when some edge joins two vertices of the same layer parity.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let sx = side[x].expect("queued vertices are colored");
            for y in g.neighbors(x) {
                match side[y] {
                    None => {
                        side[y] = Some(!sx);
                        queue.push_back(y);
                    }
                    Some(sy) if sy == sx => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let a = VertexSet::from_members(n, (0..n).filter(|&v| side[v] == Some(false)));
    let b = a.complement();
    Some((a, b))
}

/// The convergence form of a bipartition: `N[v] ⊆ B ∪ {v}` for `v ∈ A`,
/// and symmetrically.
pub fn is_convergence_bipartition(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    g.check_set(a)?;
    g.check_set(b)?;
    if !a.is_disjoint(b) || a.union(b).len() != g.n() {
        return Ok(false);
    }
    let side_ok = |p: &VertexSet, q: &VertexSet| {
        p.iter().all(|v| {
            let mut allowed = q.clone();
            allowed.insert(v);
            g.closed_neighborhood(v).expect("in range").is_subset(&allowed)
        })
    };
    Ok(side_ok(a, b) && side_ok(b, a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrregularityCheck {
    pub locally_irregular: bool,
    /// Least edge whose ends share a degree.
    pub witness: Option<(usize, usize)>,
}

pub fn is_locally_irregular(g: &Graph) -> IrregularityCheck {
    let witness = g.edges().find(|&(u, v)| g.degree(u) == g.degree(v));
    IrregularityCheck {
        locally_irregular: witness.is_none(),
        witness,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColorings {
    /// Number of continuous maps to the discrete two-point space.
    pub count: u64,
    /// A nonconstant continuous coloring: 1 on the first component, 0 elsewhere.
    pub witness: Option<Vec<u8>>,
}

pub fn continuous_two_colorings(g: &Graph) -> Result<TwoColorings> {
    continuous_two_colorings_bounded(g, TWO_COLORING_BOUND)
}

/// Continuous maps into the discrete two-point space are the colorings
/// constant on every edge, hence on every component.
pub fn continuous_two_colorings_bounded(g: &Graph, bound: usize) -> Result<TwoColorings> {
    let n = g.n();
    let limit = bound.min(63);
    if n > limit {
        return Err(Error::SizeLimit {
            what: "two-coloring count",
            size: n,
            limit,
        });
    }
    let comps = connected_components(g);
    let witness = (comps.len() >= 2).then(|| (0..n).map(|v| comps[0].contains(v) as u8).collect());
    Ok(TwoColorings {
        count: 1u64 << comps.len(),
        witness,
    })
}

/// Is `coloring` constant along every edge?
pub fn is_continuous_coloring(g: &Graph, coloring: &[u8]) -> bool {
    coloring.len() == g.n() && g.edges().all(|(u, v)| coloring[u] == coloring[v])
}

/// Connected after deleting any single vertex.
pub fn is_two_connected(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "2-connectedness needs at least 3 vertices, got {n}"
        )));
    }
    if !g.is_connected() {
        return Ok(false);
    }
    Ok((0..n).all(|v| {
        let mut keep = g.vertex_set();
        keep.remove(v);
        induced_subgraph(g, &keep).expect("same universe").0.is_connected()
    }))
}

/// `f(N_G[v]) ⊆ N_H[f(v)]` for every `v`.
pub fn is_continuous_map(f: &VertexFunction, g: &Graph, h: &Graph) -> Result<bool> {
    f.check_dims(g, h)?;
    Ok((0..g.n()).all(|v| {
        let target = h.closed_neighborhood(f.apply(v)).expect("codomain checked");
        g.closed_neighborhood(v)
            .expect("in range")
            .iter()
            .all(|w| target.contains(f.apply(w)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;

    #[test]
    fn bipartition_examples() {
        let (a, b) = bipartition(&Graph::cycle(4)).unwrap();
        assert_eq!((a.len(), b.len()), (2, 2));
        assert!(bipartition(&Graph::complete(3)).is_none());
        let (a, b) = bipartition(&Graph::path(5)).unwrap();
        assert_eq!(a.to_vec(), vec![0, 2, 4]);
        assert_eq!(b.to_vec(), vec![1, 3]);
        assert!(bipartition(&Graph::empty(0)).is_some());
    }

    #[test]
    fn bipartition_agrees_with_convergence_form() {
        for n in 0..=6 {
            for g in enumerate_graphs(n).unwrap() {
                let any_split = (0..1u64 << n).any(|m| {
                    let a = VertexSet::from_mask(n, m);
                    is_convergence_bipartition(&g, &a, &a.complement()).unwrap()
                });
                match bipartition(&g) {
                    Some((a, b)) => {
                        assert!(is_convergence_bipartition(&g, &a, &b).unwrap());
                        assert!(any_split);
                    }
                    None => assert!(!any_split, "{g:?}"),
                }
            }
        }
    }

    #[test]
    fn irregular_examples() {
        assert_eq!(is_locally_irregular(&Graph::complete(2)).witness, Some((0, 1)));
        assert!(is_locally_irregular(&Graph::star(3)).locally_irregular);
        assert!(is_locally_irregular(&Graph::path(3)).locally_irregular);
        assert!(!is_locally_irregular(&Graph::path(4)).locally_irregular);
    }

    #[test]
    fn two_coloring_examples() {
        let c = continuous_two_colorings(&Graph::path(4)).unwrap();
        assert_eq!((c.count, c.witness), (2, None));
        let g = Graph::complete(2).disjoint_union(&Graph::complete(2));
        let c = continuous_two_colorings(&g).unwrap();
        assert_eq!(c.count, 4);
        let w = c.witness.unwrap();
        assert_eq!(w, vec![1, 1, 0, 0]);
        assert!(is_continuous_coloring(&g, &w));
        assert_eq!(continuous_two_colorings(&Graph::empty(3)).unwrap().count, 8);
        assert!(continuous_two_colorings(&Graph::empty(21)).is_err());
    }

    #[test]
    fn two_coloring_count_matches_enumeration() {
        for n in 1..=6 {
            for g in enumerate_graphs(n).unwrap() {
                let brute = (0..1u64 << n)
                    .filter(|&m| {
                        let c: Vec<u8> = (0..n).map(|v| (m >> v & 1) as u8).collect();
                        is_continuous_coloring(&g, &c)
                    })
                    .count() as u64;
                let c = continuous_two_colorings(&g).unwrap();
                assert_eq!(c.count, brute);
                assert_eq!(c.count == 2, g.is_connected());
            }
        }
    }

    #[test]
    fn two_connected_examples() {
        assert!(is_two_connected(&Graph::cycle(4)).unwrap());
        assert!(!is_two_connected(&Graph::path(3)).unwrap());
        let k4_minus = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(is_two_connected(&k4_minus).unwrap());
        assert!(is_two_connected(&Graph::complete(2)).is_err());
    }

    /// Every continuous two-coloring of `G - v` extends to a continuous
    /// coloring of `G`, tested by brute force.
    fn extension_form(g: &Graph) -> bool {
        let n = g.n();
        g.is_connected()
            && (0..n).all(|v| {
                let mut keep = g.vertex_set();
                keep.remove(v);
                let (sub, _) = induced_subgraph(g, &keep).unwrap();
                continuous_two_colorings(&sub).unwrap().count == 2
            })
    }

    #[test]
    fn two_connected_matches_extension_form() {
        for n in 3..=6 {
            for g in enumerate_graphs(n).unwrap() {
                assert_eq!(is_two_connected(&g).unwrap(), extension_form(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn continuous_map_examples() {
        let p3 = Graph::path(3);
        assert!(is_continuous_map(&VertexFunction::identity(3), &p3, &p3).unwrap());
        let k3 = Graph::complete(3);
        assert!(is_continuous_map(&VertexFunction::constant(3, 3, 1).unwrap(), &p3, &k3).unwrap());
        let fold = VertexFunction::new(2, vec![0, 1, 0]).unwrap();
        assert!(is_continuous_map(&fold, &p3, &Graph::complete(2)).unwrap());
        assert!(is_continuous_map(&fold, &p3, &p3).is_err());
    }
}
