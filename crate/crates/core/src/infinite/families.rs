use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Adjacency, CutMode, NeighborOracle, OracleGraph, Separator};
use crate::error::{Error, Result};

/// Named infinite graphs. Ids and levels:
///
/// - `Ray`: vertex `i`, level `i`.
/// - `DoubleRay`: integer `k` is `0 ↦ 0`, `k ↦ 2k-1`, `-k ↦ 2k`; level `|k|`.
/// - `Comb`: spine `s_i = 2i`, tooth `t_i = 2i+1`; level `i`.
/// - `BinaryTree`: heap order, children of `v` are `2v+1, 2v+2`; level is depth.
/// - `StarOfRays(k)`: center `0`, apex `a_j = 1+j` adjacent to the center and
///   to every vertex of ray `j`, ray vertex `(j,i) = 1+k+ik+j`; apexes and
///   center have level 0, `(j,i)` level `i`.
/// - `FanRay`: apex `0` adjacent to every ray vertex `r_i = i+1`; level of
///   `r_i` is `i`.
/// - `DominatedLadder`: apexes `A = 0`, `B = 1`, row vertex `(r,i) = 2+3i+r`
///   for rows `r ∈ {0,1,2}`, rungs between rows 0-1 and 1-2 at every `i`;
///   `A` is adjacent to rows 0 and 1, `B` to row 2, and `A ~ B`.
/// - `Ladder`: rails `a_i = 2i`, `b_i = 2i+1` with a rung at every `i`.
/// - `HubPair`: hub `0` adjacent to both rails `a_i = 1+2i`, `b_i = 2+2i`,
///   no rungs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Ray,
    DoubleRay,
    Comb,
    BinaryTree,
    StarOfRays(usize),
    FanRay,
    DominatedLadder,
    Ladder,
    HubPair,
}

pub const DEFAULT_STAR_RAYS: usize = 3;

impl Family {
    pub fn catalog() -> Vec<Family> {
        vec![
            Family::Ray,
            Family::DoubleRay,
            Family::Comb,
            Family::BinaryTree,
            Family::StarOfRays(DEFAULT_STAR_RAYS),
            Family::FanRay,
            Family::DominatedLadder,
            Family::Ladder,
            Family::HubPair,
        ]
    }

    /// Case-insensitive; `starofrays:<k>` sets the ray count.
    pub fn parse(name: &str) -> Result<Family> {
        let lower = name.trim().to_ascii_lowercase();
        let (base, arg) = match lower.split_once(':') {
            Some((b, a)) => (b, Some(a)),
            None => (lower.as_str(), None),
        };
        let family = match base {
            "ray" => Family::Ray,
            "doubleray" => Family::DoubleRay,
            "comb" => Family::Comb,
            "binarytree" => Family::BinaryTree,
            "starofrays" => {
                let k = match arg {
                    Some(a) => a.parse().ok().filter(|&k| k >= 1).ok_or_else(|| Error::UnknownFamily(name.to_string()))?,
                    None => DEFAULT_STAR_RAYS,
                };
                return Ok(Family::StarOfRays(k));
            }
            "fanray" => Family::FanRay,
            "dominatedladder" => Family::DominatedLadder,
            "ladder" => Family::Ladder,
            "hubpair" => Family::HubPair,
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        match arg {
            None => Ok(family),
            Some(_) => Err(Error::UnknownFamily(name.to_string())),
        }
    }

    pub fn locally_finite(&self) -> bool {
        matches!(
            self,
            Family::Ray | Family::DoubleRay | Family::Comb | Family::BinaryTree | Family::Ladder
        )
    }

    pub fn oracle(&self) -> OracleGraph {
        OracleGraph::new(Arc::new(FamilyOracle(*self)), self.locally_finite(), 0)
    }

    /// Proven finite dominating set, for the compact families.
    pub fn dominating_set(&self) -> Option<Vec<usize>> {
        match *self {
            Family::StarOfRays(k) => Some((1..=k).collect()),
            Family::FanRay | Family::HubPair => Some(vec![0]),
            Family::DominatedLadder => Some(vec![0, 1]),
            _ => None,
        }
    }

    /// For a non-compact family, a vertex of level `max_level + 2`. Every
    /// neighbor of it has level above `max_level`, so no set of vertices of
    /// level at most `max_level` dominates it.
    pub fn escape(&self, max_level: usize) -> Option<usize> {
        let l = max_level.checked_add(2)?;
        match self {
            Family::Ray => Some(l),
            Family::DoubleRay => l.checked_mul(2).map(|x| x - 1),
            Family::Comb => l.checked_mul(2)?.checked_add(1),
            Family::BinaryTree => 1usize.checked_shl(l as u32).filter(|&p| p != 0 && l < 63).map(|p| p - 1),
            Family::Ladder => l.checked_mul(2),
            _ => None,
        }
    }

    /// Number of edge-ends, known analytically.
    pub fn declared_edge_ends(&self) -> Option<usize> {
        match *self {
            Family::Ray | Family::Comb | Family::Ladder | Family::FanRay | Family::DominatedLadder | Family::HubPair => {
                Some(1)
            }
            Family::DoubleRay => Some(2),
            Family::StarOfRays(k) => Some(k),
            Family::BinaryTree => None,
        }
    }

    /// The realization of this family is one reading of an ambiguous drawing.
    pub fn is_stand_in(&self) -> bool {
        matches!(self, Family::DominatedLadder)
    }

    /// Named rays of the family.
    pub fn rays(&self) -> Vec<Ray> {
        match *self {
            Family::Ray => vec![Ray::new("ray", |i| i)],
            Family::DoubleRay => vec![Ray::new("right", |i| if i == 0 { 0 } else { 2 * i - 1 }), Ray::new("left", |i| 2 * i)],
            Family::Comb => vec![Ray::new("spine", |i| 2 * i)],
            Family::BinaryTree => vec![Ray::new("leftmost", |i| (1usize << i) - 1), Ray::new("rightmost", |i| (1usize << (i + 1)) - 2)],
            Family::StarOfRays(k) => (0..k)
                .map(|j| Ray::new(format!("ray{j}"), move |i| 1 + k + i * k + j))
                .collect(),
            Family::FanRay => vec![Ray::new("ray", |i| i + 1)],
            Family::DominatedLadder => (0..3)
                .map(|r| Ray::new(format!("row{r}"), move |i| 2 + 3 * i + r))
                .collect(),
            Family::Ladder => vec![Ray::new("a", |i| 2 * i), Ray::new("b", |i| 2 * i + 1)],
            Family::HubPair => vec![Ray::new("a", |i| 1 + 2 * i), Ray::new("b", |i| 2 + 2 * i)],
        }
    }

    pub fn ray(&self, name: &str) -> Option<Ray> {
        self.rays().into_iter().find(|r| r.name == name)
    }

    fn separator(&self, r1: &str, r2: &str, mode: CutMode) -> Option<Separator> {
        if r1 == r2 {
            return None;
        }
        match (*self, mode) {
            (Family::DoubleRay, CutMode::Vertex) => Some(Separator::Vertices(vec![0])),
            (Family::DoubleRay, CutMode::Edge) => Some(Separator::Edges(vec![(0, 1)])),
            (Family::BinaryTree, CutMode::Vertex) => Some(Separator::Vertices(vec![0])),
            (Family::BinaryTree, CutMode::Edge) => Some(Separator::Edges(vec![(0, 1)])),
            (Family::HubPair, CutMode::Vertex) => Some(Separator::Vertices(vec![0])),
            (Family::StarOfRays(k), _) => {
                let j: usize = r1.strip_prefix("ray")?.parse().ok()?;
                if j >= k {
                    return None;
                }
                // ray j together with its apex hangs off the center by one edge
                Some(match mode {
                    CutMode::Vertex => Separator::Vertices(vec![1 + j]),
                    CutMode::Edge => Separator::Edges(vec![(0, 1 + j)]),
                })
            }
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Ray => write!(f, "ray"),
            Family::DoubleRay => write!(f, "doubleray"),
            Family::Comb => write!(f, "comb"),
            Family::BinaryTree => write!(f, "binarytree"),
            Family::StarOfRays(k) => write!(f, "starofrays:{k}"),
            Family::FanRay => write!(f, "fanray"),
            Family::DominatedLadder => write!(f, "dominatedladder"),
            Family::Ladder => write!(f, "ladder"),
            Family::HubPair => write!(f, "hubpair"),
        }
    }
}

/// A one-way infinite path given by its vertex at each index.
#[derive(Clone)]
pub struct Ray {
    pub name: String,
    index: Arc<dyn Fn(usize) -> usize + Send + Sync>,
}

impl Ray {
    pub fn new(name: impl Into<String>, index: impl Fn(usize) -> usize + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            index: Arc::new(index),
        }
    }

    pub fn vertex(&self, i: usize) -> usize {
        (self.index)(i)
    }

    /// Consecutive vertices adjacent and all distinct, up to index `bound`.
    pub fn check(&self, og: &OracleGraph, bound: usize) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for i in 0..=bound {
            let v = self.vertex(i);
            if !seen.insert(v) {
                return Err(Error::InvalidInput(format!("ray {} repeats vertex {v}", self.name)));
            }
            if i > 0 && !og.is_adjacent(self.vertex(i - 1), v)? {
                return Err(Error::InvalidInput(format!(
                    "ray {} steps {} -> {v} along a non-edge",
                    self.name,
                    self.vertex(i - 1)
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ray({}: {:?}, ...)", self.name, (0..4).map(|i| self.vertex(i)).collect::<Vec<_>>())
    }
}

struct FamilyOracle(Family);

fn finite(mut v: Vec<usize>) -> Adjacency {
    v.sort_unstable();
    Adjacency::Finite(v)
}

fn double_ray_id(k: i64) -> usize {
    match k {
        0 => 0,
        k if k > 0 => (2 * k - 1) as usize,
        k => (-2 * k) as usize,
    }
}

fn double_ray_int(v: usize) -> i64 {
    match v {
        0 => 0,
        v if v % 2 == 1 => v.div_ceil(2) as i64,
        v => -((v / 2) as i64),
    }
}

impl NeighborOracle for FamilyOracle {
    fn neighbors(&self, v: usize) -> Adjacency {
        match self.0 {
            Family::Ray => finite(if v == 0 { vec![1] } else { vec![v - 1, v + 1] }),
            Family::DoubleRay => {
                let k = double_ray_int(v);
                finite(vec![double_ray_id(k - 1), double_ray_id(k + 1)])
            }
            Family::Comb => {
                let i = v / 2;
                if v % 2 == 1 {
                    return finite(vec![2 * i]);
                }
                let mut n = vec![2 * i + 1, 2 * i + 2];
                if i > 0 {
                    n.push(2 * i - 2);
                }
                finite(n)
            }
            Family::BinaryTree => {
                let mut n = vec![2 * v + 1, 2 * v + 2];
                if v > 0 {
                    n.push((v - 1) / 2);
                }
                finite(n)
            }
            Family::StarOfRays(k) => {
                if v == 0 {
                    return finite((1..=k).collect());
                }
                if v <= k {
                    let j = v - 1;
                    return Adjacency::Infinite {
                        exceptional: vec![0],
                        member: Arc::new(move |w| w > k && (w - 1 - k) % k == j),
                    };
                }
                let (i, j) = ((v - 1 - k) / k, (v - 1 - k) % k);
                let mut n = vec![1 + j, v + k];
                if i > 0 {
                    n.push(v - k);
                }
                finite(n)
            }
            Family::FanRay => {
                if v == 0 {
                    return Adjacency::Infinite {
                        exceptional: vec![],
                        member: Arc::new(|w| w >= 1),
                    };
                }
                let mut n = vec![0, v + 1];
                if v > 1 {
                    n.push(v - 1);
                }
                finite(n)
            }
            Family::DominatedLadder => match v {
                0 => Adjacency::Infinite {
                    exceptional: vec![1],
                    member: Arc::new(|w| w >= 2 && (w - 2) % 3 != 2),
                },
                1 => Adjacency::Infinite {
                    exceptional: vec![0],
                    member: Arc::new(|w| w >= 2 && (w - 2) % 3 == 2),
                },
                _ => {
                    let (i, r) = ((v - 2) / 3, (v - 2) % 3);
                    let mut n = vec![if r == 2 { 1 } else { 0 }, v + 3];
                    if i > 0 {
                        n.push(v - 3);
                    }
                    if r > 0 {
                        n.push(v - 1);
                    }
                    if r < 2 {
                        n.push(v + 1);
                    }
                    finite(n)
                }
            },
            Family::Ladder => {
                let mut n = vec![v ^ 1, v + 2];
                if v >= 2 {
                    n.push(v - 2);
                }
                finite(n)
            }
            Family::HubPair => {
                if v == 0 {
                    return Adjacency::Infinite {
                        exceptional: vec![],
                        member: Arc::new(|w| w >= 1),
                    };
                }
                let mut n = vec![0, v + 2];
                if v >= 3 {
                    n.push(v - 2);
                }
                finite(n)
            }
        }
    }

    fn level(&self, v: usize) -> usize {
        match self.0 {
            Family::Ray => v,
            Family::DoubleRay => double_ray_int(v).unsigned_abs() as usize,
            Family::Comb | Family::Ladder => v / 2,
            Family::BinaryTree => (usize::BITS - 1 - (v + 1).leading_zeros()) as usize,
            Family::StarOfRays(k) => {
                if v <= k {
                    0
                } else {
                    (v - 1 - k) / k
                }
            }
            Family::FanRay => v.saturating_sub(1),
            Family::DominatedLadder => v.saturating_sub(2) / 3,
            Family::HubPair => v.saturating_sub(1) / 2,
        }
    }

    fn level_bound(&self, level: usize) -> usize {
        let l = level.saturating_add(1);
        match self.0 {
            Family::Ray => l,
            Family::DoubleRay => l.saturating_mul(2).saturating_sub(1),
            Family::Comb | Family::Ladder => l.saturating_mul(2),
            Family::BinaryTree => 1usize.checked_shl(l as u32).filter(|_| l < 64).map_or(usize::MAX, |p| p - 1),
            Family::StarOfRays(k) => l.saturating_mul(k).saturating_add(1 + k),
            Family::FanRay => l.saturating_add(1),
            Family::DominatedLadder => l.saturating_mul(3).saturating_add(2),
            Family::HubPair => l.saturating_mul(2).saturating_add(1),
        }
    }

    fn dominating_certificate(&self) -> Option<Vec<usize>> {
        self.0.dominating_set()
    }

    fn separator(&self, r1: &str, r2: &str, mode: CutMode) -> Option<Separator> {
        self.0.separator(r1, r2, mode)
    }
}
