//! Finite directed sets, nets, filter bases and the limit-space axioms.
//!
//! Everything here is finite: a net is a map from a finite directed preorder
//! into `0..n`, and a filter is represented by a base rather than its full
//! upward closure. Membership, inclusion and convergence are all decidable
//! from bases.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A finite preorder in which every pair has an upper bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedSet {
    /// `up[a] = { b : a ≤ b }`
    up: Vec<VertexSet>,
}

impl DirectedSet {
    /// Builds from an explicit relation and validates reflexivity,
    /// transitivity and directedness.
    pub fn new(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidInput("directed sets are nonempty".into()));
        }
        let up: Vec<VertexSet> = (0..size)
            .map(|a| VertexSet::from_members(size, (0..size).filter(|&b| leq(a, b))))
            .collect();
        let d = Self { up };
        d.validate()?;
        Ok(d)
    }

    /// Reflexive-transitive closure of `pairs` (each `(a, b)` meaning `a ≤ b`).
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidInput("directed sets are nonempty".into()));
        }
        let mut up: Vec<VertexSet> = (0..size).map(|a| VertexSet::singleton(size, a)).collect();
        for &(a, b) in pairs {
            if a >= size || b >= size {
                return Err(Error::VertexOutOfRange { vertex: a.max(b), n: size });
            }
            up[a].insert(b);
        }
        close_transitively(&mut up);
        let d = Self { up };
        d.validate()?;
        Ok(d)
    }

    /// `0 ≤ 1 ≤ … ≤ m-1`.
    pub fn chain(m: usize) -> Self {
        assert!(m > 0, "directed sets are nonempty");
        Self {
            up: (0..m)
                .map(|a| VertexSet::from_members(m, a..m))
                .collect(),
        }
    }

    /// Every element below every other: the single tail is the whole set.
    pub fn indiscrete(m: usize) -> Self {
        assert!(m > 0, "directed sets are nonempty");
        Self {
            up: (0..m).map(|_| VertexSet::full(m)).collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        let m = self.size();
        for a in 0..m {
            if !self.up[a].contains(a) {
                return Err(Error::InvalidInput(format!("preorder not reflexive at {a}")));
            }
            for b in &self.up[a] {
                if !self.up[b].is_subset(&self.up[a]) {
                    return Err(Error::InvalidInput(format!(
                        "preorder not transitive through {a} ≤ {b}"
                    )));
                }
            }
        }
        for a in 0..m {
            for b in a + 1..m {
                if self.up[a].is_disjoint(&self.up[b]) {
                    return Err(Error::InvalidInput(format!(
                        "{a} and {b} have no common upper bound"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn up_set(&self, a: usize) -> &VertexSet {
        &self.up[a]
    }

    /// Sub-preorder on the elements of `keep`, re-indexed in increasing order.
    pub fn restrict(&self, keep: &VertexSet) -> Result<(Self, Vec<usize>)> {
        let old: Vec<usize> = keep.to_vec();
        let d = Self::new(old.len(), |a, b| self.leq(old[a], old[b]))?;
        Ok((d, old))
    }
}

fn close_transitively(up: &mut [VertexSet]) {
    let m = up.len();
    for k in 0..m {
        for a in 0..m {
            if up[a].contains(k) {
                let row = up[k].clone();
                up[a].union_with(&row);
            }
        }
    }
}

/// A net `φ: D → 0..ambient`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Net {
    domain: DirectedSet,
    ambient: usize,
    values: Vec<usize>,
}

impl Net {
    pub fn new(domain: DirectedSet, ambient: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != domain.size() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for a directed set of size {}",
                values.len(),
                domain.size()
            )));
        }
        if let Some(&bad) = values.iter().find(|&&v| v >= ambient) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: ambient });
        }
        Ok(Self { domain, ambient, values })
    }

    pub fn constant(domain: DirectedSet, ambient: usize, x: usize) -> Result<Self> {
        let m = domain.size();
        Self::new(domain, ambient, vec![x; m])
    }

    /// Finite sequence read as a net on a chain.
    pub fn sequence(ambient: usize, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidInput("empty sequence".into()));
        }
        Self::new(DirectedSet::chain(values.len()), ambient, values)
    }

    /// Net on an indiscrete domain enumerating `set`; its tail filter is the
    /// principal filter of `set`.
    pub fn enumerating(set: &VertexSet) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::InvalidInput("cannot enumerate the empty set".into()));
        }
        let values = set.to_vec();
        Self::new(DirectedSet::indiscrete(values.len()), set.universe(), values)
    }

    pub fn domain(&self) -> &DirectedSet {
        &self.domain
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Tail set `φ[a↑]`.
    pub fn tail(&self, a: usize) -> VertexSet {
        VertexSet::from_members(self.ambient, self.domain.up[a].iter().map(|b| self.values[b]))
    }

    /// `f ∘ φ`.
    pub fn map(&self, codomain: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::new(self.domain.clone(), codomain, self.values.iter().map(|&v| f(v)).collect())
    }
}

/// A base of a proper filter on `0..ambient`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterBase {
    ambient: usize,
    base: Vec<VertexSet>,
}

impl FilterBase {
    /// Validates properness and the finite-intersection condition; duplicate
    /// base sets are dropped, keeping first occurrences.
    pub fn new(ambient: usize, sets: Vec<VertexSet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidInput("filter base must be nonempty".into()));
        }
        let mut base: Vec<VertexSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if s.universe() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "base set over {} points in filter on {}",
                    s.universe(),
                    ambient
                )));
            }
            if s.is_empty() {
                return Err(Error::InvalidInput("improper filter base: contains ∅".into()));
            }
            if !base.contains(&s) {
                base.push(s);
            }
        }
        for (i, a) in base.iter().enumerate() {
            for b in &base[i + 1..] {
                let meet = a.intersection(b);
                if !base.iter().any(|c| c.is_subset(&meet)) {
                    return Err(Error::InvalidInput(format!(
                        "no base set inside {a:?} ∩ {b:?}"
                    )));
                }
            }
        }
        Ok(Self { ambient, base })
    }

    pub fn principal(set: VertexSet) -> Result<Self> {
        Self::new(set.universe(), vec![set])
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn base(&self) -> &[VertexSet] {
        &self.base
    }

    /// Is `set` in the generated filter?
    pub fn contains(&self, set: &VertexSet) -> bool {
        self.base.iter().any(|b| b.is_subset(set))
    }

    /// `self↑ ⊆ other↑`.
    pub fn is_coarser_than(&self, other: &FilterBase) -> bool {
        self.ambient == other.ambient && self.base.iter().all(|b| other.contains(b))
    }

    /// Intersection of all base sets.
    pub fn kernel(&self) -> VertexSet {
        self.base
            .iter()
            .fold(VertexSet::full(self.ambient), |acc, b| acc.intersection(b))
    }
}

/// `φ↑`, generated by the tail sets.
pub fn tail_filter(net: &Net) -> FilterBase {
    let tails = (0..net.domain.size()).map(|a| net.tail(a)).collect();
    FilterBase::new(net.ambient, tails).expect("tail sets of a net form a filter base")
}

fn check_ambient(g: &Graph, ambient: usize, v: usize) -> Result<()> {
    if ambient != g.n() {
        return Err(Error::DimensionMismatch(format!(
            "net or filter on {} points, graph on {}",
            ambient,
            g.n()
        )));
    }
    g.check_vertex(v)
}

/// `φ → v` iff some tail lies in `N[v]`.
pub fn net_converges(g: &Graph, net: &Net, v: usize) -> Result<bool> {
    check_ambient(g, net.ambient, v)?;
    let nv = g.closed_neighborhood(v)?;
    Ok((0..net.domain.size()).any(|a| net.tail(a).is_subset(&nv)))
}

pub fn limits(g: &Graph, net: &Net) -> Result<VertexSet> {
    let mut out = VertexSet::empty(g.n());
    for v in 0..g.n() {
        if net_converges(g, net, v)? {
            out.insert(v);
        }
    }
    Ok(out)
}

/// A filter converges to `v` iff `N[v]` belongs to it.
pub fn filter_converges(g: &Graph, fb: &FilterBase, v: usize) -> Result<bool> {
    check_ambient(g, fb.ambient, v)?;
    Ok(fb.contains(&g.closed_neighborhood(v)?))
}

/// On a finite set the ultrafilters are the principal ones: the kernel is a
/// single point `x` and `{x}` is itself in the filter.
pub fn is_ultrafilter(fb: &FilterBase) -> bool {
    let kernel = fb.kernel();
    kernel.len() == 1 && fb.contains(&kernel)
}

pub fn principal_ultrafilter(n: usize, x: usize) -> Result<FilterBase> {
    if x >= n {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    FilterBase::principal(VertexSet::singleton(n, x))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergenceSystemCheck {
    pub is_system: bool,
    /// Least vertex whose `N[v]` lies in no member.
    pub failing_vertex: Option<usize>,
}

/// `𝒞` is a convergence system iff every convergent net eventually lies in
/// some member. The coarsest filter converging to `v` is the principal
/// filter of `N[v]`, so this reduces to: every `N[v]` sits inside a member.
pub fn is_convergence_system(g: &Graph, family: &[VertexSet]) -> Result<ConvergenceSystemCheck> {
    for c in family {
        g.check_set(c)?;
    }
    for v in 0..g.n() {
        let nv = g.closed_neighborhood(v)?;
        if !family.iter().any(|c| nv.is_subset(c)) {
            return Ok(ConvergenceSystemCheck {
                is_system: false,
                failing_vertex: Some(v),
            });
        }
    }
    Ok(ConvergenceSystemCheck {
        is_system: true,
        failing_vertex: None,
    })
}

/// `ψ` is a subnet of `φ` iff `φ↑ ⊆ ψ↑`.
pub fn is_subnet(psi: &Net, phi: &Net) -> Result<bool> {
    if psi.ambient != phi.ambient {
        return Err(Error::DimensionMismatch("nets on different sets".into()));
    }
    Ok(tail_filter(phi).is_coarser_than(&tail_filter(psi)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Mixing of `φ` and `ψ`: at every `d ≥ d′` the value comes from the side the
/// selector names; elsewhere it is `φ_d`.
pub fn mix(phi: &Net, psi: &Net, d_prime: usize, selector: &[Side]) -> Result<Net> {
    if phi.domain != psi.domain || phi.ambient != psi.ambient {
        return Err(Error::DimensionMismatch("mixed nets need a shared domain".into()));
    }
    let m = phi.domain.size();
    if selector.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "selector of length {} for domain of size {m}",
            selector.len()
        )));
    }
    if d_prime >= m {
        return Err(Error::VertexOutOfRange { vertex: d_prime, n: m });
    }
    let values = (0..m)
        .map(|d| match (phi.domain.leq(d_prime, d), selector[d]) {
            (true, Side::Right) => psi.values[d],
            _ => phi.values[d],
        })
        .collect();
    Net::new(phi.domain.clone(), phi.ambient, values)
}

/// Seeded generator of small random directed sets and nets.
pub struct NetSampler {
    rng: ChaCha8Rng,
    max_body: usize,
}

impl NetSampler {
    pub fn new(seed: u64, max_body: usize) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_body: max_body.max(1),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Random preorder on a body of up to `max_body` elements, completed to a
    /// directed set by a top class of one or two mutually equivalent points.
    pub fn directed_set(&mut self) -> DirectedSet {
        let body = self.rng.random_range(0..=self.max_body);
        let top = self.rng.random_range(1..=2);
        let m = body + top;
        let mut up: Vec<VertexSet> = (0..m).map(|a| VertexSet::singleton(m, a)).collect();
        for a in 0..body {
            for b in 0..body {
                if a != b && self.rng.random_bool(0.25) {
                    up[a].insert(b);
                }
            }
        }
        for row in up.iter_mut() {
            for t in body..m {
                row.insert(t);
            }
        }
        close_transitively(&mut up);
        let d = DirectedSet { up };
        debug_assert!(d.validate().is_ok());
        d
    }

    pub fn net(&mut self, ambient: usize) -> Net {
        let d = self.directed_set();
        let values = (0..d.size()).map(|_| self.rng.random_range(0..ambient)).collect();
        Net::new(d, ambient, values).expect("values drawn in range")
    }

    /// Random net on `domain` whose values past a random element are drawn
    /// from `eventual` (nonempty) and anywhere before from `0..ambient`.
    pub fn net_eventually_in(&mut self, domain: DirectedSet, ambient: usize, eventual: &VertexSet) -> Net {
        let pool = eventual.to_vec();
        let m = domain.size();
        let pivot = self.rng.random_range(0..m);
        let values = (0..m)
            .map(|d| {
                if domain.leq(pivot, d) {
                    pool[self.rng.random_range(0..pool.len())]
                } else {
                    self.rng.random_range(0..ambient)
                }
            })
            .collect();
        Net::new(domain, ambient, values).expect("values drawn in range")
    }

    /// A subnet of `phi`: either a restriction to an up-set, or a
    /// composition with a random map from a fresh directed set that passes
    /// the filter-inclusion test.
    pub fn subnet(&mut self, phi: &Net) -> Net {
        if self.rng.random_bool(0.5) {
            let e = self.directed_set();
            let m = phi.domain.size();
            let values: Vec<usize> = (0..e.size())
                .map(|_| phi.values[self.rng.random_range(0..m)])
                .collect();
            let psi = Net::new(e, phi.ambient, values).expect("values from phi");
            if is_subnet(&psi, phi).expect("same ambient") {
                return psi;
            }
        }
        let d0 = self.rng.random_range(0..phi.domain.size());
        let (d, old) = phi
            .domain
            .restrict(&phi.domain.up[d0])
            .expect("up-sets of directed sets are directed");
        let values = old.iter().map(|&a| phi.values[a]).collect();
        Net::new(d, phi.ambient, values).expect("values from phi")
    }

    pub fn selector(&mut self, m: usize) -> Vec<Side> {
        (0..m)
            .map(|_| if self.rng.random_bool(0.5) { Side::Left } else { Side::Right })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_domain: usize,
}

impl Default for AxiomConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: 200,
            max_domain: 5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Centered,
    Isotone,
    Stable,
    Pretopological,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub vertex: usize,
    pub net_values: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub centered_checked: usize,
    pub isotone_checked: usize,
    pub stable_checked: usize,
    pub pretopological_checked: usize,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Samples nets on `g` and checks the centered, isotone, stable and
/// pretopological axioms, stopping at the first violation.
pub fn axiom_suite(g: &Graph, config: AxiomConfig) -> Result<AxiomReport> {
    let n = g.n();
    let mut report = AxiomReport::default();
    if n == 0 {
        return Ok(report);
    }
    let mut sampler = NetSampler::new(config.seed, config.max_domain);
    let fail = |report: &mut AxiomReport, axiom, vertex, net: &Net| {
        report.violation = Some(AxiomViolation {
            axiom,
            vertex,
            net_values: net.values.clone(),
        });
    };

    for x in 0..n {
        let d = sampler.directed_set();
        let c = Net::constant(d, n, x)?;
        report.centered_checked += 1;
        if !net_converges(g, &c, x)? {
            fail(&mut report, Axiom::Centered, x, &c);
            return Ok(report);
        }
    }

    for _ in 0..config.samples {
        let v = sampler.rng().random_range(0..n);
        let nv = g.closed_neighborhood(v)?;
        let d = sampler.directed_set();
        let phi = sampler.net_eventually_in(d.clone(), n, &nv);
        let psi = sampler.net_eventually_in(d.clone(), n, &nv);
        let phi_conv = net_converges(g, &phi, v)?;

        if phi_conv {
            report.pretopological_checked += 1;
            let neighborhood_filter = FilterBase::principal(nv.clone())?;
            if !neighborhood_filter.is_coarser_than(&tail_filter(&phi)) {
                fail(&mut report, Axiom::Pretopological, v, &phi);
                return Ok(report);
            }

            let sub = sampler.subnet(&phi);
            report.isotone_checked += 1;
            if !net_converges(g, &sub, v)? {
                fail(&mut report, Axiom::Isotone, v, &sub);
                return Ok(report);
            }

            if net_converges(g, &psi, v)? {
                let d_prime = sampler.rng().random_range(0..d.size());
                let sel = sampler.selector(d.size());
                let rho = mix(&phi, &psi, d_prime, &sel)?;
                report.stable_checked += 1;
                if !net_converges(g, &rho, v)? {
                    fail(&mut report, Axiom::Stable, v, &rho);
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

/// A sequence over the naturals evaluated only up to `bound` terms.
pub struct LazySequence<F: Fn(usize) -> usize> {
    term: F,
    bound: usize,
}

impl<F: Fn(usize) -> usize> LazySequence<F> {
    pub fn new(term: F, bound: usize) -> Self {
        Self { term, bound }
    }

    pub fn terms(&self) -> Vec<usize> {
        (0..self.bound).map(&self.term).collect()
    }

    /// Injective on the evaluated prefix.
    pub fn is_injective(&self) -> bool {
        let mut t = self.terms();
        t.sort_unstable();
        t.windows(2).all(|w| w[0] != w[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied())
    }

    fn base_vecs(fb: &FilterBase) -> Vec<Vec<usize>> {
        fb.base().iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn directed_set_validation() {
        assert!(DirectedSet::new(0, |_, _| true).is_err());
        // antichain of two points is not directed
        assert!(DirectedSet::new(2, |a, b| a == b).is_err());
        assert!(DirectedSet::new(2, |a, b| a <= b).is_ok());
        // 0 ≤ 1, 1 ≤ 2 without 0 ≤ 2 is not transitive
        assert!(DirectedSet::new(3, |a, b| a == b || b == a + 1).is_err());
        let d = DirectedSet::from_pairs(3, &[(0, 2), (1, 2)]).unwrap();
        assert!(d.leq(0, 2) && !d.leq(0, 1));
    }

    #[test]
    fn tail_filter_examples() {
        let c = Net::constant(DirectedSet::from_pairs(3, &[(0, 2), (1, 2)]).unwrap(), 4, 3).unwrap();
        assert_eq!(base_vecs(&tail_filter(&c)), vec![vec![3]]);
        let alt = Net::sequence(2, vec![0, 1, 0, 1]).unwrap();
        assert_eq!(base_vecs(&tail_filter(&alt)), vec![vec![0, 1], vec![1]]);
        let two = Net::sequence(6, vec![2, 5]).unwrap();
        assert_eq!(base_vecs(&tail_filter(&two)), vec![vec![2, 5], vec![5]]);
    }

    #[test]
    fn convergence_examples() {
        let p3 = Graph::path(3);
        let const0 = Net::sequence(3, vec![0, 0]).unwrap();
        assert!(net_converges(&p3, &const0, 1).unwrap());
        assert!(!net_converges(&p3, &const0, 2).unwrap());
        assert_eq!(limits(&p3, &const0).unwrap().to_vec(), vec![0, 1]);
        // alternating between the two neighbors of 1
        let alt = Net::sequence(3, vec![0, 2, 0, 2]).unwrap();
        assert!(net_converges(&p3, &alt, 1).unwrap());
        assert_eq!(limits(&Graph::complete(3), &const0).unwrap().to_vec(), vec![0, 1, 2]);
        // a finite chain has a top, so the net settles on its last value
        assert_eq!(limits(&Graph::empty(3), &alt).unwrap().to_vec(), vec![2]);
        let wander = Net::new(DirectedSet::indiscrete(2), 3, vec![0, 2]).unwrap();
        assert!(limits(&Graph::empty(3), &wander).unwrap().is_empty());
        assert!(net_converges(&Graph::path(4), &const0, 0).is_err());
    }

    #[test]
    fn filter_convergence_examples() {
        let p3 = Graph::path(3);
        let fb = FilterBase::principal(set(3, &[0])).unwrap();
        assert!(filter_converges(&p3, &fb, 1).unwrap());
        assert!(!filter_converges(&p3, &fb, 2).unwrap());
        let k4 = Graph::complete(4);
        let all = FilterBase::principal(k4.vertex_set()).unwrap();
        assert!((0..4).all(|v| filter_converges(&k4, &all, v).unwrap()));
        let nbhd = FilterBase::principal(p3.closed_neighborhood(2).unwrap()).unwrap();
        assert!(filter_converges(&p3, &nbhd, 2).unwrap());
    }

    #[test]
    fn filter_base_validation() {
        assert!(FilterBase::new(3, vec![]).is_err());
        assert!(FilterBase::new(3, vec![VertexSet::empty(3)]).is_err());
        // {0,1} and {1,2} meet in {1}, which contains no base set
        assert!(FilterBase::new(3, vec![set(3, &[0, 1]), set(3, &[1, 2])]).is_err());
        assert!(FilterBase::new(3, vec![set(3, &[0, 1]), set(3, &[1, 2]), set(3, &[1])]).is_ok());
    }

    #[test]
    fn ultrafilter_examples() {
        assert!(is_ultrafilter(&principal_ultrafilter(5, 3).unwrap()));
        assert!(!is_ultrafilter(&FilterBase::principal(set(3, &[0, 1])).unwrap()));
        assert!(!is_ultrafilter(&FilterBase::principal(VertexSet::full(2)).unwrap()));
        assert_eq!(base_vecs(&principal_ultrafilter(3, 0).unwrap()), vec![vec![0]]);
        assert!(principal_ultrafilter(3, 3).is_err());
    }

    /// Ultrafilter by the complement dichotomy, over all subsets.
    fn dichotomy_ultrafilter(fb: &FilterBase) -> bool {
        let n = fb.ambient();
        (0..1u64 << n).all(|mask| {
            let a = VertexSet::from_mask(n, mask);
            fb.contains(&a) || fb.contains(&a.complement())
        })
    }

    #[test]
    fn ultrafilter_definitions_agree_exhaustively() {
        for n in 1..=4usize {
            let subsets: Vec<VertexSet> = (1..1u64 << n).map(|m| VertexSet::from_mask(n, m)).collect();
            // every filter on a finite set is principal: one base set suffices
            for s in &subsets {
                let fb = FilterBase::principal(s.clone()).unwrap();
                assert_eq!(is_ultrafilter(&fb), dichotomy_ultrafilter(&fb), "{s:?}");
            }
            // and a few multi-set bases
            for a in &subsets {
                for b in &subsets {
                    if let Ok(fb) = FilterBase::new(n, vec![a.clone(), b.clone(), a.intersection(b)]) {
                        assert_eq!(is_ultrafilter(&fb), dichotomy_ultrafilter(&fb));
                    }
                }
            }
        }
    }

    #[test]
    fn principal_ultrafilter_converges_where_point_is_close() {
        for n in 1..=4 {
            for g in enumerate_graphs(n).unwrap() {
                for x in 0..n {
                    let u = principal_ultrafilter(n, x).unwrap();
                    for v in 0..n {
                        let nv = g.closed_neighborhood(v).unwrap();
                        assert_eq!(filter_converges(&g, &u, v).unwrap(), nv.contains(x));
                    }
                }
            }
        }
    }

    #[test]
    fn convergence_system_examples() {
        let g = Graph::path(4);
        let nbhds: Vec<_> = (0..4).map(|v| g.closed_neighborhood(v).unwrap()).collect();
        assert!(is_convergence_system(&g, &nbhds).unwrap().is_system);
        assert!(is_convergence_system(&g, &[g.vertex_set()]).unwrap().is_system);
        let bad = is_convergence_system(&g, &[VertexSet::empty(4)]).unwrap();
        assert_eq!(bad.failing_vertex, Some(0));
    }

    #[test]
    fn subnet_examples() {
        let phi = Net::sequence(3, vec![0, 1, 2, 1, 2]).unwrap();
        assert!(is_subnet(&phi, &phi).unwrap());
        // positions 0, 2, 4; cofinal because the last index is kept
        let evens = Net::sequence(3, vec![0, 2, 2]).unwrap();
        assert!(is_subnet(&evens, &phi).unwrap());
        let x = Net::sequence(3, vec![0]).unwrap();
        let y = Net::sequence(3, vec![1]).unwrap();
        assert!(!is_subnet(&x, &y).unwrap());
    }

    #[test]
    fn mix_examples() {
        let phi = Net::sequence(2, vec![0, 0, 0, 0]).unwrap();
        let psi = Net::sequence(2, vec![1, 1, 1, 1]).unwrap();
        let left = vec![Side::Left; 4];
        let right = vec![Side::Right; 4];
        assert_eq!(mix(&phi, &psi, 0, &left).unwrap(), phi);
        assert_eq!(mix(&phi, &psi, 0, &right).unwrap(), psi);
        let alt = vec![Side::Left, Side::Right, Side::Left, Side::Right];
        assert_eq!(mix(&phi, &psi, 0, &alt).unwrap().values(), &[0, 1, 0, 1]);
        // below d′ the left net wins
        assert_eq!(mix(&phi, &psi, 2, &right).unwrap().values(), &[0, 0, 1, 1]);
        let short = Net::sequence(2, vec![1, 1]).unwrap();
        assert!(mix(&phi, &short, 0, &left).is_err());
    }

    #[test]
    fn axioms_hold_on_small_graphs() {
        for n in 1..=4 {
            for g in enumerate_graphs(n).unwrap().step_by(3) {
                let r = axiom_suite(&g, AxiomConfig { seed: 7, samples: 60, max_domain: 4 }).unwrap();
                assert!(r.holds(), "{g:?}: {r:?}");
                assert!(r.isotone_checked > 0);
            }
        }
    }

    #[test]
    fn sampled_nets_match_filter_convergence() {
        let mut s = NetSampler::new(11, 5);
        for g in enumerate_graphs(4).unwrap() {
            for _ in 0..20 {
                let net = s.net(4);
                let tf = tail_filter(&net);
                for v in 0..4 {
                    assert_eq!(net_converges(&g, &net, v).unwrap(), filter_converges(&g, &tf, v).unwrap());
                }
            }
        }
    }

    #[test]
    fn sampler_produces_valid_subnets() {
        let mut s = NetSampler::new(3, 5);
        for _ in 0..200 {
            let phi = s.net(5);
            let psi = s.subnet(&phi);
            assert!(is_subnet(&psi, &phi).unwrap());
            assert!(psi.domain().validate().is_ok());
        }
    }

    #[test]
    fn lazy_sequence_injectivity() {
        assert!(LazySequence::new(|i| i + 1, 50).is_injective());
        assert!(!LazySequence::new(|i| i % 3, 5).is_injective());
    }
}
