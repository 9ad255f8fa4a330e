//! Machine-readable reports. The JSON layout is described in
//! `docs/report-schema.md`; bump [`FORMAT_VERSION`] whenever it changes.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{connected_components, Graph, VertexSet};
use crate::infinite::{
    edge_end_bound_check, is_compact, rayless_spanning_tree, rays_equivalent, CutMode, EdgeEndReport, Family,
    RaylessTree, TriVerdict,
};
use crate::pretopology::{is_convergence_topological, topological_modification, TopologicalCheck};
use crate::solvers::{
    bipartition, greedy_dominating_set, is_convergence_bipartition, is_dominating, is_locally_irregular,
    min_dominating_set, min_internal_spanning_tree, DominatingSetResult, DominationMethod, IrregularityCheck,
    SpanningTreeResult,
};
use crate::verifier::TheoremCheck;

pub const FORMAT_VERSION: u32 = 1;

/// A field that may be skipped on request or fail on its own without
/// failing the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "value", rename_all = "snake_case")]
pub enum Computed<T> {
    Ok(T),
    Skipped,
    Error(String),
}

impl<T> Computed<T> {
    fn from_result(r: Result<T>) -> Self {
        match r {
            Ok(v) => Computed::Ok(v),
            Err(e) => Computed::Error(e.to_string()),
        }
    }

    pub fn ok(&self) -> Option<&T> {
        match self {
            Computed::Ok(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationSummary {
    pub set: Vec<usize>,
    pub size: usize,
    pub optimal: bool,
    pub method: DominationMethod,
}

impl From<DominatingSetResult> for DominationSummary {
    fn from(r: DominatingSetResult) -> Self {
        Self {
            set: r.set.to_vec(),
            size: r.size,
            optimal: r.optimal,
            method: r.method,
        }
    }
}

/// The topological modification: its open sets are the unions of blocks,
/// and each of them is also closed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClopenSummary {
    pub blocks: Vec<Vec<usize>>,
    pub open_sets_log2: usize,
    /// `2^blocks` when it fits.
    pub open_sets: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub format_version: u32,
    pub input: String,
    pub n: usize,
    pub edge_count: usize,
    pub components: Vec<Vec<usize>>,
    pub connected: bool,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub topological: TopologicalCheck,
    pub locally_irregular: IrregularityCheck,
    pub clopen: ClopenSummary,
    pub domination: Computed<DominationSummary>,
    pub spanning_tree: Computed<SpanningTreeResult>,
}

/// Analyzes a finite graph. With `skip_exact`, domination falls back to the
/// greedy heuristic and the spanning tree is skipped.
pub fn analyze(g: &Graph, input: &str, skip_exact: bool) -> AnalysisReport {
    let components: Vec<Vec<usize>> = connected_components(g).iter().map(VertexSet::to_vec).collect();
    let top = topological_modification(g);
    let domination = if skip_exact {
        Computed::Ok(greedy_dominating_set(g).into())
    } else {
        Computed::from_result(min_dominating_set(g).map(Into::into))
    };
    let spanning_tree = if skip_exact {
        Computed::Skipped
    } else {
        Computed::from_result(min_internal_spanning_tree(g))
    };
    AnalysisReport {
        format_version: FORMAT_VERSION,
        input: input.to_string(),
        n: g.n(),
        edge_count: g.edge_count(),
        connected: components.len() == 1,
        components,
        bipartition: bipartition(g).map(|(a, b)| (a.to_vec(), b.to_vec())),
        topological: is_convergence_topological(g),
        locally_irregular: is_locally_irregular(g),
        clopen: ClopenSummary {
            blocks: top.blocks().iter().map(VertexSet::to_vec).collect(),
            open_sets_log2: top.open_count_log2(),
            open_sets: top.open_count().and_then(|c| u64::try_from(c).ok()),
        },
        domination,
        spanning_tree,
    }
}

impl AnalysisReport {
    /// Re-checks every witness in the report against `g`.
    pub fn revalidate(&self, g: &Graph) -> std::result::Result<(), String> {
        let set = |v: &[usize]| VertexSet::from_members(g.n(), v.iter().copied());
        if self.n != g.n() || self.edge_count != g.edge_count() {
            return Err("graph size differs".into());
        }
        let mut covered = VertexSet::empty(g.n());
        for c in &self.components {
            let s = set(c);
            if !covered.is_disjoint(&s) || g.neighborhood_of_set(&s).map_err(|e| e.to_string())? != s {
                return Err(format!("component {c:?} is not a union of components"));
            }
            covered.union_with(&s);
        }
        if covered.len() != g.n() {
            return Err("components do not cover the graph".into());
        }
        if let Some((a, b)) = &self.bipartition {
            if !is_convergence_bipartition(g, &set(a), &set(b)).map_err(|e| e.to_string())? {
                return Err("bipartition is not valid".into());
            }
        }
        if let Some((x, y, z)) = self.topological.witness {
            if !(g.has_edge(x, y) && g.has_edge(y, z) && x != z && !g.has_edge(x, z)) {
                return Err(format!("transitivity witness {x},{y},{z} does not hold"));
            }
        }
        if let Some((u, v)) = self.locally_irregular.witness {
            if !(g.has_edge(u, v) && g.degree(u) == g.degree(v)) {
                return Err(format!("irregularity witness {u},{v} does not hold"));
            }
        }
        if let Some(d) = self.domination.ok() {
            if !is_dominating(g, &set(&d.set)) || d.size != d.set.len() {
                return Err("dominating set does not dominate".into());
            }
        }
        if let Some(t) = self.spanning_tree.ok() {
            if !t.is_spanning_tree_of(g) {
                return Err("spanning tree is not a spanning tree".into());
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationStats {
    pub radius: usize,
    pub vertices: usize,
    pub edges: usize,
    pub max_distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayPairCheck {
    pub first: String,
    pub second: String,
    pub mode: CutMode,
    pub k: usize,
    pub verdict: Computed<TriVerdict>,
}

/// Internal vertices of the window trees at two radii.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadiusComparison {
    pub radii: (usize, usize),
    pub internal_counts: (usize, usize),
    pub identical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub format_version: u32,
    pub input: String,
    pub family: Family,
    pub locally_finite: bool,
    /// The realization is one reading of an ambiguous drawing.
    pub stand_in: bool,
    pub radius: usize,
    pub compactness: TriVerdict,
    pub dominating_set_size: Option<usize>,
    pub truncation: Computed<TruncationStats>,
    pub edge_end_bound: Computed<EdgeEndReport>,
    pub rayless_tree: Computed<RaylessTree>,
    pub radius_comparison: Computed<RadiusComparison>,
    pub ray_pairs: Vec<RayPairCheck>,
}

/// Level of the disjoint-path test reported for each pair of named rays.
pub const RAY_PAIR_LEVEL: usize = 2;

pub fn family_report(family: Family, radius: usize) -> FamilyReport {
    let og = family.oracle();
    let compactness = is_compact(family, radius);
    let compact = family.dominating_set().is_some();
    let truncation = Computed::from_result(og.truncate(radius).map(|t| TruncationStats {
        radius,
        vertices: t.n(),
        edges: t.graph.edge_count(),
        max_distance: t.distance.iter().copied().max().unwrap_or(0),
    }));
    let (edge_end_bound, rayless_tree, radius_comparison) = if compact {
        let half = radius / 2;
        let comparison = rayless_spanning_tree(family, half).and_then(|small| {
            let large = rayless_spanning_tree(family, radius)?;
            Ok(RadiusComparison {
                radii: (half, radius),
                internal_counts: (small.tree.internal_count(), large.tree.internal_count()),
                identical: small.tree.internal == large.tree.internal,
            })
        });
        (
            Computed::from_result(edge_end_bound_check(family, radius)),
            Computed::from_result(rayless_spanning_tree(family, radius)),
            Computed::from_result(comparison),
        )
    } else {
        (Computed::Skipped, Computed::Skipped, Computed::Skipped)
    };
    let rays = family.rays();
    let mut ray_pairs = Vec::new();
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            for mode in [CutMode::Vertex, CutMode::Edge] {
                ray_pairs.push(RayPairCheck {
                    first: rays[i].name.clone(),
                    second: rays[j].name.clone(),
                    mode,
                    k: RAY_PAIR_LEVEL,
                    verdict: Computed::from_result(rays_equivalent(&og, &rays[i], &rays[j], mode, RAY_PAIR_LEVEL, radius)),
                });
            }
        }
    }
    FamilyReport {
        format_version: FORMAT_VERSION,
        input: family.to_string(),
        family,
        locally_finite: family.locally_finite(),
        stand_in: family.is_stand_in(),
        radius,
        compactness,
        dominating_set_size: family.dominating_set().map(|d| d.len()),
        truncation,
        edge_end_bound,
        rayless_tree,
        radius_comparison,
        ray_pairs,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub format_version: u32,
    pub n_max: usize,
    pub seed: u64,
    pub checks: Vec<TheoremCheck>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn new(n_max: usize, seed: u64, checks: Vec<TheoremCheck>) -> Self {
        let passed = checks.iter().filter(|c| c.passed()).count();
        Self {
            format_version: FORMAT_VERSION,
            n_max,
            seed,
            failed: checks.len() - passed,
            passed,
            checks,
        }
    }
}

/// Any report, tagged by `kind` in JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Analysis(AnalysisReport),
    Verification(VerificationReport),
    Family(FamilyReport),
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infinite::Witness;

    #[test]
    fn path_report() {
        let g = Graph::path(3);
        let r = analyze(&g, "p3", false);
        assert!(r.connected);
        assert!(r.bipartition.is_some());
        assert_eq!(r.topological.witness, Some((0, 1, 2)));
        assert_eq!(r.domination.ok().unwrap().set, vec![1]);
        assert_eq!(r.spanning_tree.ok().unwrap().internal, vec![1]);
        assert_eq!(r.clopen.open_sets, Some(2));
        r.revalidate(&g).unwrap();
    }

    #[test]
    fn triangle_report() {
        let r = analyze(&Graph::complete(3), "k3", false);
        assert!(r.topological.topological);
        assert_eq!(r.domination.ok().unwrap().size, 1);
    }

    #[test]
    fn skip_exact() {
        let r = analyze(&Graph::cycle(5), "c5", true);
        assert_eq!(r.spanning_tree, Computed::Skipped);
        assert_eq!(r.domination.ok().unwrap().method, DominationMethod::Greedy);
    }

    #[test]
    fn solver_errors_stay_in_their_field() {
        let r = analyze(&Graph::empty(3), "e3", false);
        assert!(matches!(r.spanning_tree, Computed::Error(_)));
        assert_eq!(r.domination.ok().unwrap().size, 3);
        assert_eq!(r.components.len(), 3);
    }

    #[test]
    fn json_round_trip() {
        let reports = [
            Report::Analysis(analyze(&Graph::star(4), "star", false)),
            Report::Family(family_report(Family::FanRay, 16)),
            Report::Verification(VerificationReport::new(2, 1, crate::verifier::verify_all(2, 1))),
        ];
        for r in reports {
            let back = Report::from_json(&r.to_json()).unwrap();
            assert_eq!(back, r);
            assert!(r.to_json().contains("\"format_version\": 1"));
        }
    }

    #[test]
    fn family_reports() {
        let ray = family_report(Family::Ray, 16);
        assert!(matches!(ray.compactness, TriVerdict::Refuted(Witness::Undominated { .. })));
        assert_eq!(ray.rayless_tree, Computed::Skipped);

        let fan = family_report(Family::FanRay, 16);
        assert_eq!(fan.dominating_set_size, Some(1));
        let bound = fan.edge_end_bound.ok().unwrap();
        assert_eq!((bound.declared_edge_ends, bound.dominating_set_size, bound.holds), (Some(1), 1, true));

        let ladder = family_report(Family::DominatedLadder, 32);
        assert!(ladder.stand_in);
        assert!(ladder.radius_comparison.ok().unwrap().identical);
    }
}
