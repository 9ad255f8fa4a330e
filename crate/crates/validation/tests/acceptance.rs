//! Acceptance suite. Prints one PASS or FAIL line per criterion and exits
//! nonzero if any criterion fails or runs past its time budget.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use graphconv::graph::enumerate_graphs;
use graphconv::infinite::{
    edge_end_bound_check, is_compact, rayless_spanning_tree, rays_equivalent, Certificate, CutMode, Family,
    TriVerdict, Witness,
};
use graphconv::nets::{filter_converges, principal_ultrafilter};
use graphconv::pretopology::adherence;
use graphconv::solvers::{min_dominating_set, min_internal_spanning_tree};
use graphconv::verifier::{verify, verify_all, verify_all_with, Mutant, TheoremCheck, Verdict, HOM_SAMPLES};
use graphconv::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_601;
const SUBSETS_PER_GRAPH: usize = 50;
const RANDOM_DOMINATION_GRAPHS: usize = 1000;
const RANDOM_DOMINATION_SIZES: [usize; 3] = [8, 10, 12];
const RANDOM_SPANNING_GRAPHS: usize = 200;
const SPANNING_MAX_N: usize = 8;
const TOTAL_BUDGET: Duration = Duration::from_secs(300);

type Outcome = Result<String, String>;

fn check_passes(c: &TheoremCheck) -> Outcome {
    match &c.verdict {
        Verdict::Pass => Ok(format!("{} pass, {} instances, n <= {}", c.theorem, c.instances, c.n_bound)),
        Verdict::Counterexample(cx) => Err(format!("{} counterexample: {} {}", c.theorem, cx.message, cx.data)),
    }
}

fn closure_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0u64;
    for n in 0..=6 {
        for g in enumerate_graphs(n).map_err(|e| e.to_string())? {
            let empty = VertexSet::empty(n);
            if !adherence(&g, &empty).map_err(|e| e.to_string())?.is_empty() {
                return Err(format!("c(∅) ≠ ∅ on {:?}", g.edges().collect::<Vec<_>>()));
            }
            for _ in 0..SUBSETS_PER_GRAPH {
                let a = VertexSet::from_mask(n, rng.random_range(0..1u64 << n));
                let b = VertexSet::from_mask(n, rng.random_range(0..1u64 << n));
                let ca = adherence(&g, &a).map_err(|e| e.to_string())?;
                let cb = adherence(&g, &b).map_err(|e| e.to_string())?;
                let cab = adherence(&g, &a.union(&b)).map_err(|e| e.to_string())?;
                if !a.is_subset(&ca) || cab != ca.union(&cb) || ca.to_mask() != common::adherence_mask(&g, a.to_mask()) {
                    return Err(format!(
                        "axiom fails on {:?} with A={:?} B={:?}",
                        g.edges().collect::<Vec<_>>(),
                        a.to_vec(),
                        b.to_vec()
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} subset pairs, zero violations"))
}

fn idempotence() -> Outcome {
    check_passes(&verify("idempotent_iff_transitive", 6, SEED).map_err(|e| e.to_string())?)
}

fn clopen() -> Outcome {
    check_passes(&verify("clopen_structure", 5, SEED).map_err(|e| e.to_string())?)
}

fn hom_continuous() -> Outcome {
    let c = verify("hom_iff_continuous", 4, SEED).map_err(|e| e.to_string())?;
    check_passes(&c).map(|s| format!("{s} (exhaustive n <= 3, {HOM_SAMPLES} sampled at n = 4)"))
}

fn products_and_subspaces() -> Outcome {
    let product = check_passes(&verify("product_convergence", 4, SEED).map_err(|e| e.to_string())?);
    let subspace = check_passes(&verify("subspace_convergence", 4, SEED).map_err(|e| e.to_string())?);
    match (product, subspace) {
        (Ok(a), Ok(b)) => Ok(format!("{a}; {b}")),
        (Err(a), Ok(b)) => Err(format!("{a}; {b}")),
        (Ok(a), Err(b)) => Err(format!("{a}; {b}")),
        (Err(a), Err(b)) => Err(format!("{a}; {b}")),
    }
}

fn ultrafilters() -> Outcome {
    let mut checked = 0u64;
    for n in 1..=6 {
        for g in enumerate_graphs(n).map_err(|e| e.to_string())? {
            for x in 0..n {
                let u = principal_ultrafilter(n, x).map_err(|e| e.to_string())?;
                let mut any = false;
                for v in 0..n {
                    any |= filter_converges(&g, &u, v).map_err(|e| e.to_string())?;
                }
                if !any {
                    return Err(format!("ultrafilter at {x} has no limit on {:?}", g.edges().collect::<Vec<_>>()));
                }
                checked += 1;
            }
        }
    }
    let c = verify("finite_compactness", 6, SEED).map_err(|e| e.to_string())?;
    check_passes(&c).map(|s| format!("{checked} principal ultrafilters converge; {s}"))
}

fn solvers() -> Outcome {
    let mut exhaustive = 0u64;
    for n in 0..=6 {
        for g in enumerate_graphs(n).map_err(|e| e.to_string())? {
            let got = min_dominating_set(&g).map_err(|e| e.to_string())?.size;
            if got != common::brute_domination_number(&g) {
                return Err(format!("domination mismatch on {:?}", g.edges().collect::<Vec<_>>()));
            }
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in RANDOM_DOMINATION_SIZES {
        for _ in 0..RANDOM_DOMINATION_GRAPHS {
            let p = rng.random_range(0.1..0.7);
            let g = common::random_graph(&mut rng, n, p);
            if min_dominating_set(&g).map_err(|e| e.to_string())?.size != common::brute_domination_number(&g) {
                return Err(format!("domination mismatch on {:?}", g.edges().collect::<Vec<_>>()));
            }
        }
    }
    for _ in 0..RANDOM_SPANNING_GRAPHS {
        let n = rng.random_range(1..=SPANNING_MAX_N);
        let g = common::random_connected_graph(&mut rng, n);
        let t = min_internal_spanning_tree(&g).map_err(|e| e.to_string())?;
        if !t.is_spanning_tree_of(&g) || Some(t.internal_count()) != common::brute_min_internal(&g) {
            return Err(format!("spanning tree mismatch on {:?}", g.edges().collect::<Vec<_>>()));
        }
    }
    Ok(format!(
        "{exhaustive} exhaustive + {} random domination, {RANDOM_SPANNING_GRAPHS} spanning trees, zero mismatches",
        RANDOM_DOMINATION_GRAPHS * RANDOM_DOMINATION_SIZES.len()
    ))
}

fn families() -> Outcome {
    let ray = match is_compact(Family::Ray, 64) {
        TriVerdict::Refuted(Witness::Undominated { vertex, .. }) => vertex,
        other => return Err(format!("ray: {other:?}")),
    };
    match is_compact(Family::FanRay, 64) {
        TriVerdict::Verified(Certificate::Dominating { set, .. }) if set.len() == 1 => {}
        other => return Err(format!("fanray: {other:?}")),
    }
    let fan = edge_end_bound_check(Family::FanRay, 64).map_err(|e| e.to_string())?;
    if !(fan.holds && fan.declared_edge_ends == Some(1) && fan.dominating_set_size == 1) {
        return Err(format!("fanray edge-end bound: {fan:?}"));
    }
    match is_compact(Family::DominatedLadder, 64) {
        TriVerdict::Verified(Certificate::Dominating { set, .. }) if set.len() == 2 => {}
        other => return Err(format!("dominatedladder: {other:?}")),
    }
    let small = rayless_spanning_tree(Family::DominatedLadder, 16).map_err(|e| e.to_string())?;
    let large = rayless_spanning_tree(Family::DominatedLadder, 32).map_err(|e| e.to_string())?;
    if small.tree.internal_count() != large.tree.internal_count() {
        return Err(format!(
            "rayless tree internal counts {} and {}",
            small.tree.internal_count(),
            large.tree.internal_count()
        ));
    }
    Ok(format!(
        "ray refuted at vertex {ray}; fanray |D| = 1, 1 <= 1; dominatedladder |D| = 2, internal count {} at radii 16 and 32",
        large.tree.internal_count()
    ))
}

fn ray_pairs() -> Outcome {
    let ladder = Family::Ladder;
    let (a, b) = (ladder.ray("a").unwrap(), ladder.ray("b").unwrap());
    for k in [2, 4, 8] {
        for mode in [CutMode::Vertex, CutMode::Edge] {
            let v = rays_equivalent(&ladder.oracle(), &a, &b, mode, k, 64).map_err(|e| e.to_string())?;
            if !v.is_verified() {
                return Err(format!("ladder {mode:?} k={k}: {v:?}"));
            }
        }
    }
    let hub = Family::HubPair;
    let (a, b) = (hub.ray("a").unwrap(), hub.ray("b").unwrap());
    let v = rays_equivalent(&hub.oracle(), &a, &b, CutMode::Vertex, 2, 64).map_err(|e| e.to_string())?;
    if !matches!(v, TriVerdict::Refuted(Witness::Separator { .. })) {
        return Err(format!("hubpair vertex mode: {v:?}"));
    }
    for k in [2, 4] {
        let v = rays_equivalent(&hub.oracle(), &a, &b, CutMode::Edge, k, 64).map_err(|e| e.to_string())?;
        if !v.is_verified() {
            return Err(format!("hubpair edge k={k}: {v:?}"));
        }
    }
    Ok("ladder verified at k = 2, 4, 8; hubpair vertex refuted by separator, edge verified at k = 2, 4".into())
}

fn mutants() -> Outcome {
    let reference = verify_all(6, SEED);
    let mut caught = Vec::new();
    for m in Mutant::ALL {
        let results = verify_all_with(&m, 6, SEED);
        let hit: Vec<&str> = results
            .iter()
            .zip(&reference)
            .filter(|(r, base)| base.passed() && !r.passed())
            .map(|(r, _)| r.theorem.as_str())
            .collect();
        if hit.is_empty() {
            return Err(format!("mutant {m:?} passes every check"));
        }
        caught.push(format!("{m:?} -> {}", hit.join(",")));
    }
    Ok(caught.join("; "))
}

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, name: "closure axioms", budget: Duration::from_secs(30), run: closure_axioms },
    Criterion { id: 2, name: "idempotence iff transitive", budget: Duration::from_secs(60), run: idempotence },
    Criterion { id: 3, name: "clopen structure", budget: Duration::from_secs(30), run: clopen },
    Criterion { id: 4, name: "homomorphism iff continuous", budget: Duration::from_secs(60), run: hom_continuous },
    Criterion { id: 5, name: "product and subspace neighborhoods", budget: Duration::from_secs(30), run: products_and_subspaces },
    Criterion { id: 6, name: "principal ultrafilters converge", budget: Duration::from_secs(10), run: ultrafilters },
    Criterion { id: 7, name: "solver oracle equivalence", budget: Duration::from_secs(180), run: solvers },
    Criterion { id: 8, name: "infinite-family certificates", budget: Duration::from_secs(10), run: families },
    Criterion { id: 9, name: "figure ray pairs", budget: Duration::from_secs(10), run: ray_pairs },
    Criterion { id: 10, name: "mutation guard", budget: Duration::from_secs(300), run: mutants },
];

fn main() -> ExitCode {
    let suite = Instant::now();
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let timing = format!("{:.2}s / {}s", elapsed.as_secs_f64(), c.budget.as_secs());
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.budget => (true, d),
            Ok(d) => (false, format!("over budget: {d}")),
            Err(d) => (false, d),
        };
        failed += usize::from(!ok);
        println!(
            "{} criterion {:>2} {:<36} [{timing}] {detail}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name
        );
    }
    let total = suite.elapsed();
    let in_budget = total <= TOTAL_BUDGET;
    println!(
        "{} suite total [{:.2}s / {}s]",
        if in_budget { "PASS" } else { "FAIL" },
        total.as_secs_f64(),
        TOTAL_BUDGET.as_secs()
    );
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 && in_budget {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
