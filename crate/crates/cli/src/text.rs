use std::fmt::Write as _;

use graphconv::infinite::{Certificate, Family, Separator, TriVerdict, Witness};
use graphconv::report::{AnalysisReport, Computed, FamilyReport, VerificationReport};
use graphconv::verifier::{Verdict, THEOREMS};

fn list(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn computed<T>(c: &Computed<T>, show: impl Fn(&T) -> String) -> String {
    match c {
        Computed::Ok(v) => show(v),
        Computed::Skipped => "skipped".to_string(),
        Computed::Error(e) => format!("error: {e}"),
    }
}

pub fn verdict(v: &TriVerdict) -> String {
    match v {
        TriVerdict::Verified(Certificate::Dominating { set, .. }) => format!("verified (dominating set {})", list(set)),
        TriVerdict::Verified(Certificate::DisjointPaths { k, depths, flows, .. }) => {
            format!("verified at level {k} (depths {depths:?}, flows {flows:?})")
        }
        TriVerdict::Refuted(Witness::Undominated { vertex, window }) => match window {
            Some(w) => format!("refuted (vertex {vertex} undominated by any set of level <= {w})"),
            None => format!("refuted (vertex {vertex} undominated)"),
        },
        TriVerdict::Refuted(Witness::Separator { separator, k }) => {
            let sep = match separator {
                Separator::Vertices(vs) => format!("vertices {}", list(vs)),
                Separator::Edges(es) => format!("edges {es:?}"),
            };
            format!("refuted (separator of {} {sep}, below {k})", separator.len())
        }
        TriVerdict::UnknownUpTo(r) => format!("unknown up to {r}"),
    }
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input: {}", r.input);
    let _ = writeln!(out, "vertices: {}, edges: {}", r.n, r.edge_count);
    let comps: Vec<String> = r.components.iter().map(|c| list(c)).collect();
    let _ = writeln!(out, "connected: {} ({} components: {})", r.connected, r.components.len(), comps.join(" "));
    match &r.bipartition {
        Some((a, b)) => {
            let _ = writeln!(out, "bipartite: true ({} | {})", list(a), list(b));
        }
        None => {
            let _ = writeln!(out, "bipartite: false");
        }
    }
    match r.topological.witness {
        Some((x, y, z)) => {
            let _ = writeln!(out, "transitive/topological: false (witness {x},{y},{z})");
        }
        None => {
            let _ = writeln!(out, "transitive/topological: true");
        }
    }
    match r.locally_irregular.witness {
        Some((u, v)) => {
            let _ = writeln!(out, "locally irregular: false (edge {u}-{v})");
        }
        None => {
            let _ = writeln!(out, "locally irregular: true");
        }
    }
    let opens = match r.clopen.open_sets {
        Some(c) => c.to_string(),
        None => format!("2^{}", r.clopen.open_sets_log2),
    };
    let _ = writeln!(out, "clopen sets: {opens} (unions of {} blocks)", r.clopen.blocks.len());
    let dom = computed(&r.domination, |d| {
        let kind = if d.optimal { "exact" } else { "upper bound" };
        format!("{} {} ({kind})", d.size, list(&d.set))
    });
    let _ = writeln!(out, "domination number: {dom}");
    let tree = computed(&r.spanning_tree, |t| {
        format!("{} internal {} edges {:?}", t.internal.len(), list(&t.internal), t.edges)
    });
    let _ = writeln!(out, "min internal spanning tree: {tree}");
    out
}

pub fn verification(r: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &r.checks {
        let status = match &c.verdict {
            Verdict::Pass => "pass".to_string(),
            Verdict::Counterexample(cx) => format!("COUNTEREXAMPLE {}: {}", cx.message, cx.data),
        };
        let _ = writeln!(
            out,
            "{:<36} n<={} instances={:<8} {:>6}ms  {status}",
            c.theorem, c.n_bound, c.instances, c.elapsed_ms
        );
    }
    let _ = writeln!(out, "{} passed, {} failed (seed {})", r.passed, r.failed, r.seed);
    out
}

pub fn family(r: &FamilyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family: {}{}", r.input, if r.stand_in { " (stand-in realization)" } else { "" });
    let _ = writeln!(out, "locally finite: {}", r.locally_finite);
    let _ = writeln!(out, "compact: {}", verdict(&r.compactness));
    if let Some(d) = r.dominating_set_size {
        let _ = writeln!(out, "|D|: {d}");
    }
    let trunc = computed(&r.truncation, |t| {
        format!("{} vertices, {} edges, depth {}", t.vertices, t.edges, t.max_distance)
    });
    let _ = writeln!(out, "truncation at radius {}: {trunc}", r.radius);
    let bound = computed(&r.edge_end_bound, |b| {
        let declared = b.declared_edge_ends.map_or("?".to_string(), |d| d.to_string());
        format!(
            "{declared} <= {} {} (observed classes {} of {} rays)",
            b.dominating_set_size,
            if b.holds { "holds" } else { "FAILS" },
            b.observed_classes,
            b.rays_examined
        )
    });
    let _ = writeln!(out, "edge-end bound: {bound}");
    let tree = computed(&r.rayless_tree, |t| {
        format!(
            "{} internal {} over {} window vertices, stable at radius {}: {}",
            t.tree.internal.len(),
            list(&t.tree.internal),
            t.window_vertices,
            t.compared_radius,
            t.stable
        )
    });
    let _ = writeln!(out, "rayless spanning tree: {tree}");
    let cmp = computed(&r.radius_comparison, |c| {
        format!(
            "radii {} and {}: internal counts {} and {}, identical: {}",
            c.radii.0, c.radii.1, c.internal_counts.0, c.internal_counts.1, c.identical
        )
    });
    let _ = writeln!(out, "radius comparison: {cmp}");
    for p in &r.ray_pairs {
        let mode = format!("{:?}", p.mode).to_lowercase();
        let _ = writeln!(
            out,
            "rays {} ~ {} ({mode}, k={}): {}",
            p.first,
            p.second,
            p.k,
            computed(&p.verdict, verdict)
        );
    }
    out
}

pub fn catalog() -> String {
    let mut out = String::from("theorems:\n");
    for t in THEOREMS {
        let _ = writeln!(out, "  {t}");
    }
    out.push_str("families:\n");
    for f in Family::catalog() {
        let _ = writeln!(out, "  {f}");
    }
    out
}
