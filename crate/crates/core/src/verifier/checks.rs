//! The catalog checks. Each one walks its instances in a fixed order (vertex
//! counts ascending, graphs by edge mask, then subsets, functions or pairs by
//! mask) and stops at the first failure, so the reported counterexample is
//! the least one.
//!
//! Library-side quantities go through the [`Kernel`]; the other side of each
//! biconditional is computed here from `has_edge` alone. Net-quantified
//! statements are checked through their finite reduction and through nets:
//! the canonical net enumerating `N[v]` plus seeded random nets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{Counterexample, Kernel};
use crate::graph::{
    enumerate_graphs, find_path, induced_subgraph, is_homomorphism, is_spanning_subgraph, tensor_product, Graph,
    VertexFunction, VertexSet,
};
use crate::nets::{axiom_suite, filter_converges, is_convergence_system, is_ultrafilter, principal_ultrafilter, AxiomConfig, FilterBase, Net, NetSampler};
use crate::pretopology::{compare_convergence, is_closed, is_convergence_topological, topological_modification};
use crate::solvers::{bipartition, continuous_two_colorings, is_convergence_bipartition, is_locally_irregular};

pub const NETS_PER_INSTANCE: usize = 200;
pub const HOM_SAMPLES: usize = 10_000;
/// Largest vertex count at which graph-quantified checks also sample nets.
pub const NET_SAMPLE_MAX_N: usize = 4;
/// Largest factor size at which pair-quantified checks also sample nets.
pub const PAIR_NET_SAMPLE_MAX_N: usize = 3;
const MAX_NET_BODY: usize = 5;

pub(super) type Outcome = Option<Counterexample>;

pub(super) struct Ctx<'a> {
    pub kernel: &'a dyn Kernel,
    pub n: usize,
    pub seed: u64,
    pub instances: u64,
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

impl Ctx<'_> {
    /// Seed for one instance, independent of evaluation order.
    fn instance_seed(&self, salt: u64) -> u64 {
        splitmix(self.seed ^ splitmix(salt ^ splitmix(self.instances)))
    }

    fn sampler(&self, salt: u64) -> NetSampler {
        NetSampler::new(self.instance_seed(salt), MAX_NET_BODY)
    }

    fn closed(&self, g: &Graph) -> Vec<VertexSet> {
        (0..g.n()).map(|v| self.kernel.closed_neighborhood(g, v)).collect()
    }

    /// `φ → v` with neighborhoods from the kernel.
    fn converges(&self, g: &Graph, net: &Net, v: usize) -> bool {
        let nv = self.kernel.closed_neighborhood(g, v);
        (0..net.domain().size()).any(|a| net.tail(a).is_subset(&nv))
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges().collect::<Vec<_>>() })
}

fn cx(message: impl Into<String>, data: Value) -> Outcome {
    Some(Counterexample {
        message: message.into(),
        data,
    })
}

fn graphs_upto(n: usize) -> impl Iterator<Item = Graph> {
    (0..=n).flat_map(|k| enumerate_graphs(k).expect("within the enumeration bound"))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid pairs")
}

fn raw_closed_mask(g: &Graph, v: usize) -> u64 {
    (0..g.n())
        .filter(|&w| w == v || g.has_edge(v, w))
        .fold(0, |m, w| m | 1 << w)
}

/// Component labels by repeated relabeling over `has_edge`.
fn raw_labels(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut label: Vec<usize> = (0..n).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for u in 0..n {
            for v in 0..n {
                if g.has_edge(u, v) && label[v] < label[u] {
                    label[u] = label[v];
                    changed = true;
                }
            }
        }
    }
    label
}

fn raw_transitivity_witness(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if x != z && g.has_edge(x, y) && g.has_edge(y, z) && !g.has_edge(x, z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

fn raw_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if g.has_edge(x, y) {
                    match color[y] {
                        None => {
                            color[y] = Some(!color[x].unwrap());
                            stack.push(y);
                        }
                        Some(c) if Some(c) == color[x] => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    true
}

fn raw_degree(g: &Graph, v: usize) -> usize {
    (0..g.n()).filter(|&w| g.has_edge(v, w)).count()
}

pub(super) fn idempotent_iff_transitive(ctx: &mut Ctx) -> Outcome {
    for g in graphs_upto(ctx.n) {
        ctx.instances += 1;
        let n = g.n();
        // adherence distributes over unions, so singletons decide idempotence
        let not_idempotent_at = (0..n).find(|&v| {
            let once = ctx.kernel.adherence(&g, &VertexSet::singleton(n, v));
            ctx.kernel.adherence(&g, &once) != once
        });
        let triple = raw_transitivity_witness(&g);
        let topological = is_convergence_topological(&g).topological;
        let idempotent = not_idempotent_at.is_none();
        if idempotent != triple.is_none() || topological != triple.is_none() {
            return cx(
                "adherence idempotence disagrees with transitivity",
                json!({
                    "graph": graph_json(&g),
                    "idempotent": idempotent,
                    "not_idempotent_at": not_idempotent_at,
                    "transitive": triple.is_none(),
                    "transitivity_witness": triple,
                    "library_topological": topological,
                }),
            );
        }
    }
    None
}

pub(super) fn clopen_structure(ctx: &mut Ctx) -> Outcome {
    for g in graphs_upto(ctx.n) {
        let n = g.n();
        let closed = ctx.closed(&g);
        let labels = raw_labels(&g);
        let top = topological_modification(&g);
        for mask in 0..1u64 << n {
            ctx.instances += 1;
            let u = VertexSet::from_mask(n, mask);
            let by_neighborhoods = u.iter().all(|v| closed[v].is_subset(&u));
            let by_adherence = ctx.kernel.adherence(&g, &u) == u;
            let by_components = u.iter().all(|v| (0..n).all(|w| labels[w] != labels[v] || u.contains(w)));
            let library_open = top.is_open(&u).expect("same universe");
            let library_closed = is_closed(&g, &u).expect("same universe");
            let all = [by_neighborhoods, by_adherence, by_components, library_open, library_closed];
            if all.iter().any(|&b| b != all[0]) {
                return cx(
                    "open, closed and union-of-components disagree",
                    json!({
                        "graph": graph_json(&g),
                        "subset": u.to_vec(),
                        "open_by_neighborhoods": by_neighborhoods,
                        "closed_by_adherence": by_adherence,
                        "union_of_components": by_components,
                        "library_open": library_open,
                        "library_closed": library_closed,
                    }),
                );
            }
        }
    }
    None
}

pub(super) fn connected_iff_convergence_connected(ctx: &mut Ctx) -> Outcome {
    for g in graphs_upto(ctx.n).filter(|g| g.n() >= 1) {
        ctx.instances += 1;
        let n = g.n();
        let closed: Vec<u64> = ctx.closed(&g).iter().map(VertexSet::to_mask).collect();
        // into the discrete two-point space, N[v] must land on f(v) alone
        let count = (0..1u64 << n)
            .filter(|&m| (0..n).all(|v| closed[v] & m == if m >> v & 1 == 1 { closed[v] } else { 0 }))
            .count() as u64;
        let labels = raw_labels(&g);
        let connected = labels.iter().all(|&l| l == labels[0]);
        let library = continuous_two_colorings(&g).expect("within bound").count;
        if (count == 2) != connected || library != count {
            return cx(
                "continuous two-colorings disagree with connectedness",
                json!({
                    "graph": graph_json(&g),
                    "continuous_colorings": count,
                    "library_count": library,
                    "connected": connected,
                }),
            );
        }
    }
    None
}

fn functions(domain: usize, codomain: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if domain == 0 { 1 } else { codomain.pow(domain as u32) };
    (0..total).map(move |mut code| {
        let mut values = vec![0; domain];
        for slot in values.iter_mut().rev() {
            *slot = code % codomain.max(1);
            code /= codomain.max(1);
        }
        values
    })
}

fn hom_instance(ctx: &Ctx, g: &Graph, h: &Graph, f: &VertexFunction, sample_nets: bool) -> Outcome {
    let ng = g.n();
    let homomorphism = is_homomorphism(f, g, h).expect("dimensions match");
    let raw_homomorphism = g.edges().all(|(u, v)| h.has_edge(f.apply(u), f.apply(v)));
    let closed_g = ctx.closed(g);
    let closed_h = ctx.closed(h);
    let by_neighborhoods = (0..ng).all(|v| closed_g[v].iter().all(|w| closed_h[f.apply(v)].contains(f.apply(w))));
    // the net enumerating N[v] converges to v; its image must converge to f(v)
    let mut by_nets = (0..ng).all(|v| {
        let nu = Net::enumerating(&closed_g[v]).expect("N[v] contains v");
        let image = nu.map(h.n(), |x| f.apply(x)).expect("codomain in range");
        ctx.converges(h, &image, f.apply(v))
    });
    if sample_nets && by_nets && ng > 0 {
        let mut sampler = ctx.sampler(4);
        for _ in 0..NETS_PER_INSTANCE {
            let v = sampler.rng().random_range(0..ng);
            let d = sampler.directed_set();
            let phi = sampler.net_eventually_in(d, ng, &closed_g[v]);
            if ctx.converges(g, &phi, v) {
                let image = phi.map(h.n(), |x| f.apply(x)).expect("codomain in range");
                if !ctx.converges(h, &image, f.apply(v)) {
                    by_nets = false;
                    break;
                }
            }
        }
    }
    if homomorphism != by_neighborhoods || raw_homomorphism != homomorphism || by_nets != by_neighborhoods {
        return cx(
            "homomorphism and continuity disagree",
            json!({
                "g": graph_json(g),
                "h": graph_json(h),
                "f": f.values(),
                "homomorphism": homomorphism,
                "raw_homomorphism": raw_homomorphism,
                "continuous_by_neighborhoods": by_neighborhoods,
                "continuous_by_nets": by_nets,
            }),
        );
    }
    None
}

pub(super) fn hom_iff_continuous(ctx: &mut Ctx) -> Outcome {
    let exhaustive = ctx.n.min(3);
    for ng in 0..=exhaustive {
        for nh in 0..=exhaustive {
            if ng > 0 && nh == 0 {
                continue;
            }
            for g in enumerate_graphs(ng).expect("small") {
                for h in enumerate_graphs(nh).expect("small") {
                    for values in functions(ng, nh) {
                        ctx.instances += 1;
                        let f = VertexFunction::new(nh, values).expect("values in range");
                        if let Some(c) = hom_instance(ctx, &g, &h, &f, true) {
                            return Some(c);
                        }
                    }
                }
            }
        }
    }
    if ctx.n >= 4 {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.instance_seed(44));
        for _ in 0..HOM_SAMPLES {
            ctx.instances += 1;
            let g = random_graph(&mut rng, 4);
            let h = random_graph(&mut rng, 4);
            let values = (0..4).map(|_| rng.random_range(0..4)).collect();
            let f = VertexFunction::new(4, values).expect("values in range");
            if let Some(c) = hom_instance(ctx, &g, &h, &f, false) {
                return Some(c);
            }
        }
    }
    None
}

pub(super) fn product_convergence(ctx: &mut Ctx) -> Outcome {
    for ng in 0..=ctx.n {
        for nh in 0..=ctx.n {
            for g in enumerate_graphs(ng).expect("small") {
                for h in enumerate_graphs(nh).expect("small") {
                    ctx.instances += 1;
                    let p = tensor_product(&g, &h).expect("small product");
                    let closed_g = ctx.closed(&g);
                    let closed_h = ctx.closed(&h);
                    let closed_p = ctx.closed(&p);
                    let boxes: Vec<VertexSet> = (0..ng * nh)
                        .map(|i| {
                            let (u, v) = (i / nh, i % nh);
                            VertexSet::from_members(
                                ng * nh,
                                closed_g[u].iter().flat_map(|a| closed_h[v].iter().map(move |b| a * nh + b)),
                            )
                        })
                        .collect();
                    let pairs = |s: &VertexSet| s.iter().map(|i| (i / nh, i % nh)).collect::<Vec<_>>();
                    if let Some(i) = (0..ng * nh).find(|&i| closed_p[i] != boxes[i]) {
                        return cx(
                            "product neighborhood differs from the product of neighborhoods",
                            json!({
                                "g": graph_json(&g),
                                "h": graph_json(&h),
                                "vertex": [i / nh, i % nh],
                                "product_neighborhood": pairs(&closed_p[i]),
                                "neighborhood_product": pairs(&boxes[i]),
                            }),
                        );
                    }
                    if ng.max(nh) > PAIR_NET_SAMPLE_MAX_N || ng * nh == 0 {
                        continue;
                    }
                    let mut sampler = ctx.sampler(5);
                    for _ in 0..NETS_PER_INSTANCE {
                        let target = sampler.rng().random_range(0..ng * nh);
                        let phi = if sampler.rng().random_bool(0.5) {
                            let d = sampler.directed_set();
                            sampler.net_eventually_in(d, ng * nh, &boxes[target])
                        } else {
                            sampler.net(ng * nh)
                        };
                        let (u, v) = (target / nh, target % nh);
                        let left = phi.map(ng, |i| i / nh).expect("projection");
                        let right = phi.map(nh, |i| i % nh).expect("projection");
                        let in_product = ctx.converges(&p, &phi, target);
                        let by_projections = ctx.converges(&g, &left, u) && ctx.converges(&h, &right, v);
                        if in_product != by_projections {
                            return cx(
                                "a net converges in the product graph and the product space differently",
                                json!({
                                    "g": graph_json(&g),
                                    "h": graph_json(&h),
                                    "vertex": [u, v],
                                    "net_values": phi.values(),
                                    "converges_in_product_graph": in_product,
                                    "projections_converge": by_projections,
                                }),
                            );
                        }
                    }
                }
            }
        }
    }
    None
}

pub(super) fn subspace_convergence(ctx: &mut Ctx) -> Outcome {
    for g in graphs_upto(ctx.n) {
        let n = g.n();
        let closed = ctx.closed(&g);
        for mask in 1..1u64 << n {
            ctx.instances += 1;
            let a = VertexSet::from_mask(n, mask);
            let (sub, map) = induced_subgraph(&g, &a).expect("same universe");
            let members = a.to_vec();
            for &v in &members {
                let local = map[v].expect("member");
                let inside = VertexSet::from_members(n, ctx.kernel.closed_neighborhood(&sub, local).iter().map(|i| members[i]));
                let restricted = closed[v].intersection(&a);
                if inside != restricted {
                    return cx(
                        "induced neighborhood differs from the restricted neighborhood",
                        json!({
                            "graph": graph_json(&g),
                            "subset": members,
                            "vertex": v,
                            "induced_neighborhood": inside.to_vec(),
                            "restricted_neighborhood": restricted.to_vec(),
                        }),
                    );
                }
            }
            if n > NET_SAMPLE_MAX_N {
                continue;
            }
            let mut sampler = ctx.sampler(6);
            let k = members.len();
            for _ in 0..NETS_PER_INSTANCE {
                let target = sampler.rng().random_range(0..k);
                let psi = sampler.net(k);
                let phi = psi.map(n, |i| members[i]).expect("members in range");
                let as_graph = ctx.converges(&sub, &psi, target);
                let as_subspace = ctx.converges(&g, &phi, members[target]);
                if as_graph != as_subspace {
                    return cx(
                        "a net converges in the induced subgraph and the subspace differently",
                        json!({
                            "graph": graph_json(&g),
                            "subset": members,
                            "vertex": members[target],
                            "net_values": phi.values(),
                            "converges_in_induced_subgraph": as_graph,
                            "converges_in_subspace": as_subspace,
                        }),
                    );
                }
            }
        }
    }
    None
}

pub(super) fn order_iff_spanning(ctx: &mut Ctx) -> Outcome {
    for n in 0..=ctx.n {
        for g in enumerate_graphs(n).expect("small") {
            let closed_g = ctx.closed(&g);
            for h in enumerate_graphs(n).expect("small") {
                ctx.instances += 1;
                let closed_h = ctx.closed(&h);
                let finer = (0..n).all(|v| closed_h[v].is_subset(&closed_g[v]));
                let raw_spanning = h.edges().all(|(u, v)| g.has_edge(u, v));
                let library_order = compare_convergence(&h, &g).expect("same size").is_finer_or_equal();
                let library_spanning = is_spanning_subgraph(&h, &g);
                // the net enumerating N_H[v] is the coarsest one converging to v in H
                let mut by_nets = (0..n).all(|v| {
                    let nu = Net::enumerating(&closed_h[v]).expect("contains v");
                    ctx.converges(&g, &nu, v)
                });
                if by_nets && n > 0 && n <= PAIR_NET_SAMPLE_MAX_N {
                    let mut sampler = ctx.sampler(7);
                    for _ in 0..NETS_PER_INSTANCE {
                        let v = sampler.rng().random_range(0..n);
                        let d = sampler.directed_set();
                        let phi = sampler.net_eventually_in(d, n, &closed_h[v]);
                        if ctx.converges(&h, &phi, v) && !ctx.converges(&g, &phi, v) {
                            by_nets = false;
                            break;
                        }
                    }
                }
                let all = [finer, raw_spanning, library_order, library_spanning, by_nets];
                if all.iter().any(|&b| b != all[0]) {
                    return cx(
                        "convergence order disagrees with the spanning subgraph relation",
                        json!({
                            "g": graph_json(&g),
                            "h": graph_json(&h),
                            "finer_by_neighborhoods": finer,
                            "spanning_subgraph": raw_spanning,
                            "library_order": library_order,
                            "library_spanning": library_spanning,
                            "finer_by_nets": by_nets,
                        }),
                    );
                }
            }
        }
    }
    None
}

pub(super) fn complete_iff_all_limits(ctx: &mut Ctx) -> Outcome {
    for g in graphs_upto(ctx.n) {
        ctx.instances += 1;
        let n = g.n();
        let full = VertexSet::full(n);
        let closed = ctx.closed(&g);
        let by_neighborhoods = closed.iter().all(|c| *c == full);
        let complete = (0..n).all(|u| (0..n).all(|v| u == v || g.has_edge(u, v)));
        // constant nets decide it; random nets can only confirm
        let constant_nets = (0..n).all(|u| {
            let c = Net::sequence(n, vec![u]).expect("in range");
            (0..n).all(|v| ctx.converges(&g, &c, v))
        });
        let mut by_nets = constant_nets;
        if by_nets && n > 0 && n <= NET_SAMPLE_MAX_N {
            let mut sampler = ctx.sampler(8);
            for _ in 0..NETS_PER_INSTANCE {
                let phi = sampler.net(n);
                if !(0..n).all(|v| ctx.converges(&g, &phi, v)) {
                    by_nets = false;
                    break;
                }
            }
        }
        if by_neighborhoods != complete || by_nets != complete {
            return cx(
                "completeness disagrees with every net converging everywhere",
                json!({
                    "graph": graph_json(&g),
                    "complete": complete,
                    "all_neighborhoods_full": by_neighborhoods,
                    "all_nets_converge_everywhere": by_nets,
                }),
            );
        }
    }
    None
}

pub(super) fn bipartite_characterization(ctx: &mut Ctx) -> Outcome {
    for g in graphs_upto(ctx.n) {
        ctx.instances += 1;
        let n = g.n();
        let closed: Vec<u64> = ctx.closed(&g).iter().map(VertexSet::to_mask).collect();
        let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        // B ∪ {x} ∈ φ↑ for every φ → x in A reduces to N[x] ⊆ B ∪ {x}
        let split = (0..1u64 << n).find(|&a| {
            let b = full & !a;
            (0..n).all(|x| {
                let other = if a >> x & 1 == 1 { b } else { a };
                closed[x] & !(other | 1 << x) == 0
            })
        });
        let raw = raw_bipartite(&g);
        let library = bipartition(&g);
        let library_ok = match &library {
            Some((a, b)) => is_convergence_bipartition(&g, a, b).expect("same universe"),
            None => false,
        };
        if split.is_some() != raw || library.is_some() != raw || library.is_some() != library_ok {
            return cx(
                "convergence bipartition disagrees with bipartiteness",
                json!({
                    "graph": graph_json(&g),
                    "bipartite": raw,
                    "convergence_split": split.map(|a| VertexSet::from_mask(n, a).to_vec()),
                    "library_parts": library.map(|(a, b)| (a.to_vec(), b.to_vec())),
                    "library_parts_satisfy_condition": library_ok,
                }),
            );
        }
    }
    None
}

pub(super) fn locally_irregular_characterization(ctx: &mut Ctx) -> Outcome {
    for g in graphs_upto(ctx.n) {
        ctx.instances += 1;
        let n = g.n();
        let closed = ctx.closed(&g);
        let deg: Vec<usize> = closed.iter().map(|c| c.len() - 1).collect();
        let by_neighborhoods = (0..n).all(|v| closed[v].iter().all(|w| w == v || deg[w] != deg[v]));
        let raw = g.edges().all(|(u, v)| raw_degree(&g, u) != raw_degree(&g, v));
        let library = is_locally_irregular(&g).locally_irregular;
        // eventually every value other than the limit has a different degree
        let eventually_irregular = |phi: &Net, v: usize| {
            (0..phi.domain().size()).any(|a| phi.tail(a).iter().all(|x| x == v || deg[x] != deg[v]))
        };
        let mut by_nets = (0..n).all(|v| {
            closed[v].iter().all(|x| {
                let c = Net::sequence(n, vec![x]).expect("in range");
                !ctx.converges(&g, &c, v) || eventually_irregular(&c, v)
            })
        });
        if by_nets && n > 0 && n <= NET_SAMPLE_MAX_N {
            let mut sampler = ctx.sampler(10);
            for _ in 0..NETS_PER_INSTANCE {
                let v = sampler.rng().random_range(0..n);
                let d = sampler.directed_set();
                let phi = sampler.net_eventually_in(d, n, &closed[v]);
                if ctx.converges(&g, &phi, v) && !eventually_irregular(&phi, v) {
                    by_nets = false;
                    break;
                }
            }
        }
        if by_neighborhoods != raw || library != raw || by_nets != raw {
            return cx(
                "local irregularity disagrees with its net form",
                json!({
                    "graph": graph_json(&g),
                    "locally_irregular": raw,
                    "by_neighborhoods": by_neighborhoods,
                    "library": library,
                    "by_nets": by_nets,
                }),
            );
        }
    }
    None
}

pub(super) fn limit_space_axioms(ctx: &mut Ctx) -> Outcome {
    for g in graphs_upto(ctx.n) {
        ctx.instances += 1;
        let config = AxiomConfig {
            seed: ctx.instance_seed(11),
            samples: NETS_PER_INSTANCE,
            max_domain: MAX_NET_BODY,
        };
        let report = axiom_suite(&g, config).expect("nets over the graph");
        if let Some(v) = report.violation {
            return cx(
                "a limit-space axiom fails",
                json!({ "graph": graph_json(&g), "config": config, "violation": v }),
            );
        }
    }
    None
}

pub(super) fn convergence_system_reduction(ctx: &mut Ctx) -> Outcome {
    for g in graphs_upto(ctx.n) {
        let n = g.n();
        let closed = ctx.closed(&g);
        let mut families: Vec<Vec<VertexSet>> = vec![
            vec![VertexSet::full(n)],
            closed.clone(),
            topological_modification(&g).blocks().to_vec(),
            (0..n).map(|v| VertexSet::singleton(n, v)).collect(),
            vec![],
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.instance_seed(12));
        for _ in 0..6 {
            let size = rng.random_range(1..=4);
            let fam = (0..size)
                .map(|_| VertexSet::from_mask(n, if n == 0 { 0 } else { rng.random_range(0..1u64 << n) }))
                .collect();
            families.push(fam);
        }
        for family in families {
            ctx.instances += 1;
            let by_neighborhoods = (0..n).all(|v| family.iter().any(|c| closed[v].is_subset(c)));
            let library = is_convergence_system(&g, &family).expect("same universe").is_system;
            let carries = |phi: &Net| family.iter().any(|c| (0..phi.domain().size()).any(|a| phi.tail(a).is_subset(c)));
            let mut by_nets = (0..n).all(|v| carries(&Net::enumerating(&closed[v]).expect("contains v")));
            if by_nets && n > 0 && n <= NET_SAMPLE_MAX_N {
                let mut sampler = ctx.sampler(13);
                for _ in 0..NETS_PER_INSTANCE {
                    let v = sampler.rng().random_range(0..n);
                    let d = sampler.directed_set();
                    let phi = sampler.net_eventually_in(d, n, &closed[v]);
                    if ctx.converges(&g, &phi, v) && !carries(&phi) {
                        by_nets = false;
                        break;
                    }
                }
            }
            if by_neighborhoods != library || by_nets != library {
                return cx(
                    "convergence system reduction disagrees with nets",
                    json!({
                        "graph": graph_json(&g),
                        "family": family.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
                        "by_neighborhoods": by_neighborhoods,
                        "library": library,
                        "by_nets": by_nets,
                    }),
                );
            }
        }
    }
    None
}

pub(super) fn finite_compactness(ctx: &mut Ctx) -> Outcome {
    for g in graphs_upto(ctx.n) {
        ctx.instances += 1;
        let n = g.n();
        let closed = ctx.closed(&g);
        for x in 0..n {
            let ultra: FilterBase = principal_ultrafilter(n, x).expect("in range");
            let limit = (0..n).find(|&v| ultra.contains(&closed[v]));
            let library = filter_converges(&g, &ultra, x).expect("in range");
            if !is_ultrafilter(&ultra) || limit.is_none() || !library {
                return cx(
                    "a principal ultrafilter has no limit",
                    json!({ "graph": graph_json(&g), "point": x, "kernel_limit": limit, "library_converges_to_point": library }),
                );
            }
        }
        let raw: Vec<u64> = (0..n).map(|v| raw_closed_mask(&g, v)).collect();
        let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        let covers = |m: u64| (0..n).filter(|&v| m >> v & 1 == 1).fold(0, |acc, v| acc | raw[v]) == full;
        let gamma = (0..1u64 << n).filter(|&m| covers(m)).map(u64::count_ones).min().unwrap_or(0) as usize;
        let d = ctx.kernel.min_dominating_set(&g);
        if !covers(d.to_mask()) || d.len() != gamma {
            return cx(
                "the exact dominating set is wrong",
                json!({
                    "graph": graph_json(&g),
                    "dominating_set": d.to_vec(),
                    "dominates": covers(d.to_mask()),
                    "domination_number": gamma,
                }),
            );
        }
    }
    None
}

pub(super) fn path_connected(ctx: &mut Ctx) -> Outcome {
    for g in graphs_upto(ctx.n) {
        ctx.instances += 1;
        let n = g.n();
        let closed = ctx.closed(&g);
        let labels = raw_labels(&g);
        for u in 0..n {
            for v in 0..n {
                let path = find_path(&g, u, v).expect("in range");
                let ok = match &path {
                    None => labels[u] != labels[v],
                    // at each breakpoint the value is the left piece, and the
                    // values just right of it must lie in its neighborhood
                    Some(p) => {
                        labels[u] == labels[v]
                            && p.start() == u
                            && p.end() == v
                            && p.is_valid_in(&g)
                            && p.pieces.windows(2).all(|w| closed[w[0]].contains(w[1]))
                    }
                };
                if !ok {
                    return cx(
                        "no continuous path between vertices of one component",
                        json!({
                            "graph": graph_json(&g),
                            "from": u,
                            "to": v,
                            "path": path,
                        }),
                    );
                }
            }
        }
    }
    None
}
