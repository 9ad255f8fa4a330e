//! Exhaustive and sampled verification of the catalog statements on small
//! graphs.

mod checks;
mod kernel;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use checks::{HOM_SAMPLES, NETS_PER_INSTANCE, NET_SAMPLE_MAX_N, PAIR_NET_SAMPLE_MAX_N};
pub use kernel::{Kernel, Mutant, Reference};

pub const THEOREMS: [&str; 14] = [
    "idempotent_iff_transitive",
    "clopen_structure",
    "connected_iff_convergence_connected",
    "hom_iff_continuous",
    "product_convergence",
    "subspace_convergence",
    "order_iff_spanning",
    "complete_iff_all_limits",
    "bipartite_characterization",
    "locally_irregular_characterization",
    "limit_space_axioms",
    "convergence_system_reduction",
    "finite_compactness",
    "path_connected",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub message: String,
    pub data: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Counterexample(Counterexample),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub theorem: String,
    /// The requested vertex bound.
    pub n_max: usize,
    /// The bound actually used, `min(n_max, cap)`.
    pub n_bound: usize,
    pub seed: u64,
    pub instances: u64,
    pub verdict: Verdict,
    pub elapsed_ms: u64,
}

impl TheoremCheck {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Equal up to timing.
    pub fn same_outcome(&self, other: &TheoremCheck) -> bool {
        self.theorem == other.theorem
            && self.n_max == other.n_max
            && self.n_bound == other.n_bound
            && self.seed == other.seed
            && self.instances == other.instances
            && self.verdict == other.verdict
    }
}

/// Largest vertex count each check enumerates.
pub fn theorem_cap(theorem: &str) -> Result<usize> {
    Ok(match theorem {
        "product_convergence"
        | "subspace_convergence"
        | "order_iff_spanning"
        | "limit_space_axioms"
        | "convergence_system_reduction"
        | "hom_iff_continuous" => 4,
        t if THEOREMS.contains(&t) => 6,
        t => return Err(Error::UnknownTheorem(t.to_string())),
    })
}

pub fn verify(theorem: &str, n_max: usize, seed: u64) -> Result<TheoremCheck> {
    verify_with(&Reference, theorem, n_max, seed)
}

pub fn verify_with(kernel: &dyn Kernel, theorem: &str, n_max: usize, seed: u64) -> Result<TheoremCheck> {
    let n_bound = n_max.min(theorem_cap(theorem)?);
    let index = THEOREMS.iter().position(|t| *t == theorem).expect("capped theorems are listed") as u64;
    let mut ctx = checks::Ctx {
        kernel,
        n: n_bound,
        seed: seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15),
        instances: 0,
    };
    let started = Instant::now();
    let found = match theorem {
        "idempotent_iff_transitive" => checks::idempotent_iff_transitive(&mut ctx),
        "clopen_structure" => checks::clopen_structure(&mut ctx),
        "connected_iff_convergence_connected" => checks::connected_iff_convergence_connected(&mut ctx),
        "hom_iff_continuous" => checks::hom_iff_continuous(&mut ctx),
        "product_convergence" => checks::product_convergence(&mut ctx),
        "subspace_convergence" => checks::subspace_convergence(&mut ctx),
        "order_iff_spanning" => checks::order_iff_spanning(&mut ctx),
        "complete_iff_all_limits" => checks::complete_iff_all_limits(&mut ctx),
        "bipartite_characterization" => checks::bipartite_characterization(&mut ctx),
        "locally_irregular_characterization" => checks::locally_irregular_characterization(&mut ctx),
        "limit_space_axioms" => checks::limit_space_axioms(&mut ctx),
        "convergence_system_reduction" => checks::convergence_system_reduction(&mut ctx),
        "finite_compactness" => checks::finite_compactness(&mut ctx),
        "path_connected" => checks::path_connected(&mut ctx),
        _ => unreachable!("theorem_cap rejects unknown names"),
    };
    Ok(TheoremCheck {
        theorem: theorem.to_string(),
        n_max,
        n_bound,
        seed,
        instances: ctx.instances,
        verdict: found.map_or(Verdict::Pass, Verdict::Counterexample),
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

pub fn verify_all(n_max: usize, seed: u64) -> Vec<TheoremCheck> {
    verify_all_with(&Reference, n_max, seed)
}

pub fn verify_all_with(kernel: &dyn Kernel, n_max: usize, seed: u64) -> Vec<TheoremCheck> {
    THEOREMS
        .iter()
        .map(|t| verify_with(kernel, t, n_max, seed).expect("listed theorem"))
        .collect()
}
