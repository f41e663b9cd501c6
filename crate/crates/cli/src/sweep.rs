//! Seeded random sweeps over small formulas.
//!
//! Every trial samples a formula size, builds a random formula, and runs the
//! exact satisfiability/weight comparison. The stream cipher generator makes
//! runs with equal seeds byte-for-byte reproducible.

use chebcode_core::naesat::{CnfFormula, Literal};
use chebcode_core::reduction::{verify_theorem, TheoremReport, VerifyError};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Bounds and seed for one sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Per-trial variable count is uniform in `2..=max_vars`.
    pub max_vars: u32,
    /// Per-trial clause count is uniform in `1..=max_clauses`.
    pub max_clauses: u32,
    pub trials: u32,
    pub seed: u64,
}

/// One verified trial.
#[derive(Debug, Clone)]
pub struct Trial {
    pub index: u32,
    pub formula: CnfFormula,
    pub report: TheoremReport,
}

/// A uniformly random exactly-3-literal formula.
pub fn random_formula<R: Rng>(rng: &mut R, num_vars: u32, num_clauses: u32) -> CnfFormula {
    let clauses = (0..num_clauses)
        .map(|_| {
            [(); 3].map(|_| Literal {
                var: rng.random_range(1..=num_vars),
                negated: rng.random_bool(0.5),
            })
        })
        .collect();
    CnfFormula::new(num_vars, clauses).expect("sampled literals are in range")
}

/// Runs the configured number of trials. Sizes must respect the exact
/// verifier's limits (`2 <= max_vars <= 12`, `max_clauses >= 1`).
pub fn run(config: &SweepConfig) -> Result<Vec<Trial>, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut trials = Vec::with_capacity(config.trials as usize);
    for index in 1..=config.trials {
        let num_vars = rng.random_range(2..=config.max_vars.max(2));
        let num_clauses = rng.random_range(1..=config.max_clauses.max(1));
        let formula = random_formula(&mut rng, num_vars, num_clauses);
        let report = verify_theorem(&formula)?;
        trials.push(Trial { index, formula, report });
    }
    Ok(trials)
}
