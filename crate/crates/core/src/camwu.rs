//! The earlier clause-block reduction and why it fails.
//!
//! This construction keeps one 24-symbol block per clause and two leading
//! symbols per variable: `g_i` is the variable swap `(2i-1,2i)` times shifted
//! `h_k` copies for the positive occurrences, `g'_i` the same for negated
//! occurrences, plus one extra generator `g_c` holding a shifted `g` in
//! every clause block. Unlike the layered construction in [`crate::reduction`],
//! nothing stops products from mixing `g_c` with a partial set of variable
//! generators. [`counterexample_demo`] exhibits the resulting low-weight
//! element on a NAE-unsatisfiable formula, so this reduction does not decide
//! satisfiability.

use alloc::vec::Vec;
use num_bigint::BigUint;

use crate::gadgets::{base_g, base_h};
use crate::group::{schreier_sims, GeneratorSet, GroupError};
use crate::metric::{weight, Weight};
use crate::minweight::{min_nonzero_weight, Method};
use crate::naesat::{solve_nae_bruteforce, CnfFormula, Literal};
use crate::perm::Permutation;
use crate::reduction::occurrences;

/// Labels for the generators of the clause-block construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CwLabel {
    /// `g_i`: positive side of variable `i`.
    G(u32),
    /// `g'_i`: negated side of variable `i`.
    GPrime(u32),
    /// The clause generator `g_c`.
    Central,
}

impl core::fmt::Display for CwLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CwLabel::G(i) => write!(f, "g{i}"),
            CwLabel::GPrime(i) => write!(f, "g{i}'"),
            CwLabel::Central => write!(f, "gc"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwGenerator {
    pub label: CwLabel,
    pub perm: Permutation,
}

/// Output of the clause-block construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwReduction {
    num_vars: u32,
    num_clauses: u32,
    generators: Vec<CwGenerator>,
}

impl CwReduction {
    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn num_clauses(&self) -> u32 {
        self.num_clauses
    }

    /// Two leading symbols per variable, 24 per clause.
    pub fn degree(&self) -> u32 {
        2 * self.num_vars + 24 * self.num_clauses
    }

    pub fn generators(&self) -> &[CwGenerator] {
        &self.generators
    }

    pub fn find(&self, label: CwLabel) -> Option<&CwGenerator> {
        self.generators.iter().find(|g| g.label == label)
    }

    pub fn generator_set(&self) -> Result<GeneratorSet, GroupError> {
        GeneratorSet::new(
            self.degree(),
            self.generators.iter().map(|g| g.perm.clone()).collect(),
        )
    }
}

/// Builds the clause-block generators. Total on every formula.
pub fn cw_build(formula: &CnfFormula) -> CwReduction {
    let n = formula.num_vars();
    let m = formula.num_clauses();
    let occ = occurrences(formula);
    let offset = |clause: u32| (2 * n + 24 * (clause - 1)) as i64;
    let mut generators = Vec::with_capacity(2 * n as usize + 1);
    for var in 1..=n {
        let swap = Permutation::transposition(2 * var - 1, 2 * var)
            .expect("variable symbols are distinct");
        let mut pos = swap.clone();
        for &(_, clause, slot) in occ.positive_of(var) {
            let copy = base_h(slot).shift(offset(clause)).expect("shift is nonnegative");
            pos = pos.compose(&copy);
        }
        generators.push(CwGenerator { label: CwLabel::G(var), perm: pos });
        let mut neg = swap;
        for &(_, clause, slot) in occ.negated_of(var) {
            let copy = base_h(slot).shift(offset(clause)).expect("shift is nonnegative");
            neg = neg.compose(&copy);
        }
        generators.push(CwGenerator { label: CwLabel::GPrime(var), perm: neg });
    }
    let mut central = Permutation::identity();
    for clause in 1..=m {
        let copy = base_g().shift(offset(clause)).expect("shift is nonnegative");
        central = central.compose(&copy);
    }
    generators.push(CwGenerator { label: CwLabel::Central, perm: central });
    CwReduction { num_vars: n, num_clauses: m, generators }
}

/// Everything the counterexample establishes, computed fresh.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwDemoReport {
    pub formula: CnfFormula,
    pub degree: u32,
    /// The formula is NAE-unsatisfiable.
    pub nae_satisfiable: bool,
    /// The product `g_c g_1 g'_1`.
    pub element: Permutation,
    /// That product equals two shifted copies of `g*h_1`.
    pub matches_shifted_product: bool,
    pub element_weight: Weight,
    /// Membership established through the stabilizer chain.
    pub element_in_group: bool,
    pub group_order: BigUint,
    /// Minimum over the full group, which is lower still.
    pub group_min_weight: Weight,
    pub group_min_witness: Permutation,
}

/// Runs the counterexample: on `(x1 v x2 v x2) ^ (~x1 v x2 v x2)`, which no
/// assignment NAE-satisfies, the clause-block group still contains the
/// weight-5 element `g_c g_1 g'_1`.
pub fn counterexample_demo() -> CwDemoReport {
    let tri = |a: i32, b: i32, c: i32| {
        [a, b, c].map(|v| Literal { var: v.unsigned_abs(), negated: v < 0 })
    };
    let formula = CnfFormula::new(2, alloc::vec![tri(1, 2, 2), tri(-1, 2, 2)])
        .expect("fixed formula is well formed");
    let nae_satisfiable = solve_nae_bruteforce(&formula)
        .expect("two variables")
        .is_some();

    let cw = cw_build(&formula);
    let element = cw
        .find(CwLabel::Central)
        .map(|c| c.perm.clone())
        .expect("central generator exists")
        .compose(&cw.find(CwLabel::G(1)).expect("g1 exists").perm)
        .compose(&cw.find(CwLabel::GPrime(1)).expect("g1' exists").perm);

    let gh1 = base_g().compose(&base_h(1));
    let expected = gh1
        .shift(4)
        .expect("shift is nonnegative")
        .compose(&gh1.shift(28).expect("shift is nonnegative"));

    let gens = cw.generator_set().expect("nonzero degree");
    let chain = schreier_sims(&gens);
    let element_in_group = chain.contains(&element).expect("element is within degree");
    let min = min_nonzero_weight(&gens, Method::Auto)
        .expect("five commuting involutions")
        .expect("group is nontrivial");

    CwDemoReport {
        degree: cw.degree(),
        nae_satisfiable,
        matches_shifted_product: element == expected,
        element_weight: weight(&element),
        element_in_group,
        group_order: chain.order(),
        group_min_weight: min.weight,
        group_min_witness: min.witness,
        element,
        formula,
    }
}
