//! From NAE satisfiability to minimum subgroup weight.
//!
//! Each variable `x_i` yields two generators: `g_i` stands for "x_i is
//! true", `g'_i` for "x_i is false". Both carry that variable's assignment
//! gadget and its polarity-matching clause gadgets; picking exactly one
//! generator per variable cancels all assignment gadgets and encodes an
//! assignment. Such codewords have weight 6 exactly when the assignment
//! NAE-satisfies the formula and weight 7 otherwise, while every other
//! non-identity subgroup element keeps weight at least 7. The minimum
//! nonzero weight of the generated group is therefore 6 on satisfiable
//! formulas and 7 on unsatisfiable ones, which also separates approximation
//! ratios below 7/6.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::gadgets::{
    assignment_gadget, clause_gadget, variable_gadget, GadgetParams, InstanceError, Truth,
};
use crate::metric::Weight;
use crate::minweight::{min_nonzero_weight, Method};
use crate::naesat::{solve_nae_bruteforce, Assignment, AssignmentLenError, CnfFormula};
use crate::group::GeneratorSet;
use crate::perm::Permutation;

/// Occurrence triple: variable, clause, slot within the clause (1-based).
pub type Occurrence = (u32, u32, u8);

/// Positive and negated occurrence slots of every variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceSets {
    positive: BTreeSet<Occurrence>,
    negated: BTreeSet<Occurrence>,
}

impl OccurrenceSets {
    pub fn positive(&self) -> &BTreeSet<Occurrence> {
        &self.positive
    }

    pub fn negated(&self) -> &BTreeSet<Occurrence> {
        &self.negated
    }

    /// Positive occurrences of one variable, in (clause, slot) order.
    pub fn positive_of(&self, var: u32) -> impl Iterator<Item = &Occurrence> {
        self.positive.range((var, 0, 0)..=(var, u32::MAX, u8::MAX))
    }

    /// Negated occurrences of one variable, in (clause, slot) order.
    pub fn negated_of(&self, var: u32) -> impl Iterator<Item = &Occurrence> {
        self.negated.range((var, 0, 0)..=(var, u32::MAX, u8::MAX))
    }

    pub fn len(&self) -> usize {
        self.positive.len() + self.negated.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty() && self.negated.is_empty()
    }
}

/// Collects every literal slot of the formula into occurrence sets.
pub fn occurrences(formula: &CnfFormula) -> OccurrenceSets {
    let mut positive = BTreeSet::new();
    let mut negated = BTreeSet::new();
    for (j, clause) in formula.clauses().iter().enumerate() {
        for (k, lit) in clause.iter().enumerate() {
            let occ = (lit.var, (j + 1) as u32, (k + 1) as u8);
            if lit.negated {
                negated.insert(occ);
            } else {
                positive.insert(occ);
            }
        }
    }
    OccurrenceSets { positive, negated }
}

/// One gadget factor of a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetId {
    Variable { var: u32, truth: Truth },
    Assignment { var: u32 },
    Clause { clause: u32, slot: u8, truth: Truth },
}

impl core::fmt::Display for GadgetId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GadgetId::Variable { var, truth } => write!(f, "v({var},{truth})"),
            GadgetId::Assignment { var } => write!(f, "u({var})"),
            GadgetId::Clause { clause, slot, truth } => {
                write!(f, "h({clause},{slot},{truth})")
            }
        }
    }
}

/// `g_i` or `g'_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GeneratorLabel {
    pub var: u32,
    pub primed: bool,
}

impl core::fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "g{}", self.var)?;
        if self.primed {
            write!(f, "'")?;
        }
        Ok(())
    }
}

/// A generator with its label and the gadgets composed into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: GeneratorLabel,
    pub perm: Permutation,
    pub provenance: Vec<GadgetId>,
}

/// The generator set produced by the reduction, in order
/// `g_1, g'_1, ..., g_n, g'_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    params: GadgetParams,
    generators: Vec<Generator>,
}

impl ReductionOutput {
    pub fn params(&self) -> &GadgetParams {
        &self.params
    }

    pub fn degree(&self) -> u32 {
        self.params.degree()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_set(&self) -> GeneratorSet {
        GeneratorSet::new(
            self.degree(),
            self.generators.iter().map(|g| g.perm.clone()).collect(),
        )
        .expect("generators stay within the reduction degree")
    }
}

/// Builds the reduction generators for `formula`.
///
/// Needs at least one clause and two variables; fails with the instance
/// error otherwise.
pub fn build_generators(formula: &CnfFormula) -> Result<ReductionOutput, InstanceError> {
    let params = GadgetParams::new(formula.num_clauses(), formula.num_vars())?;
    let occ = occurrences(formula);
    let mut generators = Vec::with_capacity(2 * params.num_vars() as usize);
    for var in 1..=params.num_vars() {
        for primed in [false, true] {
            // g_i pairs positive occurrences with true blocks; g'_i swaps
            // the polarity.
            let own_truth = if primed { Truth::False } else { Truth::True };
            let other_truth = if primed { Truth::True } else { Truth::False };
            let mut provenance = Vec::new();
            let mut perm = variable_gadget(var, own_truth, &params);
            provenance.push(GadgetId::Variable { var, truth: own_truth });
            perm = perm.compose(&assignment_gadget(var, &params));
            provenance.push(GadgetId::Assignment { var });
            for &(_, clause, slot) in occ.positive_of(var) {
                perm = perm.compose(&clause_gadget(clause, slot, own_truth));
                provenance.push(GadgetId::Clause { clause, slot, truth: own_truth });
            }
            for &(_, clause, slot) in occ.negated_of(var) {
                perm = perm.compose(&clause_gadget(clause, slot, other_truth));
                provenance.push(GadgetId::Clause { clause, slot, truth: other_truth });
            }
            generators.push(Generator {
                label: GeneratorLabel { var, primed },
                perm,
                provenance,
            });
        }
    }
    Ok(ReductionOutput { params, generators })
}

/// The codeword of an assignment: one generator per variable, `g_i` where
/// true and `g'_i` where false. Assignment gadgets cancel pairwise, so the
/// codeword fixes the whole assignment range.
pub fn assignment_to_codeword(
    reduction: &ReductionOutput,
    assignment: &Assignment,
) -> Result<Permutation, AssignmentLenError> {
    let n = reduction.params.num_vars();
    if assignment.num_vars() != n {
        return Err(AssignmentLenError { expected: n, got: assignment.num_vars() });
    }
    let mut product = Permutation::identity();
    for var in 1..=n {
        let idx = 2 * (var - 1) as usize + if assignment.value(var) { 0 } else { 1 };
        product = product.compose(&reduction.generators[idx].perm);
    }
    Ok(product)
}

/// Variable cap for [`verify_theorem`]; `2^{2n}` products stay desk-scale.
pub const VERIFY_VAR_LIMIT: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("exact verification handles at most {max} variables, got {vars}")]
    TooManyVariables { vars: u32, max: u32 },
}

/// Outcome of one exact satisfiability-versus-weight comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub nae_satisfiable: bool,
    /// First NAE witness, if any.
    pub nae_witness: Option<Assignment>,
    pub min_weight: Weight,
    pub min_witness: Permutation,
    /// 6 when satisfiable, 7 when not.
    pub expected_weight: Weight,
    /// Did the group minimum match the expectation?
    pub consistent: bool,
}

/// Solves the formula two ways, by NAE brute force and by exact minimum
/// weight of the reduction group, and compares the outcomes.
pub fn verify_theorem(formula: &CnfFormula) -> Result<TheoremReport, VerifyError> {
    let n = formula.num_vars();
    if n > VERIFY_VAR_LIMIT {
        return Err(VerifyError::TooManyVariables { vars: n, max: VERIFY_VAR_LIMIT });
    }
    let reduction = build_generators(formula)?;
    let nae_witness =
        solve_nae_bruteforce(formula).expect("verify limit is below the brute-force limit");
    let min = min_nonzero_weight(&reduction.generator_set(), Method::Auto)
        .expect("reduction generators are few commuting involutions")
        .expect("reduction groups are nontrivial");
    let nae_satisfiable = nae_witness.is_some();
    let expected_weight = if nae_satisfiable { Weight(6) } else { Weight(7) };
    Ok(TheoremReport {
        nae_satisfiable,
        nae_witness,
        min_weight: min.weight,
        min_witness: min.witness,
        expected_weight,
        consistent: min.weight == expected_weight,
    })
}
