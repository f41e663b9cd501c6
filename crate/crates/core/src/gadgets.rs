//! Building-block permutations for the satisfiability reduction.
//!
//! Everything here is assembled from the Klein four-group on `{1,2,3,4}`
//! using two weight-controlled operators on cycles: `shift` translates all
//! symbols (weight preserved) and `stretch` spreads them apart (weight
//! multiplied). The three flavours of gadget occupy disjoint symbol ranges
//! of the reduction degree `48m + 18n`:
//!
//! * clause gadgets: 48 symbols per clause, a true block and a false block
//!   of 24 each, filled with shifted copies of `g*h_k`;
//! * variable gadgets: 10 symbols per variable starting at `b1 = 48m - 10`,
//!   filled with 3-stretched Klein elements;
//! * assignment gadgets: 8 symbols per variable starting at
//!   `b2 = 48m + 10n`, pairs of width-7 transpositions chained in a ring.
//!
//! The weights that drive the whole construction: every `h_k` has weight 6,
//! `g` has weight 7, and each product `g*h_k` has weight 5.

use crate::perm::{Permutation, Symbol};

/// The Klein four-group: identity plus three involutions on `{1,2,3,4}`.
///
/// The non-identity element `Kw` has Chebyshev weight `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum KleinElement {
    E,
    K1,
    K2,
    K3,
}

impl KleinElement {
    pub const ALL: [KleinElement; 4] = [
        KleinElement::E,
        KleinElement::K1,
        KleinElement::K2,
        KleinElement::K3,
    ];

    pub const NON_IDENTITY: [KleinElement; 3] =
        [KleinElement::K1, KleinElement::K2, KleinElement::K3];

    /// 0 for the identity, otherwise the element's weight.
    pub fn index(self) -> u8 {
        match self {
            KleinElement::E => 0,
            KleinElement::K1 => 1,
            KleinElement::K2 => 2,
            KleinElement::K3 => 3,
        }
    }

    pub fn from_index(i: u8) -> Self {
        match i {
            0 => KleinElement::E,
            1 => KleinElement::K1,
            2 => KleinElement::K2,
            3 => KleinElement::K3,
            _ => panic!("Klein index must be 0..=3, got {i}"),
        }
    }

    pub fn permutation(self) -> Permutation {
        let cycles: &[&[Symbol]] = match self {
            KleinElement::E => &[],
            KleinElement::K1 => &[&[1, 2], &[3, 4]],
            KleinElement::K2 => &[&[1, 3], &[2, 4]],
            KleinElement::K3 => &[&[1, 4], &[2, 3]],
        };
        Permutation::from_disjoint_cycles(cycles).expect("Klein cycles are disjoint")
    }
}

impl core::ops::Mul for KleinElement {
    type Output = KleinElement;

    fn mul(self, rhs: KleinElement) -> KleinElement {
        use KleinElement::*;
        match (self, rhs) {
            (E, x) | (x, E) => x,
            (a, b) if a == b => E,
            (K1, K2) | (K2, K1) => K3,
            (K1, K3) | (K3, K1) => K2,
            _ => K1,
        }
    }
}

impl core::fmt::Display for KleinElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            KleinElement::E => write!(f, "e"),
            other => write!(f, "k{}", other.index()),
        }
    }
}

/// Polarity tag on clause and variable gadgets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Truth {
    True,
    False,
}

impl core::fmt::Display for Truth {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Truth::True => write!(f, "T"),
            Truth::False => write!(f, "F"),
        }
    }
}

/// A formula shape the reduction rejects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum InstanceError {
    #[error("the reduction needs at least one clause")]
    NoClauses,
    #[error("the reduction needs at least two variables, got {0}")]
    TooFewVariables(u32),
}

/// Symbol-range layout for a reduction with `m` clauses and `n` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetParams {
    num_clauses: u32,
    num_vars: u32,
}

impl GadgetParams {
    pub fn new(num_clauses: u32, num_vars: u32) -> Result<Self, InstanceError> {
        if num_clauses == 0 {
            return Err(InstanceError::NoClauses);
        }
        if num_vars < 2 {
            return Err(InstanceError::TooFewVariables(num_vars));
        }
        Ok(GadgetParams { num_clauses, num_vars })
    }

    pub fn num_clauses(&self) -> u32 {
        self.num_clauses
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    /// Base offset of the variable-gadget range.
    pub fn b1(&self) -> u32 {
        48 * self.num_clauses - 10
    }

    /// Base offset of the assignment-gadget range.
    pub fn b2(&self) -> u32 {
        48 * self.num_clauses + 10 * self.num_vars
    }

    /// Total number of symbols used by the reduction.
    pub fn degree(&self) -> u32 {
        48 * self.num_clauses + 18 * self.num_vars
    }
}

fn stretched(k: KleinElement, t: u32) -> Permutation {
    k.permutation().stretch(t).expect("Klein elements are not the identity")
}

fn shifted(p: &Permutation, r: u32) -> Permutation {
    p.shift(r as i64).expect("nonnegative shifts stay in range")
}

/// `h_k` on 24 symbols, weight 6: three 8-symbol blocks, each holding an
/// interleaved pair of 2-stretched Klein elements, with the Klein pattern
/// `(k, k+1, k+2)` cycling across blocks so that `h_1 h_2 = h_3` etc.
pub fn base_h(k: u8) -> Permutation {
    assert!((1..=3).contains(&k), "h index must be 1..=3, got {k}");
    let mut acc = Permutation::identity();
    for block in 0..3u32 {
        let kappa = KleinElement::from_index(((k as u32 - 1 + block) % 3 + 1) as u8);
        let spread = stretched(kappa, 2);
        acc = acc.compose(&shifted(&spread, 8 * block));
        acc = acc.compose(&shifted(&spread, 8 * block + 1));
    }
    acc
}

/// `g` on 24 symbols, weight 7: all twelve adjacent swaps composed with the
/// constant `k3` block pattern.
pub fn base_g() -> Permutation {
    let mut acc = Permutation::identity();
    for i in 1..=12u32 {
        let swap = Permutation::transposition(2 * i - 1, 2 * i).expect("distinct symbols");
        acc = acc.compose(&swap);
    }
    let spread = stretched(KleinElement::K3, 2);
    for block in 0..3u32 {
        acc = acc.compose(&shifted(&spread, 8 * block));
        acc = acc.compose(&shifted(&spread, 8 * block + 1));
    }
    acc
}

/// `v_T` or `v_F` on 10 symbols: 3-stretched `k1` and `k2`. Weights 3 and 6;
/// their product is the 3-stretched `k3` of weight 9.
pub fn base_v(t: Truth) -> Permutation {
    match t {
        Truth::True => stretched(KleinElement::K1, 3),
        Truth::False => stretched(KleinElement::K2, 3),
    }
}

/// The clause gadget `h_{j,k,t}`: a copy of `g*h_k` (weight 5) placed in the
/// true or false block of clause `j`.
pub fn clause_gadget(j: u32, k: u8, t: Truth) -> Permutation {
    assert!(j >= 1, "clauses are 1-based");
    let core = base_g().compose(&base_h(k));
    let offset = 48 * (j - 1) + if t == Truth::False { 24 } else { 0 };
    shifted(&core, offset)
}

/// The variable gadget `v_{i,t}` in variable `i`'s 10-symbol range, which
/// starts right after the clause blocks: the shift is `b1 + 10i = 48m +
/// 10(i-1)`.
pub fn variable_gadget(i: u32, t: Truth, params: &GadgetParams) -> Permutation {
    assert!(
        i >= 1 && i <= params.num_vars(),
        "variable index {i} out of 1..={}",
        params.num_vars()
    );
    shifted(&base_v(t), params.b1() + 10 * i)
}

/// The width-7 transposition `t_i` in the assignment range.
fn assignment_swap(i: u32, params: &GadgetParams) -> Permutation {
    let base = params.b2() + 8 * (i - 1);
    Permutation::transposition(base + 1, base + 8).expect("distinct symbols")
}

/// The assignment gadget `u_i = t_i t_{i+1}`, indices wrapping so the `u_i`
/// chain every `t_i` into a ring. Weight 7.
pub fn assignment_gadget(i: u32, params: &GadgetParams) -> Permutation {
    assert!(
        i >= 1 && i <= params.num_vars(),
        "variable index {i} out of 1..={}",
        params.num_vars()
    );
    let next = if i == params.num_vars() { 1 } else { i + 1 };
    assignment_swap(i, params).compose(&assignment_swap(next, params))
}
