//! Exact minimum nonzero Chebyshev weight of a permutation subgroup.
//!
//! All three strategies enumerate the full group, so the answer is exact;
//! guards bound the enumeration size rather than approximate it. Witnesses
//! are canonical: among elements of minimum weight, the one whose one-line
//! form at the group degree is lexicographically smallest.

use crate::group::{
    abelian_involution_enumerate, closure_enumerate, schreier_sims, GeneratorSet, GroupError,
};
use crate::metric::{weight, Weight};
use crate::perm::Permutation;
use core::cmp::Ordering;
use core::str::FromStr;
use num_bigint::BigUint;

/// Enumeration strategy. `Auto` resolves to the cheapest applicable one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Closure,
    Abelian,
    Bsgs,
    Auto,
}

impl core::fmt::Display for Method {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let name = match self {
            Method::Closure => "closure",
            Method::Abelian => "abelian",
            Method::Bsgs => "bsgs",
            Method::Auto => "auto",
        };
        write!(f, "{name}")
    }
}

/// Unknown method name.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown method {0:?}; expected closure, abelian, bsgs, or auto")]
pub struct MethodParseError(pub alloc::string::String);

impl FromStr for Method {
    type Err = MethodParseError;

    fn from_str(s: &str) -> Result<Self, MethodParseError> {
        match s {
            "closure" => Ok(Method::Closure),
            "abelian" => Ok(Method::Abelian),
            "bsgs" => Ok(Method::Bsgs),
            "auto" => Ok(Method::Auto),
            other => Err(MethodParseError(alloc::string::String::from(other))),
        }
    }
}

/// Enumeration size limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Abelian subset products enumerate `2^k` patterns; `k` stops here.
    pub max_abelian_generators: usize,
    /// Closure and chain enumeration stop past this many elements.
    pub max_order: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { max_abelian_generators: 24, max_order: 10_000_000 }
    }
}

/// Result of a successful minimum-weight computation on a nontrivial group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinWeightResult {
    pub weight: Weight,
    /// The canonical witness of that weight.
    pub witness: Permutation,
    /// The strategy that actually ran (never `Auto`).
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MinWeightError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("abelian enumeration guard: {got} generators, limit {max}")]
    TooManyGenerators { got: usize, max: usize },
    #[error("group order {order} exceeds the enumeration guard {max}")]
    OrderTooLarge { order: BigUint, max: u64 },
}

fn better(candidate: &Permutation, w: Weight, best: &Option<(Weight, Permutation)>) -> bool {
    match best {
        None => true,
        Some((bw, bp)) => {
            w < *bw || (w == *bw && candidate.cmp_one_line(bp) == Ordering::Less)
        }
    }
}

fn scan<I: Iterator<Item = Permutation>>(elements: I) -> Option<(Weight, Permutation)> {
    let mut best: Option<(Weight, Permutation)> = None;
    for p in elements {
        if p.is_identity() {
            continue;
        }
        let w = weight(&p);
        if better(&p, w, &best) {
            best = Some((w, p));
        }
    }
    best
}

/// Exact minimum nonzero weight under the given guards.
///
/// `Ok(None)` marks the trivial group, which has no nonzero weight at all.
pub fn min_nonzero_weight_with_guards(
    gs: &GeneratorSet,
    method: Method,
    guards: &Guards,
) -> Result<Option<MinWeightResult>, MinWeightError> {
    let resolved = match method {
        Method::Auto => {
            if gs.all_commuting_involutions()
                && gs.gens().len() <= guards.max_abelian_generators
            {
                Method::Abelian
            } else {
                Method::Bsgs
            }
        }
        chosen => chosen,
    };
    let best = match resolved {
        Method::Closure => {
            let cap = usize::try_from(guards.max_order).unwrap_or(usize::MAX);
            let set = closure_enumerate(gs, cap)?;
            scan(set.into_iter())
        }
        Method::Abelian => {
            if gs.gens().len() > guards.max_abelian_generators {
                return Err(MinWeightError::TooManyGenerators {
                    got: gs.gens().len(),
                    max: guards.max_abelian_generators,
                });
            }
            let products = abelian_involution_enumerate(gs)?;
            scan(products.map(|(_, p)| p))
        }
        Method::Bsgs => {
            let chain = schreier_sims(gs);
            let order = chain.order();
            if order > BigUint::from(guards.max_order) {
                return Err(MinWeightError::OrderTooLarge { order, max: guards.max_order });
            }
            scan(chain.enumerate())
        }
        Method::Auto => unreachable!("auto was resolved above"),
    };
    Ok(best.map(|(weight, witness)| MinWeightResult { weight, witness, method: resolved }))
}

/// [`min_nonzero_weight_with_guards`] with the default guards.
pub fn min_nonzero_weight(
    gs: &GeneratorSet,
    method: Method,
) -> Result<Option<MinWeightResult>, MinWeightError> {
    min_nonzero_weight_with_guards(gs, method, &Guards::default())
}

/// Is there a non-identity element of weight at most `bound`?
///
/// The trivial group answers no for every bound.
pub fn decide_minwspa(gs: &GeneratorSet, bound: u32) -> Result<bool, MinWeightError> {
    Ok(min_nonzero_weight(gs, Method::Auto)?
        .map(|r| r.weight.0 <= bound)
        .unwrap_or(false))
}
