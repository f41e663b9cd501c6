//! The Chebyshev metric on permutations.
//!
//! Distance is the largest displacement of any symbol, taken over the union
//! of the two supports. The metric is right-invariant, so the weight of a
//! codeword (its distance to the identity) carries the whole geometry.

use crate::perm::Permutation;

/// A Chebyshev distance or weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(pub u32);

impl core::fmt::Display for Weight {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `max |p(x) - q(x)|` over all symbols, zero iff `p == q`.
pub fn chebyshev(p: &Permutation, q: &Permutation) -> Weight {
    let mut max = 0u32;
    for x in p.support().chain(q.support()) {
        max = max.max(p.image(x).abs_diff(q.image(x)));
    }
    Weight(max)
}

/// Distance to the identity: `max |p(x) - x|` over the support.
pub fn weight(p: &Permutation) -> Weight {
    let mut max = 0u32;
    for x in p.support() {
        max = max.max(p.image(x).abs_diff(x));
    }
    Weight(max)
}
