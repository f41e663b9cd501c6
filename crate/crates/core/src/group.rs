//! Permutation group machinery: closure enumeration, a deterministic
//! stabilizer chain, and subset products of commuting involutions.
//!
//! The three enumeration routes are deliberately independent of one another
//! so they can cross-check each other on the same input: breadth-first
//! closure touches every element by multiplication, the stabilizer chain
//! factors the group through base-point orbits, and the subset-product walk
//! uses nothing but the abelian-involution structure.

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use num_bigint::BigUint;

use crate::perm::{Permutation, Symbol};

/// Errors from generator validation and enumeration guards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("permutation moves symbol {symbol}, outside degree {degree}")]
    OutOfDegree { symbol: Symbol, degree: u32 },
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generators are not pairwise commuting involutions")]
    NotAbelianInvolutive,
    #[error("subset enumeration handles at most 63 generators, got {0}")]
    TooManyGenerators(usize),
}

/// A degree plus generating permutations. Identity generators are dropped on
/// construction (the count is kept for reporting).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    degree: u32,
    gens: Vec<Permutation>,
    dropped_identities: usize,
}

impl GeneratorSet {
    pub fn new(degree: u32, gens: Vec<Permutation>) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        let mut kept = Vec::with_capacity(gens.len());
        let mut dropped = 0;
        for g in gens {
            if let Some(max) = g.max_moved() {
                if max > degree {
                    return Err(GroupError::OutOfDegree { symbol: max, degree });
                }
                kept.push(g);
            } else {
                dropped += 1;
            }
        }
        Ok(GeneratorSet { degree, gens: kept, dropped_identities: dropped })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn dropped_identities(&self) -> usize {
        self.dropped_identities
    }

    /// Precondition for [`abelian_involution_enumerate`].
    pub fn all_commuting_involutions(&self) -> bool {
        self.gens.iter().all(|g| g.is_involution())
            && self
                .gens
                .iter()
                .enumerate()
                .all(|(i, g)| self.gens[i + 1..].iter().all(|h| g.commutes_with(h)))
    }

}

/// Breadth-first closure under right multiplication by the generators.
/// Always contains the identity. Fails once the element count passes `cap`.
pub fn closure_enumerate(
    gs: &GeneratorSet,
    cap: usize,
) -> Result<BTreeSet<Permutation>, GroupError> {
    assert!(cap >= 1, "cap must allow at least the identity");
    let mut seen = BTreeSet::new();
    seen.insert(Permutation::identity());
    let mut queue: VecDeque<Permutation> = VecDeque::new();
    queue.push_back(Permutation::identity());
    while let Some(p) = queue.pop_front() {
        for g in gs.gens() {
            let q = p.compose(g);
            if !seen.contains(&q) {
                if seen.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    Ok(seen)
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Level {
    point: Symbol,
    /// All strong generators fixing the base points above this level.
    gens: Vec<Permutation>,
    /// Orbit representatives: `transversal[y]` maps `point` to `y`.
    transversal: BTreeMap<Symbol, Permutation>,
}

impl Level {
    fn new(point: Symbol) -> Self {
        Level { point, gens: Vec::new(), transversal: BTreeMap::new() }
    }

    /// Deterministic orbit walk: FIFO over points, generators in list order.
    fn rebuild_transversal(&mut self) {
        self.transversal.clear();
        self.transversal.insert(self.point, Permutation::identity());
        let mut queue: VecDeque<Symbol> = VecDeque::new();
        queue.push_back(self.point);
        while let Some(x) = queue.pop_front() {
            let rep = self.transversal[&x].clone();
            for s in &self.gens {
                let y = s.image(x);
                if let Entry::Vacant(slot) = self.transversal.entry(y) {
                    slot.insert(s.compose(&rep));
                    queue.push_back(y);
                }
            }
        }
    }
}

/// A base and strong generating set built by the deterministic
/// Schreier-Sims procedure.
///
/// Base points are the smallest moved symbol of the residue that created
/// each level, so identical inputs always produce identical chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bsgs {
    degree: u32,
    levels: Vec<Level>,
}

/// Builds a stabilizer chain for the group generated by `gs`.
pub fn schreier_sims(gs: &GeneratorSet) -> Bsgs {
    let mut levels: Vec<Level> = Vec::new();
    for g in gs.gens() {
        if levels.is_empty() {
            levels.push(Level::new(g.min_moved().expect("generators are non-identity")));
        }
        levels[0].gens.push(g.clone());
    }
    if levels.is_empty() {
        return Bsgs { degree: gs.degree(), levels };
    }
    levels[0].rebuild_transversal();

    // Verify levels from the deepest changed one back to the top. The
    // invariant on entry to each pass: every level below `i` is complete.
    let mut i = 0usize;
    loop {
        let mut extended = false;
        'verify: {
            let points: Vec<Symbol> = levels[i].transversal.keys().copied().collect();
            for x in points {
                let ux = levels[i].transversal[&x].clone();
                for idx in 0..levels[i].gens.len() {
                    let s = levels[i].gens[idx].clone();
                    let y = s.image(x);
                    let uy = levels[i].transversal[&y].clone();
                    // Schreier generator: carries x to the orbit and back.
                    let sg = uy.inverse().compose(&s).compose(&ux);
                    if sg.is_identity() {
                        continue;
                    }
                    let (j, residue) = sift_from(&levels, i + 1, sg);
                    if residue.is_identity() {
                        continue;
                    }
                    if j == levels.len() {
                        let point = residue.min_moved().expect("residue is non-identity");
                        levels.push(Level::new(point));
                    }
                    // The residue fixes every base point above level j, so
                    // it joins the generator list of levels i+1..=j.
                    for level in levels.iter_mut().take(j + 1).skip(i + 1) {
                        level.gens.push(residue.clone());
                        level.rebuild_transversal();
                    }
                    i = j;
                    extended = true;
                    break 'verify;
                }
            }
        }
        if extended {
            continue;
        }
        if i == 0 {
            break;
        }
        i -= 1;
    }
    Bsgs { degree: gs.degree(), levels }
}

/// Divides `p` by transversal representatives starting at `start`. Returns
/// the level where division stuck (or `levels.len()`) and the residue.
fn sift_from(levels: &[Level], start: usize, p: Permutation) -> (usize, Permutation) {
    let mut residue = p;
    for (i, level) in levels.iter().enumerate().skip(start) {
        if residue.is_identity() {
            return (i, residue);
        }
        let y = residue.image(level.point);
        match level.transversal.get(&y) {
            None => return (i, residue),
            Some(u) => residue = u.inverse().compose(&residue),
        }
    }
    (levels.len(), residue)
}

impl Bsgs {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn base(&self) -> Vec<Symbol> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Strong generators in first-introduction order, without duplicates.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for level in &self.levels {
            for g in &level.gens {
                if seen.insert(g.clone()) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Group order: the product of the orbit sizes along the chain.
    pub fn order(&self) -> BigUint {
        let mut order = BigUint::from(1u32);
        for level in &self.levels {
            order *= BigUint::from(level.transversal.len() as u64);
        }
        order
    }

    /// Reduces `p` through the chain; members sift to the identity.
    pub fn sift(&self, p: &Permutation) -> Permutation {
        sift_from(&self.levels, 0, p.clone()).1
    }

    /// Membership test. Errors when `p` moves symbols outside the degree.
    pub fn contains(&self, p: &Permutation) -> Result<bool, GroupError> {
        if let Some(max) = p.max_moved() {
            if max > self.degree {
                return Err(GroupError::OutOfDegree { symbol: max, degree: self.degree });
            }
        }
        Ok(self.sift(p).is_identity())
    }

    /// Walks every group element exactly once, as products of one
    /// transversal representative per level.
    pub fn enumerate(&self) -> Elements<'_> {
        Elements::new(self)
    }
}

/// Iterator over all elements of a [`Bsgs`] group.
pub struct Elements<'a> {
    /// Transversal reps per level, in orbit-point order.
    reps: Vec<Vec<&'a Permutation>>,
    /// Odometer over `reps`, least significant at the deepest level.
    counters: Vec<usize>,
    /// `prefix[i]` is the product of the chosen reps for levels `0..=i`.
    prefix: Vec<Permutation>,
    done: bool,
}

impl<'a> Elements<'a> {
    fn new(bsgs: &'a Bsgs) -> Self {
        let reps: Vec<Vec<&Permutation>> = bsgs
            .levels
            .iter()
            .map(|l| l.transversal.values().collect())
            .collect();
        let counters = alloc::vec![0; reps.len()];
        let mut it = Elements { reps, counters, prefix: Vec::new(), done: false };
        it.recompute_prefix(0);
        it
    }

    fn recompute_prefix(&mut self, from: usize) {
        self.prefix.truncate(from);
        for i in from..self.reps.len() {
            let rep = self.reps[i][self.counters[i]];
            let next = match self.prefix.last() {
                Some(p) => p.compose(rep),
                None => rep.clone(),
            };
            self.prefix.push(next);
        }
    }
}

impl<'a> Iterator for Elements<'a> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let current = self.prefix.last().cloned().unwrap_or_else(Permutation::identity);
        // Advance the odometer, deepest level fastest.
        let mut i = self.counters.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.counters[i] += 1;
            if self.counters[i] < self.reps[i].len() {
                self.recompute_prefix(i);
                break;
            }
            self.counters[i] = 0;
        }
        Some(current)
    }
}

/// Subset products of pairwise commuting involutions.
///
/// Yields `2^k` pairs `(pattern, product)` in Gray-code order, where bit `b`
/// of `pattern` says whether generator `b` is in the product. Products are
/// not deduplicated; dependent generators repeat elements.
pub fn abelian_involution_enumerate(
    gs: &GeneratorSet,
) -> Result<SubsetProducts<'_>, GroupError> {
    if !gs.all_commuting_involutions() {
        return Err(GroupError::NotAbelianInvolutive);
    }
    if gs.gens().len() > 63 {
        return Err(GroupError::TooManyGenerators(gs.gens().len()));
    }
    Ok(SubsetProducts {
        gens: gs.gens(),
        counter: 0,
        total: 1u64 << gs.gens().len(),
        current: Permutation::identity(),
    })
}

/// Iterator produced by [`abelian_involution_enumerate`]. Each step toggles
/// one generator in or out, so every product costs one composition.
pub struct SubsetProducts<'a> {
    gens: &'a [Permutation],
    counter: u64,
    total: u64,
    current: Permutation,
}

impl<'a> Iterator for SubsetProducts<'a> {
    type Item = (u64, Permutation);

    fn next(&mut self) -> Option<(u64, Permutation)> {
        if self.counter >= self.total {
            return None;
        }
        if self.counter > 0 {
            let bit = self.counter.trailing_zeros() as usize;
            self.current = self.current.compose(&self.gens[bit]);
        }
        let pattern = self.counter ^ (self.counter >> 1);
        self.counter += 1;
        Some((pattern, self.current.clone()))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.counter) as usize;
        (left, Some(left))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn gens(degree: u32, texts: &[&str]) -> GeneratorSet {
        GeneratorSet::new(degree, texts.iter().map(|t| perm(t)).collect()).unwrap()
    }

    #[test]
    fn generator_set_validation() {
        assert_eq!(
            GeneratorSet::new(3, vec![perm("(1,4)")]),
            Err(GroupError::OutOfDegree { symbol: 4, degree: 3 })
        );
        assert_eq!(GeneratorSet::new(0, vec![]), Err(GroupError::ZeroDegree));
        let with_identity =
            GeneratorSet::new(4, vec![Permutation::identity(), perm("(1,2)")]).unwrap();
        assert_eq!(with_identity.gens().len(), 1);
        assert_eq!(with_identity.dropped_identities(), 1);
    }

    #[test]
    fn closure_of_klein_pair() {
        let set = closure_enumerate(&gens(4, &["(1,2)(3,4)", "(1,3)(2,4)"]), 100).unwrap();
        assert_eq!(set.len(), 4);
        assert!(set.contains(&perm("(1,4)(2,3)")));
        assert!(set.contains(&Permutation::identity()));
    }

    #[test]
    fn closure_of_symmetric_group() {
        let set = closure_enumerate(&gens(4, &["(1,2)", "(1,2,3,4)"]), 100).unwrap();
        assert_eq!(set.len(), 24);
    }

    #[test]
    fn closure_cap() {
        assert_eq!(
            closure_enumerate(&gens(4, &["(1,2)", "(1,2,3,4)"]), 10),
            Err(GroupError::CapExceeded { cap: 10 })
        );
    }

    #[test]
    fn closure_of_nothing() {
        let set = closure_enumerate(&gens(1, &[]), 10).unwrap();
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn chain_orders() {
        assert_eq!(
            schreier_sims(&gens(4, &["(1,2)", "(1,2,3,4)"])).order(),
            BigUint::from(24u32)
        );
        assert_eq!(
            schreier_sims(&gens(4, &["(1,2)(3,4)", "(1,3)(2,4)"])).order(),
            BigUint::from(4u32)
        );
        assert_eq!(schreier_sims(&gens(5, &[])).order(), BigUint::from(1u32));
        assert_eq!(
            schreier_sims(&gens(7, &["(1,2,3,4,5,6,7)"])).order(),
            BigUint::from(7u32)
        );
    }

    #[test]
    fn chain_membership() {
        let b = schreier_sims(&gens(4, &["(1,2)(3,4)", "(1,3)(2,4)"]));
        assert!(b.contains(&perm("(1,4)(2,3)")).unwrap());
        assert!(b.contains(&Permutation::identity()).unwrap());
        assert!(!b.contains(&perm("(1,2)")).unwrap());
        assert_eq!(
            b.contains(&perm("(4,5)")),
            Err(GroupError::OutOfDegree { symbol: 5, degree: 4 })
        );
    }

    #[test]
    fn trivial_chain_membership() {
        let b = schreier_sims(&gens(4, &[]));
        assert!(b.contains(&Permutation::identity()).unwrap());
        assert!(!b.contains(&perm("(1,2)")).unwrap());
        assert_eq!(b.enumerate().count(), 1);
    }

    #[test]
    fn strong_generators_sift_to_identity() {
        let b = schreier_sims(&gens(6, &["(1,2,3)", "(4,5)", "(2,3)(5,6)"]));
        for g in b.strong_generators() {
            assert!(b.sift(&g).is_identity());
        }
    }

    #[test]
    fn enumeration_matches_closure() {
        for texts in [
            &["(1,2)", "(1,2,3,4)"][..],
            &["(1,2)(3,4)", "(1,3)(2,4)"][..],
            &["(1,2,3)", "(3,4,5)"][..],
            &["(1,2,3,4,5,6)"][..],
        ] {
            let gs = gens(6, texts);
            let closure = closure_enumerate(&gs, 1000).unwrap();
            let b = schreier_sims(&gs);
            let from_chain: BTreeSet<Permutation> = b.enumerate().collect();
            assert_eq!(from_chain, closure);
            assert_eq!(BigUint::from(closure.len() as u64), b.order());
        }
    }

    #[test]
    fn chain_is_deterministic() {
        let a = schreier_sims(&gens(6, &["(1,2,3)", "(3,4,5)", "(5,6)"]));
        let b = schreier_sims(&gens(6, &["(1,2,3)", "(3,4,5)", "(5,6)"]));
        assert_eq!(a, b);
        assert_eq!(a.base(), b.base());
    }

    #[test]
    fn subset_products_of_klein_pair() {
        let gs = gens(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let items: Vec<(u64, Permutation)> =
            abelian_involution_enumerate(&gs).unwrap().collect();
        assert_eq!(items.len(), 4);
        let products: BTreeSet<Permutation> =
            items.iter().map(|(_, p)| p.clone()).collect();
        assert_eq!(products.len(), 4);
        // Patterns cover all subsets once.
        let patterns: BTreeSet<u64> = items.iter().map(|(b, _)| *b).collect();
        assert_eq!(patterns, (0..4).collect());
        for (pattern, product) in items {
            let mut expect = Permutation::identity();
            for (bit, g) in gs.gens().iter().enumerate() {
                if pattern >> bit & 1 == 1 {
                    expect = expect.compose(g);
                }
            }
            assert_eq!(product, expect);
        }
    }

    #[test]
    fn subset_products_tolerate_dependence() {
        // Three dependent commuting involutions: products collapse onto a
        // 4-element group, with repeats.
        let gs = gens(4, &["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]);
        let products: Vec<Permutation> = abelian_involution_enumerate(&gs)
            .unwrap()
            .map(|(_, p)| p)
            .collect();
        assert_eq!(products.len(), 8);
        let distinct: BTreeSet<Permutation> = products.into_iter().collect();
        assert_eq!(distinct.len(), 4);
    }

    #[test]
    fn subset_products_require_commuting_involutions() {
        assert!(matches!(
            abelian_involution_enumerate(&gens(3, &["(1,2,3)"])),
            Err(GroupError::NotAbelianInvolutive)
        ));
        assert!(matches!(
            abelian_involution_enumerate(&gens(3, &["(1,2)", "(2,3)"])),
            Err(GroupError::NotAbelianInvolutive)
        ));
    }

    #[test]
    fn subset_products_of_nothing() {
        let items: Vec<_> = abelian_involution_enumerate(&gens(1, &[]))
            .unwrap()
            .collect();
        assert_eq!(items.len(), 1);
        assert!(items[0].1.is_identity());
    }
}
