//! Sparse permutations of the positive integers.
//!
//! A [`Permutation`] stores only the symbols it moves, so elements built from
//! widely separated gadget blocks stay cheap regardless of the nominal degree.
//! Cycle notation here follows the rearrangement convention: the cycle
//! `(p0,p1,...)` sends the entry in slot `p0` to slot `p1`, so as a function
//! on symbols it maps each listed symbol to its predecessor. The one-line
//! form `[2,3,1,4,6,5]` therefore prints as `(1,3,2)(5,6)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Mul;
use core::str::FromStr;

/// Symbols are 1-based; 0 never occurs in a valid permutation.
pub type Symbol = u32;

/// Errors from constructing or transforming permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("cycle needs at least two symbols")]
    CycleTooShort,
    #[error("symbol {0} repeats within a cycle")]
    RepeatedSymbol(Symbol),
    #[error("cycles overlap on symbol {0}")]
    OverlappingCycles(Symbol),
    #[error("symbol 0 is not allowed; symbols start at 1")]
    ZeroSymbol,
    #[error("one-line form must be nonempty")]
    EmptyOneLine,
    #[error("one-line images are not a rearrangement of 1..={0}")]
    NotARearrangement(u32),
    #[error("degree {degree} too small; need at least {required}")]
    DegreeTooSmall { degree: u32, required: u32 },
    #[error("shift by {shift} takes symbol {symbol} below 1")]
    ShiftOutOfRange { symbol: Symbol, shift: i64 },
    #[error("shift or stretch overflows the symbol range")]
    SymbolOverflow,
    #[error("stretch factor must be at least 1")]
    StretchZero,
    #[error("stretch is undefined on the identity")]
    StretchIdentity,
}

/// Errors from the cycle and one-line text grammars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at byte {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("number too large at byte {pos}")]
    BadNumber { pos: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("empty input; identity is spelled ()")]
    Empty,
    #[error(transparent)]
    Invalid(#[from] PermError),
}

/// A permutation with finite support, stored as its moved points.
///
/// The derived ordering compares the sorted `(symbol, image)` pairs and is
/// used only as a deterministic set key; ranking by one-line form is
/// [`Permutation::cmp_one_line`].
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    map: BTreeMap<Symbol, Symbol>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self::default()
    }

    fn from_map(map: BTreeMap<Symbol, Symbol>) -> Self {
        #[cfg(debug_assertions)]
        {
            let keys: BTreeSet<Symbol> = map.keys().copied().collect();
            let vals: BTreeSet<Symbol> = map.values().copied().collect();
            debug_assert_eq!(keys, vals, "images must permute the moved points");
            debug_assert!(!map.contains_key(&0), "symbol 0 is invalid");
            debug_assert!(map.iter().all(|(k, v)| k != v), "fixed points must be absent");
        }
        Permutation { map }
    }

    /// The transposition `(a,b)`.
    pub fn transposition(a: Symbol, b: Symbol) -> Result<Self, PermError> {
        if a == 0 || b == 0 {
            return Err(PermError::ZeroSymbol);
        }
        if a == b {
            return Err(PermError::RepeatedSymbol(a));
        }
        let mut map = BTreeMap::new();
        map.insert(a, b);
        map.insert(b, a);
        Ok(Self::from_map(map))
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// Image of `x`, which is `x` itself outside the support.
    pub fn image(&self, x: Symbol) -> Symbol {
        self.map.get(&x).copied().unwrap_or(x)
    }

    /// Moved symbols in increasing order.
    pub fn support(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.map.keys().copied()
    }

    pub fn support_len(&self) -> usize {
        self.map.len()
    }

    pub fn min_moved(&self) -> Option<Symbol> {
        self.map.keys().next().copied()
    }

    pub fn max_moved(&self) -> Option<Symbol> {
        self.map.keys().next_back().copied()
    }

    /// Composition applying `other` first: `(self ∘ other)(x) = self(other(x))`.
    ///
    /// Written multiplicatively, `a.compose(&b)` is the product `ab`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut map = BTreeMap::new();
        for &x in self.map.keys().chain(other.map.keys()) {
            let y = self.image(other.image(x));
            if y != x {
                map.insert(x, y);
            }
        }
        Self::from_map(map)
    }

    pub fn inverse(&self) -> Permutation {
        Self::from_map(self.map.iter().map(|(&k, &v)| (v, k)).collect())
    }

    pub fn is_involution(&self) -> bool {
        self.map.iter().all(|(&k, &v)| self.image(v) == k)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Builds a permutation from validated disjoint cycles.
    pub fn from_cycles(cycles: &CycleList) -> Permutation {
        let mut map = BTreeMap::new();
        for cycle in cycles.cycles() {
            // (p0,...,pk-1) maps each symbol to its predecessor in the list.
            for i in 0..cycle.len() {
                let from = cycle[(i + 1) % cycle.len()];
                map.insert(from, cycle[i]);
            }
        }
        Self::from_map(map)
    }

    /// Validates `cycles` and builds the permutation in one step.
    pub fn from_disjoint_cycles(cycles: &[&[Symbol]]) -> Result<Permutation, PermError> {
        let list = CycleList::new(cycles.iter().map(|c| c.to_vec()).collect())?;
        Ok(Self::from_cycles(&list))
    }

    /// Canonical disjoint cycles: minimum symbol first in each cycle, cycles
    /// ordered by minimum.
    pub fn to_cycles(&self) -> CycleList {
        let mut cycles = Vec::new();
        let mut seen: BTreeSet<Symbol> = BTreeSet::new();
        for &start in self.map.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = start;
            loop {
                seen.insert(x);
                orbit.push(x);
                x = self.image(x);
                if x == start {
                    break;
                }
            }
            // The orbit follows images, but a cycle lists predecessors, so
            // everything after the minimum flips around.
            orbit[1..].reverse();
            cycles.push(orbit);
        }
        CycleList { cycles }
    }

    pub fn from_one_line(line: &OneLine) -> Permutation {
        let mut map = BTreeMap::new();
        for (i, &img) in line.images().iter().enumerate() {
            let x = (i + 1) as Symbol;
            if img != x {
                map.insert(x, img);
            }
        }
        Self::from_map(map)
    }

    pub fn to_one_line(&self, degree: u32) -> Result<OneLine, PermError> {
        let required = self.max_moved().unwrap_or(1).max(1);
        if degree < required {
            return Err(PermError::DegreeTooSmall { degree, required });
        }
        Ok(OneLine {
            images: (1..=degree).map(|x| self.image(x)).collect(),
        })
    }

    /// Adds `r` to every moved symbol. Weight-preserving.
    pub fn shift(&self, r: i64) -> Result<Permutation, PermError> {
        let mut map = BTreeMap::new();
        for (&k, &v) in &self.map {
            let k2 = k as i64 + r;
            let v2 = v as i64 + r;
            if k2 < 1 {
                return Err(PermError::ShiftOutOfRange { symbol: k, shift: r });
            }
            if k2 > u32::MAX as i64 || v2 > u32::MAX as i64 {
                return Err(PermError::SymbolOverflow);
            }
            map.insert(k2 as Symbol, v2 as Symbol);
        }
        Ok(Self::from_map(map))
    }

    /// Multiplies every moved symbol by `t`, then renormalises so the least
    /// moved symbol is 1. Scales weight by exactly `t`.
    pub fn stretch(&self, t: u32) -> Result<Permutation, PermError> {
        if t == 0 {
            return Err(PermError::StretchZero);
        }
        let min = self.min_moved().ok_or(PermError::StretchIdentity)?;
        let t = t as u64;
        let offset = t * min as u64 - 1;
        let mut map = BTreeMap::new();
        for (&k, &v) in &self.map {
            let k2 = t * k as u64 - offset;
            let v2 = t * v as u64 - offset;
            if k2 > u32::MAX as u64 || v2 > u32::MAX as u64 {
                return Err(PermError::SymbolOverflow);
            }
            map.insert(k2 as Symbol, v2 as Symbol);
        }
        Ok(Self::from_map(map))
    }

    /// Orders permutations by their one-line form over a common degree.
    pub fn cmp_one_line(&self, other: &Permutation) -> Ordering {
        let keys: BTreeSet<Symbol> = self.support().chain(other.support()).collect();
        for x in keys {
            match self.image(x).cmp(&other.image(x)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_cycles().fmt(f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    /// Accepts either grammar: cycles `(1,3,2)(5,6)` (identity `()`) or
    /// one-line `[2,3,1,4,6,5]`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s.trim_start().as_bytes().first() {
            Some(b'[') => Ok(Self::from_one_line(&s.parse()?)),
            _ => Ok(Self::from_cycles(&s.parse()?)),
        }
    }
}

/// Disjoint cycles in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleList {
    cycles: Vec<Vec<Symbol>>,
}

impl CycleList {
    /// Validates and canonicalises: every cycle has at least two distinct
    /// nonzero symbols, cycles are pairwise disjoint, each is rotated to
    /// start at its minimum, and cycles are sorted by that minimum.
    pub fn new(cycles: Vec<Vec<Symbol>>) -> Result<Self, PermError> {
        let mut all: BTreeSet<Symbol> = BTreeSet::new();
        let mut canonical = Vec::with_capacity(cycles.len());
        for mut cycle in cycles {
            if cycle.len() < 2 {
                return Err(PermError::CycleTooShort);
            }
            let mut local: BTreeSet<Symbol> = BTreeSet::new();
            for &s in &cycle {
                if s == 0 {
                    return Err(PermError::ZeroSymbol);
                }
                if !local.insert(s) {
                    return Err(PermError::RepeatedSymbol(s));
                }
                if !all.insert(s) {
                    return Err(PermError::OverlappingCycles(s));
                }
            }
            let min_pos = cycle
                .iter()
                .enumerate()
                .min_by_key(|(_, &s)| s)
                .map(|(i, _)| i)
                .unwrap();
            cycle.rotate_left(min_pos);
            canonical.push(cycle);
        }
        canonical.sort_by_key(|c| c[0]);
        Ok(CycleList { cycles: canonical })
    }

    pub fn empty() -> Self {
        CycleList { cycles: Vec::new() }
    }

    pub fn cycles(&self) -> &[Vec<Symbol>] {
        &self.cycles
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

impl fmt::Display for CycleList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, s) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FromStr for CycleList {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = Scanner::new(s);
        let mut cycles = Vec::new();
        p.skip_ws();
        if p.done() {
            return Err(ParseError::Empty);
        }
        while !p.done() {
            p.expect(b'(')?;
            let mut cycle = Vec::new();
            p.skip_ws();
            if p.peek() != Some(b')') {
                loop {
                    cycle.push(p.number()?);
                    p.skip_ws();
                    if p.peek() == Some(b',') {
                        p.advance();
                        p.skip_ws();
                    } else {
                        break;
                    }
                }
            }
            p.expect(b')')?;
            // A bare () contributes nothing; that is how identity is spelled.
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            p.skip_ws();
        }
        Ok(CycleList::new(cycles)?)
    }
}

/// One-line notation: the images of `1..=n` in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneLine {
    images: Vec<Symbol>,
}

impl OneLine {
    /// Requires a rearrangement of `1..=n` with `n >= 1`.
    pub fn new(images: Vec<Symbol>) -> Result<Self, PermError> {
        if images.is_empty() {
            return Err(PermError::EmptyOneLine);
        }
        let n = images.len() as u32;
        let mut seen = alloc::vec![false; images.len()];
        for &img in &images {
            if img < 1 || img > n {
                return Err(PermError::NotARearrangement(n));
            }
            if seen[(img - 1) as usize] {
                return Err(PermError::NotARearrangement(n));
            }
            seen[(img - 1) as usize] = true;
        }
        Ok(OneLine { images })
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[Symbol] {
        &self.images
    }
}

impl fmt::Display for OneLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for OneLine {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = Scanner::new(s);
        p.skip_ws();
        if p.done() {
            return Err(ParseError::Empty);
        }
        p.expect(b'[')?;
        let mut images = Vec::new();
        p.skip_ws();
        if p.peek() != Some(b']') {
            loop {
                images.push(p.number()?);
                p.skip_ws();
                if p.peek() == Some(b',') {
                    p.advance();
                    p.skip_ws();
                } else {
                    break;
                }
            }
        }
        p.expect(b']')?;
        p.skip_ws();
        if let Some(b) = p.peek() {
            return Err(ParseError::UnexpectedChar { ch: b as char, pos: p.pos });
        }
        Ok(OneLine::new(images)?)
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner { bytes: s.as_bytes(), pos: 0 }
    }

    fn done(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn advance(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.advance();
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(got) if got == b => {
                self.advance();
                Ok(())
            }
            Some(got) => Err(ParseError::UnexpectedChar { ch: got as char, pos: self.pos }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn number(&mut self) -> Result<Symbol, ParseError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(b @ b'0'..=b'9') = self.peek() {
            value = value * 10 + (b - b'0') as u64;
            if value > u32::MAX as u64 {
                return Err(ParseError::BadNumber { pos: start });
            }
            self.advance();
        }
        if self.pos == start {
            match self.peek() {
                Some(b) => Err(ParseError::UnexpectedChar { ch: b as char, pos: self.pos }),
                None => Err(ParseError::UnexpectedEnd),
            }
        } else {
            Ok(value as Symbol)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn identity_fixes_everything() {
        let e = Permutation::identity();
        assert!(e.is_identity());
        assert_eq!(e.image(5), 5);
        assert_eq!(e.support().count(), 0);
        assert!(e.to_cycles().is_empty());
        assert_eq!(e.to_string(), "()");
    }

    #[test]
    fn one_line_matches_cycle_form() {
        let p = Permutation::from_one_line(&OneLine::new(vec![2, 3, 1, 4, 6, 5]).unwrap());
        assert_eq!(p.to_string(), "(1,3,2)(5,6)");
        assert_eq!(p.to_one_line(6).unwrap().to_string(), "[2,3,1,4,6,5]");
        assert_eq!(perm("(1,3,2)(5,6)"), p);
        assert_eq!(perm("[2,3,1,4,6,5]"), p);
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let f = perm("(1,2)");
        let g = perm("(2,3)");
        // (fg)(3) = f(g(3)) = f(2) = 1.
        assert_eq!(f.compose(&g).image(3), 1);
        assert_eq!((&f * &g).image(3), 1);
        assert_ne!(f.compose(&g), g.compose(&f));
    }

    #[test]
    fn inverse_reverses_cycles() {
        let p = perm("(1,3,2)");
        assert_eq!(p.inverse(), perm("(1,2,3)"));
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn involution_detection() {
        assert!(perm("(1,4)(2,3)").is_involution());
        assert!(Permutation::identity().is_involution());
        assert!(!perm("(1,2,3)").is_involution());
    }

    #[test]
    fn support_is_sorted_moved_points() {
        let p = perm("(1,2)(3,4)");
        assert_eq!(p.support().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(p.min_moved(), Some(1));
        assert_eq!(p.max_moved(), Some(4));
    }

    #[test]
    fn shift_translates_cycles() {
        assert_eq!(perm("(1,2)(3,4)").shift(4).unwrap(), perm("(5,6)(7,8)"));
        assert_eq!(perm("(1,2,3)").shift(5).unwrap(), perm("(6,7,8)"));
        let p = perm("(2,5)");
        assert_eq!(p.shift(0).unwrap(), p);
        assert_eq!(p.shift(-1).unwrap(), perm("(1,4)"));
        assert_eq!(
            p.shift(-2),
            Err(PermError::ShiftOutOfRange { symbol: 2, shift: -2 })
        );
    }

    #[test]
    fn stretch_scales_and_renormalises() {
        assert_eq!(perm("(1,2)(3,4)").stretch(2).unwrap(), perm("(1,3)(5,7)"));
        assert_eq!(perm("(1,3)(2,4)").stretch(2).unwrap(), perm("(1,5)(3,7)"));
        assert_eq!(perm("(1,4)(2,3)").stretch(2).unwrap(), perm("(1,7)(3,5)"));
        assert_eq!(perm("(1,3)(2,4)").stretch(3).unwrap(), perm("(1,7)(4,10)"));
        // Renormalisation anchors the least moved symbol at 1.
        assert_eq!(perm("(3,5)").stretch(2).unwrap(), perm("(1,5)"));
        let p = perm("(1,2)");
        assert_eq!(p.stretch(1).unwrap(), p);
        assert_eq!(p.stretch(0), Err(PermError::StretchZero));
        assert_eq!(
            Permutation::identity().stretch(2),
            Err(PermError::StretchIdentity)
        );
    }

    #[test]
    fn cycle_list_canonicalises() {
        let c = CycleList::new(vec![vec![6, 5], vec![3, 2, 1]]).unwrap();
        assert_eq!(c.to_string(), "(1,3,2)(5,6)");
    }

    #[test]
    fn cycle_list_rejects_bad_input() {
        assert_eq!(CycleList::new(vec![vec![4]]), Err(PermError::CycleTooShort));
        assert_eq!(CycleList::new(vec![vec![]]), Err(PermError::CycleTooShort));
        assert_eq!(
            CycleList::new(vec![vec![1, 2, 1]]),
            Err(PermError::RepeatedSymbol(1))
        );
        assert_eq!(
            CycleList::new(vec![vec![1, 2], vec![1, 3]]),
            Err(PermError::OverlappingCycles(1))
        );
        assert_eq!(CycleList::new(vec![vec![0, 2]]), Err(PermError::ZeroSymbol));
    }

    #[test]
    fn one_line_validation() {
        assert!(OneLine::new(vec![1, 2, 3]).is_ok());
        assert_eq!(OneLine::new(vec![]), Err(PermError::EmptyOneLine));
        assert_eq!(OneLine::new(vec![1, 1, 3]), Err(PermError::NotARearrangement(3)));
        assert_eq!(OneLine::new(vec![2, 3, 4]), Err(PermError::NotARearrangement(3)));
    }

    #[test]
    fn to_one_line_needs_enough_degree() {
        let p = perm("(5,6)");
        assert_eq!(
            p.to_one_line(5),
            Err(PermError::DegreeTooSmall { degree: 5, required: 6 })
        );
        assert_eq!(p.to_one_line(7).unwrap().to_string(), "[1,2,3,4,6,5,7]");
        assert_eq!(
            Permutation::identity().to_one_line(4).unwrap().to_string(),
            "[1,2,3,4]"
        );
    }

    #[test]
    fn parse_accepts_whitespace_and_rejects_junk() {
        assert_eq!(perm(" ( 1 , 3 , 2 ) ( 5 , 6 ) "), perm("(1,3,2)(5,6)"));
        assert_eq!(perm("()"), Permutation::identity());
        assert!(matches!("".parse::<Permutation>(), Err(ParseError::Empty)));
        assert!(matches!(
            "(1,2".parse::<Permutation>(),
            Err(ParseError::UnexpectedEnd)
        ));
        assert!(matches!(
            "(1,2)x".parse::<Permutation>(),
            Err(ParseError::UnexpectedChar { ch: 'x', .. })
        ));
        assert!(matches!(
            "(4)".parse::<Permutation>(),
            Err(ParseError::Invalid(PermError::CycleTooShort))
        ));
        assert!(matches!(
            "(1,2)(1,3)".parse::<Permutation>(),
            Err(ParseError::Invalid(PermError::OverlappingCycles(1)))
        ));
        assert!(matches!(
            "[2,2,1]".parse::<Permutation>(),
            Err(ParseError::Invalid(PermError::NotARearrangement(3)))
        ));
    }

    #[test]
    fn display_round_trips() {
        for text in ["()", "(1,3,2)(5,6)", "(2,4)(5,9,7)", "(10,20)(30,40)"] {
            assert_eq!(perm(text).to_string(), text);
        }
    }

    #[test]
    fn one_line_ordering() {
        let a = perm("(1,2)");
        let b = perm("(2,3)");
        // a = [2,1,3], b = [1,3,2]: b comes first.
        assert_eq!(b.cmp_one_line(&a), Ordering::Less);
        assert_eq!(a.cmp_one_line(&a), Ordering::Equal);
    }

    #[test]
    fn transposition_validates() {
        assert_eq!(Permutation::transposition(3, 5).unwrap(), perm("(3,5)"));
        assert_eq!(
            Permutation::transposition(3, 3),
            Err(PermError::RepeatedSymbol(3))
        );
        assert_eq!(Permutation::transposition(0, 3), Err(PermError::ZeroSymbol));
    }
}
