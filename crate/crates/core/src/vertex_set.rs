//! Fixed-universe vertex bitsets.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A subset of `{0, .., universe - 1}` stored as a packed bitset.
///
/// Ordering is lexicographic on the ascending member lists, so `{0, 3}`
/// sorts before `{1}` and `{0}` sorts before `{0, 1}`. Every enumeration in
/// the crate that promises a deterministic order uses this ordering.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    universe: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet { words: vec![0; universe.div_ceil(WORD)], universe }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = VertexSet::new(universe);
        for (i, w) in set.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = (lo + WORD).min(universe);
            let bits = hi - lo;
            *w = if bits == WORD { u64::MAX } else { (1u64 << bits) - 1 };
        }
        set
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut set = VertexSet::new(universe);
        set.insert(v);
        set
    }

    /// Builds a set from members; panics if a member is outside the universe.
    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut set = VertexSet::new(universe);
        for v in members {
            set.insert(v);
        }
        set
    }

    /// Like [`VertexSet::from_members`] but reports the first out-of-range member.
    pub fn try_from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Result<Self, usize> {
        let mut set = VertexSet::new(universe);
        for v in members {
            if v >= universe {
                return Err(v);
            }
            set.insert(v);
        }
        Ok(set)
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.universe).difference(self)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.check_universe(other);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Members rendered with 1-based labels.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    /// The same members viewed inside a larger universe.
    pub fn widen(&self, universe: usize) -> VertexSet {
        assert!(universe >= self.universe);
        let mut words = self.words.clone();
        words.resize(universe.div_ceil(WORD), 0);
        VertexSet { words, universe }
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        self.check_universe(other);
        VertexSet {
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
            universe: self.universe,
        }
    }

    #[inline]
    fn check_universe(&self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe, "vertex sets over different universes");
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    /// 1-based, e.g. `{1, 3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement_across_word_boundary() {
        for n in [0, 1, 63, 64, 65, 130] {
            let full = VertexSet::full(n);
            assert_eq!(full.len(), n);
            assert!(full.complement().is_empty());
            assert_eq!(VertexSet::new(n).complement(), full);
        }
    }

    #[test]
    fn lexicographic_order() {
        let a = VertexSet::from_members(5, [0, 3]);
        let b = VertexSet::from_members(5, [1]);
        let c = VertexSet::from_members(5, [0]);
        let d = VertexSet::from_members(5, [0, 1]);
        assert!(a < b);
        assert!(c < d);
        assert!(d < a);
    }

    #[test]
    fn iter_counts_and_first() {
        let s = VertexSet::from_members(100, [3, 64, 99]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 64, 99]);
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.to_one_based(), vec![4, 65, 100]);
        assert_eq!(format!("{s}"), "{4, 65, 100}");
        assert_eq!(VertexSet::new(7).first(), None);
    }

    #[test]
    fn try_from_members_reports_out_of_range() {
        assert_eq!(VertexSet::try_from_members(3, [0, 5]), Err(5));
    }
}
