//! Fixed-universe bit set packed into `u64` blocks.
//!
//! All binary operations require both operands to share the same universe
//! size; this is checked with `debug_assert!` only, since every set in the
//! crate is created against a known graph side.

use std::fmt;

const BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    blocks: Vec<u64>,
    universe: usize,
}

#[inline]
fn blocks_for(universe: usize) -> usize {
    universe.div_ceil(BITS)
}

impl BitSet {
    pub fn new(universe: usize) -> Self {
        Self {
            blocks: vec![0; blocks_for(universe)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self {
            blocks: vec![u64::MAX; blocks_for(universe)],
            universe,
        };
        s.trim();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut s = Self::new(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.universe % BITS;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the index universe (not the number of members).
    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "index {i} outside universe {}", self.universe);
        let (w, b) = (i / BITS, i % BITS);
        let was = self.blocks[w] >> b & 1 == 1;
        self.blocks[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, i: usize) -> bool {
        if i >= self.universe {
            return false;
        }
        let (w, b) = (i / BITS, i % BITS);
        let was = self.blocks[w] >> b & 1 == 1;
        self.blocks[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.blocks[i / BITS] >> (i % BITS) & 1 == 1
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.blocks.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.blocks.iter_mut().for_each(|w| *w = 0);
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn intersection_count(&self, other: &BitSet) -> usize {
        debug_assert_eq!(self.universe, other.universe);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    #[inline]
    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    #[inline]
    pub fn difference_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> BitSet {
        let mut s = Self {
            blocks: self.blocks.iter().map(|w| !w).collect(),
            universe: self.universe,
        };
        s.trim();
        s
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.blocks
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * BITS + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            blocks: &self.blocks,
            word: 0,
            current: self.blocks.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Two-layer accumulation used by the super-neighbourhood kernel:
    /// after folding sets `A_1..A_k`, `once` holds indices seen at least once
    /// and `twice` those seen at least twice.
    #[inline]
    pub(crate) fn fold_twice(once: &mut BitSet, twice: &mut BitSet, a: &BitSet) {
        for ((o, t), w) in once.blocks.iter_mut().zip(twice.blocks.iter_mut()).zip(&a.blocks) {
            *t |= *o & w;
            *o |= w;
        }
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    blocks: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * BITS + tz);
            }
            self.word += 1;
            if self.word >= self.blocks.len() {
                return None;
            }
            self.current = self.blocks[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a BitSet {
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
    fn insert_remove_count() {
        let mut s = BitSet::new(130);
        assert!(s.insert(0));
        assert!(s.insert(64));
        assert!(s.insert(129));
        assert!(!s.insert(64));
        assert_eq!(s.count(), 3);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert!(s.remove(64));
        assert!(!s.contains(64));
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn full_and_complement_respect_universe() {
        let f = BitSet::full(70);
        assert_eq!(f.count(), 70);
        let mut s = BitSet::new(70);
        s.insert(3);
        assert_eq!(s.complement().count(), 69);
        assert_eq!(BitSet::full(0).count(), 0);
        assert_eq!(BitSet::new(0).first(), None);
    }

    #[test]
    fn fold_twice_tracks_multiplicity() {
        let a = BitSet::from_indices(8, [0, 1, 2]);
        let b = BitSet::from_indices(8, [1, 2, 3]);
        let c = BitSet::from_indices(8, [2, 5]);
        let mut once = BitSet::new(8);
        let mut twice = BitSet::new(8);
        for s in [&a, &b, &c] {
            BitSet::fold_twice(&mut once, &mut twice, s);
        }
        assert_eq!(once.to_vec(), vec![0, 1, 2, 3, 5]);
        assert_eq!(twice.to_vec(), vec![1, 2]);
    }

    #[test]
    fn set_algebra() {
        let a = BitSet::from_indices(100, [1, 50, 99]);
        let b = BitSet::from_indices(100, [50, 99, 7]);
        assert_eq!(a.intersection_count(&b), 2);
        assert_eq!(a.union(&b).count(), 4);
        assert_eq!(a.difference(&b).to_vec(), vec![1]);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(!a.is_disjoint(&b));
    }
}
