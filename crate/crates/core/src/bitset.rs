//! Small fixed-width bitsets used for events and constraint zero sets.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A set of indices below a fixed universe size.
///
/// Two sets are only comparable when built for the same universe size.
/// The [`Ord`] instance is the canonical event order: by cardinality, then
/// lexicographically on the sorted member list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: SmallVec<[u64; 2]>,
}

impl BitSet {
    pub fn new(universe: usize) -> Self {
        BitSet {
            words: SmallVec::from_elem(0, universe.div_ceil(64).max(1)),
        }
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = BitSet::new(universe);
        for i in indices {
            set.insert(i);
        }
        set
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        self.zip(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, the empty set first.
    pub fn subsets(&self) -> Vec<BitSet> {
        let members = self.to_vec();
        let universe = self.words.len() * 64;
        let mut out = Vec::with_capacity(1 << members.len());
        for mask in 0u64..(1u64 << members.len()) {
            let mut s = BitSet::new(universe);
            for (k, &m) in members.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    s.insert(m);
                }
            }
            out.push(s);
        }
        out
    }

    fn zip(&self, other: &BitSet, op: impl Fn(u64, u64) -> u64) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| op(a, b)).collect(),
        }
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_lex() {
        let a = BitSet::from_indices(70, [65]);
        let b = BitSet::from_indices(70, [0, 1]);
        let c = BitSet::from_indices(70, [0, 2]);
        let e = BitSet::new(70);
        let mut v = vec![c.clone(), b.clone(), a.clone(), e.clone()];
        v.sort();
        assert_eq!(v, vec![e, a, b, c]);
    }

    #[test]
    fn set_algebra() {
        let a = BitSet::from_indices(10, [1, 3, 5]);
        let b = BitSet::from_indices(10, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 5]);
        assert!(!a.is_disjoint(&b));
        assert!(BitSet::from_indices(10, [3]).is_subset(&a));
        assert_eq!(a.subsets().len(), 8);
    }
}
