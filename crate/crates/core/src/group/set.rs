//! Dense membership sets over element indices of a fixed group.

use std::fmt;

/// A subset of group elements, stored as a bitmask over indices `[0, owner_order)`.
///
/// The cardinality is cached and unused high bits are kept zero, so equality
/// and hashing work directly on the words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    owner_order: usize,
    words: Vec<u64>,
    len: usize,
}

const WORD_BITS: usize = 64;

impl ElementSet {
    pub fn empty(owner_order: usize) -> Self {
        let nwords = owner_order.div_ceil(WORD_BITS);
        ElementSet {
            owner_order,
            words: vec![0; nwords],
            len: 0,
        }
    }

    pub fn full(owner_order: usize) -> Self {
        let mut s = Self::empty(owner_order);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.clear_tail();
        s.len = owner_order;
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(owner_order: usize, iter: I) -> Self {
        let mut s = Self::empty(owner_order);
        for i in iter {
            s.insert(i);
        }
        s
    }

    /// Zero out bits at positions >= owner_order in the last word.
    fn clear_tail(&mut self) {
        let tail = self.owner_order % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn owner_order(&self) -> usize {
        self.owner_order
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.owner_order);
        self.words[i / WORD_BITS] & (1u64 << (i % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.owner_order, "index {i} out of range");
        let w = &mut self.words[i / WORD_BITS];
        let bit = 1u64 << (i % WORD_BITS);
        if *w & bit == 0 {
            *w |= bit;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn remove(&mut self, i: usize) -> bool {
        assert!(i < self.owner_order, "index {i} out of range");
        let w = &mut self.words[i / WORD_BITS];
        let bit = 1u64 << (i % WORD_BITS);
        if *w & bit != 0 {
            *w &= !bit;
            self.len -= 1;
            true
        } else {
            false
        }
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        assert_eq!(self.owner_order, other.owner_order);
        let mut len = 0;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
            len += a.count_ones() as usize;
        }
        self.len = len;
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        assert_eq!(self.owner_order, other.owner_order);
        let mut len = 0;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
            len += a.count_ones() as usize;
        }
        self.len = len;
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        assert_eq!(self.owner_order, other.owner_order);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_strict_subset(&self, other: &ElementSet) -> bool {
        self.len < other.len && self.is_subset(other)
    }

    /// Ascending iterator over member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    pub fn min_member(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Raw words, usable as a deduplication key.
    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = ElementSet::empty(100);
        assert!(s.is_empty());
        assert!(s.insert(3));
        assert!(!s.insert(3));
        s.insert(64);
        s.insert(99);
        assert_eq!(s.len(), 3);
        assert!(s.contains(64));
        assert!(!s.contains(65));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 64, 99]);
        assert!(s.remove(64));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn full_and_tail_bits() {
        let s = ElementSet::full(70);
        assert_eq!(s.len(), 70);
        assert_eq!(s.iter().count(), 70);
        // words equality must be canonical: full(70) == itself rebuilt
        let t = ElementSet::from_indices(70, 0..70);
        assert_eq!(s, t);
    }

    #[test]
    fn subset_and_intersection() {
        let a = ElementSet::from_indices(10, [1, 2, 5]);
        let b = ElementSet::from_indices(10, [1, 2, 5, 7]);
        assert!(a.is_subset(&b));
        assert!(a.is_strict_subset(&b));
        assert!(!b.is_subset(&a));
        let c = a.intersection(&b);
        assert_eq!(c, a);
        let d = ElementSet::from_indices(10, [2, 7, 9]);
        assert_eq!(
            a.intersection(&d).iter().collect::<Vec<_>>(),
            vec![2]
        );
        assert_eq!(a.union(&d).len(), 5);
    }
}
