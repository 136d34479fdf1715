//! Compact subsets of a fixed universe `{0, .., n-1}`.
//!
//! Word-packed bitsets with O(words) union/difference/popcount; the 2^n
//! enumerations in the exact solvers live on these.

use alloc::vec;
use alloc::vec::Vec;

/// A subset of `{0, .., len-1}` stored as packed 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    len: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(len: usize) -> Self {
        Subset {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for w in 0..s.words.len() {
            s.words[w] = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_elements(len: usize, elements: &[usize]) -> Self {
        let mut s = Self::empty(len);
        for &e in elements {
            s.insert(e);
        }
        s
    }

    /// Universe size this subset lives in.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, e: usize) {
        assert!(e < self.len, "element {e} outside universe {}", self.len);
        self.words[e / 64] |= 1 << (e % 64);
    }

    pub fn remove(&mut self, e: usize) {
        assert!(e < self.len);
        self.words[e / 64] &= !(1 << (e % 64));
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.len && self.words[e / 64] >> (e % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.zip(other, |a, b| a | b)
    }

    pub fn union_with(&mut self, other: &Subset) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect(&self, other: &Subset) -> Subset {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Subset {
        let mut out = Subset {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.trim();
        out
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Iterates elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            core::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip(&self, other: &Subset, f: impl Fn(u64, u64) -> u64) -> Subset {
        assert_eq!(self.len, other.len, "universe size mismatch");
        Subset {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1 << rem) - 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let a = Subset::from_elements(70, &[0, 3, 64, 69]);
        let b = Subset::from_elements(70, &[3, 5, 64]);
        assert_eq!(a.count(), 4);
        assert!(a.contains(64) && !a.contains(65));
        assert_eq!(a.union(&b).elements(), vec![0, 3, 5, 64, 69]);
        assert_eq!(a.intersect(&b).elements(), vec![3, 64]);
        assert_eq!(a.difference(&b).elements(), vec![0, 69]);
        assert!(Subset::from_elements(70, &[3, 64]).is_subset_of(&a));
        assert_eq!(Subset::full(70).count(), 70);
        assert_eq!(Subset::full(70).complement(), Subset::empty(70));
    }

    proptest! {
        #[test]
        fn set_algebra(mut xs in proptest::collection::vec(0usize..130, 0..40),
                       mut ys in proptest::collection::vec(0usize..130, 0..40)) {
            xs.sort_unstable();
            xs.dedup();
            ys.sort_unstable();
            ys.dedup();
            let a = Subset::from_elements(130, &xs);
            let b = Subset::from_elements(130, &ys);
            let mut expect_union = xs.clone();
            expect_union.extend(ys.iter().copied());
            expect_union.sort_unstable();
            expect_union.dedup();
            prop_assert_eq!(a.union(&b).elements(), expect_union);
            let expect_diff: alloc::vec::Vec<usize> =
                xs.iter().copied().filter(|e| !ys.contains(e)).collect();
            prop_assert_eq!(a.difference(&b).elements(), expect_diff);
            prop_assert_eq!(a.count(), xs.len());
            prop_assert_eq!(a.difference(&b).union(&a.intersect(&b)), a);
        }
    }
}
