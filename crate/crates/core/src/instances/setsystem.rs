use alloc::vec::Vec;

use num_traits::Signed;

use crate::subset::Subset;
use crate::weight::{sum, Digest, Weight};
use crate::{Error, Result};

/// A weighted family of subsets of a fixed universe `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    universe: usize,
    sets: Vec<Subset>,
    weights: Vec<Weight>,
}

impl SetSystem {
    /// Builds a set system from element lists; weights must be nonnegative.
    pub fn new(universe: usize, sets: Vec<Vec<usize>>, weights: Vec<Weight>) -> Result<Self> {
        assert_eq!(sets.len(), weights.len(), "one weight per set");
        let mut packed = Vec::with_capacity(sets.len());
        for set in &sets {
            for &e in set {
                if e >= universe {
                    return Err(Error::IndexOutOfRange {
                        index: e,
                        bound: universe,
                    });
                }
            }
            packed.push(Subset::from_elements(universe, set));
        }
        Self::from_subsets(universe, packed, weights)
    }

    /// Builds a set system from packed subsets.
    ///
    /// An empty family is permitted (it arises as a residual sub-instance);
    /// parsers enforce `m >= 1` on external input.
    pub fn from_subsets(universe: usize, sets: Vec<Subset>, weights: Vec<Weight>) -> Result<Self> {
        for (i, w) in weights.iter().enumerate() {
            if w.is_negative() {
                return Err(Error::NegativeWeight { set: i });
            }
        }
        for s in &sets {
            assert_eq!(s.universe(), universe, "subset universe mismatch");
        }
        Ok(SetSystem {
            universe,
            sets,
            weights,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set(&self, i: usize) -> &Subset {
        &self.sets[i]
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn union_all(&self) -> Subset {
        let mut u = Subset::empty(self.universe);
        for s in &self.sets {
            u.union_with(s);
        }
        u
    }

    /// Whether the whole universe can be covered.
    pub fn is_coverable(&self) -> bool {
        self.union_all() == Subset::full(self.universe)
    }

    /// All weights equal to one.
    pub fn is_unit_weighted(&self) -> bool {
        use num_traits::One;
        self.weights.iter().all(|w| w.is_one())
    }

    pub fn digest(&self) -> u64 {
        let mut d = Digest::new();
        d.update(b"scp");
        d.update_usize(self.universe);
        d.update_usize(self.sets.len());
        for (s, w) in self.sets.iter().zip(&self.weights) {
            d.update_rational(w);
            for e in s.iter() {
                d.update_usize(e);
            }
            d.update(b";");
        }
        d.finish()
    }
}

/// A choice of set indices; feasible when the chosen sets cover the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    chosen: Vec<usize>,
}

impl Cover {
    /// Builds a cover from indices (sorted, de-duplicated).
    pub fn new(mut chosen: Vec<usize>) -> Self {
        chosen.sort_unstable();
        chosen.dedup();
        Cover { chosen }
    }

    pub fn empty() -> Self {
        Cover { chosen: Vec::new() }
    }

    pub fn chosen(&self) -> &[usize] {
        &self.chosen
    }

    pub fn len(&self) -> usize {
        self.chosen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chosen.is_empty()
    }

    pub fn weight(&self, system: &SetSystem) -> Weight {
        sum(self.chosen.iter().map(|&i| system.weight(i)))
    }

    pub fn is_feasible(&self, system: &SetSystem) -> bool {
        let mut covered = Subset::empty(system.universe_size());
        for &i in &self.chosen {
            covered.union_with(system.set(i));
        }
        covered == Subset::full(system.universe_size())
    }
}
