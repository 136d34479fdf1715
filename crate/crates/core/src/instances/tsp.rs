use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::weight::{Digest, Weight};
use crate::{Error, Result};

/// A complete directed instance on `n >= 2` cities whose (possibly
/// asymmetric) weight matrix satisfies the triangle inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TspInstance {
    n: usize,
    w: Vec<Weight>, // row-major n*n, diagonal entries unused (stored as 0)
}

impl TspInstance {
    /// Validates nonnegativity and the triangle inequality over all ordered
    /// triples of distinct cities; on violation the witness triple is named.
    pub fn new(n: usize, mut w: Vec<Weight>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter("TSP instance needs n >= 2"));
        }
        assert_eq!(w.len(), n * n, "weight matrix must be n*n");
        for i in 0..n {
            w[i * n + i] = Weight::zero();
        }
        for (idx, entry) in w.iter().enumerate() {
            if entry.is_negative() {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    bound: usize::MAX,
                }); // unreachable via parsers; keep weights nonnegative
            }
        }
        for x in 0..n {
            for y in 0..n {
                if y == x {
                    continue;
                }
                for z in 0..n {
                    if z == x || z == y {
                        continue;
                    }
                    if w[x * n + z] > &w[x * n + y] + &w[y * n + z] {
                        return Err(Error::TriangleViolation { x, y, z });
                    }
                }
            }
        }
        Ok(TspInstance { n, w })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, from: usize, to: usize) -> &Weight {
        &self.w[from * self.n + to]
    }

    /// Sub-instance induced on `verts` (triangle inequality is inherited).
    pub fn induced(&self, verts: &[usize]) -> TspInstance {
        let m = verts.len();
        let mut w = vec![Weight::zero(); m * m];
        for (i, &vi) in verts.iter().enumerate() {
            for (j, &vj) in verts.iter().enumerate() {
                if i != j {
                    w[i * m + j] = self.weight(vi, vj).clone();
                }
            }
        }
        TspInstance::new(m, w).expect("induced sub-instance stays semi-metric")
    }

    pub fn digest(&self) -> u64 {
        let mut d = Digest::new();
        d.update(b"atsp");
        d.update_usize(self.n);
        for w in &self.w {
            d.update_rational(w);
        }
        d.finish()
    }
}

/// A directed Hamiltonian cycle given as the cyclic visiting sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tour {
    order: Vec<usize>,
}

impl Tour {
    pub fn new(order: Vec<usize>, n: usize) -> Result<Self> {
        if order.len() != n {
            return Err(Error::NotAPermutation);
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Tour { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Total weight including the closing arc.
    pub fn weight(&self, inst: &TspInstance) -> Weight {
        let n = self.order.len();
        let mut total = Weight::zero();
        for i in 0..n {
            total += inst.weight(self.order[i], self.order[(i + 1) % n]);
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::w_int;

    fn matrix(n: usize, entries: &[i64]) -> Vec<Weight> {
        entries.iter().map(|&x| w_int(x)).collect()
    }

    #[test]
    fn accepts_equilateral() {
        let t = TspInstance::new(3, matrix(3, &[0, 1, 1, 1, 0, 1, 1, 1, 0])).unwrap();
        assert_eq!(t.weight(0, 2), &w_int(1));
    }

    #[test]
    fn names_violation_witness() {
        let err = TspInstance::new(3, matrix(3, &[0, 1, 10, 1, 0, 1, 1, 1, 0])).unwrap_err();
        assert_eq!(err, Error::TriangleViolation { x: 0, y: 1, z: 2 });
    }

    #[test]
    fn accepts_asymmetric() {
        // w(0,1)=1, w(1,0)=2, all remaining arcs 2: all six triples hold.
        let t = TspInstance::new(3, matrix(3, &[0, 1, 2, 2, 0, 2, 2, 2, 0])).unwrap();
        assert_eq!(t.weight(1, 0), &w_int(2));
    }

    #[test]
    fn tour_weight_closes_cycle() {
        let t = TspInstance::new(3, matrix(3, &[0, 1, 1, 1, 0, 1, 1, 1, 0])).unwrap();
        let tour = Tour::new(alloc::vec![0, 2, 1], 3).unwrap();
        assert_eq!(tour.weight(&t), w_int(3));
        assert!(Tour::new(alloc::vec![0, 0, 1], 3).is_err());
    }
}
