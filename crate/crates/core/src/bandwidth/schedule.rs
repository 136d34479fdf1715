use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;

use core::cmp::Reverse;

use super::{Interval, IntervalAssignment};
use crate::instances::{Graph, Ordering};

/// Finds an ordering consistent with a total interval assignment, or
/// reports that none exists.
///
/// This is single-machine scheduling with release times and deadlines:
/// sweep positions `1..=n`, at each position placing the available vertex
/// with the smallest interval end (ties by vertex index).
pub fn schedule_feasible(a: &IntervalAssignment) -> Option<Ordering> {
    let n = a.n();
    let mut by_lo: Vec<usize> = (0..n).collect();
    by_lo.sort_unstable_by_key(|&v| a.get(v).lo);
    for &v in &by_lo {
        let iv = a.get(v);
        if iv.hi < 1 || iv.lo > n as i64 {
            return None;
        }
    }
    let mut heap: BinaryHeap<Reverse<(i64, usize)>> = BinaryHeap::new();
    let mut next = 0usize;
    let mut positions = vec![0usize; n];
    for pos in 1..=n as i64 {
        while next < n && a.get(by_lo[next]).lo <= pos {
            let v = by_lo[next];
            heap.push(Reverse((a.get(v).hi, v)));
            next += 1;
        }
        let Reverse((hi, v)) = heap.pop()?;
        if hi < pos {
            return None; // its deadline already passed
        }
        positions[v] = pos as usize;
    }
    Some(Ordering::new(positions).expect("sweep assigns each position once"))
}

/// One tightening pass followed by scheduling.
///
/// For every edge `uv` (in index order) the interval of `u` is intersected
/// with `[lo(v)-b, hi(v)+b]` and then symmetrically for `v`. If some
/// ordering of bandwidth at most `b` was consistent with `a`, it survives
/// every intersection, and any ordering consistent with the tightened
/// assignment has bandwidth at most `s + b` where `s` is the largest
/// interval size of `a`.
pub fn tighten_and_order(
    g: &Graph,
    a: &IntervalAssignment,
    b: usize,
) -> Option<Ordering> {
    let mut tight = a.clone();
    let b = b as i64;
    for &(u, v) in g.edges() {
        let iv = tight.get(v);
        let iu = tight.get(u).intersect(Interval::new(iv.lo - b, iv.hi + b))?;
        tight.set(u, iu);
        let iv = iv.intersect(Interval::new(iu.lo - b, iu.hi + b))?;
        tight.set(v, iv);
    }
    let ordering = schedule_feasible(&tight)?;
    debug_assert!(a.is_consistent_with(&ordering));
    Some(ordering)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bandwidth::bandwidth_of_ordering;
    use crate::instances::Graph;

    fn assignment(ranges: &[(i64, i64)]) -> IntervalAssignment {
        IntervalAssignment::new(ranges.iter().map(|&(lo, hi)| Interval::new(lo, hi)).collect())
    }

    #[test]
    fn schedules_simple_cases() {
        let a = assignment(&[(1, 2), (1, 2), (3, 3)]);
        let f = schedule_feasible(&a).unwrap();
        assert!(a.is_consistent_with(&f));
        assert!(schedule_feasible(&assignment(&[(1, 1), (1, 1)])).is_none());
    }

    /// Exhaustive oracle: try every ordering.
    fn feasible_bruteforce(a: &IntervalAssignment) -> bool {
        fn go(a: &IntervalAssignment, pos: usize, used: &mut [bool]) -> bool {
            let n = a.n();
            if pos > n {
                return true;
            }
            for v in 0..n {
                if !used[v] && a.get(v).contains(pos as i64) {
                    used[v] = true;
                    if go(a, pos + 1, used) {
                        return true;
                    }
                    used[v] = false;
                }
            }
            false
        }
        let mut used = alloc::vec![false; a.n()];
        go(a, 1, &mut used)
    }

    #[test]
    fn matches_bruteforce_on_random_assignments() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let n = 7usize;
        for _ in 0..200 {
            let ranges: alloc::vec::Vec<(i64, i64)> = (0..n)
                .map(|_| {
                    let lo = rng.gen_range(1..=n as i64);
                    let hi = rng.gen_range(lo..=n as i64);
                    (lo, hi)
                })
                .collect();
            let a = assignment(&ranges);
            let got = schedule_feasible(&a);
            assert_eq!(got.is_some(), feasible_bruteforce(&a));
            if let Some(f) = got {
                assert!(a.is_consistent_with(&f));
            }
        }
    }

    #[test]
    fn tighten_keeps_unique_ordering_and_bounds() {
        // P_2 with both intervals [1,2] and b = 1: s + b = 3, achieved 1.
        let g = Graph::path(2);
        let a = assignment(&[(1, 2), (1, 2)]);
        let f = tighten_and_order(&g, &a, 1).unwrap();
        assert!(bandwidth_of_ordering(&g, &f) <= 3);

        // An assignment consistent with exactly one ordering of bandwidth 1.
        let g = Graph::path(3);
        let a = assignment(&[(1, 1), (2, 2), (3, 3)]);
        let f = tighten_and_order(&g, &a, 1).unwrap();
        assert_eq!(f.sequence(), alloc::vec![0, 1, 2]);
    }
}
