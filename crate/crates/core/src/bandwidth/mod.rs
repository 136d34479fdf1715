//! Bandwidth machinery: interval assignments, the scheduling step that
//! turns a consistent assignment into an ordering, the search-tree
//! approximation schemes, and the matching-based halving reduction.

mod reduce;
mod schedule;
mod scheme;

pub use reduce::{bandwidth_merge, bandwidth_reduce, BandwidthReduction};
pub use schedule::{schedule_feasible, tighten_and_order};
pub use scheme::{
    approx_bandwidth, approx_bandwidth_3, approx_bandwidth_scheme, approx_bandwidth_warmup,
    scheme_with_stats, BSearch, SchemeStats,
};

use alloc::vec::Vec;

use crate::instances::{Graph, Ordering};
use crate::{Error, Result};

/// A contiguous block of positions `[lo, hi]`.
///
/// Intermediate intervals may overhang `{1,..,n}` on either side; they are
/// cut back before scheduling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty interval [{lo},{hi}]");
        Interval { lo, hi }
    }

    pub fn size(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn contains(&self, p: i64) -> bool {
        self.lo <= p && p <= self.hi
    }

    pub fn intersect(&self, other: Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then(|| Interval::new(lo, hi))
    }

    /// Cut back to `{1,..,n}`.
    pub fn clamp(&self, n: usize) -> Option<Interval> {
        self.intersect(Interval::new(1, n as i64))
    }
}

/// A total assignment of one interval per vertex.
#[derive(Debug, Clone)]
pub struct IntervalAssignment {
    intervals: Vec<Interval>,
}

impl IntervalAssignment {
    pub fn new(intervals: Vec<Interval>) -> Self {
        IntervalAssignment { intervals }
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn get(&self, v: usize) -> Interval {
        self.intervals[v]
    }

    pub fn set(&mut self, v: usize, interval: Interval) {
        self.intervals[v] = interval;
    }

    /// Size of the largest interval.
    pub fn max_size(&self) -> usize {
        self.intervals.iter().map(Interval::size).max().unwrap_or(0)
    }

    /// Whether `ordering` places every vertex inside its interval.
    pub fn is_consistent_with(&self, ordering: &Ordering) -> bool {
        (0..self.n()).all(|v| self.intervals[v].contains(ordering.position(v) as i64))
    }
}

/// A spanning tree rooted by breadth-first search; parents precede children
/// in `order`.
#[derive(Debug, Clone)]
pub struct RootedSpanningTree {
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    order: Vec<usize>,
}

impl RootedSpanningTree {
    /// BFS tree from `root`; fails on disconnected input.
    pub fn bfs(g: &Graph, root: usize) -> Result<Self> {
        let n = g.n();
        let mut parent = alloc::vec![None; n];
        let mut depth = alloc::vec![0usize; n];
        let mut seen = alloc::vec![false; n];
        let mut order = Vec::with_capacity(n);
        if n > 0 {
            seen[root] = true;
            order.push(root);
            let mut head = 0;
            while head < order.len() {
                let v = order[head];
                head += 1;
                for &w in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some(v);
                        depth[w] = depth[v] + 1;
                        order.push(w);
                    }
                }
            }
        }
        if order.len() != n {
            return Err(Error::Disconnected);
        }
        Ok(RootedSpanningTree {
            root,
            parent,
            depth,
            order,
        })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Vertices in an order where every vertex is preceded by its parent.
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Output of one approximation run.
#[derive(Debug, Clone)]
pub struct BandwidthResult {
    pub ordering: Ordering,
    /// Bandwidth of `ordering`.
    pub achieved: usize,
    /// The width parameter the run was produced at.
    pub b_used: usize,
    /// The scheme's proven multiplier (2, 3, or 4r-1).
    pub guarantee: usize,
}

/// Maximum edge stretch `max |f(u) - f(v)|`; zero for edgeless graphs.
pub fn bandwidth_of_ordering(g: &Graph, f: &Ordering) -> usize {
    assert_eq!(g.n(), f.n(), "ordering size must match the graph");
    g.edges()
        .iter()
        .map(|&(u, v)| f.position(u).abs_diff(f.position(v)))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stretch_of_orderings() {
        let p3 = Graph::path(3);
        assert_eq!(bandwidth_of_ordering(&p3, &Ordering::identity(3)), 1);
        // Middle vertex last: sequence (0, 2, 1) stretches edge 0-1 to 2.
        let f = Ordering::from_sequence(&[0, 2, 1]).unwrap();
        assert_eq!(bandwidth_of_ordering(&p3, &f), 2);
        let edgeless = Graph::new(4, []).unwrap();
        assert_eq!(bandwidth_of_ordering(&edgeless, &Ordering::identity(4)), 0);
    }

    #[test]
    fn bfs_tree_is_deterministic_and_fails_on_disconnected() {
        let g = Graph::cycle(5);
        let t = RootedSpanningTree::bfs(&g, 0).unwrap();
        assert_eq!(t.order(), &[0, 1, 4, 2, 3]);
        assert_eq!(t.depth(3), 2);
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            RootedSpanningTree::bfs(&split, 0).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn interval_cutting() {
        let i = Interval::new(-3, 5);
        assert_eq!(i.clamp(4), Some(Interval::new(1, 4)));
        assert_eq!(Interval::new(7, 9).clamp(4), None);
        assert_eq!(i.size(), 9);
    }
}
