use alloc::vec;
use alloc::vec::Vec;

use super::{
    bandwidth_of_ordering, tighten_and_order, BandwidthResult, Interval, IntervalAssignment,
    RootedSpanningTree,
};
use crate::instances::{Graph, Ordering};
use crate::weight::ceil_div;
use crate::{Error, Result};

/// Diagnostics from one search-tree run.
#[derive(Debug, Clone)]
pub struct SchemeStats {
    /// Complete assignments generated (over all root placements).
    pub leaves: u64,
    /// Root interval size index chosen from the depth histogram.
    pub i0: usize,
    /// Vertices whose depth class makes them two-way branch points.
    pub n_hat: usize,
    /// Distinct vertices at which a two-way branch actually fired.
    pub branch_vertices: usize,
}

/// Warm-up scheme: disjoint intervals of size `b`, three-way extension of
/// each next vertex, plus the polynomial-time filter that every graph edge
/// must span equal-or-adjacent intervals. Any surviving assignment yields
/// an ordering of bandwidth at most `2b - 1`; if `bw(G) <= b`, at least one
/// survives.
pub fn approx_bandwidth_warmup(g: &Graph, b: usize) -> Result<Option<BandwidthResult>> {
    assert!(b >= 1, "width parameter must be positive");
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n <= 1 {
        return Ok(Some(trivial(n, b, 2)));
    }
    let tree = RootedSpanningTree::bfs(g, 0)?;
    let num_iv = ceil_div(n, b);
    let cap: Vec<usize> = (0..num_iv).map(|j| b.min(n - j * b)).collect();
    let mut search = Warmup {
        g,
        tree: &tree,
        num_iv,
        cap,
        slot: vec![usize::MAX; n],
        count: vec![0; num_iv],
        leaves: 0,
        best: None,
    };
    for j0 in 0..num_iv {
        let root = tree.order()[0];
        search.slot[root] = j0;
        search.count[j0] += 1;
        search.dfs(1);
        search.count[j0] -= 1;
        search.slot[root] = usize::MAX;
    }
    let cap128 = (n as u128) * 3u128.saturating_pow(n as u32);
    assert!(
        u128::from(search.leaves) <= cap128,
        "assignment count exceeded n * 3^n"
    );
    let bound = 2 * b - 1;
    Ok(search.best.and_then(|(achieved, ordering)| {
        (achieved <= bound).then_some(BandwidthResult {
            ordering,
            achieved,
            b_used: b,
            guarantee: 2,
        })
    }))
}

struct Warmup<'a> {
    g: &'a Graph,
    tree: &'a RootedSpanningTree,
    num_iv: usize,
    cap: Vec<usize>,
    slot: Vec<usize>,
    count: Vec<usize>,
    leaves: u64,
    best: Option<(usize, Ordering)>,
}

impl Warmup<'_> {
    fn dfs(&mut self, idx: usize) {
        let order = self.tree.order();
        if idx == order.len() {
            self.leaf();
            return;
        }
        let v = order[idx];
        let w = self.tree.parent(v).expect("non-root vertices have parents");
        let jw = self.slot[w] as i64;
        for dj in [-1i64, 0, 1] {
            let j = jw + dj;
            if j < 0 || j >= self.num_iv as i64 {
                continue;
            }
            let j = j as usize;
            if self.count[j] >= self.cap[j] {
                continue;
            }
            // Edge-span filter: every already-assigned neighbor must sit in
            // an equal or adjacent interval.
            if self
                .g
                .neighbors(v)
                .iter()
                .any(|&u| self.slot[u] != usize::MAX && self.slot[u].abs_diff(j) > 1)
            {
                continue;
            }
            self.slot[v] = j;
            self.count[j] += 1;
            self.dfs(idx + 1);
            self.count[j] -= 1;
            self.slot[v] = usize::MAX;
        }
    }

    fn leaf(&mut self) {
        self.leaves += 1;
        // Capacities are saturated (counts sum to n), so ordering vertices
        // by (interval, index) fills positions exactly.
        let mut verts: Vec<usize> = (0..self.g.n()).collect();
        verts.sort_unstable_by_key(|&v| (self.slot[v], v));
        let f = Ordering::from_sequence(&verts).expect("interval layout is a permutation");
        let achieved = bandwidth_of_ordering(self.g, &f);
        if self.best.as_ref().is_none_or(|(b, _)| achieved < *b) {
            self.best = Some((achieved, f));
        }
    }
}

/// Overlapping intervals of size `2b` with two-way branching; equivalent to
/// the general scheme at `r = 1`. Success means an ordering of bandwidth at
/// most `3b`, guaranteed whenever `bw(G) <= b`.
pub fn approx_bandwidth_3(g: &Graph, b: usize) -> Result<Option<BandwidthResult>> {
    approx_bandwidth_scheme(g, b, 1)
}

/// The general search-tree scheme with interval sizes `2ib` for
/// `r <= i <= 2r-1`: non-branching growth until the size cap, then a
/// two-way split. Success means an ordering of bandwidth at most
/// `(4r-1) b`, guaranteed whenever `bw(G) <= b`.
pub fn approx_bandwidth_scheme(g: &Graph, b: usize, r: usize) -> Result<Option<BandwidthResult>> {
    scheme_with_stats(g, b, r).map(|(res, _)| res)
}

/// As [`approx_bandwidth_scheme`], also returning search diagnostics.
pub fn scheme_with_stats(
    g: &Graph,
    b: usize,
    r: usize,
) -> Result<(Option<BandwidthResult>, SchemeStats)> {
    assert!(b >= 1 && r >= 1, "parameters must be positive");
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let empty_stats = SchemeStats {
        leaves: 0,
        i0: r,
        n_hat: 0,
        branch_vertices: 0,
    };
    if n <= 1 {
        return Ok((Some(trivial(n, b, 4 * r - 1)), empty_stats));
    }
    let tree = RootedSpanningTree::bfs(g, 0)?;
    // A vertex at depth d gets interval size index ((i0 + d - r) mod r) + r,
    // and two-way branching fires exactly where (i0 + d) % r == 0. Pick the
    // i0 in r..=2r-1 whose branching class is rarest.
    let mut class_count = vec![0usize; r];
    for v in 0..n {
        class_count[(r - tree.depth(v) % r) % r] += 1;
    }
    let best_class = (0..r).min_by_key(|&c| (class_count[c], c)).unwrap();
    let i0 = r + best_class;
    let n_hat = class_count[best_class];
    assert!(n_hat * r <= n, "pigeonhole over depth classes");

    let num_iv = ceil_div(n, b);
    let mut search = Scheme {
        g,
        tree: &tree,
        b: b as i64,
        r,
        n,
        num_iv: num_iv as i64,
        slot: vec![(0i64, 0usize); n],
        branched: vec![false; n],
        leaves: 0,
        best: None,
    };
    for j0 in 0..num_iv {
        let root = tree.order()[0];
        search.slot[root] = (j0 as i64, i0);
        search.dfs(1);
    }
    let cap128 = (num_iv as u128) * 2u128.saturating_pow(n_hat as u32);
    assert!(
        u128::from(search.leaves) <= cap128,
        "assignment count exceeded ceil(n/b) * 2^n_hat"
    );
    let branch_vertices = search.branched.iter().filter(|&&x| x).count();
    debug_assert!(branch_vertices <= n_hat);
    let stats = SchemeStats {
        leaves: search.leaves,
        i0,
        n_hat,
        branch_vertices,
    };
    let bound = (4 * r - 1) * b;
    let result = search.best.and_then(|(achieved, ordering)| {
        (achieved <= bound).then_some(BandwidthResult {
            ordering,
            achieved,
            b_used: b,
            guarantee: 4 * r - 1,
        })
    });
    Ok((result, stats))
}

struct Scheme<'a> {
    g: &'a Graph,
    tree: &'a RootedSpanningTree,
    b: i64,
    r: usize,
    n: usize,
    num_iv: i64,
    slot: Vec<(i64, usize)>, // (start index j, size index i); interval [jb+1, (j+2i)b]
    branched: Vec<bool>,
    leaves: u64,
    best: Option<(usize, Ordering)>,
}

impl Scheme<'_> {
    fn dfs(&mut self, idx: usize) {
        let order = self.tree.order();
        if idx == order.len() {
            self.leaf();
            return;
        }
        let v = order[idx];
        let w = self.tree.parent(v).expect("non-root vertices have parents");
        let (j, i) = self.slot[w];
        if i + 1 <= 2 * self.r - 1 {
            // Grow by b on both sides; still overlaps the line.
            self.slot[v] = (j - 1, i + 1);
            self.dfs(idx + 1);
        } else {
            // Size cap reached: split into two intervals of size index r,
            // skipping a child with no overlap with 1..=n.
            self.branched[v] = true;
            let r = self.r as i64;
            if j - 1 + 2 * r >= 1 {
                self.slot[v] = (j - 1, self.r);
                self.dfs(idx + 1);
            }
            if j - 1 + 2 * r <= self.num_iv - 1 {
                self.slot[v] = (j - 1 + 2 * r, self.r);
                self.dfs(idx + 1);
            }
        }
    }

    fn leaf(&mut self) {
        self.leaves += 1;
        let intervals: Vec<Interval> = self
            .slot
            .iter()
            .map(|&(j, i)| {
                Interval::new(j * self.b + 1, (j + 2 * i as i64) * self.b)
                    .clamp(self.n)
                    .expect("generated intervals overlap 1..=n")
            })
            .collect();
        let a = IntervalAssignment::new(intervals);
        if let Some(f) = tighten_and_order(self.g, &a, self.b as usize) {
            let achieved = bandwidth_of_ordering(self.g, &f);
            if self.best.as_ref().is_none_or(|(b, _)| achieved < *b) {
                self.best = Some((achieved, f));
            }
        }
    }
}

/// How `approx_bandwidth` walks the width parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BSearch {
    /// Binary search for the smallest succeeding `b`. Sound because the
    /// scheme never fails at `b >= bw(G)`.
    Binary,
    /// Scan `b = 1, 2, ...`; immune to any non-monotone behavior below
    /// `bw(G)`.
    Linear,
}

/// Finds the smallest width at which the scheme succeeds and returns the
/// best ordering seen across all probes; the result has bandwidth at most
/// `(4r - 1) bw(G)`.
pub fn approx_bandwidth(g: &Graph, r: usize, mode: BSearch) -> Result<BandwidthResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n <= 1 {
        return Ok(trivial(n, 1, 4 * r - 1));
    }
    let mut best: Option<BandwidthResult> = None;
    let record = |res: BandwidthResult, best: &mut Option<BandwidthResult>| {
        if best.as_ref().is_none_or(|b| res.achieved < b.achieved) {
            *best = Some(res);
        }
    };
    match mode {
        BSearch::Linear => {
            for b in 1..n {
                if let Some(res) = approx_bandwidth_scheme(g, b, r)? {
                    record(res, &mut best);
                    break;
                }
            }
        }
        BSearch::Binary => {
            let top = approx_bandwidth_scheme(g, n - 1, r)?
                .ok_or(Error::Internal("scheme must succeed at width n-1"))?;
            record(top, &mut best);
            let (mut lo, mut hi) = (1usize, n - 1);
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                match approx_bandwidth_scheme(g, mid, r)? {
                    Some(res) => {
                        record(res, &mut best);
                        hi = mid;
                    }
                    None => lo = mid + 1,
                }
            }
        }
    }
    best.ok_or(Error::Internal("width search found no ordering"))
}

fn trivial(n: usize, b: usize, guarantee: usize) -> BandwidthResult {
    BandwidthResult {
        ordering: Ordering::identity(n),
        achieved: 0,
        b_used: b,
        guarantee,
    }
}
