use alloc::vec;
use alloc::vec::Vec;

use crate::instances::{Graph, Ordering};
use crate::oracles::max_matching;
use crate::{Error, Result};

/// Merge context of the halving reduction: the identification map, the
/// matching it came from, and everything the merger needs to rebuild an
/// ordering of the original graph.
#[derive(Debug, Clone)]
pub struct BandwidthReduction {
    original_n: usize,
    /// Degree-zero vertices stripped before anything else.
    isolated: Vec<usize>,
    /// When the stripped graph is a disjoint union of paths the problem is
    /// solved directly; this holds a ready optimal vertex sequence.
    paths_sequence: Option<Vec<usize>>,
    /// Identification map over original vertices (idempotent).
    rho: Vec<usize>,
    matching: Vec<(usize, usize)>,
    /// Original ids of surviving vertices, ascending; index = reduced label.
    kept: Vec<usize>,
    reduced: Graph,
}

impl BandwidthReduction {
    pub fn reduced(&self) -> &Graph {
        &self.reduced
    }

    /// Whether the reduction solved the instance itself (bandwidth <= 1).
    pub fn solved_directly(&self) -> bool {
        self.paths_sequence.is_some()
    }

    pub fn rho(&self) -> &[usize] {
        &self.rho
    }

    pub fn matching(&self) -> &[(usize, usize)] {
        &self.matching
    }

    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn isolated(&self) -> &[usize] {
        &self.isolated
    }
}

/// Halves the vertex count: strips isolated vertices, solves path unions
/// outright, and otherwise identifies vertices along a maximum matching so
/// that at least half the vertices disappear while every surviving vertex
/// absorbs at most two others. Feeding the reduced graph to an
/// alpha-approximate solver and merging yields bandwidth at most
/// `9 alpha bw(G) - 1`.
pub fn bandwidth_reduce(g: &Graph) -> BandwidthReduction {
    let n = g.n();
    let isolated: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 0).collect();
    let active: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    let h = active.len();

    if is_union_of_paths(g, &active) {
        let mut seq = path_layout(g, &active);
        seq.extend(isolated.iter().copied());
        return BandwidthReduction {
            original_n: n,
            isolated,
            paths_sequence: Some(seq),
            rho: (0..n).collect(),
            matching: Vec::new(),
            kept: Vec::new(),
            reduced: Graph::new(0, []).unwrap(),
        };
    }

    let matching = max_matching(g);
    let mut mate = vec![usize::MAX; n];
    for &(u, w) in &matching {
        mate[u] = w;
        mate[w] = u;
    }
    let mut rho: Vec<Option<usize>> = vec![None; n];

    // Matched neighbors of unmatched vertices are pinned in place.
    for &x in &active {
        if mate[x] == usize::MAX {
            for &w in g.neighbors(x) {
                debug_assert_ne!(mate[w], usize::MAX, "maximal matching");
                rho[w] = Some(w);
            }
        }
    }
    // A matched pair with both endpoints pinned shares a single unmatched
    // neighbor (otherwise the matching was not maximum): fold one endpoint
    // into the other.
    for &(u, w) in &matching {
        if rho[u] == Some(u) && rho[w] == Some(w) {
            let xu: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&x| mate[x] == usize::MAX)
                .collect();
            let xw: Vec<usize> = g
                .neighbors(w)
                .iter()
                .copied()
                .filter(|&x| mate[x] == usize::MAX)
                .collect();
            assert_eq!(xu, xw, "both endpoints see exactly the common unmatched vertex");
            assert_eq!(xu.len(), 1);
            rho[u] = Some(w);
        }
    }
    // Untouched pairs: fold the larger endpoint into the smaller.
    for &(u, w) in &matching {
        if rho[u].is_none() && rho[w].is_none() {
            let (keep, fold) = (u.min(w), u.max(w));
            rho[keep] = Some(keep);
            rho[fold] = Some(keep);
        }
    }
    // Half-specified pairs: fold the free endpoint into the pinned one.
    for &(u, w) in &matching {
        let (u, w) = (u.min(w), u.max(w));
        match (rho[u], rho[w]) {
            (Some(_), Some(_)) | (None, None) => {}
            (Some(ru), None) => {
                assert_eq!(ru, u, "pinned endpoint keeps itself");
                rho[w] = Some(u);
            }
            (None, Some(rw)) => {
                assert_eq!(rw, w, "pinned endpoint keeps itself");
                rho[u] = Some(w);
            }
        }
    }
    // Unmatched vertices, ascending: pair two of them hanging off the same
    // pinned neighbor, or fold a lone one into that neighbor.
    for &x in &active {
        if mate[x] != usize::MAX || rho[x].is_some() {
            continue;
        }
        let w = *g
            .neighbors(x)
            .iter()
            .find(|&&w| rho[w] == Some(w))
            .expect("an unmatched vertex always has a pinned neighbor");
        let y = g
            .neighbors(w)
            .iter()
            .copied()
            .find(|&y| y != x && mate[y] == usize::MAX && rho[y].is_none());
        match y {
            Some(y) => {
                rho[x] = Some(x);
                rho[y] = Some(x);
            }
            None => rho[x] = Some(w),
        }
    }

    let rho: Vec<usize> = rho
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.unwrap_or(v)) // identity on isolated vertices
        .collect();

    // The map must be idempotent and obey the matched-pair dichotomy.
    for &v in &active {
        assert_eq!(rho[rho[v]], rho[v], "no identification chains");
    }
    for &(u, w) in &matching {
        let ok = (rho[u] == u && rho[w] == u) || (rho[u] == w && rho[w] == w);
        assert!(ok, "matched pair keeps exactly one endpoint");
    }
    let moved = active.iter().filter(|&&v| rho[v] != v).count();
    assert!(2 * moved >= h, "at least half of the vertices fold away");
    let mut preimages = vec![0usize; n];
    for &v in &active {
        preimages[rho[v]] += 1;
    }
    assert!(preimages.iter().all(|&c| c <= 3), "fan-in is at most three");

    let kept: Vec<usize> = active.iter().copied().filter(|&v| rho[v] == v).collect();
    assert!(kept.len() <= h.div_ceil(2));
    let mut reduced_label = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        reduced_label[v] = i;
    }
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        let (ru, rv) = (rho[u], rho[v]);
        if ru != rv {
            edges.push((reduced_label[ru], reduced_label[rv]));
        }
    }
    let reduced = Graph::new(kept.len(), edges).expect("identified graph is simple");

    BandwidthReduction {
        original_n: n,
        isolated,
        paths_sequence: None,
        rho,
        matching,
        kept,
        reduced,
    }
}

/// Expands an ordering of the reduced graph back to the original: each
/// surviving vertex is followed immediately by the vertices folded into it,
/// and stripped isolated vertices go last. In the path-union case the inner
/// ordering is ignored and the stored optimal layout is returned.
pub fn bandwidth_merge(ctx: &BandwidthReduction, inner: Option<&Ordering>) -> Result<Ordering> {
    if let Some(seq) = &ctx.paths_sequence {
        return Ordering::from_sequence(seq);
    }
    let inner = inner.ok_or(Error::ContractViolation(
        "reduction was not solved directly; an inner ordering is required",
    ))?;
    if inner.n() != ctx.kept.len() {
        return Err(Error::ContractViolation(
            "inner ordering size does not match the reduced graph",
        ));
    }
    let mut preimages: Vec<Vec<usize>> = vec![Vec::new(); ctx.original_n];
    for (v, &r) in ctx.rho.iter().enumerate() {
        if r != v {
            preimages[r].push(v);
        }
    }
    let mut seq = Vec::with_capacity(ctx.original_n);
    for &reduced_v in &inner.sequence() {
        let orig = ctx.kept[reduced_v];
        seq.push(orig);
        seq.extend(preimages[orig].iter().copied());
    }
    seq.extend(ctx.isolated.iter().copied());
    Ordering::from_sequence(&seq)
}

fn is_union_of_paths(g: &Graph, active: &[usize]) -> bool {
    if active.iter().any(|&v| g.degree(v) > 2) {
        return false;
    }
    // Max degree <= 2 and acyclic iff every component is a path.
    let mut components = 0usize;
    let mut seen = vec![false; g.n()];
    for &start in active {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    g.edge_count() == active.len().saturating_sub(components)
}

/// Lays each path component out consecutively starting from its
/// smaller-indexed endpoint; components ordered by their minimum vertex.
fn path_layout(g: &Graph, active: &[usize]) -> Vec<usize> {
    let mut seq = Vec::with_capacity(active.len());
    let mut seen = vec![false; g.n()];
    for &start in active {
        if seen[start] || g.degree(start) != 1 {
            continue;
        }
        let mut v = start;
        let mut prev = usize::MAX;
        loop {
            seen[v] = true;
            seq.push(v);
            let next = g.neighbors(v).iter().copied().find(|&w| w != prev);
            match next {
                Some(w) if !seen[w] => {
                    prev = v;
                    v = w;
                }
                _ => break,
            }
        }
    }
    seq
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bandwidth::bandwidth_of_ordering;
    use crate::instances::gen_graph;
    use crate::oracles::{exact_bandwidth, Limits};

    fn exact_inner(g: &Graph) -> Ordering {
        if g.n() == 0 {
            return Ordering::identity(0);
        }
        exact_bandwidth(g, &Limits::default()).unwrap().witness
    }

    #[test]
    fn c4_reduces_to_k2_and_merges_at_three() {
        let g = Graph::cycle(4);
        let ctx = bandwidth_reduce(&g);
        assert_eq!(ctx.reduced().n(), 2);
        assert_eq!(ctx.reduced().edge_count(), 1);
        assert_eq!(ctx.kept(), &[0, 2]);
        let inner = Ordering::identity(2);
        let merged = bandwidth_merge(&ctx, Some(&inner)).unwrap();
        assert_eq!(merged.sequence(), alloc::vec![0, 1, 2, 3]);
        assert_eq!(bandwidth_of_ordering(&g, &merged), 3); // <= 9*1*2 - 1
    }

    #[test]
    fn path_unions_are_solved_directly() {
        let g = Graph::new(7, [(0, 1), (1, 2), (4, 5)]).unwrap();
        let ctx = bandwidth_reduce(&g);
        assert!(ctx.solved_directly());
        let merged = bandwidth_merge(&ctx, None).unwrap();
        assert!(bandwidth_of_ordering(&g, &merged) <= 1);
        assert_eq!(merged.n(), 7);
    }

    #[test]
    fn all_isolated_graph() {
        let g = Graph::new(3, []).unwrap();
        let ctx = bandwidth_reduce(&g);
        let merged = bandwidth_merge(&ctx, None).unwrap();
        assert_eq!(bandwidth_of_ordering(&g, &merged), 0);
    }

    #[test]
    fn merge_is_permutation_even_for_bad_inner_orderings() {
        let g = Graph::complete(5);
        let ctx = bandwidth_reduce(&g);
        // Any permutation of the reduced graph must expand to a permutation.
        let k = ctx.reduced().n();
        let inner = Ordering::from_sequence(&(0..k).rev().collect::<Vec<_>>()).unwrap();
        let merged = bandwidth_merge(&ctx, Some(&inner)).unwrap();
        assert_eq!(merged.n(), 5);
    }

    #[test]
    fn merged_bandwidth_within_nine_times_optimal() {
        let lim = Limits::default();
        for seed in 0..30 {
            let g = gen_graph(9, 0.35, seed, true).unwrap();
            let bw = exact_bandwidth(&g, &lim).unwrap().value;
            let ctx = bandwidth_reduce(&g);
            let merged = if ctx.solved_directly() {
                bandwidth_merge(&ctx, None).unwrap()
            } else {
                let inner = exact_inner(ctx.reduced());
                bandwidth_merge(&ctx, Some(&inner)).unwrap()
            };
            let achieved = bandwidth_of_ordering(&g, &merged);
            assert!(achieved <= 9 * bw, "seed {seed}: {achieved} vs bw {bw}");
        }
    }
}
