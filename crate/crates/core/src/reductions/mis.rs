use alloc::vec::Vec;

use crate::instances::Graph;
use crate::oracles::is_independent;
use crate::{Error, Result};

/// Vertex maps of the independent-set reduction's sub-graphs (new -> old).
#[derive(Debug, Clone)]
pub struct MisContext {
    pub maps: Vec<Vec<usize>>,
}

/// Splits the vertices by index into `parts` balanced classes and emits, for
/// each cyclic window of `window` consecutive classes, the induced subgraph.
/// Every vertex appears in exactly `window` sub-graphs; the rate is
/// `parts / window`.
pub fn mis_reduce(g: &Graph, parts: usize, window: usize) -> Result<(Vec<Graph>, MisContext)> {
    if parts == 0 || window == 0 || window > parts {
        return Err(Error::InvalidParameter(
            "need parts >= window >= 1 for the independent-set reduction",
        ));
    }
    let n = g.n();
    let classes = balanced_classes(n, parts);
    let mut graphs = Vec::with_capacity(parts);
    let mut maps = Vec::with_capacity(parts);
    for i in 0..parts {
        let mut verts = Vec::new();
        for j in 0..window {
            verts.extend(classes[(i + j) % parts].iter().copied());
        }
        verts.sort_unstable();
        verts.dedup(); // window may wrap onto itself when parts < 2*window
        let (sub, map) = g.induced(&verts);
        graphs.push(sub);
        maps.push(map);
    }
    Ok((graphs, MisContext { maps }))
}

/// Index-contiguous classes of size at most `ceil(n/parts)`.
fn balanced_classes(n: usize, parts: usize) -> Vec<Vec<usize>> {
    let base = n / parts;
    let extra = n % parts;
    let mut classes = Vec::with_capacity(parts);
    let mut next = 0usize;
    for p in 0..parts {
        let len = base + usize::from(p < extra);
        classes.push((next..next + len).collect());
        next += len;
    }
    classes
}

/// Picks the biggest sub-solution, mapped back to original vertex ids.
/// Sub-solutions must be independent in their sub-graphs; the winner is
/// re-validated against the original graph. With alpha-approximate
/// sub-solutions the winner has at least `OPT / (alpha * parts/window)`
/// vertices.
pub fn mis_merge(
    g: &Graph,
    ctx: &MisContext,
    graphs: &[Graph],
    subs: &[Option<Vec<usize>>],
) -> Result<Vec<usize>> {
    assert_eq!(subs.len(), ctx.maps.len());
    let mut best: Option<Vec<usize>> = None;
    for ((sub, map), graph) in subs.iter().zip(&ctx.maps).zip(graphs) {
        let Some(sol) = sub else { continue };
        if !is_independent(graph, sol) {
            return Err(Error::ContractViolation(
                "sub-solution is not independent in its sub-graph",
            ));
        }
        let mapped: Vec<usize> = sol.iter().map(|&v| map[v]).collect();
        if best.as_ref().is_none_or(|b| mapped.len() > b.len()) {
            best = Some(mapped);
        }
    }
    let best = best.ok_or(Error::Internal("no sub-solutions supplied"))?;
    assert!(
        is_independent(g, &best),
        "merged set must stay independent in the original graph"
    );
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::gen_graph;
    use crate::oracles::{exact_mis, Limits};

    fn solve_merged(g: &Graph, parts: usize, window: usize) -> Vec<usize> {
        let lim = Limits::default();
        let (graphs, ctx) = mis_reduce(g, parts, window).unwrap();
        let subs: Vec<Option<Vec<usize>>> = graphs
            .iter()
            .map(|sub| Some(exact_mis(sub, &lim).unwrap().witness))
            .collect();
        mis_merge(g, &ctx, &graphs, &subs).unwrap()
    }

    #[test]
    fn two_halves_are_disjoint() {
        let g = gen_graph(10, 0.3, 3, false).unwrap();
        let (graphs, ctx) = mis_reduce(&g, 2, 1).unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(ctx.maps[0], (0..5).collect::<Vec<_>>());
        assert_eq!(ctx.maps[1], (5..10).collect::<Vec<_>>());
    }

    #[test]
    fn every_vertex_in_exactly_window_subgraphs() {
        let g = gen_graph(11, 0.3, 5, false).unwrap();
        for (parts, window) in [(3usize, 2usize), (4, 3), (2, 1), (5, 2)] {
            let (_, ctx) = mis_reduce(&g, parts, window).unwrap();
            let mut count = alloc::vec![0usize; 11];
            for map in &ctx.maps {
                for &v in map {
                    count[v] += 1;
                }
            }
            assert!(count.iter().all(|&c| c == window));
        }
    }

    #[test]
    fn window_construction_on_c6() {
        // Classes {0,1}, {2,3}, {4,5}; the first window induces {0,1,2,3}.
        let g = Graph::cycle(6);
        let (graphs, ctx) = mis_reduce(&g, 3, 2).unwrap();
        assert_eq!(ctx.maps[0], alloc::vec![0, 1, 2, 3]);
        assert_eq!(graphs[0].edge_count(), 3);
    }

    #[test]
    fn pigeonhole_bound_with_exact_inner() {
        let lim = Limits::default();
        for seed in 0..40 {
            let g = gen_graph(12, 0.35, seed, false).unwrap();
            let opt = exact_mis(&g, &lim).unwrap().value;
            for (parts, window) in [(2usize, 1usize), (3, 2), (3, 1)] {
                let merged = solve_merged(&g, parts, window);
                // |merged| >= ceil(opt * window / parts)
                assert!(
                    merged.len() * parts >= opt * window,
                    "seed {seed} r={parts}/{window}"
                );
            }
        }
    }

    #[test]
    fn edgeless_and_complete_extremes() {
        let edgeless = Graph::new(9, []).unwrap();
        assert!(solve_merged(&edgeless, 3, 1).len() >= 3);
        let k7 = Graph::complete(7);
        assert_eq!(solve_merged(&k7, 2, 1).len(), 1);
    }

    #[test]
    fn rejects_non_independent_sub_solutions() {
        let g = Graph::path(4);
        let (graphs, ctx) = mis_reduce(&g, 2, 1).unwrap();
        let bad = Some(alloc::vec![0usize, 1]); // adjacent in the first half
        let subs = alloc::vec![bad, Some(alloc::vec![])];
        assert!(matches!(
            mis_merge(&g, &ctx, &graphs, &subs),
            Err(Error::ContractViolation(_))
        ));
    }
}
