use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use super::{setmerge_merge, setmerge_reduce, MergeReduceOutcome};
use crate::instances::{Cover, Graph, SetSystem};
use crate::weight::Weight;
use crate::Result;

/// The closed-neighborhood system `{N[v] : v}` with unit weights; a
/// dominating set of the graph is exactly a cover of this system, with set
/// index = vertex id.
pub fn closed_neighborhoods(g: &Graph) -> SetSystem {
    let n = g.n();
    let sets: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut s: Vec<usize> = g.neighbors(v).to_vec();
            s.push(v);
            s
        })
        .collect();
    SetSystem::new(n, sets, vec![Weight::one(); n]).expect("closed neighborhoods are valid")
}

/// Dominating-set reduction: the set-merging construction applied to the
/// closed-neighborhood system. Merging a block of sets is the same as
/// identifying its vertices into one super-vertex whose closed neighborhood
/// is the union; each sub-instance keeps the original vertex set as its
/// universe and the super-vertices as choosable sets.
#[derive(Debug, Clone)]
pub struct MdsReduceOutcome {
    pub inner: MergeReduceOutcome,
    pub n: usize,
}

/// Applies the block construction to `{N[v]}`; solve each sub-instance as a
/// set cover (the identified super-vertices are its sets), then merge.
pub fn mds_reduce(g: &Graph, rate: usize) -> Result<MdsReduceOutcome> {
    let system = closed_neighborhoods(g);
    let inner = setmerge_reduce(&system, rate)?;
    Ok(MdsReduceOutcome { inner, n: g.n() })
}

/// Expands chosen super-vertices to their member vertices and returns the
/// smallest dominating set found; validated against the graph. With
/// alpha-approximate sub-solutions the result has size at most
/// `alpha * r * gamma(G)`.
pub fn mds_merge(
    g: &Graph,
    outcome: &MdsReduceOutcome,
    sub_solutions: &[Option<Cover>],
) -> Result<Vec<usize>> {
    let system = closed_neighborhoods(g);
    let cover = setmerge_merge(&system, &outcome.inner, sub_solutions)?;
    let verts: Vec<usize> = cover.chosen().to_vec();
    assert!(is_dominating(g, &verts), "merged set must dominate the graph");
    Ok(verts)
}

/// Every vertex is in the set or adjacent to it.
pub fn is_dominating(g: &Graph, verts: &[usize]) -> bool {
    let mut dominated = vec![false; g.n()];
    for &v in verts {
        dominated[v] = true;
        for &w in g.neighbors(v) {
            dominated[w] = true;
        }
    }
    dominated.into_iter().all(|d| d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::gen_graph;
    use crate::oracles::{exact_setcover_bruteforce, Limits};

    fn solve_and_merge(g: &Graph, rate: usize) -> Vec<usize> {
        let outcome = mds_reduce(g, rate).unwrap();
        let subs: Vec<Option<Cover>> = outcome
            .inner
            .instances
            .iter()
            .map(|inst| {
                exact_setcover_bruteforce(&inst.system, &Limits::default())
                    .ok()
                    .map(|r| r.witness)
            })
            .collect();
        mds_merge(g, &outcome, &subs).unwrap()
    }

    fn gamma(g: &Graph) -> usize {
        exact_setcover_bruteforce(&closed_neighborhoods(g), &Limits::default())
            .unwrap()
            .witness
            .len()
    }

    #[test]
    fn complete_graph_needs_few() {
        for rate in [2usize, 3] {
            let g = Graph::complete(6);
            let d = solve_and_merge(&g, rate);
            assert!(d.len() <= rate); // gamma = 1
        }
    }

    #[test]
    fn star_with_rate_two() {
        let g = Graph::star(5);
        let d = solve_and_merge(&g, 2);
        assert!(d.len() <= 2); // gamma = 1 (the hub)
        assert_eq!(gamma(&g), 1);
    }

    #[test]
    fn random_graphs_meet_rate_bound() {
        for seed in 0..100 {
            let n = 8 + (seed as usize) % 5; // 8..=12
            let g = gen_graph(n, 0.35, seed, true).unwrap();
            let opt = gamma(&g);
            let d = solve_and_merge(&g, 2);
            assert!(d.len() <= 2 * opt, "seed {seed}");
        }
    }
}
