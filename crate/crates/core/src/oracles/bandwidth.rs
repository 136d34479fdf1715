use alloc::vec;
use alloc::vec::Vec;

use super::{ExactResult, Limits};
use crate::bandwidth::bandwidth_of_ordering;
use crate::instances::{Graph, Ordering};
use crate::{Error, Result};

/// Exact graph bandwidth by branch and bound over partial orderings.
///
/// For each candidate width `B` (increasing from a degree lower bound) a
/// depth-first search fills positions `1..=n` left to right. A placed vertex
/// with an unplaced neighbor imposes the deadline `position + B` on that
/// neighbor; the search prunes as soon as a deadline is missed and commits
/// forced vertices immediately. The first `B` that admits a completion is
/// the bandwidth.
pub fn exact_bandwidth(g: &Graph, limits: &Limits) -> Result<ExactResult<usize, Ordering>> {
    if g.n() > limits.bandwidth_n {
        return Err(Error::SizeLimit {
            what: "exact bandwidth",
            limit: limits.bandwidth_n,
            actual: g.n(),
        });
    }
    let n = g.n();
    if g.edge_count() == 0 {
        return Ok(ExactResult {
            value: 0,
            witness: Ordering::identity(n),
            nodes_explored: 0,
        });
    }
    let lower = (0..n).map(|v| g.degree(v).div_ceil(2)).max().unwrap_or(0);
    let mut nodes = 0u64;
    for b in lower.max(1)..n {
        if let Some(seq) = search(g, b, &mut nodes) {
            let witness = Ordering::from_sequence(&seq)?;
            assert_eq!(
                bandwidth_of_ordering(g, &witness),
                b,
                "witness must achieve the claimed bandwidth"
            );
            return Ok(ExactResult {
                value: b,
                witness,
                nodes_explored: nodes,
            });
        }
    }
    unreachable!("every ordering has bandwidth <= n-1")
}

fn search(g: &Graph, b: usize, nodes: &mut u64) -> Option<Vec<usize>> {
    let n = g.n();
    let mut seq = Vec::with_capacity(n);
    let mut position = vec![0usize; n]; // 1-based, 0 = unplaced
    let mut unplaced_neighbors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    dfs(g, b, &mut seq, &mut position, &mut unplaced_neighbors, nodes).then_some(seq)
}

fn dfs(
    g: &Graph,
    b: usize,
    seq: &mut Vec<usize>,
    position: &mut [usize],
    unplaced_neighbors: &mut [usize],
    nodes: &mut u64,
) -> bool {
    let n = g.n();
    let pos = seq.len() + 1;
    if pos > n {
        return true;
    }
    *nodes += 1;
    // Deadline pruning: a placed vertex with unplaced neighbors must see all
    // of them by position + b; a vertex due exactly now is forced.
    let mut forced: Option<usize> = None;
    for &u in seq.iter() {
        if unplaced_neighbors[u] == 0 {
            continue;
        }
        let deadline = position[u] + b;
        if deadline < pos {
            return false;
        }
        if deadline == pos {
            if unplaced_neighbors[u] > 1 {
                return false; // two neighbors cannot share one position
            }
            let v = *g
                .neighbors(u)
                .iter()
                .find(|&&w| position[w] == 0)
                .expect("counted unplaced neighbor");
            match forced {
                Some(prev) if prev != v => return false,
                _ => forced = Some(v),
            }
        }
    }
    let try_vertex = |v: usize,
                      seq: &mut Vec<usize>,
                      position: &mut [usize],
                      unplaced_neighbors: &mut [usize],
                      nodes: &mut u64| {
        // Placing v at pos must not stretch an edge beyond b.
        for &u in g.neighbors(v) {
            if position[u] != 0 && pos - position[u] > b {
                return false;
            }
        }
        position[v] = pos;
        seq.push(v);
        for &u in g.neighbors(v) {
            unplaced_neighbors[u] -= 1;
        }
        if dfs(g, b, seq, position, unplaced_neighbors, nodes) {
            return true;
        }
        for &u in g.neighbors(v) {
            unplaced_neighbors[u] += 1;
        }
        seq.pop();
        position[v] = 0;
        false
    };
    if let Some(v) = forced {
        return try_vertex(v, seq, position, unplaced_neighbors, nodes);
    }
    for v in 0..n {
        if position[v] == 0 && try_vertex(v, seq, position, unplaced_neighbors, nodes) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Graph;
    use std::vec::Vec as StdVec;

    fn bw_bruteforce(g: &Graph) -> usize {
        // Independent oracle: minimum over all n! orderings.
        fn perms(items: &mut StdVec<usize>, k: usize, best: &mut usize, g: &Graph) {
            if k == items.len() {
                let f = Ordering::from_sequence(items).unwrap();
                *best = (*best).min(bandwidth_of_ordering(g, &f));
                return;
            }
            for i in k..items.len() {
                items.swap(k, i);
                perms(items, k + 1, best, g);
                items.swap(k, i);
            }
        }
        let mut items: StdVec<usize> = (0..g.n()).collect();
        let mut best = usize::MAX;
        perms(&mut items, 0, &mut best, g);
        best
    }

    #[test]
    fn known_values() {
        let lim = Limits::default();
        assert_eq!(exact_bandwidth(&Graph::path(4), &lim).unwrap().value, 1);
        assert_eq!(exact_bandwidth(&Graph::complete(5), &lim).unwrap().value, 4);
        // Star K_{1,4}: frozen from the brute-force oracle below.
        let star = Graph::star(4);
        assert_eq!(bw_bruteforce(&star), 2);
        assert_eq!(exact_bandwidth(&star, &lim).unwrap().value, 2);
    }

    #[test]
    fn agrees_with_bruteforce_on_small_graphs() {
        use crate::instances::gen_graph;
        let lim = Limits::default();
        for seed in 0..40 {
            let n = 4 + (seed as usize % 4);
            let g = gen_graph(n, 0.45, seed, false).unwrap();
            let got = exact_bandwidth(&g, &lim).unwrap();
            assert_eq!(got.value, bw_bruteforce(&g), "seed {seed}");
            assert_eq!(bandwidth_of_ordering(&g, &got.witness), got.value);
        }
    }

    #[test]
    fn enforces_limit() {
        let g = Graph::path(3);
        let lim = Limits::default().with_n(2);
        assert!(matches!(
            exact_bandwidth(&g, &lim),
            Err(Error::SizeLimit { .. })
        ));
    }
}
