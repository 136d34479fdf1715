use alloc::vec;

use super::{ExactResult, Limits};
use crate::instances::{Coloring, Graph};
use crate::{Error, Result};

/// Chromatic number by backtracking: try `q = 1, 2, ...`, assigning colors
/// in vertex order; a new color is opened only when it is at most one above
/// the current maximum, which kills color-permutation symmetry.
pub fn exact_coloring(g: &Graph, limits: &Limits) -> Result<ExactResult<usize, Coloring>> {
    let n = g.n();
    if n > limits.coloring_n {
        return Err(Error::SizeLimit {
            what: "exact coloring",
            limit: limits.coloring_n,
            actual: n,
        });
    }
    if n == 0 {
        return Ok(ExactResult {
            value: 0,
            witness: Coloring::new(vec![]).unwrap(),
            nodes_explored: 0,
        });
    }
    let mut nodes = 0u64;
    for q in 1..=n {
        let mut colors = vec![0usize; n];
        if backtrack(g, q, 0, 0, &mut colors, &mut nodes) {
            let witness = Coloring::new(colors)?;
            assert!(witness.is_proper(g));
            assert_eq!(witness.num_colors(), q);
            return Ok(ExactResult {
                value: q,
                witness,
                nodes_explored: nodes,
            });
        }
    }
    unreachable!("n colors always suffice")
}

fn backtrack(
    g: &Graph,
    q: usize,
    v: usize,
    max_used: usize,
    colors: &mut [usize],
    nodes: &mut u64,
) -> bool {
    if v == g.n() {
        // Reaching here with max_used < q only happens for q > chi, and the
        // outer loop tries smaller q first; still, reject gapped palettes so
        // the witness invariant holds.
        return max_used == q;
    }
    *nodes += 1;
    let cap = q.min(max_used + 1);
    'colors: for c in 1..=cap {
        for &w in g.neighbors(v) {
            if colors[w] == c {
                continue 'colors;
            }
        }
        colors[v] = c;
        if backtrack(g, q, v + 1, max_used.max(c), colors, nodes) {
            return true;
        }
        colors[v] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let lim = Limits::default();
        assert_eq!(exact_coloring(&Graph::complete(3), &lim).unwrap().value, 3);
        // C_6 is bipartite.
        assert_eq!(exact_coloring(&Graph::cycle(6), &lim).unwrap().value, 2);
        assert_eq!(exact_coloring(&Graph::cycle(5), &lim).unwrap().value, 3);
        let edgeless = Graph::new(4, []).unwrap();
        assert_eq!(exact_coloring(&edgeless, &lim).unwrap().value, 1);
    }

    #[test]
    fn witness_is_proper_on_random_graphs() {
        use crate::instances::gen_graph;
        let lim = Limits::default();
        for seed in 0..20 {
            let g = gen_graph(9, 0.5, seed, false).unwrap();
            let r = exact_coloring(&g, &lim).unwrap();
            assert!(r.witness.is_proper(&g));
            assert_eq!(r.witness.num_colors(), r.value);
        }
    }
}
