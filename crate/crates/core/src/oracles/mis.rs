use alloc::vec::Vec;

use super::{ExactResult, Limits};
use crate::instances::Graph;
use crate::{Error, Result};

/// Maximum independent set by branching on a maximum-degree vertex:
/// either it joins the solution (drop its closed neighborhood) or it does
/// not (drop the vertex). Prunes by the remaining-vertex count.
pub fn exact_mis(g: &Graph, limits: &Limits) -> Result<ExactResult<usize, Vec<usize>>> {
    let n = g.n();
    if n > limits.mis_n {
        return Err(Error::SizeLimit {
            what: "exact independent set",
            limit: limits.mis_n,
            actual: n,
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u64, |mask, &w| mask | (1 << w))
        })
        .collect();
    let mut state = Search {
        adj: &adj,
        best: 0,
        best_mask: 0,
        nodes: 0,
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    state.branch(full, 0, 0);
    let witness: Vec<usize> = (0..n).filter(|&v| state.best_mask >> v & 1 == 1).collect();
    assert!(is_independent(g, &witness));
    assert_eq!(witness.len(), state.best);
    Ok(ExactResult {
        value: state.best,
        witness,
        nodes_explored: state.nodes,
    })
}

/// Pairwise non-adjacency check, independent of the search.
pub fn is_independent(g: &Graph, verts: &[usize]) -> bool {
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

struct Search<'a> {
    adj: &'a [u64],
    best: usize,
    best_mask: u64,
    nodes: u64,
}

impl Search<'_> {
    fn branch(&mut self, remaining: u64, chosen: u64, size: usize) {
        self.nodes += 1;
        let left = remaining.count_ones() as usize;
        if size + left <= self.best && self.best > 0 {
            return;
        }
        // Maximum-degree vertex within the remaining induced subgraph,
        // smallest index on ties.
        let mut pick = None;
        let mut max_deg = 0usize;
        let mut bits = remaining;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let deg = (self.adj[v] & remaining).count_ones() as usize;
            if pick.is_none() || deg > max_deg {
                pick = Some(v);
                max_deg = deg;
            }
        }
        let Some(v) = pick else {
            if size > self.best {
                self.best = size;
                self.best_mask = chosen;
            }
            return;
        };
        if max_deg == 0 {
            // Remaining vertices are pairwise non-adjacent: take them all.
            let total = size + left;
            if total > self.best {
                self.best = total;
                self.best_mask = chosen | remaining;
            }
            return;
        }
        self.branch(
            remaining & !(self.adj[v] | (1 << v)),
            chosen | (1 << v),
            size + 1,
        );
        self.branch(remaining & !(1 << v), chosen, size);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mis_bruteforce(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        for mask in 0u64..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if is_independent(g, &verts) {
                best = best.max(verts.len());
            }
        }
        best
    }

    #[test]
    fn known_values() {
        let lim = Limits::default();
        let empty = Graph::new(6, []).unwrap();
        assert_eq!(exact_mis(&empty, &lim).unwrap().value, 6);
        // C_5: frozen from the subset-enumeration oracle.
        let c5 = Graph::cycle(5);
        assert_eq!(mis_bruteforce(&c5), 2);
        assert_eq!(exact_mis(&c5, &lim).unwrap().value, 2);
        assert_eq!(exact_mis(&Graph::complete(7), &lim).unwrap().value, 1);
    }

    #[test]
    fn agrees_with_bruteforce() {
        use crate::instances::gen_graph;
        let lim = Limits::default();
        for seed in 0..40 {
            let g = gen_graph(9, 0.4, seed, false).unwrap();
            assert_eq!(
                exact_mis(&g, &lim).unwrap().value,
                mis_bruteforce(&g),
                "seed {seed}"
            );
        }
    }
}
