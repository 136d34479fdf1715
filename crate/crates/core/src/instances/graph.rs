use alloc::vec;
use alloc::vec::Vec;

use crate::weight::Digest;
use crate::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
///
/// No self-loops, no duplicate edges; adjacency lists are kept sorted and
/// consistent with the edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, validating endpoints and rejecting self-loops.
    /// Duplicate and mirrored edge pairs are normalized away.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::IndexOutOfRange { index: u, bound: n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, bound: n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        norm.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: norm,
            adj,
        })
    }

    /// Path on `n` vertices: edges `(i, i+1)`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    /// Star `K_{1,k}`: center 0 joined to `k` leaves.
    pub fn star(k: usize) -> Self {
        Graph::new(k + 1, (1..=k).map(|v| (0, v))).unwrap()
    }

    /// Complete bipartite graph `K_{a,b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::new(a + b, edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// True for graphs with at most one vertex.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Induced subgraph on `verts` (given in the order that becomes the new
    /// labeling); returns the graph and the new-to-old vertex map.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in verts.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            let (nu, nv) = (old_to_new[u], old_to_new[v]);
            if nu != usize::MAX && nv != usize::MAX {
                edges.push((nu, nv));
            }
        }
        (
            Graph::new(verts.len(), edges).expect("induced subgraph is valid"),
            verts.to_vec(),
        )
    }

    /// Canonical hash over `n` and the sorted edge list.
    pub fn digest(&self) -> u64 {
        let mut d = Digest::new();
        d.update(b"graph");
        d.update_usize(self.n);
        for &(u, v) in &self.edges {
            d.update_usize(u);
            d.update_usize(v);
        }
        d.finish()
    }
}

/// A bijection from vertices to positions `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ordering {
    positions: Vec<usize>,
}

impl Ordering {
    /// `positions[v]` is the position of vertex `v`, in `1..=n`.
    pub fn new(positions: Vec<usize>) -> Result<Self> {
        let n = positions.len();
        let mut seen = vec![false; n + 1];
        for &p in &positions {
            if p == 0 || p > n || seen[p] {
                return Err(Error::NotAPermutation);
            }
            seen[p] = true;
        }
        Ok(Ordering { positions })
    }

    /// Builds an ordering from the sequence of vertices at positions
    /// `1, 2, ..., n`.
    pub fn from_sequence(seq: &[usize]) -> Result<Self> {
        let n = seq.len();
        let mut positions = vec![0usize; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n || positions[v] != 0 {
                return Err(Error::NotAPermutation);
            }
            positions[v] = i + 1;
        }
        Ordering::new(positions)
    }

    pub fn identity(n: usize) -> Self {
        Ordering {
            positions: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn position(&self, v: usize) -> usize {
        self.positions[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// The vertex sequence `f^{-1}(1), ..., f^{-1}(n)`.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0usize; self.positions.len()];
        for (v, &p) in self.positions.iter().enumerate() {
            seq[p - 1] = v;
        }
        seq
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(2, [(0, 0)]).unwrap_err(),
            Error::SelfLoop { vertex: 0 }
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]).unwrap_err(),
            Error::IndexOutOfRange { index: 2, bound: 2 }
        );
    }

    #[test]
    fn normalizes_edges() {
        let g = Graph::new(3, [(2, 0), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert!(g.has_edge(2, 0));
        assert!(!g.has_edge(1, 2));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(5).is_connected());
        assert!(!Graph::new(3, [(0, 1)]).unwrap().is_connected());
        assert!(Graph::new(1, []).unwrap().is_connected());
        assert!(Graph::new(0, []).unwrap().is_connected());
    }

    #[test]
    fn induced_subgraph() {
        let g = Graph::cycle(5);
        let (h, map) = g.induced(&[1, 2, 4]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), &[(0, 1)]); // only 1-2 survives
        assert_eq!(map, vec![1, 2, 4]);
    }

    #[test]
    fn ordering_permutation_checks() {
        assert!(Ordering::new(vec![1, 2, 3]).is_ok());
        assert_eq!(
            Ordering::new(vec![1, 1, 3]).unwrap_err(),
            Error::NotAPermutation
        );
        assert_eq!(
            Ordering::new(vec![0, 1, 2]).unwrap_err(),
            Error::NotAPermutation
        );
        let f = Ordering::from_sequence(&[2, 0, 1]).unwrap();
        assert_eq!(f.position(2), 1);
        assert_eq!(f.sequence(), vec![2, 0, 1]);
    }
}
