use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::instances::Graph;

const NONE: usize = usize::MAX;

/// Maximum-cardinality matching in a general graph by augmenting-path search
/// with blossom contraction. Exact maximum, not merely maximal.
pub fn max_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut state = Blossom {
        g,
        mate: vec![NONE; g.n()],
        parent: vec![NONE; g.n()],
        base: (0..g.n()).collect(),
        used: vec![false; g.n()],
        blossom: vec![false; g.n()],
    };
    for v in 0..g.n() {
        if state.mate[v] == NONE {
            state.augment_from(v);
        }
    }
    let mut edges = Vec::new();
    for v in 0..g.n() {
        let w = state.mate[v];
        if w != NONE && v < w {
            edges.push((v, w));
        }
    }
    debug_assert!(is_matching(&edges));
    edges
}

/// Pairwise disjointness of an edge list.
pub fn is_matching(edges: &[(usize, usize)]) -> bool {
    let mut seen = alloc::collections::BTreeSet::new();
    for &(u, v) in edges {
        if u == v || !seen.insert(u) || !seen.insert(v) {
            return false;
        }
    }
    true
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

impl Blossom<'_> {
    fn augment_from(&mut self, root: usize) {
        let end = self.find_path(root);
        if end == NONE {
            return;
        }
        // Flip matched/unmatched along the alternating path back to the root.
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::new();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Odd cycle: contract the blossom to its base.
                    let curbase = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, curbase, to);
                    self.mark_path(to, curbase, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = curbase;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    self.used[self.mate[to]] = true;
                    queue.push_back(self.mate[to]);
                }
            }
        }
        NONE
    }

    fn mark_path(&mut self, mut v: usize, until_base: usize, mut child: usize) {
        while self.base[v] != until_base {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn lca(&self, a: usize, b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        let mut a = self.base[a];
        loop {
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.base[self.parent[self.mate[a]]];
        }
        let mut b = self.base[b];
        loop {
            if seen[b] {
                return b;
            }
            b = self.base[self.parent[self.mate[b]]];
        }
    }
}
