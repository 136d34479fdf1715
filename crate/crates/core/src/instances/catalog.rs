//! A deterministic corpus of small connected graphs used to certify the
//! approximation guarantees exhaustively at desk scale.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::gen::{gen_graph, prufer_decode};
use super::Graph;

/// All non-isomorphic connected graphs on exactly `n <= 6` vertices,
/// enumerated by canonical (minimum) edge-mask representatives.
pub fn connected_graphs_exhaustive(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "exhaustive enumeration is limited to n <= 6");
    if n == 0 {
        return vec![Graph::new(0, []).unwrap()];
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut pair_index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        pair_index[u][v] = i;
        pair_index[v][u] = i;
    }
    let perms = permutations(n);
    let mut out = Vec::new();
    'mask: for mask in 0u32..(1u32 << pairs.len()) {
        if !mask_connected(n, mask, &pairs) {
            continue;
        }
        for perm in &perms {
            let mut remapped = 0u32;
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    remapped |= 1 << pair_index[perm[u]][perm[v]];
                }
            }
            if remapped < mask {
                continue 'mask; // not the canonical representative
            }
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        out.push(Graph::new(n, edges).unwrap());
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

fn mask_connected(n: usize, mask: u32, pairs: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    let mut components = n;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                components -= 1;
            }
        }
    }
    components == 1
}

/// All non-isomorphic trees on `n` vertices (`2 <= n <= 8`), via Prüfer
/// enumeration de-duplicated by canonical rooted encodings.
pub fn all_trees(n: usize) -> Vec<Graph> {
    assert!((2..=8).contains(&n));
    if n == 2 {
        return vec![Graph::path(2)];
    }
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut out = Vec::new();
    let total = (n as u64).pow(n as u32 - 2);
    for code in 0..total {
        let mut seq = Vec::with_capacity(n - 2);
        let mut c = code;
        for _ in 0..n - 2 {
            seq.push((c % n as u64) as usize);
            c /= n as u64;
        }
        let edges = prufer_decode(n, &seq);
        let g = Graph::new(n, edges).unwrap();
        if seen.insert(tree_canonical(&g)) {
            out.push(g);
        }
    }
    out
}

/// Canonical encoding of a tree: root at its center(s), encode children
/// recursively with sorted sub-encodings, take the lexicographically
/// smallest rooted encoding.
fn tree_canonical(g: &Graph) -> String {
    let n = g.n();
    // Peel leaves layer by layer; the last one or two vertices are centers.
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &frontier {
            removed[v] = true;
            remaining -= 1;
            for &w in g.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        frontier = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    centers
        .iter()
        .map(|&c| encode_rooted(g, c, usize::MAX))
        .min()
        .unwrap()
}

fn encode_rooted(g: &Graph, v: usize, parent: usize) -> String {
    let mut child_codes: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode_rooted(g, w, v))
        .collect();
    child_codes.sort();
    let mut s = String::from("(");
    for c in child_codes {
        s.push_str(&c);
    }
    s.push(')');
    s
}

fn wheel(n: usize) -> Graph {
    // Hub 0 joined to the cycle 1..n-1.
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    for i in 1..n {
        let j = if i == n - 1 { 1 } else { i + 1 };
        edges.push((i, j));
    }
    Graph::new(n, edges).unwrap()
}

fn cube() -> Graph {
    // Q3: vertices are 3-bit strings, edges between Hamming neighbors.
    let mut edges = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::new(8, edges).unwrap()
}

fn grid(rows: usize, cols: usize) -> Graph {
    let idx = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, edges).unwrap()
}

fn moebius_ladder(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n / 2 {
        edges.push((i, i + n / 2));
    }
    Graph::new(n, edges).unwrap()
}

fn complete_tripartite(a: usize, b: usize, c: usize) -> Graph {
    let mut edges = Vec::new();
    let parts = [(0, a), (a, a + b), (a + b, a + b + c)];
    for (i, &(s1, e1)) in parts.iter().enumerate() {
        for &(s2, e2) in &parts[i + 1..] {
            for u in s1..e1 {
                for v in s2..e2 {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::new(a + b + c, edges).unwrap()
}

/// The canonical small-graph corpus: every connected graph on up to 6
/// vertices, every tree on 7 and 8 vertices, a shelf of structured families
/// on 7 and 8 vertices, and a deterministic batch of seeded random connected
/// graphs. A few hundred graphs in total, all with `n <= 8`.
pub fn small_connected_catalog() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.extend(connected_graphs_exhaustive(n));
    }
    for n in 7..=8 {
        out.extend(all_trees(n));
    }
    out.extend([
        Graph::complete(7),
        Graph::complete(8),
        Graph::cycle(7),
        Graph::cycle(8),
        wheel(7),
        wheel(8),
        Graph::complete_bipartite(2, 5),
        Graph::complete_bipartite(3, 4),
        Graph::complete_bipartite(2, 6),
        Graph::complete_bipartite(3, 5),
        Graph::complete_bipartite(4, 4),
        cube(),
        grid(2, 4),
        moebius_ladder(8),
        complete_tripartite(2, 2, 3),
        complete_tripartite(2, 3, 3),
    ]);
    for seed in 0..160u64 {
        let n = if seed % 2 == 0 { 7 } else { 8 };
        let p = match seed % 3 {
            0 => 0.25,
            1 => 0.4,
            _ => 0.6,
        };
        out.push(gen_graph(n, p, 0xCA7A_1000 + seed, true).unwrap());
    }
    out
}
