//! Seeded random instance generators. Every generator is a pure function of
//! its arguments: the same seed reproduces the instance bit for bit.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, SetSystem, TspInstance};
use crate::weight::{w_ratio, Weight};
use crate::{Error, Result};

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi-style sample `G(n, p)`. With `connected` set, a uniformly
/// random labeled spanning tree (random Prüfer sequence) is added first.
pub fn gen_graph(n: usize, p: f64, seed: u64, connected: bool) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter("edge probability must be in [0,1]"));
    }
    let mut rng = rng_for(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if connected && n >= 2 {
        edges.extend(random_spanning_tree(n, &mut rng));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Uniform random labeled tree on `n >= 2` vertices via Prüfer decoding.
fn random_spanning_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &seq)
}

/// Decodes a Prüfer sequence into the unique labeled tree it encodes.
pub(crate) fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // ptr/leaf walk keeps this O(n) without a heap.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Random weighted set system: each element joins each set independently
/// with probability `density`; any element left uncovered is appended to a
/// random set, so the output is always feasible. Weights are uniform
/// hundredths in `[wmin, wmax]`.
pub fn gen_setsystem(
    n: usize,
    m: usize,
    density: f64,
    wmin: u64,
    wmax: u64,
    seed: u64,
) -> Result<SetSystem> {
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::InvalidParameter("density must be in (0,1]"));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("need at least one set"));
    }
    if wmin > wmax {
        return Err(Error::InvalidParameter("weight range is empty"));
    }
    let mut rng = rng_for(seed);
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut covered = vec![false; n];
    for set in sets.iter_mut() {
        for e in 0..n {
            if rng.gen::<f64>() < density {
                set.push(e);
                covered[e] = true;
            }
        }
    }
    for (e, &c) in covered.iter().enumerate() {
        if !c {
            let k = rng.gen_range(0..m);
            sets[k].push(e);
        }
    }
    let weights: Vec<Weight> = (0..m)
        .map(|_| {
            let hundredths = rng.gen_range(wmin * 100..=wmax * 100);
            w_ratio(hundredths as i64, 100)
        })
        .collect();
    SetSystem::new(n, sets, weights)
}

/// Random semi-metric on `n >= 3` cities: arbitrary positive integer arc
/// weights replaced by their all-pairs shortest-path closure, which
/// satisfies the triangle inequality by construction.
pub fn gen_semimetric(n: usize, seed: u64) -> Result<TspInstance> {
    if n < 3 {
        return Err(Error::InvalidParameter("semi-metric generator needs n >= 3"));
    }
    let mut rng = rng_for(seed);
    let mut w = vec![Weight::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                w[i * n + j] = w_ratio(rng.gen_range(1..=100), 1);
            }
        }
    }
    metric_closure(n, &mut w);
    TspInstance::new(n, w)
}

/// Floyd–Warshall closure in place.
pub fn metric_closure(n: usize, w: &mut [Weight]) {
    for k in 0..n {
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..n {
                if j == i || j == k {
                    continue;
                }
                let via = &w[i * n + k] + &w[k * n + j];
                if via < w[i * n + j] {
                    w[i * n + j] = via;
                }
            }
        }
    }
}
