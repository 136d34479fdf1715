use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::instances::TspInstance;
use crate::weight::Weight;
use crate::{Error, Result};

/// A minimum-weight vertex-disjoint directed cycle cover (cycles of length
/// at least two).
#[derive(Debug, Clone)]
pub struct CycleCover {
    /// Cycles listed from their smallest vertex, ordered by that vertex.
    pub cycles: Vec<Vec<usize>>,
    /// `successor[v]` is the vertex the cover leaves `v` towards.
    pub successor: Vec<usize>,
    pub weight: Weight,
}

/// Computes a lightest cycle cover as a minimum-weight perfect matching
/// between out-copies and in-copies of the vertices, with the diagonal
/// (self-arcs) forbidden — the assignment problem, solved by shortest
/// augmenting paths with potentials over exact rationals.
pub fn min_cycle_cover(t: &TspInstance) -> Result<CycleCover> {
    let n = t.n();
    if n < 2 {
        return Err(Error::InvalidParameter("cycle cover needs n >= 2"));
    }
    let cost = |i: usize, j: usize| -> Option<Weight> {
        if i == j {
            None
        } else {
            Some(t.weight(i, j).clone())
        }
    };
    // 1-based Hungarian with a virtual column 0; None plays infinity.
    let mut u = vec![Weight::zero(); n + 1];
    let mut v = vec![Weight::zero(); n + 1];
    let mut assigned_row = vec![0usize; n + 1]; // per column; 0 = free
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        assigned_row[0] = i;
        let mut j0 = 0usize;
        let mut minv: Vec<Option<Weight>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = assigned_row[j0];
            let mut delta: Option<Weight> = None;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                if let Some(c) = cost(i0 - 1, j - 1) {
                    let cur = c - &u[i0] - &v[j];
                    if minv[j].as_ref().is_none_or(|m| cur < *m) {
                        minv[j] = Some(cur);
                        way[j] = j0;
                    }
                }
                if let Some(m) = &minv[j] {
                    if delta.as_ref().is_none_or(|d| m < d) {
                        delta = Some(m.clone());
                        j1 = j;
                    }
                }
            }
            let delta = delta.ok_or(Error::Internal(
                "assignment infeasible despite forbidden-diagonal derangements existing",
            ))?;
            for j in 0..=n {
                if used[j] {
                    u[assigned_row[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(m) = &mut minv[j] {
                    *m -= &delta;
                }
            }
            j0 = j1;
            if assigned_row[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            assigned_row[j0] = assigned_row[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut successor = vec![usize::MAX; n];
    for j in 1..=n {
        successor[assigned_row[j] - 1] = j - 1;
    }
    let mut weight = Weight::zero();
    for (i, &j) in successor.iter().enumerate() {
        assert_ne!(i, j, "diagonal must stay forbidden");
        weight += t.weight(i, j);
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(v);
            v = successor[v];
        }
        assert!(cycle.len() >= 2);
        cycles.push(cycle);
    }
    Ok(CycleCover {
        cycles,
        successor,
        weight,
    })
}
