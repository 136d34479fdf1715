use alloc::vec;
use alloc::vec::Vec;

use super::{ExactResult, Limits};
use crate::instances::{Tour, TspInstance};
use crate::weight::Weight;
use crate::{Error, Result};

/// Optimal tour by subset dynamic programming over (visited set, last city)
/// states anchored at city 0.
pub fn held_karp(t: &TspInstance, limits: &Limits) -> Result<ExactResult<Weight, Tour>> {
    let n = t.n();
    if n > limits.tsp_n {
        return Err(Error::SizeLimit {
            what: "Held-Karp",
            limit: limits.tsp_n,
            actual: n,
        });
    }
    let m = n - 1; // cities 1..n encoded as bits 0..m
    let full = (1usize << m) - 1;
    let idx = |mask: usize, last: usize| mask * m + last;
    let mut dp: Vec<Option<Weight>> = vec![None; (full + 1) * m];
    let mut parent: Vec<usize> = vec![usize::MAX; (full + 1) * m];
    let mut nodes = 0u64;
    for last in 0..m {
        dp[idx(1 << last, last)] = Some(t.weight(0, last + 1).clone());
    }
    for mask in 1..=full {
        for last in 0..m {
            if mask >> last & 1 == 0 {
                continue;
            }
            let Some(cost) = dp[idx(mask, last)].clone() else {
                continue;
            };
            nodes += 1;
            let mut rest = full & !mask;
            while rest != 0 {
                let next = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let cand = &cost + t.weight(last + 1, next + 1);
                let slot = idx(mask | (1 << next), next);
                if dp[slot].as_ref().is_none_or(|best| cand < *best) {
                    dp[slot] = Some(cand);
                    parent[slot] = last;
                }
            }
        }
    }
    let mut best: Option<(Weight, usize)> = None;
    for last in 0..m {
        if let Some(cost) = &dp[idx(full, last)] {
            let total = cost + t.weight(last + 1, 0);
            if best.as_ref().is_none_or(|(bw, _)| total < *bw) {
                best = Some((total, last));
            }
        }
    }
    let (value, mut last) = best.expect("complete instance always has a tour");
    let mut order = vec![0usize];
    let mut mask = full;
    let mut tail = Vec::with_capacity(m);
    loop {
        tail.push(last + 1);
        let prev = parent[idx(mask, last)];
        mask &= !(1 << last);
        if prev == usize::MAX {
            break;
        }
        last = prev;
    }
    tail.reverse();
    order.extend(tail);
    let witness = Tour::new(order, n)?;
    assert_eq!(witness.weight(t), value);
    Ok(ExactResult {
        value,
        witness,
        nodes_explored: nodes,
    })
}
