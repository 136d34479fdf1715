use alloc::vec;
use alloc::vec::Vec;

use crate::instances::{Cover, SetSystem};
use crate::subset::Subset;
use crate::weight::{sum, Weight};
use crate::{Error, Result};

/// One sub-instance of the set-merging reduction: a small family of merged
/// sets over the original universe, each remembering which original sets it
/// expands back to.
#[derive(Debug, Clone)]
pub struct MergeSubInstance {
    pub system: SetSystem,
    /// Per sub-instance set: the original indices it expands to.
    pub expansions: Vec<Vec<usize>>,
}

/// Output of the set-merging reducer.
#[derive(Debug, Clone)]
pub struct MergeReduceOutcome {
    /// Original indices sorted by nondecreasing weight (rank -> original).
    pub sorted: Vec<usize>,
    /// Blocks of original indices, `r` consecutive ranks each.
    pub blocks: Vec<Vec<usize>>,
    pub instances: Vec<MergeSubInstance>,
    pub rate: usize,
}

/// Sorts the sets by weight, merges each block of `r` consecutive ranks
/// into one set (weight = block total), and emits one sub-instance per
/// rank `i`: all full blocks not containing `i`, the merged strictly-lighter
/// prefix of `i`'s own block, and set `i` itself. Every sub-instance has
/// exactly `ceil(m/r) + 1` sets.
pub fn setmerge_reduce(s: &SetSystem, rate: usize) -> Result<MergeReduceOutcome> {
    if rate < 2 {
        return Err(Error::InvalidParameter("set merging needs an integer rate > 1"));
    }
    if !s.is_coverable() {
        return Err(Error::Infeasible);
    }
    let m = s.len();
    let n = s.universe_size();
    let mut sorted: Vec<usize> = (0..m).collect();
    sorted.sort_by(|&a, &b| s.weight(a).cmp(s.weight(b)).then(a.cmp(&b)));

    let num_blocks = m.div_ceil(rate);
    let blocks: Vec<Vec<usize>> = (0..num_blocks)
        .map(|bi| sorted[bi * rate..m.min((bi + 1) * rate)].to_vec())
        .collect();
    let block_union = |members: &[usize]| -> (Subset, Weight) {
        let mut u = Subset::empty(n);
        for &i in members {
            u.union_with(s.set(i));
        }
        (u, sum(members.iter().map(|&i| s.weight(i))))
    };

    let mut instances = Vec::with_capacity(m);
    for (rank0, &orig) in sorted.iter().enumerate() {
        let my_block = rank0 / rate;
        let mut sets: Vec<Subset> = Vec::new();
        let mut weights: Vec<Weight> = Vec::new();
        let mut expansions: Vec<Vec<usize>> = Vec::new();
        for (bi, members) in blocks.iter().enumerate() {
            if bi == my_block {
                continue;
            }
            let (u, w) = block_union(members);
            sets.push(u);
            weights.push(w);
            expansions.push(members.clone());
        }
        // The strictly-lighter prefix of the own block, emitted even when
        // empty so every sub-instance has the same shape.
        let prefix: Vec<usize> = blocks[my_block]
            .iter()
            .copied()
            .take(rank0 % rate)
            .collect();
        let (pu, pw) = block_union(&prefix);
        sets.push(pu);
        weights.push(pw);
        expansions.push(prefix);
        // The set itself.
        sets.push(s.set(orig).clone());
        weights.push(s.weight(orig).clone());
        expansions.push(vec![orig]);

        let system = SetSystem::from_subsets(n, sets, weights)?;
        assert_eq!(system.len(), num_blocks + 1);
        instances.push(MergeSubInstance {
            system,
            expansions,
        });
    }
    Ok(MergeReduceOutcome {
        sorted,
        blocks,
        instances,
        rate,
    })
}

/// Expands each feasible sub-cover through the merged sets' expansion lists
/// (same weight) and returns the lightest; infeasible sub-instances are
/// skipped. With alpha-approximate sub-solutions the result weighs at most
/// `alpha * r * OPT`.
pub fn setmerge_merge(
    s: &SetSystem,
    outcome: &MergeReduceOutcome,
    sub_solutions: &[Option<Cover>],
) -> Result<Cover> {
    assert_eq!(sub_solutions.len(), outcome.instances.len());
    let mut best: Option<(Weight, Cover)> = None;
    for (inst, sub) in outcome.instances.iter().zip(sub_solutions) {
        let Some(cover) = sub else { continue };
        let mut indices = Vec::new();
        for &j in cover.chosen() {
            if j >= inst.expansions.len() {
                return Err(Error::ContractViolation(
                    "sub-solution indexes outside the sub-instance",
                ));
            }
            indices.extend(inst.expansions[j].iter().copied());
        }
        let expanded = Cover::new(indices);
        // Expansion preserves weight exactly.
        debug_assert_eq!(expanded.weight(s), cover.weight(&inst.system));
        if !expanded.is_feasible(s) {
            return Err(Error::ContractViolation(
                "expanded candidate does not cover the universe",
            ));
        }
        let weight = expanded.weight(s);
        if best.as_ref().is_none_or(|(bw, _)| weight < *bw) {
            best = Some((weight, expanded));
        }
    }
    best.map(|(_, c)| c).ok_or(Error::Internal(
        "a feasible instance always has a feasible sub-instance",
    ))
}
