use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use super::cheapest_ratio_set;
use crate::instances::{Cover, SetSystem};
use crate::subset::Subset;
use crate::weight::{w_int, Weight};
use crate::{Error, Result};

/// One crossing event of the universe-scaling reducer.
#[derive(Debug, Clone)]
pub struct UniverseEntry {
    /// Original index of the crossing set.
    pub crossing_set: usize,
    /// Original indices committed by greedy before this crossing.
    pub committed: Vec<usize>,
    /// Residual instance over the elements covered by neither the committed
    /// sets nor the crossing set, remapped to a compact universe. `None`
    /// when the residual is empty and there is nothing left to solve.
    pub sub: Option<SetSystem>,
    /// Sub-instance set index -> original set index.
    pub back: Vec<usize>,
}

/// Output of the universe-scaling reducer.
#[derive(Debug, Clone)]
pub struct UniverseReduceOutcome {
    pub entries: Vec<UniverseEntry>,
    /// Universe size of the original instance, fixed at reducer entry.
    pub universe_size: usize,
    pub rate: Weight,
}

/// Runs greedy, but whenever the ratio-minimizing set would leave at most
/// `n/r` elements uncovered (a *crossing set*), snapshots the state, emits
/// the residual sub-instance, removes that set from the working family and
/// continues; stops once the remaining family can no longer cover the
/// universe. Every residual universe has at most `ceil(n/r)` elements.
pub fn universe_reduce(s: &SetSystem, rate: &Weight) -> Result<UniverseReduceOutcome> {
    if rate <= &Weight::one() {
        return Err(Error::InvalidParameter("universe scaling needs rate > 1"));
    }
    if s.universe_size() == 0 {
        return Err(Error::InvalidParameter(
            "universe scaling needs a nonempty universe",
        ));
    }
    if !s.is_coverable() {
        return Err(Error::Infeasible);
    }
    let n = s.universe_size();
    let threshold = w_int(n as i64) / rate; // uncovered counts above this keep greedy going
    let mut committed: Vec<usize> = Vec::new();
    let mut covered = Subset::empty(n);
    let mut removed = vec![false; s.len()];
    let mut entries = Vec::new();
    loop {
        // Stop when the universe is no longer coverable by the remaining
        // family together with what greedy already committed.
        let mut reachable = covered.clone();
        for i in 0..s.len() {
            if !removed[i] {
                reachable.union_with(s.set(i));
            }
        }
        if reachable != Subset::full(n) {
            break;
        }
        let pick = cheapest_ratio_set(s, &covered, Some(&removed))
            .expect("coverable state has a productive set");
        let after = covered.union(s.set(pick));
        let uncovered_after = w_int((n - after.count()) as i64);
        if uncovered_after > threshold {
            committed.push(pick);
            covered = after;
        } else {
            // Crossing set: emit the residual instance and drop the set.
            let residual = Subset::full(n).difference(&after);
            let (sub, back) = match build_residual(s, &residual) {
                Some((sys, back)) => (Some(sys), back),
                None => (None, Vec::new()),
            };
            entries.push(UniverseEntry {
                crossing_set: pick,
                committed: committed.clone(),
                sub,
                back,
            });
            removed[pick] = true;
        }
    }
    assert!(
        (1..=s.len()).contains(&entries.len()),
        "reducer emits between 1 and m residual instances"
    );
    for e in &entries {
        if let Some(sub) = &e.sub {
            assert!(
                w_int(sub.universe_size() as i64) <= threshold,
                "residual universe larger than n/r"
            );
        }
    }
    Ok(UniverseReduceOutcome {
        entries,
        universe_size: n,
        rate: rate.clone(),
    })
}

/// Restriction of every set to `residual`, remapped to a compact universe;
/// empty restrictions are dropped. `None` when the residual is empty.
fn build_residual(s: &SetSystem, residual: &Subset) -> Option<(SetSystem, Vec<usize>)> {
    let elements = residual.elements();
    if elements.is_empty() {
        return None;
    }
    let mut remap = alloc::collections::BTreeMap::new();
    for (new, &old) in elements.iter().enumerate() {
        remap.insert(old, new);
    }
    let mut sets = Vec::new();
    let mut weights = Vec::new();
    let mut back = Vec::new();
    for i in 0..s.len() {
        let restricted: Vec<usize> = s
            .set(i)
            .intersect(residual)
            .iter()
            .map(|e| remap[&e])
            .collect();
        if restricted.is_empty() {
            continue;
        }
        sets.push(restricted);
        weights.push(s.weight(i).clone());
        back.push(i);
    }
    Some((
        SetSystem::new(elements.len(), sets, weights).expect("restriction stays valid"),
        back,
    ))
}

/// Assembles, for every entry with a feasible sub-solution, the candidate
/// `committed + crossing set + mapped sub-solution` (charging each original
/// set once) and returns the lightest. With alpha-approximate
/// sub-solutions the result weighs at most
/// `(alpha + H_n - H_ceil(n/r)) * OPT`.
pub fn universe_merge(
    s: &SetSystem,
    outcome: &UniverseReduceOutcome,
    sub_solutions: &[Option<Cover>],
) -> Result<Cover> {
    assert_eq!(sub_solutions.len(), outcome.entries.len());
    let mut best: Option<(Weight, Cover)> = None;
    for (entry, sub) in outcome.entries.iter().zip(sub_solutions) {
        let mut indices = entry.committed.clone();
        indices.push(entry.crossing_set);
        match (&entry.sub, sub) {
            (None, _) => {}
            (Some(_), Some(cover)) => {
                for &j in cover.chosen() {
                    if j >= entry.back.len() {
                        return Err(Error::ContractViolation(
                            "sub-solution indexes outside the residual instance",
                        ));
                    }
                    indices.push(entry.back[j]);
                }
            }
            (Some(_), None) => continue, // sub-instance reported infeasible
        }
        let candidate = Cover::new(indices);
        if !candidate.is_feasible(s) {
            return Err(Error::ContractViolation(
                "assembled candidate does not cover the universe",
            ));
        }
        let weight = candidate.weight(s);
        if best.as_ref().is_none_or(|(bw, _)| weight < *bw) {
            best = Some((weight, candidate));
        }
    }
    best.map(|(_, c)| c).ok_or(Error::Internal(
        "feasible input always yields at least one feasible candidate",
    ))
}
