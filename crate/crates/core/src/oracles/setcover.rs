use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{ExactResult, Limits};
use crate::instances::{Cover, SetSystem};
use crate::subset::Subset;
use crate::weight::Weight;
use crate::{Error, Result};

/// Minimum-weight cover by enumerating all `2^m` subfamilies.
///
/// Ties are broken by the lexicographically smallest index set.
pub fn exact_setcover_bruteforce(
    s: &SetSystem,
    limits: &Limits,
) -> Result<ExactResult<Weight, Cover>> {
    let m = s.len();
    if m > limits.setcover_bruteforce_m {
        return Err(Error::SizeLimit {
            what: "set cover brute force",
            limit: limits.setcover_bruteforce_m,
            actual: m,
        });
    }
    if !s.is_coverable() {
        return Err(Error::Infeasible);
    }
    let full = Subset::full(s.universe_size());
    let mut best: Option<(Weight, Vec<usize>)> = None;
    let mut nodes = 0u64;
    for mask in 0u64..(1u64 << m) {
        nodes += 1;
        let mut union = Subset::empty(s.universe_size());
        for i in 0..m {
            if mask >> i & 1 == 1 {
                union.union_with(s.set(i));
            }
        }
        if union != full {
            continue;
        }
        let chosen: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let weight = crate::weight::sum(chosen.iter().map(|&i| s.weight(i)));
        let better = match &best {
            None => true,
            Some((bw, bc)) => weight < *bw || (weight == *bw && chosen < *bc),
        };
        if better {
            best = Some((weight, chosen));
        }
    }
    let (value, chosen) = best.expect("coverable instance has a cover");
    let witness = Cover::new(chosen);
    assert!(witness.is_feasible(s));
    assert_eq!(witness.weight(s), value);
    Ok(ExactResult {
        value,
        witness,
        nodes_explored: nodes,
    })
}

/// Minimum-cardinality cover of a unit-weight system by inclusion-exclusion
/// counting.
///
/// The number of `k`-tuples of sets covering the universe is
/// `sum over X of (-1)^|X| * a(X)^k` where `a(X)` counts the sets disjoint
/// from `X`; the optimum is the least `k` making the count positive. Counts
/// are exact big integers (`a(X)^k` overflows machine words quickly). The
/// witness is rebuilt greedily by self-reduction: fix a set, recount.
pub fn exact_setcover_ie(s: &SetSystem, limits: &Limits) -> Result<ExactResult<usize, Cover>> {
    if s.universe_size() > limits.setcover_ie_n {
        return Err(Error::SizeLimit {
            what: "inclusion-exclusion set cover",
            limit: limits.setcover_ie_n,
            actual: s.universe_size(),
        });
    }
    if !s.is_unit_weighted() {
        return Err(Error::RequiresUnitWeights);
    }
    if !s.is_coverable() {
        return Err(Error::Infeasible);
    }
    let all: Vec<usize> = (0..s.len()).collect();
    let universe = Subset::full(s.universe_size());
    let value = min_cover_size(s, &universe, &all).expect("coverable");
    let mut nodes = 1u64;

    // Self-reduction for the witness, lexicographic by index.
    let mut remaining = universe;
    let mut available: Vec<usize> = all;
    let mut chosen: Vec<usize> = Vec::new();
    let mut budget = value;
    while !remaining.is_empty() {
        let mut picked = None;
        for (pos, &i) in available.iter().enumerate() {
            if !s.set(i).intersects(&remaining) {
                continue;
            }
            let residual = remaining.difference(s.set(i));
            let mut rest = available.clone();
            rest.remove(pos);
            nodes += 1;
            let need = if residual.is_empty() {
                Some(0)
            } else {
                min_cover_size(s, &residual, &rest)
            };
            if let Some(need) = need {
                if need + 1 <= budget {
                    picked = Some((pos, i, residual));
                    break;
                }
            }
        }
        let (pos, i, residual) =
            picked.ok_or(Error::Internal("self-reduction found no continuation"))?;
        chosen.push(i);
        available.remove(pos);
        remaining = residual;
        budget -= 1;
    }
    let witness = Cover::new(chosen);
    assert!(witness.is_feasible(s));
    assert_eq!(witness.len(), value);
    Ok(ExactResult {
        value,
        witness,
        nodes_explored: nodes,
    })
}

/// Least `k` such that some `k` of the given sets cover `target`, or `None`
/// if even all of them do not.
fn min_cover_size(s: &SetSystem, target: &Subset, available: &[usize]) -> Option<usize> {
    let elements = target.elements();
    let u = elements.len();
    if u == 0 {
        return Some(0);
    }
    let mut remap = alloc::collections::BTreeMap::new();
    for (new, &old) in elements.iter().enumerate() {
        remap.insert(old, new);
    }
    // g[y] = number of available sets whose restriction to `target` is a
    // subset of y, via the subset-sum transform.
    let mut g = vec![0i64; 1 << u];
    for &i in available {
        let mut mask = 0usize;
        for e in s.set(i).intersect(target).iter() {
            mask |= 1 << remap[&e];
        }
        g[mask] += 1;
    }
    for bit in 0..u {
        for y in 0..(1usize << u) {
            if y >> bit & 1 == 1 {
                g[y] += g[y ^ (1 << bit)];
            }
        }
    }
    let mut cover_union = Subset::empty(s.universe_size());
    for &i in available {
        cover_union.union_with(s.set(i));
    }
    if !target.is_subset_of(&cover_union) {
        return None;
    }
    // pow[y] tracks g[y]^k across rounds.
    let mut pow: Vec<BigInt> = g.iter().map(|&x| BigInt::from(x)).collect();
    let max_k = available.len();
    for k in 1..=max_k {
        if k > 1 {
            for (p, &base) in pow.iter_mut().zip(&g) {
                *p *= BigInt::from(base);
            }
        }
        let mut count = BigInt::zero();
        for (y, p) in pow.iter().enumerate() {
            let missing = u - (y.count_ones() as usize);
            if missing % 2 == 0 {
                count += p;
            } else {
                count -= p;
            }
        }
        if count.is_positive() {
            return Some(k);
        }
    }
    unreachable!("all available sets cover the target")
}

/// Minimum-weight cover by divide and conquer in polynomial space.
///
/// For every set `S` and every bipartition of the uncovered rest `U \ S`
/// into parts of at most half the current universe, the two parts are
/// covered recursively (sets restricted to each part, weights preserved);
/// nothing is memoized.
pub fn exact_setcover_dc(s: &SetSystem, limits: &Limits) -> Result<ExactResult<Weight, Cover>> {
    if s.universe_size() > limits.setcover_dc_n {
        return Err(Error::SizeLimit {
            what: "divide-and-conquer set cover",
            limit: limits.setcover_dc_n,
            actual: s.universe_size(),
        });
    }
    if !s.is_coverable() {
        return Err(Error::Infeasible);
    }
    let mut nodes = 0u64;
    let (value, chosen) =
        dc(s, &Subset::full(s.universe_size()), &mut nodes).ok_or(Error::Infeasible)?;
    let witness = Cover::new(chosen);
    assert!(witness.is_feasible(s));
    // A double-charged branch can only overestimate, never win; the winning
    // branch is charge-exact.
    assert_eq!(witness.weight(s), value);
    Ok(ExactResult {
        value,
        witness,
        nodes_explored: nodes,
    })
}

fn dc(s: &SetSystem, target: &Subset, nodes: &mut u64) -> Option<(Weight, Vec<usize>)> {
    *nodes += 1;
    if target.is_empty() {
        return Some((Weight::zero(), Vec::new()));
    }
    // Parts are capped at half the *current universe*, not half the rest;
    // the optimal branch may need a fully unbalanced split of U \ S.
    let half = target.count() / 2;
    let mut best: Option<(Weight, Vec<usize>)> = None;
    for i in 0..s.len() {
        if !s.set(i).intersects(target) {
            continue;
        }
        let rest = target.difference(s.set(i));
        let rest_elems = rest.elements();
        // Unordered bipartitions: pin the first leftover element to one side.
        let free = rest_elems.len().saturating_sub(1);
        for choice in 0u64..(1u64 << free) {
            let mut part1 = Subset::empty(s.universe_size());
            let mut part2 = Subset::empty(s.universe_size());
            if let Some(&first) = rest_elems.first() {
                part1.insert(first);
            }
            for (bit, &e) in rest_elems.iter().skip(1).enumerate() {
                if choice >> bit & 1 == 1 {
                    part1.insert(e);
                } else {
                    part2.insert(e);
                }
            }
            if part1.count() > half || part2.count() > half {
                continue;
            }
            let Some((w1, c1)) = dc(s, &part1, nodes) else {
                continue;
            };
            let Some((w2, c2)) = dc(s, &part2, nodes) else {
                continue;
            };
            let mut chosen = c1;
            chosen.extend(c2);
            chosen.push(i);
            chosen.sort_unstable();
            chosen.dedup();
            let weight = s.weight(i) + w1 + w2;
            let better = match &best {
                None => true,
                Some((bw, bc)) => weight < *bw || (weight == *bw && chosen < *bc),
            };
            if better {
                best = Some((weight, chosen));
            }
        }
    }
    best
}
