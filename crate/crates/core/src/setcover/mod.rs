//! Set-cover machinery: the greedy algorithm with element prices, the
//! universe-scaling and set-merging reductions, and the dominating-set
//! specialization.

mod mds;
mod setmerge;
mod universe;

pub use mds::{closed_neighborhoods, is_dominating, mds_merge, mds_reduce, MdsReduceOutcome};
pub use setmerge::{setmerge_merge, setmerge_reduce, MergeReduceOutcome, MergeSubInstance};
pub use universe::{universe_merge, universe_reduce, UniverseEntry, UniverseReduceOutcome};

use alloc::vec::Vec;

use num_traits::Zero;

use crate::instances::{Cover, SetSystem};
use crate::subset::Subset;
use crate::weight::{sum, Weight};
use crate::{Error, Result};

/// Everything the greedy run records: the chosen sets in order, the price
/// charged to each element, and the order elements got covered in.
#[derive(Debug, Clone)]
pub struct GreedyTrace {
    /// Chosen set indices in selection order.
    pub chosen: Vec<usize>,
    /// `prices[e]` is what element `e` paid when it was first covered.
    pub prices: Vec<Weight>,
    /// Elements in the order greedy covered them (ties by element index).
    pub cover_order: Vec<usize>,
}

/// Greedy set cover: repeatedly pick the set covering new elements as
/// cheaply as possible (ties by set index), charging each newly covered
/// element the set's weight spread over its new elements.
pub fn greedy_cover(s: &SetSystem) -> Result<(GreedyTrace, Cover)> {
    if !s.is_coverable() {
        return Err(Error::Infeasible);
    }
    let n = s.universe_size();
    let mut covered = Subset::empty(n);
    let full = Subset::full(n);
    let mut trace = GreedyTrace {
        chosen: Vec::new(),
        prices: alloc::vec![Weight::zero(); n],
        cover_order: Vec::new(),
    };
    while covered != full {
        let pick = cheapest_ratio_set(s, &covered, None).expect("coverable instance");
        let fresh = s.set(pick).difference(&covered);
        let price = s.weight(pick) / crate::weight::w_int(fresh.count() as i64);
        for e in fresh.iter() {
            trace.prices[e] = price.clone();
            trace.cover_order.push(e);
        }
        covered.union_with(&fresh);
        trace.chosen.push(pick);
    }
    let total = sum(trace.chosen.iter().map(|&i| s.weight(i)));
    assert_eq!(sum(trace.prices.iter()), total, "prices account for the cover weight");
    let cover = Cover::new(trace.chosen.clone());
    Ok((trace, cover))
}

/// Index of the available set minimizing `w(S) / |S \ covered|`; sets with
/// no new coverage are skipped, ties break to the lowest index. `excluded`
/// marks sets no longer available.
pub(crate) fn cheapest_ratio_set(
    s: &SetSystem,
    covered: &Subset,
    excluded: Option<&[bool]>,
) -> Option<usize> {
    let mut best: Option<(Weight, usize, usize)> = None; // (weight, fresh, idx)
    for i in 0..s.len() {
        if excluded.is_some_and(|ex| ex[i]) {
            continue;
        }
        let fresh = s.set(i).difference(covered).count();
        if fresh == 0 {
            continue;
        }
        // Compare w_i/f_i < w_b/f_b as w_i * f_b < w_b * f_i (all nonneg).
        let better = match &best {
            None => true,
            Some((bw, bf, _)) => {
                s.weight(i) * crate::weight::w_int(*bf as i64)
                    < bw * crate::weight::w_int(fresh as i64)
            }
        };
        if better {
            best = Some((s.weight(i).clone(), fresh, i));
        }
    }
    best.map(|(_, _, i)| i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::gen_setsystem;
    use crate::oracles::{exact_setcover_bruteforce, Limits};
    use crate::weight::{w_int, w_ratio};
    use alloc::vec;

    #[test]
    fn greedy_worked_example() {
        // Ratios 1/2, 1/2, 3/4: picks set 0 then set 1, total weight 2.
        let s = SetSystem::new(
            4,
            vec![vec![0, 1], vec![2, 3], vec![0, 1, 2, 3]],
            vec![w_int(1), w_int(1), w_int(3)],
        )
        .unwrap();
        let (trace, cover) = greedy_cover(&s).unwrap();
        assert_eq!(trace.chosen, vec![0, 1]);
        assert_eq!(cover.weight(&s), w_int(2));
        assert_eq!(trace.cover_order, vec![0, 1, 2, 3]);
    }

    #[test]
    fn single_set_prices_evenly() {
        let s = SetSystem::new(4, vec![vec![0, 1, 2, 3]], vec![w_int(6)]).unwrap();
        let (trace, _) = greedy_cover(&s).unwrap();
        assert!(trace.prices.iter().all(|p| *p == w_ratio(6, 4)));
    }

    #[test]
    fn infeasible_is_an_error() {
        let s = SetSystem::new(3, vec![vec![0]], vec![w_int(1)]).unwrap();
        assert_eq!(greedy_cover(&s).unwrap_err(), Error::Infeasible);
    }

    #[test]
    fn price_lemma_against_oracle() {
        // price(e_k) <= OPT / (n - k + 1), exactly, for every k.
        let lim = Limits::default();
        for seed in 0..60 {
            let s = gen_setsystem(8, 6, 0.4, 1, 9, seed).unwrap();
            let opt = exact_setcover_bruteforce(&s, &lim).unwrap().value;
            let (trace, _) = greedy_cover(&s).unwrap();
            let n = s.universe_size();
            for (k1, &e) in trace.cover_order.iter().enumerate() {
                let k = k1 + 1;
                let bound = &opt / w_int((n - k + 1) as i64);
                assert!(trace.prices[e] <= bound, "seed {seed}, k {k}");
            }
        }
    }
}
