//! [`Reduction`](super::Reduction) implementations for every scheme, so the
//! composition machinery and the CLI can treat them uniformly.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use super::{
    coloring_simple_merge, coloring_simple_reduce, mis_merge, mis_reduce, tsp_merge, tsp_reduce,
    GuaranteeExpr, MisContext, Reduction, SimpleContext, TspContext,
};
use crate::bandwidth::{bandwidth_merge, bandwidth_reduce, BandwidthReduction};
use crate::instances::{Coloring, Cover, Graph, Ordering, SetSystem, Tour, TspInstance};
use crate::setcover::{
    setmerge_merge, setmerge_reduce, universe_merge, universe_reduce, MergeReduceOutcome,
    UniverseReduceOutcome,
};
use crate::weight::{w_int, w_ratio, Weight};
use crate::Result;

/// Independent set: rate `parts/window`, guarantee `rate * alpha`.
pub struct MisStep {
    pub parts: usize,
    pub window: usize,
}

impl Reduction for MisStep {
    type Instance = Graph;
    type Solution = Vec<usize>;
    type Context = (MisContext, Vec<Graph>);

    fn rate(&self) -> Weight {
        w_ratio(self.parts as i64, self.window as i64)
    }

    fn guarantee(&self) -> GuaranteeExpr {
        GuaranteeExpr::MulConst(self.rate())
    }

    fn size(&self, inst: &Graph) -> usize {
        inst.n()
    }

    fn slack(&self) -> usize {
        self.window
    }

    fn reduce(&self, inst: &Graph) -> Result<(Vec<Graph>, Self::Context)> {
        let (graphs, ctx) = mis_reduce(inst, self.parts, self.window)?;
        Ok((graphs.clone(), (ctx, graphs)))
    }

    fn merge(
        &self,
        inst: &Graph,
        (ctx, graphs): Self::Context,
        subs: Vec<Option<Vec<usize>>>,
    ) -> Result<Vec<usize>> {
        mis_merge(inst, &ctx, &graphs, &subs)
    }
}

/// Simple coloring split: rate `r`, guarantee `r * alpha`.
pub struct ColoringSimpleStep {
    pub rate: usize,
}

impl Reduction for ColoringSimpleStep {
    type Instance = Graph;
    type Solution = Coloring;
    type Context = (SimpleContext, Vec<Graph>);

    fn rate(&self) -> Weight {
        w_int(self.rate as i64)
    }

    fn guarantee(&self) -> GuaranteeExpr {
        GuaranteeExpr::MulConst(self.rate())
    }

    fn size(&self, inst: &Graph) -> usize {
        inst.n()
    }

    fn slack(&self) -> usize {
        1
    }

    fn reduce(&self, inst: &Graph) -> Result<(Vec<Graph>, Self::Context)> {
        let (graphs, ctx) = coloring_simple_reduce(inst, self.rate)?;
        Ok((graphs.clone(), (ctx, graphs)))
    }

    fn merge(
        &self,
        inst: &Graph,
        (ctx, graphs): Self::Context,
        subs: Vec<Option<Coloring>>,
    ) -> Result<Coloring> {
        coloring_simple_merge(inst, &ctx, &graphs, &subs)
    }
}

/// Set-merging: rate `r` over the family size, guarantee `r * alpha`.
pub struct SetMergeStep {
    pub rate: usize,
}

impl Reduction for SetMergeStep {
    type Instance = SetSystem;
    type Solution = Cover;
    type Context = MergeReduceOutcome;

    fn rate(&self) -> Weight {
        w_int(self.rate as i64)
    }

    fn guarantee(&self) -> GuaranteeExpr {
        GuaranteeExpr::MulConst(self.rate())
    }

    fn size(&self, inst: &SetSystem) -> usize {
        inst.len()
    }

    fn slack(&self) -> usize {
        2
    }

    fn reduce(&self, inst: &SetSystem) -> Result<(Vec<SetSystem>, Self::Context)> {
        let outcome = setmerge_reduce(inst, self.rate)?;
        let instances = outcome.instances.iter().map(|i| i.system.clone()).collect();
        Ok((instances, outcome))
    }

    fn merge(
        &self,
        inst: &SetSystem,
        ctx: Self::Context,
        subs: Vec<Option<Cover>>,
    ) -> Result<Cover> {
        setmerge_merge(inst, &ctx, &subs)
    }
}

/// Universe-scaling: rate `r` over the universe, guarantee
/// `alpha + H_n - H_ceil(n/r)  (<= alpha + ln r + O(1/n))`.
pub struct UniverseStep {
    pub rate: Weight,
}

impl Reduction for UniverseStep {
    type Instance = SetSystem;
    type Solution = Cover;
    type Context = UniverseReduceOutcome;

    fn rate(&self) -> Weight {
        self.rate.clone()
    }

    fn guarantee(&self) -> GuaranteeExpr {
        GuaranteeExpr::AddLnRate {
            coeff: Weight::one(),
            rate: self.rate.clone(),
        }
    }

    fn size(&self, inst: &SetSystem) -> usize {
        inst.universe_size()
    }

    fn slack(&self) -> usize {
        1
    }

    fn reduce(&self, inst: &SetSystem) -> Result<(Vec<SetSystem>, Self::Context)> {
        let outcome = universe_reduce(inst, &self.rate)?;
        let instances = outcome
            .entries
            .iter()
            .map(|e| match &e.sub {
                Some(sys) => sys.clone(),
                None => SetSystem::new(0, vec![], vec![]).expect("empty system is valid"),
            })
            .collect();
        Ok((instances, outcome))
    }

    fn merge(
        &self,
        inst: &SetSystem,
        ctx: Self::Context,
        subs: Vec<Option<Cover>>,
    ) -> Result<Cover> {
        universe_merge(inst, &ctx, &subs)
    }
}

/// Semi-metric TSP contraction: rate `2^k`, guarantee `alpha + k`.
pub struct TspStep {
    pub k: usize,
}

impl Reduction for TspStep {
    type Instance = TspInstance;
    type Solution = Tour;
    type Context = TspContext;

    fn rate(&self) -> Weight {
        w_int(1i64 << self.k)
    }

    fn guarantee(&self) -> GuaranteeExpr {
        GuaranteeExpr::AddConst(w_int(self.k as i64))
    }

    fn size(&self, inst: &TspInstance) -> usize {
        inst.n()
    }

    fn slack(&self) -> usize {
        1
    }

    fn reduce(&self, inst: &TspInstance) -> Result<(Vec<TspInstance>, Self::Context)> {
        let (sub, ctx) = tsp_reduce(inst, self.k)?;
        Ok((sub.into_iter().collect(), ctx))
    }

    fn merge(
        &self,
        inst: &TspInstance,
        ctx: Self::Context,
        mut subs: Vec<Option<Tour>>,
    ) -> Result<Tour> {
        let inner = subs.pop().flatten();
        tsp_merge(inst, &ctx, inner.as_ref())
    }
}

/// Bandwidth halving: rate 2, guarantee `9 * alpha`.
pub struct BandwidthStep;

impl Reduction for BandwidthStep {
    type Instance = Graph;
    type Solution = Ordering;
    type Context = BandwidthReduction;

    fn rate(&self) -> Weight {
        w_int(2)
    }

    fn guarantee(&self) -> GuaranteeExpr {
        GuaranteeExpr::MulConst(w_int(9))
    }

    fn size(&self, inst: &Graph) -> usize {
        inst.n()
    }

    fn slack(&self) -> usize {
        1
    }

    fn reduce(&self, inst: &Graph) -> Result<(Vec<Graph>, Self::Context)> {
        let ctx = bandwidth_reduce(inst);
        let subs = if ctx.solved_directly() {
            vec![]
        } else {
            vec![ctx.reduced().clone()]
        };
        Ok((subs, ctx))
    }

    fn merge(
        &self,
        _inst: &Graph,
        ctx: Self::Context,
        mut subs: Vec<Option<Ordering>>,
    ) -> Result<Ordering> {
        let inner = subs.pop().flatten();
        bandwidth_merge(&ctx, inner.as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_graph, gen_setsystem};
    use crate::oracles::{
        exact_mis, exact_setcover_bruteforce, is_independent, Limits,
    };
    use crate::reductions::compose;

    #[test]
    fn composed_setmerge_squares_the_rate() {
        let step = SetMergeStep { rate: 2 };
        let composed = compose(step, 2);
        assert_eq!(composed.rate(), w_int(4));
        assert_eq!(composed.guarantee(), GuaranteeExpr::MulConst(w_int(4)));
        let lim = Limits::default();
        for seed in 0..15 {
            let s = gen_setsystem(6, 8, 0.45, 1, 9, seed).unwrap();
            let opt = exact_setcover_bruteforce(&s, &lim).unwrap().value;
            let mut max_leaf = 0usize;
            let sol = composed
                .solve(&s, &mut |leaf: &SetSystem| {
                    max_leaf = max_leaf.max(leaf.len());
                    Ok(exact_setcover_bruteforce(leaf, &lim).ok().map(|r| r.witness))
                })
                .unwrap()
                .expect("feasible instance");
            assert!(sol.is_feasible(&s));
            assert!(sol.weight(&s) <= w_int(4) * &opt, "seed {seed}");
            assert!(max_leaf <= 8 / 4 + 2 * 2);
        }
    }

    #[test]
    fn composed_k1_matches_single_step() {
        let lim = Limits::default();
        for seed in 0..20 {
            let s = gen_setsystem(6, 6, 0.5, 1, 9, seed).unwrap();
            let outcome = setmerge_reduce(&s, 2).unwrap();
            let subs: Vec<Option<Cover>> = outcome
                .instances
                .iter()
                .map(|i| {
                    exact_setcover_bruteforce(&i.system, &lim)
                        .ok()
                        .map(|r| r.witness)
                })
                .collect();
            let direct = setmerge_merge(&s, &outcome, &subs).unwrap();
            let composed = compose(SetMergeStep { rate: 2 }, 1);
            let via = composed
                .solve(&s, &mut |leaf: &SetSystem| {
                    Ok(exact_setcover_bruteforce(leaf, &lim).ok().map(|r| r.witness))
                })
                .unwrap()
                .unwrap();
            assert_eq!(direct.weight(&s), via.weight(&s), "seed {seed}");
        }
    }

    #[test]
    fn composed_mis_quarter_bound() {
        let lim = Limits::default();
        let composed = compose(
            MisStep {
                parts: 2,
                window: 1,
            },
            2,
        );
        for seed in 0..25 {
            let g = gen_graph(13, 0.35, seed, false).unwrap();
            let opt = exact_mis(&g, &lim).unwrap().value;
            let sol = composed
                .solve(&g, &mut |leaf: &Graph| {
                    Ok(Some(exact_mis(leaf, &lim)?.witness))
                })
                .unwrap()
                .unwrap();
            assert!(is_independent(&g, &sol));
            assert!(4 * sol.len() >= opt, "seed {seed}");
        }
    }

    #[test]
    fn composed_bandwidth_step_guarantee_display() {
        let composed = compose(BandwidthStep, 2);
        assert_eq!(composed.rate(), w_int(4));
        assert_eq!(composed.guarantee(), GuaranteeExpr::MulConst(w_int(81)));
    }
}
