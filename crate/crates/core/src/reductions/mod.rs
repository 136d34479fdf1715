//! The generic reduce/merge contract, composition, and guarantee
//! certificates, plus the independent-set, coloring and TSP reductions.

mod certificate;
mod coloring;
mod mis;
mod steps;
mod tsp;

pub use certificate::{ratio_display, ApproxCertificate, GuaranteeBound, ProblemTag};
pub use coloring::{
    coloring_bh_merge, coloring_bh_reduce, coloring_simple_merge, coloring_simple_reduce,
    BhContext, ExactMisSolver, MisSolver, ReducedMisSolver, SimpleContext,
};
pub use mis::{mis_merge, mis_reduce, MisContext};
pub use steps::{BandwidthStep, ColoringSimpleStep, MisStep, SetMergeStep, TspStep, UniverseStep};
pub use tsp::{tsp_merge, tsp_reduce, TspContext};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;

use crate::weight::{approx_decimal, format_exact, ln_bounds, w_int, Weight};
use crate::{Error, Result};

/// A reduction's declared guarantee, carried symbolically so composed
/// bounds can be printed in closed form.
#[derive(Debug, Clone, PartialEq)]
pub enum GuaranteeExpr {
    /// `f(alpha) = c * alpha`
    MulConst(Weight),
    /// `f(alpha) = alpha + c`
    AddConst(Weight),
    /// `f(alpha) = alpha + c * ln(rate)`
    AddLnRate { coeff: Weight, rate: Weight },
}

impl GuaranteeExpr {
    /// The k-fold composition `f^k`, in the same closed form.
    pub fn compose_k(&self, k: usize) -> GuaranteeExpr {
        let kw = w_int(k as i64);
        match self {
            GuaranteeExpr::MulConst(c) => {
                let mut pow = Weight::one();
                for _ in 0..k {
                    pow *= c;
                }
                GuaranteeExpr::MulConst(pow)
            }
            GuaranteeExpr::AddConst(c) => GuaranteeExpr::AddConst(c * kw),
            GuaranteeExpr::AddLnRate { coeff, rate } => GuaranteeExpr::AddLnRate {
                coeff: coeff * kw,
                rate: rate.clone(),
            },
        }
    }

    /// Rational enclosure of `f(alpha)`.
    pub fn evaluate_bounds(&self, alpha: &Weight) -> (Weight, Weight) {
        match self {
            GuaranteeExpr::MulConst(c) => (c * alpha, c * alpha),
            GuaranteeExpr::AddConst(c) => (alpha + c, alpha + c),
            GuaranteeExpr::AddLnRate { coeff, rate } => {
                let (lo, hi) = ln_bounds(rate, 30);
                (alpha + coeff * lo, alpha + coeff * hi)
            }
        }
    }

    /// Human-readable form, e.g. `alpha + 1*ln(2)`.
    pub fn describe(&self) -> String {
        match self {
            GuaranteeExpr::MulConst(c) => format!("{}*alpha", format_exact(c)),
            GuaranteeExpr::AddConst(c) => format!("alpha + {}", format_exact(c)),
            GuaranteeExpr::AddLnRate { coeff, rate } => {
                let (lo, _) = self.evaluate_bounds(&Weight::one());
                format!(
                    "alpha + {}*ln({}) (f(1) ~ {})",
                    format_exact(coeff),
                    format_exact(rate),
                    approx_decimal(&lo, 4)
                )
            }
        }
    }
}

/// A reducer/merger pair: the reducer splits an instance into sub-instances
/// at most `1/rate` of its size (plus slack), the merger turns
/// alpha-approximate sub-solutions into a `guarantee(alpha)`-approximate
/// solution. A `None` sub-solution marks an infeasible sub-instance.
pub trait Reduction {
    type Instance: Clone;
    type Solution;
    type Context;

    fn rate(&self) -> Weight;
    fn guarantee(&self) -> GuaranteeExpr;
    /// The size measure the rate divides.
    fn size(&self, inst: &Self::Instance) -> usize;
    /// Additive size slack allowed per level.
    fn slack(&self) -> usize;
    fn reduce(&self, inst: &Self::Instance) -> Result<(Vec<Self::Instance>, Self::Context)>;
    fn merge(
        &self,
        inst: &Self::Instance,
        ctx: Self::Context,
        subs: Vec<Option<Self::Solution>>,
    ) -> Result<Self::Solution>;
}

/// A base step applied `k` levels deep: rate `r^k`, guarantee `f^k`.
pub struct ComposedReduction<R: Reduction> {
    base: R,
    k: usize,
}

/// Composes a reduction step with itself `k` times.
pub fn compose<R: Reduction>(step: R, k: usize) -> ComposedReduction<R> {
    assert!(k >= 1, "composition depth must be positive");
    ComposedReduction { base: step, k }
}

impl<R: Reduction> ComposedReduction<R> {
    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn depth(&self) -> usize {
        self.k
    }

    pub fn rate(&self) -> Weight {
        let mut r = Weight::one();
        for _ in 0..self.k {
            r *= self.base.rate();
        }
        r
    }

    pub fn guarantee(&self) -> GuaranteeExpr {
        self.base.guarantee().compose_k(self.k)
    }

    /// Applies the base reducer recursively `k` levels deep, hands every
    /// leaf to `leaf_solver`, and folds the base mergers back up in matching
    /// order. Returns `None` when the instance itself is infeasible.
    ///
    /// Every leaf size is asserted against `s(I)/r^k + k*slack`.
    pub fn solve<F>(&self, inst: &R::Instance, leaf_solver: &mut F) -> Result<Option<R::Solution>>
    where
        F: FnMut(&R::Instance) -> Result<Option<R::Solution>>,
    {
        let s0 = self.base.size(inst);
        self.solve_level(inst, self.k, s0, leaf_solver)
    }

    fn solve_level<F>(
        &self,
        inst: &R::Instance,
        level: usize,
        s0: usize,
        leaf_solver: &mut F,
    ) -> Result<Option<R::Solution>>
    where
        F: FnMut(&R::Instance) -> Result<Option<R::Solution>>,
    {
        if level == 0 {
            let bound =
                w_int(s0 as i64) / self.rate() + w_int((self.k * self.base.slack()) as i64);
            assert!(
                w_int(self.base.size(inst) as i64) <= bound,
                "leaf instance larger than s/r^k plus slack"
            );
            return leaf_solver(inst);
        }
        let (subs, ctx) = match self.base.reduce(inst) {
            Ok(pair) => pair,
            Err(Error::Infeasible) => return Ok(None),
            Err(e) => return Err(e),
        };
        let mut solutions = Vec::with_capacity(subs.len());
        for sub in &subs {
            solutions.push(self.solve_level(sub, level - 1, s0, leaf_solver)?);
        }
        self.base.merge(inst, ctx, solutions).map(Some)
    }
}
