//! Solve/verify orchestration: parse the instance, run reducer → inner
//! solver (possibly across a worker pool) → merger, and assemble the
//! run report with its guarantee certificate.

use std::time::Instant;

use num_traits::{One, Signed};
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use xapx_core::bandwidth::{
    approx_bandwidth, bandwidth_of_ordering, BSearch,
};
use xapx_core::instances::{Cover, Graph, Ordering, SetSystem};
use xapx_core::oracles::{
    exact_bandwidth, exact_coloring, exact_mis, exact_setcover_bruteforce, exact_setcover_dc,
    exact_setcover_ie, held_karp, Limits,
};
use xapx_core::reductions::{
    compose, coloring_bh_merge, coloring_bh_reduce, tsp_merge, tsp_reduce, ApproxCertificate,
    BandwidthStep, ColoringSimpleStep, ExactMisSolver, GuaranteeBound, MisSolver, MisStep,
    ProblemTag, ReducedMisSolver, Reduction, SetMergeStep, UniverseStep,
};
use xapx_core::setcover::{closed_neighborhoods, greedy_cover, mds_merge, mds_reduce};
use xapx_core::weight::{format_exact, harmonic, parse_rational, w_int, Weight};
use xapx_core::Error as CoreError;

use crate::formats::{parse_graph, parse_setsystem, parse_tsp, FormatError};
use crate::report::{CertificateReport, ExactReport, RunReport};

/// Failure classification; drives the process exit code.
#[derive(Debug, Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("verification failure: {0}")]
    Verification(String),
    #[error("{0}")]
    SizeLimit(String),
    #[error("{0}")]
    Failure(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) | RunError::Failure(_) => 1,
            RunError::Infeasible(_) => 2,
            RunError::Verification(_) => 3,
            RunError::SizeLimit(_) => 4,
        }
    }
}

impl From<CoreError> for RunError {
    fn from(e: CoreError) -> Self {
        match &e {
            CoreError::Infeasible => RunError::Infeasible(e.to_string()),
            CoreError::SizeLimit { .. } => RunError::SizeLimit(e.to_string()),
            CoreError::InvalidParameter(_)
            | CoreError::Disconnected
            | CoreError::RequiresUnitWeights => RunError::Usage(e.to_string()),
            _ => RunError::Failure(e.to_string()),
        }
    }
}

impl From<FormatError> for RunError {
    fn from(e: FormatError) -> Self {
        RunError::Usage(e.to_string())
    }
}

type Result<T> = std::result::Result<T, RunError>;

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub rate: String,
    pub scale: Option<String>,
    pub method: Option<String>,
    pub inner: String,
    pub verify: bool,
    pub jobs: usize,
    pub linear_b: bool,
    pub mis_rate: Option<String>,
    pub limits: Limits,
}

struct Outcome {
    value: Weight,
    solution: serde_json::Value,
    cert: ApproxCertificate,
}

pub fn run_solve(
    problem: &str,
    text: &str,
    label: &str,
    opts: &SolveOptions,
) -> Result<RunReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| RunError::Failure(e.to_string()))?;
    let started = Instant::now();
    let mut outcome = pool.install(|| dispatch(problem, text, opts))?;
    let oracle = if opts.verify {
        let opt = oracle_optimum(problem, text, opts)?;
        if !outcome.cert.verify(opt.clone()) {
            return Err(RunError::Verification(format!(
                "claimed bound violated: {}",
                outcome.cert.inequality_text()
            )));
        }
        Some(opt)
    } else {
        None
    };
    let wall_ms = started.elapsed().as_millis() as u64;
    Ok(RunReport {
        problem: problem.to_string(),
        instance: label.to_string(),
        rate: opts.rate.clone(),
        inner: opts.inner.clone(),
        value: format_exact(&outcome.value),
        solution: outcome.solution,
        certificate: CertificateReport::from_certificate(&outcome.cert),
        oracle_optimum: oracle.as_ref().map(format_exact),
        wall_ms,
    })
}

fn dispatch(problem: &str, text: &str, opts: &SolveOptions) -> Result<Outcome> {
    match problem {
        "bandwidth" => solve_bandwidth(text, opts),
        "setcover" => solve_setcover(text, opts),
        "mds" => solve_mds(text, opts),
        "mis" => solve_mis(text, opts),
        "coloring" => solve_coloring(text, opts),
        "tsp" => solve_tsp(text, opts),
        other => Err(RunError::Usage(format!(
            "unknown problem `{other}` (expected bandwidth|setcover|mds|mis|coloring|tsp)"
        ))),
    }
}

fn parse_rate(opts: &SolveOptions) -> Result<Weight> {
    parse_rational(&opts.rate)
        .filter(|r| r.is_positive())
        .ok_or_else(|| RunError::Usage(format!("invalid rate `{}`", opts.rate)))
}

fn rate_as_integer(rate: &Weight) -> Option<usize> {
    let r = rate.reduced();
    if !r.denom().is_one() {
        return None;
    }
    let (_, digits) = r.numer().to_u64_digits();
    match digits.len() {
        0 => Some(0),
        1 => usize::try_from(digits[0]).ok(),
        _ => None,
    }
}

fn rate_as_power_of_two(rate: &Weight) -> Option<usize> {
    let n = rate_as_integer(rate)?;
    (n >= 2 && n.is_power_of_two()).then(|| n.trailing_zeros() as usize)
}

/// `"self:k"` for the k-fold composed scheme.
fn self_depth(inner: &str) -> Result<Option<usize>> {
    match inner.strip_prefix("self:") {
        None => Ok(None),
        Some(k) => k
            .parse::<usize>()
            .ok()
            .filter(|&k| k >= 1)
            .map(Some)
            .ok_or_else(|| RunError::Usage(format!("invalid composed depth in `{inner}`"))),
    }
}

fn positions_json(f: &Ordering) -> serde_json::Value {
    json!(f.positions().to_vec())
}

// ---------------------------------------------------------------- bandwidth

fn solve_bandwidth(text: &str, opts: &SolveOptions) -> Result<Outcome> {
    let g = parse_graph(text)?;
    let rate = parse_rate(opts)?;
    let method = opts.method.as_deref().unwrap_or("tree");
    match method {
        "tree" => {
            let r = rate_as_integer(&rate)
                .filter(|&r| r >= 1)
                .ok_or_else(|| {
                    RunError::Usage("search-tree bandwidth needs an integer rate >= 1".into())
                })?;
            let mode = if opts.linear_b {
                BSearch::Linear
            } else {
                BSearch::Binary
            };
            let res = approx_bandwidth(&g, r, mode)?;
            let cert = ApproxCertificate::new(
                ProblemTag::Bandwidth,
                g.digest(),
                w_int(res.achieved as i64),
                false,
                GuaranteeBound::Multiplier(w_int(res.guarantee as i64)),
            );
            Ok(Outcome {
                value: w_int(res.achieved as i64),
                solution: json!({
                    "positions": positions_json(&res.ordering),
                    "achieved": res.achieved,
                    "b_used": res.b_used,
                    "method": "tree",
                }),
                cert,
            })
        }
        "reduce" => {
            let k = rate_as_power_of_two(&rate).ok_or_else(|| {
                RunError::Usage("the halving reduction needs a power-of-two rate".into())
            })?;
            let limits = opts.limits.clone();
            let composed = compose(BandwidthStep, k);
            let merged = composed
                .solve(&g, &mut |leaf: &Graph| {
                    if leaf.n() == 0 {
                        return Ok(Some(Ordering::identity(0)));
                    }
                    Ok(Some(exact_bandwidth(leaf, &limits)?.witness))
                })?
                .ok_or_else(|| RunError::Failure("bandwidth reduction yielded nothing".into()))?;
            let achieved = bandwidth_of_ordering(&g, &merged);
            let mut guarantee = Weight::one();
            for _ in 0..k {
                guarantee *= w_int(9);
            }
            let cert = ApproxCertificate::new(
                ProblemTag::Bandwidth,
                g.digest(),
                w_int(achieved as i64),
                false,
                GuaranteeBound::Multiplier(guarantee),
            );
            Ok(Outcome {
                value: w_int(achieved as i64),
                solution: json!({
                    "positions": positions_json(&merged),
                    "achieved": achieved,
                    "method": "reduce",
                    "levels": k,
                }),
                cert,
            })
        }
        other => Err(RunError::Usage(format!(
            "unknown bandwidth method `{other}` (expected tree|reduce)"
        ))),
    }
}

// ---------------------------------------------------------------- set cover

/// Inner cover solver; `None` marks an infeasible sub-instance.
fn cover_solver<'a>(
    inner: &'a str,
    limits: &'a Limits,
) -> Result<impl Fn(&SetSystem) -> Result<Option<Cover>> + Sync + 'a> {
    match inner {
        "exact" | "exact-bf" | "exact-dc" | "exact-ie" | "greedy" => {}
        other => {
            return Err(RunError::Usage(format!(
                "unknown set-cover inner solver `{other}`"
            )))
        }
    }
    Ok(move |s: &SetSystem| -> Result<Option<Cover>> {
        let run = || -> std::result::Result<Cover, CoreError> {
            match inner {
                "exact" | "exact-bf" => Ok(exact_setcover_bruteforce(s, limits)?.witness),
                "exact-dc" => Ok(exact_setcover_dc(s, limits)?.witness),
                "exact-ie" => Ok(exact_setcover_ie(s, limits)?.witness),
                "greedy" => Ok(greedy_cover(s)?.1),
                _ => unreachable!(),
            }
        };
        match run() {
            Ok(c) => Ok(Some(c)),
            Err(CoreError::Infeasible) => Ok(None),
            Err(e) => Err(e.into()),
        }
    })
}

/// Declared guarantee of an inner cover solver on sub-universes of at most
/// `cap` elements.
fn cover_solver_alpha(inner: &str, cap: usize) -> Weight {
    match inner {
        "greedy" => harmonic(cap),
        _ => Weight::one(),
    }
}

fn solve_step_parallel<R>(
    step: &R,
    inst: &R::Instance,
    leaf: impl Fn(&R::Instance) -> Result<Option<R::Solution>> + Sync,
) -> Result<R::Solution>
where
    R: Reduction,
    R::Instance: Sync,
    R::Solution: Send,
{
    let (subs, ctx) = step.reduce(inst)?;
    let solutions: Vec<Option<R::Solution>> = subs
        .par_iter()
        .map(|s| leaf(s))
        .collect::<Result<Vec<_>>>()?;
    Ok(step.merge(inst, ctx, solutions)?)
}

fn solve_setcover(text: &str, opts: &SolveOptions) -> Result<Outcome> {
    let s = parse_setsystem(text)?;
    let rate = parse_rate(opts)?;
    let scale = opts.scale.as_deref().unwrap_or("universe");
    let n = s.universe_size();
    match scale {
        "universe" => {
            if rate <= Weight::one() {
                return Err(RunError::Usage("universe scaling needs rate > 1".into()));
            }
            let cap = xapx_core::weight::ceil_div_rational(n, &rate);
            let step = UniverseStep { rate: rate.clone() };
            let (cover, alpha) = match self_depth(&opts.inner)? {
                Some(k) => {
                    let limits = opts.limits.clone();
                    let composed = compose(step, k);
                    let cover = composed
                        .solve(&s, &mut |leaf: &SetSystem| {
                            match exact_setcover_bruteforce(leaf, &limits) {
                                Ok(r) => Ok(Some(r.witness)),
                                Err(CoreError::Infeasible) => Ok(None),
                                Err(e) => Err(e),
                            }
                        })?
                        .ok_or_else(|| RunError::Infeasible("instance is infeasible".into()))?;
                    // Deeper levels have smaller harmonic gaps, so k copies
                    // of the top-level gap bound the whole stack.
                    let gap = harmonic(n) - harmonic(cap);
                    (cover, Weight::one() + gap * w_int((k - 1) as i64))
                }
                None => {
                    let solver = cover_solver(&opts.inner, &opts.limits)?;
                    let cover = solve_step_parallel(&step, &s, solver)?;
                    (cover, cover_solver_alpha(&opts.inner, cap))
                }
            };
            let value = cover.weight(&s);
            let cert = ApproxCertificate::new(
                ProblemTag::SetCover,
                s.digest(),
                value.clone(),
                false,
                GuaranteeBound::harmonic_for(alpha, n, &rate),
            );
            Ok(Outcome {
                value,
                solution: chosen_json(&cover),
                cert,
            })
        }
        "merge" => {
            let r = rate_as_integer(&rate).filter(|&r| r >= 2).ok_or_else(|| {
                RunError::Usage("set merging needs an integer rate > 1".into())
            })?;
            let step = SetMergeStep { rate: r };
            let (cover, bound) = match self_depth(&opts.inner)? {
                Some(k) => {
                    let limits = opts.limits.clone();
                    let composed = compose(step, k);
                    let mut mult = Weight::one();
                    for _ in 0..k {
                        mult *= w_int(r as i64);
                    }
                    let cover = composed
                        .solve(&s, &mut |leaf: &SetSystem| {
                            match exact_setcover_bruteforce(leaf, &limits) {
                                Ok(res) => Ok(Some(res.witness)),
                                Err(CoreError::Infeasible) => Ok(None),
                                Err(e) => Err(e),
                            }
                        })?
                        .ok_or_else(|| RunError::Infeasible("instance is infeasible".into()))?;
                    (cover, mult)
                }
                None => {
                    let solver = cover_solver(&opts.inner, &opts.limits)?;
                    let cover = solve_step_parallel(&step, &s, solver)?;
                    let alpha = cover_solver_alpha(&opts.inner, n);
                    (cover, alpha * w_int(r as i64))
                }
            };
            let value = cover.weight(&s);
            let cert = ApproxCertificate::new(
                ProblemTag::SetCover,
                s.digest(),
                value.clone(),
                false,
                GuaranteeBound::Multiplier(bound),
            );
            Ok(Outcome {
                value,
                solution: chosen_json(&cover),
                cert,
            })
        }
        other => Err(RunError::Usage(format!(
            "unknown set-cover scale `{other}` (expected universe|merge)"
        ))),
    }
}

/// Chosen set indices, 1-based to match the file format.
fn chosen_json(cover: &Cover) -> serde_json::Value {
    json!({
        "chosen_sets": cover.chosen().iter().map(|&i| i + 1).collect::<Vec<_>>(),
    })
}

// --------------------------------------------------------------------- mds

fn solve_mds(text: &str, opts: &SolveOptions) -> Result<Outcome> {
    let g = parse_graph(text)?;
    let rate = parse_rate(opts)?;
    let r = rate_as_integer(&rate)
        .filter(|&r| r >= 2)
        .ok_or_else(|| RunError::Usage("dominating set needs an integer rate > 1".into()))?;
    if opts.inner != "exact" && opts.inner != "exact-bf" {
        return Err(RunError::Usage(
            "dominating set supports --inner exact only".into(),
        ));
    }
    let outcome = mds_reduce(&g, r)?;
    let limits = &opts.limits;
    let subs: Vec<Option<Cover>> = outcome
        .inner
        .instances
        .par_iter()
        .map(|inst| match exact_setcover_bruteforce(&inst.system, limits) {
            Ok(res) => Ok(Some(res.witness)),
            Err(CoreError::Infeasible) => Ok(None),
            Err(e) => Err(RunError::from(e)),
        })
        .collect::<Result<Vec<_>>>()?;
    let verts = mds_merge(&g, &outcome, &subs)?;
    let value = w_int(verts.len() as i64);
    let cert = ApproxCertificate::new(
        ProblemTag::DominatingSet,
        g.digest(),
        value.clone(),
        false,
        GuaranteeBound::Multiplier(w_int(r as i64)),
    );
    Ok(Outcome {
        value,
        solution: json!({
            "dominating_set": verts.iter().map(|&v| v + 1).collect::<Vec<_>>(),
        }),
        cert,
    })
}

// --------------------------------------------------------------------- mis

fn solve_mis(text: &str, opts: &SolveOptions) -> Result<Outcome> {
    let g = parse_graph(text)?;
    let rate = parse_rate(opts)?;
    if rate < Weight::one() {
        return Err(RunError::Usage("independent set needs rate >= 1".into()));
    }
    let reduced = rate.reduced();
    let parts = rate_as_integer(&Weight::from_integer(reduced.numer().clone()))
        .ok_or_else(|| RunError::Usage("rate numerator too large".into()))?;
    let window = rate_as_integer(&Weight::from_integer(reduced.denom().clone()))
        .ok_or_else(|| RunError::Usage("rate denominator too large".into()))?;
    let step = MisStep { parts, window };
    let limits = opts.limits.clone();
    let leaf = |leaf: &Graph| -> std::result::Result<Option<Vec<usize>>, CoreError> {
        Ok(Some(exact_mis(leaf, &limits)?.witness))
    };
    let (sol, bound) = match self_depth(&opts.inner)? {
        Some(k) => {
            let composed = compose(step, k);
            let bound = composed.rate();
            let sol = composed
                .solve(&g, &mut |l: &Graph| leaf(l))?
                .ok_or_else(|| RunError::Failure("independent-set merge failed".into()))?;
            (sol, bound)
        }
        None => {
            if opts.inner != "exact" {
                return Err(RunError::Usage(
                    "independent set supports --inner exact or self:<k>".into(),
                ));
            }
            let sol = solve_step_parallel(&step, &g, |l| leaf(l).map_err(RunError::from))?;
            (sol, rate.clone())
        }
    };
    let value = w_int(sol.len() as i64);
    let cert = ApproxCertificate::new(
        ProblemTag::IndependentSet,
        g.digest(),
        value.clone(),
        true,
        GuaranteeBound::Multiplier(bound),
    );
    Ok(Outcome {
        value,
        solution: json!({
            "independent_set": sol.iter().map(|&v| v + 1).collect::<Vec<_>>(),
        }),
        cert,
    })
}

// ---------------------------------------------------------------- coloring

fn solve_coloring(text: &str, opts: &SolveOptions) -> Result<Outcome> {
    let g = parse_graph(text)?;
    let rate = parse_rate(opts)?;
    let method = opts.method.as_deref().unwrap_or("simple");
    let limits = opts.limits.clone();
    match method {
        "simple" => {
            let r = rate_as_integer(&rate).filter(|&r| r >= 2).ok_or_else(|| {
                RunError::Usage("simple coloring needs an integer rate > 1".into())
            })?;
            let step = ColoringSimpleStep { rate: r };
            let leaf = |leaf: &Graph| -> std::result::Result<
                Option<xapx_core::instances::Coloring>,
                CoreError,
            > {
                Ok(Some(exact_coloring(leaf, &limits)?.witness))
            };
            let (coloring, bound) = match self_depth(&opts.inner)? {
                Some(k) => {
                    let composed = compose(step, k);
                    let bound = composed.rate();
                    let c = composed
                        .solve(&g, &mut |l: &Graph| leaf(l))?
                        .ok_or_else(|| RunError::Failure("coloring merge failed".into()))?;
                    (c, bound)
                }
                None => {
                    if opts.inner != "exact" {
                        return Err(RunError::Usage(
                            "simple coloring supports --inner exact or self:<k>".into(),
                        ));
                    }
                    let c = solve_step_parallel(&step, &g, |l| leaf(l).map_err(RunError::from))?;
                    (c, rate.clone())
                }
            };
            let value = w_int(coloring.num_colors() as i64);
            let cert = ApproxCertificate::new(
                ProblemTag::Coloring,
                g.digest(),
                value.clone(),
                false,
                GuaranteeBound::Multiplier(bound),
            );
            Ok(Outcome {
                value,
                solution: json!({ "colors": coloring.colors().to_vec() }),
                cert,
            })
        }
        "bh" => {
            if rate <= Weight::one() {
                return Err(RunError::Usage("peeling coloring needs rate > 1".into()));
            }
            let exact_solver;
            let reduced_solver;
            let solver: &dyn MisSolver = match &opts.mis_rate {
                None => {
                    exact_solver = ExactMisSolver {
                        limits: limits.clone(),
                    };
                    &exact_solver
                }
                Some(spec) => {
                    let beta = parse_rational(spec)
                        .filter(|b| *b >= Weight::one())
                        .ok_or_else(|| {
                            RunError::Usage(format!("invalid --mis-rate `{spec}`"))
                        })?
                        .reduced();
                    reduced_solver = ReducedMisSolver {
                        parts: rate_as_integer(&Weight::from_integer(beta.numer().clone()))
                            .ok_or_else(|| RunError::Usage("mis-rate too large".into()))?,
                        window: rate_as_integer(&Weight::from_integer(beta.denom().clone()))
                            .ok_or_else(|| RunError::Usage("mis-rate too large".into()))?,
                        limits: limits.clone(),
                    };
                    &reduced_solver
                }
            };
            let (residual, ctx) = coloring_bh_reduce(&g, &rate, solver)?;
            let inner = exact_coloring(&residual, &limits)?.witness;
            let merged = coloring_bh_merge(&g, &ctx, &residual, Some(&inner))?;
            let value = w_int(merged.num_colors() as i64);
            let cert = ApproxCertificate::new(
                ProblemTag::Coloring,
                g.digest(),
                value.clone(),
                false,
                GuaranteeBound::ColoringAffine {
                    alpha: Weight::one(),
                    beta: ctx.beta.clone(),
                    rate: rate.clone(),
                },
            );
            Ok(Outcome {
                value,
                solution: json!({
                    "colors": merged.colors().to_vec(),
                    "peeled_rounds": ctx.removed_sets.len(),
                }),
                cert,
            })
        }
        other => Err(RunError::Usage(format!(
            "unknown coloring method `{other}` (expected simple|bh)"
        ))),
    }
}

// --------------------------------------------------------------------- tsp

fn solve_tsp(text: &str, opts: &SolveOptions) -> Result<Outcome> {
    let t = parse_tsp(text)?;
    let rate = parse_rate(opts)?;
    let k = rate_as_power_of_two(&rate)
        .ok_or_else(|| RunError::Usage("TSP rate must be a power of two (2, 4, 8, ...)".into()))?;
    if opts.inner != "exact" && opts.inner != "held-karp" {
        return Err(RunError::Usage(
            "TSP supports --inner exact (Held-Karp) only".into(),
        ));
    }
    let (sub, ctx) = tsp_reduce(&t, k)?;
    let inner = match &sub {
        Some(s) => Some(held_karp(s, &opts.limits)?.witness),
        None => None,
    };
    let tour = tsp_merge(&t, &ctx, inner.as_ref())?;
    let value = tour.weight(&t);
    let cert = ApproxCertificate::new(
        ProblemTag::Tsp,
        t.digest(),
        value.clone(),
        false,
        GuaranteeBound::Multiplier(w_int((k + 1) as i64)),
    );
    Ok(Outcome {
        value,
        solution: json!({
            "order": tour.order().iter().map(|&v| v + 1).collect::<Vec<_>>(),
            "short_circuit": ctx.short_circuit,
            "levels": ctx.cover_arcs.len(),
        }),
        cert,
    })
}

// ------------------------------------------------------------------ verify

fn oracle_optimum(problem: &str, text: &str, opts: &SolveOptions) -> Result<Weight> {
    let limits = &opts.limits;
    Ok(match problem {
        "bandwidth" => w_int(exact_bandwidth(&parse_graph(text)?, limits)?.value as i64),
        "setcover" => exact_setcover_bruteforce(&parse_setsystem(text)?, limits)?.value,
        "mds" => {
            let g = parse_graph(text)?;
            exact_setcover_bruteforce(&closed_neighborhoods(&g), limits)?.value
        }
        "mis" => w_int(exact_mis(&parse_graph(text)?, limits)?.value as i64),
        "coloring" => w_int(exact_coloring(&parse_graph(text)?, limits)?.value as i64),
        "tsp" => held_karp(&parse_tsp(text)?, limits)?.value,
        other => return Err(RunError::Usage(format!("unknown problem `{other}`"))),
    })
}

/// Oracle-only exact solve (the `verify` subcommand).
pub fn run_verify(problem: &str, text: &str, label: &str, limits: &Limits) -> Result<ExactReport> {
    let started = Instant::now();
    let (optimum, witness, nodes) = match problem {
        "bandwidth" => {
            let g = parse_graph(text)?;
            let r = exact_bandwidth(&g, limits)?;
            (
                w_int(r.value as i64),
                json!({ "positions": positions_json(&r.witness) }),
                r.nodes_explored,
            )
        }
        "setcover" => {
            let s = parse_setsystem(text)?;
            let r = exact_setcover_bruteforce(&s, limits)?;
            (r.value, chosen_json(&r.witness), r.nodes_explored)
        }
        "mds" => {
            let g = parse_graph(text)?;
            let r = exact_setcover_bruteforce(&closed_neighborhoods(&g), limits)?;
            (
                r.value,
                json!({
                    "dominating_set": r.witness.chosen().iter().map(|&v| v + 1).collect::<Vec<_>>(),
                }),
                r.nodes_explored,
            )
        }
        "mis" => {
            let g = parse_graph(text)?;
            let r = exact_mis(&g, limits)?;
            (
                w_int(r.value as i64),
                json!({
                    "independent_set": r.witness.iter().map(|&v| v + 1).collect::<Vec<_>>(),
                }),
                r.nodes_explored,
            )
        }
        "coloring" => {
            let g = parse_graph(text)?;
            let r = exact_coloring(&g, limits)?;
            (
                w_int(r.value as i64),
                json!({ "colors": r.witness.colors().to_vec() }),
                r.nodes_explored,
            )
        }
        "tsp" => {
            let t = parse_tsp(text)?;
            let r = held_karp(&t, limits)?;
            (
                r.value,
                json!({
                    "order": r.witness.order().iter().map(|&v| v + 1).collect::<Vec<_>>(),
                }),
                r.nodes_explored,
            )
        }
        other => return Err(RunError::Usage(format!("unknown problem `{other}`"))),
    };
    Ok(ExactReport {
        problem: problem.to_string(),
        instance: label.to_string(),
        optimum: format_exact(&optimum),
        witness,
        nodes_explored: nodes,
        wall_ms: started.elapsed().as_millis() as u64,
    })
}
