//! Seeded benchmark suites: sweep the rate grid of one scheme over a batch
//! of random instances, compare against the exact optimum, and fail hard if
//! any measured ratio exceeds the proven bound.

use std::fmt::Write as _;
use std::time::Instant;

use num_traits::One;
use rayon::prelude::*;

use xapx_core::bandwidth::{approx_bandwidth, BSearch};
use xapx_core::instances::{gen_graph, gen_semimetric, gen_setsystem, Cover, Graph, SetSystem};
use xapx_core::oracles::{
    exact_bandwidth, exact_coloring, exact_mis, exact_setcover_bruteforce, held_karp, Limits,
};
use xapx_core::reductions::{
    compose, coloring_bh_merge, coloring_bh_reduce, tsp_merge, tsp_reduce, ColoringSimpleStep,
    ExactMisSolver, GuaranteeBound, MisStep, Reduction, SetMergeStep, UniverseStep,
};
use xapx_core::setcover::{closed_neighborhoods, mds_merge, mds_reduce};
use xapx_core::weight::{
    approx_decimal, ceil_div_rational, format_exact, harmonic, mean, w_int, w_ratio, Weight,
};
use xapx_core::Error as CoreError;

use crate::run::RunError;

type Result<T> = std::result::Result<T, RunError>;

pub struct BenchOptions {
    pub n: Option<usize>,
    pub count: usize,
    pub seed: u64,
    pub limits: Limits,
}

struct Row {
    scheme: String,
    rate: String,
    count: usize,
    mean_ratio: String,
    worst_ratio: String,
    bound: String,
    mean_ms: String,
    violated: bool,
}

/// One measured run: value vs optimum under a claimed bound.
struct Sample {
    value: Weight,
    optimum: Weight,
    bound_value: Weight,
    maximize: bool,
    ms: u128,
}

impl Sample {
    fn ratio(&self) -> Weight {
        if self.maximize {
            &self.optimum / &self.value
        } else {
            &self.value / &self.optimum
        }
    }

    fn violated(&self) -> bool {
        if self.maximize {
            // value must be at least opt / c, i.e. bound_value here is c.
            &self.value * &self.bound_value < self.optimum
        } else {
            self.value > self.bound_value
        }
    }
}

fn summarize(scheme: &str, rate: String, bound: String, samples: &[Sample]) -> Row {
    let ratios: Vec<Weight> = samples.iter().map(Sample::ratio).collect();
    let worst = ratios
        .iter()
        .cloned()
        .reduce(|a, b| if b > a { b } else { a })
        .unwrap_or_else(Weight::one);
    let mean_ratio = mean(&ratios);
    let mean_ms =
        samples.iter().map(|s| s.ms).sum::<u128>() as f64 / samples.len().max(1) as f64;
    Row {
        scheme: scheme.to_string(),
        rate,
        count: samples.len(),
        mean_ratio: approx_decimal(&mean_ratio, 4),
        worst_ratio: approx_decimal(&worst, 4),
        bound,
        mean_ms: format!("{mean_ms:.2}"),
        violated: samples.iter().any(Sample::violated),
    }
}

pub fn run_bench(suite: &str, opts: &BenchOptions) -> Result<String> {
    let rows = match suite {
        "bandwidth" => bench_bandwidth(opts)?,
        "setcover-universe" => bench_universe(opts)?,
        "setcover-merge" => bench_setmerge(opts)?,
        "mis" => bench_mis(opts)?,
        "coloring" => bench_coloring(opts)?,
        "tsp" => bench_tsp(opts)?,
        "mds" => bench_mds(opts)?,
        "compose" => bench_compose(opts)?,
        other => {
            return Err(RunError::Usage(format!(
                "unknown suite `{other}` (expected bandwidth|setcover-universe|setcover-merge|mis|coloring|tsp|mds|compose)"
            )))
        }
    };
    let mut out = String::new();
    writeln!(
        out,
        "{:<18} {:>6} {:>6} {:>11} {:>11}  {:<34} {:>9}",
        "scheme", "rate", "count", "mean ratio", "worst ratio", "proven bound", "mean ms"
    )
    .unwrap();
    let mut any_violation = false;
    for r in &rows {
        writeln!(
            out,
            "{:<18} {:>6} {:>6} {:>11} {:>11}  {:<34} {:>9}",
            r.scheme, r.rate, r.count, r.mean_ratio, r.worst_ratio, r.bound, r.mean_ms
        )
        .unwrap();
        any_violation |= r.violated;
    }
    if any_violation {
        return Err(RunError::Verification(format!(
            "a measured ratio exceeded its proven bound\n{out}"
        )));
    }
    Ok(out)
}

fn graphs(opts: &BenchOptions, n: usize, p: f64, connected: bool) -> Vec<Graph> {
    (0..opts.count)
        .map(|i| gen_graph(n, p, opts.seed.wrapping_add(i as u64), connected).unwrap())
        .collect()
}

fn systems(opts: &BenchOptions, n: usize, m: usize) -> Vec<SetSystem> {
    (0..opts.count)
        .map(|i| gen_setsystem(n, m, 0.4, 1, 9, opts.seed.wrapping_add(i as u64)).unwrap())
        .collect()
}

fn bench_bandwidth(opts: &BenchOptions) -> Result<Vec<Row>> {
    let n = opts.n.unwrap_or(8).min(10);
    let corpus = graphs(opts, n, 0.4, true);
    let limits = &opts.limits;
    let mut rows = Vec::new();
    for r in [1usize, 2] {
        let samples: Vec<Sample> = corpus
            .par_iter()
            .map(|g| -> Result<Sample> {
                let opt = exact_bandwidth(g, limits)?.value.max(1);
                let started = Instant::now();
                let res = approx_bandwidth(g, r, BSearch::Binary)?;
                Ok(Sample {
                    value: w_int(res.achieved.max(1) as i64),
                    optimum: w_int(opt as i64),
                    bound_value: w_int(((4 * r - 1) * opt) as i64),
                    maximize: false,
                    ms: started.elapsed().as_millis(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(summarize(
            "bandwidth-tree",
            r.to_string(),
            format!("{}*OPT", 4 * r - 1),
            &samples,
        ));
    }
    Ok(rows)
}

fn bench_universe(opts: &BenchOptions) -> Result<Vec<Row>> {
    let n = opts.n.unwrap_or(10).min(12);
    let corpus = systems(opts, n, 8);
    let limits = &opts.limits;
    let mut rows = Vec::new();
    for rate in [w_int(2), w_int(3), w_int(4)] {
        let cap = ceil_div_rational(n, &rate);
        let bound_mult = Weight::one() + harmonic(n) - harmonic(cap);
        let samples: Vec<Sample> = corpus
            .par_iter()
            .map(|s| -> Result<Sample> {
                let opt = exact_setcover_bruteforce(s, limits)?.value;
                let started = Instant::now();
                let step = UniverseStep { rate: rate.clone() };
                let cover = solve_cover_step(&step, s, limits)?;
                Ok(Sample {
                    value: cover.weight(s),
                    optimum: opt.clone(),
                    bound_value: &bound_mult * &opt,
                    maximize: false,
                    ms: started.elapsed().as_millis(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(summarize(
            "setcover-universe",
            format_exact(&rate),
            format!(
                "(1+H_{}-H_{})*OPT = {}*OPT",
                n,
                cap,
                format_exact(&bound_mult)
            ),
            &samples,
        ));
    }
    Ok(rows)
}

fn solve_cover_step<R>(step: &R, s: &R::Instance, limits: &Limits) -> Result<Cover>
where
    R: Reduction<Instance = SetSystem, Solution = Cover>,
{
    let (subs, ctx) = step.reduce(s)?;
    let solutions = subs
        .iter()
        .map(|sub| match exact_setcover_bruteforce(sub, limits) {
            Ok(r) => Ok(Some(r.witness)),
            Err(CoreError::Infeasible) => Ok(None),
            Err(e) => Err(RunError::from(e)),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(step.merge(s, ctx, solutions)?)
}

fn bench_setmerge(opts: &BenchOptions) -> Result<Vec<Row>> {
    let n = opts.n.unwrap_or(8).min(12);
    let corpus = systems(opts, n, 10);
    let limits = &opts.limits;
    let mut rows = Vec::new();
    for rate in [2usize, 3] {
        let samples: Vec<Sample> = corpus
            .par_iter()
            .map(|s| -> Result<Sample> {
                let opt = exact_setcover_bruteforce(s, limits)?.value;
                let started = Instant::now();
                let cover = solve_cover_step(&SetMergeStep { rate }, s, limits)?;
                Ok(Sample {
                    value: cover.weight(s),
                    optimum: opt.clone(),
                    bound_value: w_int(rate as i64) * &opt,
                    maximize: false,
                    ms: started.elapsed().as_millis(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(summarize(
            "setcover-merge",
            rate.to_string(),
            format!("{rate}*OPT"),
            &samples,
        ));
    }
    Ok(rows)
}

fn bench_mis(opts: &BenchOptions) -> Result<Vec<Row>> {
    let n = opts.n.unwrap_or(16).min(18);
    let corpus = graphs(opts, n, 0.35, false);
    let limits = &opts.limits;
    let mut rows = Vec::new();
    for (parts, window) in [(1usize, 1usize), (3, 2), (2, 1), (3, 1)] {
        let rate = w_ratio(parts as i64, window as i64);
        let samples: Vec<Sample> = corpus
            .par_iter()
            .map(|g| -> Result<Sample> {
                let opt = exact_mis(g, limits)?.value.max(1);
                let started = Instant::now();
                let step = MisStep { parts, window };
                let (subs, ctx) = step.reduce(g)?;
                let sols = subs
                    .iter()
                    .map(|sub| Ok(Some(exact_mis(sub, limits)?.witness)))
                    .collect::<std::result::Result<Vec<_>, CoreError>>()?;
                let merged = step.merge(g, ctx, sols)?;
                Ok(Sample {
                    value: w_int(merged.len().max(1) as i64),
                    optimum: w_int(opt as i64),
                    bound_value: rate.clone(),
                    maximize: true,
                    ms: started.elapsed().as_millis(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(summarize(
            "mis",
            format_exact(&rate),
            format!("OPT/{}", format_exact(&rate)),
            &samples,
        ));
    }
    Ok(rows)
}

fn bench_coloring(opts: &BenchOptions) -> Result<Vec<Row>> {
    let n = opts.n.unwrap_or(12).min(14);
    let corpus = graphs(opts, n, 0.4, false);
    let limits = &opts.limits;
    let mut rows = Vec::new();
    for rate in [2usize, 3] {
        let samples: Vec<Sample> = corpus
            .par_iter()
            .map(|g| -> Result<Sample> {
                let chi = exact_coloring(g, limits)?.value;
                let started = Instant::now();
                let step = ColoringSimpleStep { rate };
                let (subs, ctx) = step.reduce(g)?;
                let sols = subs
                    .iter()
                    .map(|sub| Ok(Some(exact_coloring(sub, limits)?.witness)))
                    .collect::<std::result::Result<Vec<_>, CoreError>>()?;
                let merged = step.merge(g, ctx, sols)?;
                Ok(Sample {
                    value: w_int(merged.num_colors() as i64),
                    optimum: w_int(chi as i64),
                    bound_value: w_int((rate * chi) as i64),
                    maximize: false,
                    ms: started.elapsed().as_millis(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(summarize(
            "coloring-simple",
            rate.to_string(),
            format!("{rate}*OPT"),
            &samples,
        ));
    }
    // Peeling variant at rate 2 with the exact inner solver everywhere.
    let rate = w_int(2);
    let bound = GuaranteeBound::ColoringAffine {
        alpha: Weight::one(),
        beta: Weight::one(),
        rate: rate.clone(),
    };
    let samples: Vec<Sample> = corpus
        .par_iter()
        .map(|g| -> Result<Sample> {
            let chi = exact_coloring(g, limits)?.value;
            let started = Instant::now();
            let solver = ExactMisSolver {
                limits: limits.clone(),
            };
            let (residual, ctx) = coloring_bh_reduce(g, &rate, &solver)?;
            let inner = exact_coloring(&residual, limits)?.witness;
            let merged = coloring_bh_merge(g, &ctx, &residual, Some(&inner))?;
            Ok(Sample {
                value: w_int(merged.num_colors() as i64),
                optimum: w_int(chi as i64),
                bound_value: bound.bound_value(&w_int(chi as i64)),
                maximize: false,
                ms: started.elapsed().as_millis(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.push(summarize("coloring-bh", "2".to_string(), bound.describe(), &samples));
    Ok(rows)
}

fn bench_tsp(opts: &BenchOptions) -> Result<Vec<Row>> {
    let n = opts.n.unwrap_or(10).min(14);
    let instances: Vec<_> = (0..opts.count)
        .map(|i| gen_semimetric(n, opts.seed.wrapping_add(i as u64)).unwrap())
        .collect();
    let limits = &opts.limits;
    let mut rows = Vec::new();
    for k in [1usize, 2] {
        let samples: Vec<Sample> = instances
            .par_iter()
            .map(|t| -> Result<Sample> {
                let opt = held_karp(t, limits)?.value;
                let started = Instant::now();
                let (sub, ctx) = tsp_reduce(t, k)?;
                let inner = match &sub {
                    Some(s) => Some(held_karp(s, limits)?.witness),
                    None => None,
                };
                let tour = tsp_merge(t, &ctx, inner.as_ref())?;
                Ok(Sample {
                    value: tour.weight(t),
                    optimum: opt.clone(),
                    bound_value: w_int((k + 1) as i64) * &opt,
                    maximize: false,
                    ms: started.elapsed().as_millis(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(summarize(
            "tsp",
            (1usize << k).to_string(),
            format!("{}*OPT", k + 1),
            &samples,
        ));
    }
    Ok(rows)
}

fn bench_mds(opts: &BenchOptions) -> Result<Vec<Row>> {
    let n = opts.n.unwrap_or(10).min(12);
    let corpus = graphs(opts, n, 0.35, true);
    let limits = &opts.limits;
    let mut rows = Vec::new();
    for rate in [2usize, 3] {
        let samples: Vec<Sample> = corpus
            .par_iter()
            .map(|g| -> Result<Sample> {
                let gamma = exact_setcover_bruteforce(&closed_neighborhoods(g), limits)?
                    .witness
                    .len();
                let started = Instant::now();
                let outcome = mds_reduce(g, rate)?;
                let subs = outcome
                    .inner
                    .instances
                    .iter()
                    .map(|inst| match exact_setcover_bruteforce(&inst.system, limits) {
                        Ok(r) => Ok(Some(r.witness)),
                        Err(CoreError::Infeasible) => Ok(None),
                        Err(e) => Err(RunError::from(e)),
                    })
                    .collect::<Result<Vec<_>>>()?;
                let verts = mds_merge(g, &outcome, &subs)?;
                Ok(Sample {
                    value: w_int(verts.len() as i64),
                    optimum: w_int(gamma as i64),
                    bound_value: w_int((rate * gamma) as i64),
                    maximize: false,
                    ms: started.elapsed().as_millis(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(summarize("mds", rate.to_string(), format!("{rate}*OPT"), &samples));
    }
    Ok(rows)
}

fn bench_compose(opts: &BenchOptions) -> Result<Vec<Row>> {
    let n = opts.n.unwrap_or(7).min(10);
    let corpus = systems(opts, n, 8);
    let limits = &opts.limits;
    let mut rows = Vec::new();
    for k in [1usize, 2] {
        let samples: Vec<Sample> = corpus
            .par_iter()
            .map(|s| -> Result<Sample> {
                let opt = exact_setcover_bruteforce(s, limits)?.value;
                let started = Instant::now();
                let composed = compose(SetMergeStep { rate: 2 }, k);
                let rate_k = composed.rate();
                let cover = composed
                    .solve(s, &mut |leaf: &SetSystem| {
                        match exact_setcover_bruteforce(leaf, limits) {
                            Ok(r) => Ok(Some(r.witness)),
                            Err(CoreError::Infeasible) => Ok(None),
                            Err(e) => Err(e),
                        }
                    })?
                    .ok_or_else(|| RunError::Infeasible("generated instance is coverable".into()))?;
                Ok(Sample {
                    value: cover.weight(s),
                    optimum: opt.clone(),
                    bound_value: rate_k * &opt,
                    maximize: false,
                    ms: started.elapsed().as_millis(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let rate_k = 2usize.pow(k as u32);
        rows.push(summarize(
            "compose(merge,2)",
            format!("{rate_k}"),
            format!("{rate_k}*OPT"),
            &samples,
        ));
    }
    Ok(rows)
}
