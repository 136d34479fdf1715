//! Acceptance suite: every guarantee of every scheme is checked as an exact
//! inequality against brute-force optima, at desk scale and with zero
//! tolerance. One test per criterion; each prints a PASS line.

use rayon::prelude::*;

use xapx_core::bandwidth::{
    approx_bandwidth, approx_bandwidth_3, approx_bandwidth_scheme, approx_bandwidth_warmup,
    bandwidth_merge, bandwidth_of_ordering, bandwidth_reduce, BSearch,
};
use xapx_core::instances::{
    gen_graph, gen_semimetric, gen_setsystem, small_connected_catalog, Cover, Graph, SetSystem,
    Tour, TspInstance,
};
use xapx_core::oracles::{
    exact_bandwidth, exact_coloring, exact_mis, exact_setcover_bruteforce, exact_setcover_dc,
    exact_setcover_ie, held_karp, is_independent, is_matching, max_matching, Limits,
};
use xapx_core::reductions::{
    compose, coloring_bh_merge, coloring_bh_reduce, coloring_simple_merge, coloring_simple_reduce,
    mis_merge, mis_reduce, tsp_merge, tsp_reduce, ExactMisSolver, GuaranteeBound, MisStep,
    SetMergeStep,
};
use xapx_core::setcover::{
    greedy_cover, setmerge_merge, setmerge_reduce, universe_merge, universe_reduce,
};
use xapx_core::weight::{ceil_div_rational, ceil_mul_ln, harmonic, w_int, w_ratio, Weight};
use xapx_core::Error as CoreError;

fn limits() -> Limits {
    Limits::default()
}

/// Catalog of a few hundred connected graphs with n <= 8 plus 200 seeded
/// random connected graphs with n <= 10.
fn bandwidth_corpus() -> Vec<Graph> {
    let mut corpus = small_connected_catalog();
    for i in 0..200u64 {
        let n = 5 + (i as usize) % 6; // 5..=10
        let p = [0.25, 0.4, 0.55][(i % 3) as usize];
        corpus.push(gen_graph(n, p, 0x00C0FFEE + i, true).unwrap());
    }
    corpus
}

fn exact_bw(g: &Graph) -> usize {
    exact_bandwidth(g, &limits()).unwrap().value
}

#[test]
fn c01_bandwidth_scheme_soundness() {
    let corpus = bandwidth_corpus();
    corpus.par_iter().for_each(|g| {
        let bw = exact_bw(g).max(1);
        let warm = approx_bandwidth_warmup(g, bw)
            .unwrap()
            .expect("warm-up never fails at b = bw");
        assert!(warm.achieved <= 2 * bw, "warm-up bound violated");
        let three = approx_bandwidth_3(g, bw)
            .unwrap()
            .expect("overlap scheme never fails at b = bw");
        assert!(three.achieved <= 3 * bw, "3b bound violated");
        let general = approx_bandwidth_scheme(g, bw, 2)
            .unwrap()
            .expect("general scheme never fails at b = bw");
        assert!(general.achieved <= 7 * bw, "(4r-1)b bound violated at r=2");
    });
    println!(
        "criterion 1 PASS: warm-up <= 2 bw, overlap <= 3 bw, r=2 scheme <= 7 bw on {} graphs",
        corpus.len()
    );
}

#[test]
fn c02_bandwidth_width_search_and_never_fail() {
    let corpus = bandwidth_corpus();
    corpus.par_iter().for_each(|g| {
        let bw = exact_bw(g).max(1);
        for r in [1usize, 2] {
            for mode in [BSearch::Binary, BSearch::Linear] {
                let res = approx_bandwidth(g, r, mode).unwrap();
                assert!(
                    res.achieved <= (4 * r - 1) * bw,
                    "width search exceeded (4r-1) bw"
                );
            }
            // Never-fail: success at every width from bw(G) up.
            for b in bw..g.n().max(2) {
                assert!(
                    approx_bandwidth_scheme(g, b, r).unwrap().is_some(),
                    "scheme failed at b={b} >= bw={bw}, r={r}"
                );
            }
        }
    });
    println!(
        "criterion 2 PASS: width search within (4r-1) bw and no failures at b >= bw on {} graphs",
        corpus.len()
    );
}

#[test]
fn c03_bandwidth_halving_reduction() {
    let lim = limits();
    (0..100u64).into_par_iter().for_each(|i| {
        let n = 7 + (i as usize) % 6; // 7..=12
        let g = gen_graph(n, 0.35, 0xBEEF + i, true).unwrap();
        let bw = exact_bw(&g);
        let ctx = bandwidth_reduce(&g);
        // The identification map's structural claims, re-checked here
        // independently of the reducer's own assertions.
        let rho = ctx.rho();
        for &(u, w) in ctx.matching() {
            let ok = (rho[u] == u && rho[w] == u) || (rho[u] == w && rho[w] == w);
            assert!(ok, "matched-pair dichotomy violated");
        }
        let active: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
        let moved = active.iter().filter(|&&v| rho[v] != v).count();
        assert!(2 * moved >= active.len(), "fewer than half the vertices fold");
        let mut fan = vec![0usize; g.n()];
        for &v in &active {
            fan[rho[v]] += 1;
        }
        assert!(fan.iter().all(|&c| c <= 3), "fan-in exceeds three");

        let merged = if ctx.solved_directly() {
            bandwidth_merge(&ctx, None).unwrap()
        } else {
            let inner = exact_bandwidth(ctx.reduced(), &lim).unwrap().witness;
            bandwidth_merge(&ctx, Some(&inner)).unwrap()
        };
        let achieved = bandwidth_of_ordering(&g, &merged);
        assert!(achieved <= 9 * bw, "merged bandwidth exceeded 9 bw");
    });
    println!("criterion 3 PASS: halving reduction within 9 bw with claims checked on 100 graphs");
}

fn weighted_cover_corpus(count: usize, base: u64, max_n: usize, max_m: usize) -> Vec<SetSystem> {
    (0..count as u64)
        .map(|i| {
            let n = max_n - 4 + (i as usize) % 5; // max_n-4 ..= max_n
            let m = max_m - 3 + (i as usize) % 4;
            gen_setsystem(n, m, 0.4, 1, 9, base + i).unwrap()
        })
        .collect()
}

#[test]
fn c04_setcover_universe_scaling() {
    let lim = limits();
    let corpus = weighted_cover_corpus(300, 0x5CA1E, 12, 10);
    let rates = [w_int(2), w_int(3), w_int(4), w_ratio(8, 3)];
    corpus.par_iter().for_each(|s| {
        let n = s.universe_size();
        let opt = exact_setcover_bruteforce(s, &lim).unwrap().value;
        // Lemma-style price inequality, element-wise, exact.
        let (trace, _) = greedy_cover(s).unwrap();
        for (k1, &e) in trace.cover_order.iter().enumerate() {
            let bound = &opt / w_int((n - k1) as i64); // n - (k-1) = n - k + 1
            assert!(trace.prices[e] <= bound, "price inequality violated");
        }
        for rate in &rates {
            let outcome = universe_reduce(s, rate).unwrap();
            let subs: Vec<Option<Cover>> = outcome
                .entries
                .iter()
                .map(|e| match &e.sub {
                    None => Some(Cover::empty()),
                    Some(sub) => exact_setcover_bruteforce(sub, &lim).ok().map(|r| r.witness),
                })
                .collect();
            let merged = universe_merge(s, &outcome, &subs).unwrap();
            let cap = ceil_div_rational(n, rate);
            let bound = (w_int(1) + harmonic(n) - harmonic(cap)) * &opt;
            assert!(
                merged.weight(s) <= bound,
                "harmonic bound violated at rate {rate}"
            );
        }
    });
    println!(
        "criterion 4 PASS: universe scaling within (1+H_n-H_cap) OPT for 4 rates on {} instances",
        corpus.len()
    );
}

#[test]
fn c05_setcover_set_merging() {
    let lim = limits();
    let corpus = weighted_cover_corpus(300, 0x3E7A, 10, 12);
    corpus.par_iter().for_each(|s| {
        let opt = exact_setcover_bruteforce(s, &lim).unwrap().value;
        for rate in [2usize, 3] {
            let outcome = setmerge_reduce(s, rate).unwrap();
            let subs: Vec<Option<Cover>> = outcome
                .instances
                .iter()
                .map(|inst| {
                    exact_setcover_bruteforce(&inst.system, &lim)
                        .ok()
                        .map(|r| r.witness)
                })
                .collect();
            let merged = setmerge_merge(s, &outcome, &subs).unwrap();
            assert!(
                merged.weight(s) <= w_int(rate as i64) * &opt,
                "rate bound violated"
            );
        }
    });
    // Unit weights at rate 2 reproduce the pairing bound |result| <= 2 OPT.
    (0..100u64).into_par_iter().for_each(|i| {
        let s = gen_setsystem(8, 9, 0.4, 1, 1, 0xAB1E + i).unwrap();
        let opt = exact_setcover_bruteforce(&s, &lim).unwrap().value;
        let outcome = setmerge_reduce(&s, 2).unwrap();
        let subs: Vec<Option<Cover>> = outcome
            .instances
            .iter()
            .map(|inst| {
                exact_setcover_bruteforce(&inst.system, &lim)
                    .ok()
                    .map(|r| r.witness)
            })
            .collect();
        let merged = setmerge_merge(&s, &outcome, &subs).unwrap();
        assert!(merged.weight(&s) <= w_int(2) * &opt, "pairing bound violated");
    });
    println!("criterion 5 PASS: set merging within r OPT (r in 2,3) on 300 weighted + 100 unit instances");
}

#[test]
fn c06_exact_solver_cross_validation() {
    let lim = limits();
    // Three set-cover routes agree on unit-weight instances.
    (0..100u64).into_par_iter().for_each(|i| {
        let n = 4 + (i as usize) % 5; // 4..=8
        let m = 3 + (i as usize) % 4; // 3..=6
        let s = gen_setsystem(n, m, 0.45, 1, 1, 0xC0DE + i).unwrap();
        let bf = exact_setcover_bruteforce(&s, &lim).unwrap();
        let ie = exact_setcover_ie(&s, &lim).unwrap();
        let dc = exact_setcover_dc(&s, &lim).unwrap();
        assert_eq!(w_int(ie.value as i64), bf.value, "IE disagrees with brute force");
        assert_eq!(dc.value, bf.value, "divide-and-conquer disagrees with brute force");
        assert!(ie.witness.is_feasible(&s) && dc.witness.is_feasible(&s));
    });
    // Held-Karp equals factorial enumeration.
    (0..20u64).into_par_iter().for_each(|i| {
        let n = 5 + (i as usize) % 4; // 5..=8
        let t = gen_semimetric(n, 0xFACE + i).unwrap();
        let hk = held_karp(&t, &lim).unwrap();
        assert_eq!(hk.value, tour_bruteforce(&t), "Held-Karp disagrees");
        assert_eq!(hk.witness.weight(&t), hk.value);
    });
    // Matching cardinality equals the subset-enumeration optimum.
    (0..50u64).into_par_iter().for_each(|i| {
        let n = 7 + (i as usize) % 6; // 7..=12
        let g = gen_graph(n, 0.35, 0xAAFF + i, false).unwrap();
        let m = max_matching(&g);
        assert!(is_matching(&m));
        for &(u, v) in &m {
            assert!(g.has_edge(u, v));
        }
        assert_eq!(m.len(), matching_bruteforce(&g), "matching is not maximum");
    });
    println!("criterion 6 PASS: IE = DC = brute force (100), Held-Karp = factorial (20), blossom = enumeration (50)");
}

#[test]
fn c07_mis_reduction() {
    let lim = limits();
    (0..300u64).into_par_iter().for_each(|i| {
        let n = 10 + (i as usize) % 9; // 10..=18
        let g = gen_graph(n, 0.3, 0x7EA + i, false).unwrap();
        let opt = exact_mis(&g, &lim).unwrap().value;
        for (parts, window) in [(3usize, 2usize), (2, 1), (3, 1)] {
            let (graphs, ctx) = mis_reduce(&g, parts, window).unwrap();
            let subs: Vec<Option<Vec<usize>>> = graphs
                .iter()
                .map(|sub| Some(exact_mis(sub, &lim).unwrap().witness))
                .collect();
            let merged = mis_merge(&g, &ctx, &graphs, &subs).unwrap();
            assert!(is_independent(&g, &merged));
            // |merged| >= ceil(opt / r) with r = parts/window, exactly:
            assert!(
                merged.len() * parts >= opt * window,
                "pigeonhole bound violated at r={parts}/{window}"
            );
        }
    });
    println!("criterion 7 PASS: independent-set merge >= ceil(OPT/r) for r in 3/2,2,3 on 300 graphs");
}

#[test]
fn c08_coloring_reductions() {
    let lim = limits();
    (0..200u64).into_par_iter().for_each(|i| {
        let n = 8 + (i as usize) % 7; // 8..=14
        let g = gen_graph(n, 0.4, 0xC0100 + i, false).unwrap();
        let chi = exact_coloring(&g, &lim).unwrap().value;
        for rate in [2usize, 3] {
            let (graphs, ctx) = coloring_simple_reduce(&g, rate).unwrap();
            let subs: Vec<_> = graphs
                .iter()
                .map(|sub| Some(exact_coloring(sub, &lim).unwrap().witness))
                .collect();
            let merged = coloring_simple_merge(&g, &ctx, &graphs, &subs).unwrap();
            assert!(merged.is_proper(&g));
            assert!(merged.num_colors() <= rate * chi, "r chi bound violated");
        }
        // Peeling variant with exact everything (alpha = beta = 1, r = 2).
        let rate = w_int(2);
        let solver = ExactMisSolver { limits: lim.clone() };
        let (residual, ctx) = coloring_bh_reduce(&g, &rate, &solver).unwrap();
        let inner = exact_coloring(&residual, &lim).unwrap().witness;
        let merged = coloring_bh_merge(&g, &ctx, &residual, Some(&inner)).unwrap();
        assert!(merged.is_proper(&g));
        let bound = GuaranteeBound::ColoringAffine {
            alpha: w_int(1),
            beta: w_int(1),
            rate: rate.clone(),
        };
        assert!(
            w_int(merged.num_colors() as i64) <= bound.bound_value(&w_int(chi as i64)),
            "affine coloring bound violated"
        );
        // Round count stays within ceil(chi * ln 2).
        let t_cap = ceil_mul_ln(&w_int(chi as i64), &rate);
        assert!(w_int(ctx.removed_sets.len() as i64) <= Weight::from_integer(t_cap));
    });
    println!("criterion 8 PASS: simple coloring <= r chi (r in 2,3) and peeling <= chi + ceil(chi ln 2) on 200 graphs");
}

#[test]
fn c09_tsp_reduction() {
    let lim = limits();
    (0..100u64).into_par_iter().for_each(|i| {
        let n = 6 + (i as usize) % 9; // 6..=14
        let t = gen_semimetric(n, 0x7590 + i).unwrap();
        let opt = held_karp(&t, &lim).unwrap().value;
        for k in [1usize, 2] {
            let (sub, ctx) = tsp_reduce(&t, k).unwrap();
            for cw in &ctx.cover_weights {
                assert!(cw <= &opt, "a cycle cover outweighed the optimal tour");
            }
            let inner: Option<Tour> = sub.map(|s| held_karp(&s, &lim).unwrap().witness);
            let tour = tsp_merge(&t, &ctx, inner.as_ref()).unwrap();
            assert!(
                tour.weight(&t) <= w_int((1 + k) as i64) * &opt,
                "(1+k) OPT bound violated at k={k}"
            );
        }
    });
    println!("criterion 9 PASS: contraction within (1+k) OPT for k in 1,2 and covers <= OPT on 100 semi-metrics");
}

#[test]
fn c10_composition() {
    let lim = limits();
    // Set-merging step composed twice: effective rate 4.
    let composed = compose(SetMergeStep { rate: 2 }, 2);
    assert_eq!(composed.rate(), w_int(4));
    (0..100u64).into_par_iter().for_each(|i| {
        let m = 8 + (i as usize) % 5; // 8..=12 sets
        let s = gen_setsystem(8, m, 0.4, 1, 9, 0xC09E + i).unwrap();
        let opt = exact_setcover_bruteforce(&s, &lim).unwrap().value;
        let composed = compose(SetMergeStep { rate: 2 }, 2);
        let mut max_leaf = 0usize;
        let cover = composed
            .solve(&s, &mut |leaf: &SetSystem| {
                max_leaf = max_leaf.max(leaf.len());
                match exact_setcover_bruteforce(leaf, &lim) {
                    Ok(r) => Ok(Some(r.witness)),
                    Err(CoreError::Infeasible) => Ok(None),
                    Err(e) => Err(e),
                }
            })
            .unwrap()
            .expect("feasible instance merges");
        assert!(cover.is_feasible(&s));
        // Leaf family sizes track the composed rate: m/4 plus 2 levels of
        // additive slack 2.
        assert!(max_leaf <= m.div_ceil(4) + 4, "leaf size exceeded m/4 + slack");
        assert!(cover.weight(&s) <= w_int(4) * &opt, "composed ratio exceeded 4");
    });
    // Independent-set step composed twice: within OPT/4.
    (0..100u64).into_par_iter().for_each(|i| {
        let n = 10 + (i as usize) % 7; // 10..=16
        let g = gen_graph(n, 0.3, 0xD0D0 + i, false).unwrap();
        let opt = exact_mis(&g, &lim).unwrap().value;
        let composed = compose(MisStep { parts: 2, window: 1 }, 2);
        let sol = composed
            .solve(&g, &mut |leaf: &Graph| {
                Ok(Some(exact_mis(leaf, &lim)?.witness))
            })
            .unwrap()
            .unwrap();
        assert!(is_independent(&g, &sol));
        assert!(4 * sol.len() >= opt, "composed independent set below OPT/4");
    });
    println!("criterion 10 PASS: twice-composed set merging (rate 4, ratio <= 4) and independent set (>= OPT/4) on 100 instances each");
}

#[test]
fn c11_cli_determinism_across_jobs() {
    use std::process::Command;
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_xapx");

    // A mixed corpus of 30 runs: (problem, args, file contents).
    let mut runs: Vec<(String, Vec<String>)> = Vec::new();
    let mut write = |name: &str, contents: String| -> String {
        let path = dir.path().join(name);
        std::fs::write(&path, contents).unwrap();
        path.display().to_string()
    };
    for i in 0..6u64 {
        let g = gen_graph(7 + (i as usize) % 2, 0.4, 0x11 + i, true).unwrap();
        let path = write(&format!("g{i}.graph"), xapx_cli::formats::serialize_graph(&g));
        runs.push(("bandwidth".into(), vec![path.clone(), "--rate".into(), "1".into()]));
        runs.push((
            "mis".into(),
            vec![path.clone(), "--rate".into(), "2".into()],
        ));
        runs.push((
            "coloring".into(),
            vec![path.clone(), "--rate".into(), "2".into()],
        ));
        if i < 3 {
            runs.push((
                "mds".into(),
                vec![path.clone(), "--rate".into(), "2".into()],
            ));
        }
    }
    for i in 0..6u64 {
        let s = gen_setsystem(8, 7, 0.4, 1, 9, 0x22 + i).unwrap();
        let path = write(
            &format!("s{i}.scp"),
            xapx_cli::formats::serialize_setsystem(&s),
        );
        let scale = if i % 2 == 0 { "universe" } else { "merge" };
        runs.push((
            "setcover".into(),
            vec![
                path,
                "--rate".into(),
                "2".into(),
                "--scale".into(),
                scale.into(),
            ],
        ));
    }
    for i in 0..3u64 {
        let t = gen_semimetric(8, 0x33 + i).unwrap();
        let path = write(&format!("t{i}.atsp"), xapx_cli::formats::serialize_tsp(&t));
        runs.push(("tsp".into(), vec![path, "--rate".into(), "2".into()]));
    }
    assert_eq!(runs.len(), 30);

    let normalize = |stdout: &[u8]| -> String {
        let mut v: serde_json::Value = serde_json::from_slice(stdout).expect("JSON report");
        v["wall_ms"] = serde_json::json!(0);
        serde_json::to_string(&v).unwrap()
    };
    runs.par_iter().for_each(|(problem, args)| {
        let run = |jobs: &str| {
            let out = Command::new(bin)
                .arg("solve")
                .arg(problem)
                .args(args)
                .arg("--verify")
                .arg("--jobs")
                .arg(jobs)
                .output()
                .expect("binary runs");
            assert!(
                out.status.success(),
                "solve failed: {}",
                String::from_utf8_lossy(&out.stderr)
            );
            normalize(&out.stdout)
        };
        assert_eq!(run("1"), run("8"), "output differs across --jobs");
    });
    println!("criterion 11 PASS: 30 mixed solve runs identical across --jobs 1 and --jobs 8");
}

// ------------------------------------------------------- test-only oracles

/// Minimum tour weight over all (n-1)! orders.
fn tour_bruteforce(t: &TspInstance) -> Weight {
    fn go(items: &mut Vec<usize>, k: usize, t: &TspInstance, best: &mut Option<Weight>) {
        if k == items.len() {
            let mut order = vec![0usize];
            order.extend(items.iter().copied());
            let w = Tour::new(order, t.n()).unwrap().weight(t);
            if best.as_ref().is_none_or(|b| w < *b) {
                *best = Some(w);
            }
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            go(items, k + 1, t, best);
            items.swap(k, i);
        }
    }
    let mut items: Vec<usize> = (1..t.n()).collect();
    let mut best = None;
    go(&mut items, 0, t, &mut best);
    best.unwrap()
}

/// Maximum matching size by branching on the lowest unhandled vertex.
fn matching_bruteforce(g: &Graph) -> usize {
    fn go(g: &Graph, v: usize, taken: &mut [bool]) -> usize {
        let n = g.n();
        let mut v = v;
        while v < n && taken[v] {
            v += 1;
        }
        if v >= n {
            return 0;
        }
        taken[v] = true;
        let mut best = go(g, v + 1, taken);
        for &w in g.neighbors(v) {
            if !taken[w] {
                taken[w] = true;
                best = best.max(1 + go(g, v + 1, taken));
                taken[w] = false;
            }
        }
        taken[v] = false;
        best
    }
    let mut taken = vec![false; g.n()];
    go(g, 0, &mut taken)
}
