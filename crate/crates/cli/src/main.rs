use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use xapx_cli::bench::{run_bench, BenchOptions};
use xapx_cli::formats::{serialize_graph, serialize_setsystem, serialize_tsp};
use xapx_cli::run::{run_solve, run_verify, RunError, SolveOptions};
use xapx_core::instances::{gen_graph, gen_semimetric, gen_setsystem};
use xapx_core::oracles::Limits;

/// Exact solvers and exponential-time approximation schemes for bandwidth,
/// set cover, dominating set, independent set, coloring and semi-metric TSP.
#[derive(Parser)]
#[command(name = "xapx", version, arg_required_else_help = true)]
struct Cli {
    /// Worker threads for solving sub-instances.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Output format for solve/verify reports.
    #[arg(long, global = true, default_value = "json", value_parser = ["json", "table"])]
    format: String,
    /// Override the per-solver n-style size limits.
    #[arg(long, global = true)]
    limit_n: Option<usize>,
    /// Override the brute-force family-size limit.
    #[arg(long, global = true)]
    limit_m: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Approximate an instance with a chosen rate and inner solver.
    Solve {
        /// One of: bandwidth, setcover, mds, mis, coloring, tsp.
        problem: String,
        /// Instance file (graph/scp/atsp format).
        instance: PathBuf,
        /// Reduction rate, an exact rational such as `2`, `3/2`, `8/3`.
        #[arg(long, default_value = "2")]
        rate: String,
        /// Set cover scaling: universe | merge.
        #[arg(long)]
        scale: Option<String>,
        /// Bandwidth: tree | reduce. Coloring: simple | bh.
        #[arg(long)]
        method: Option<String>,
        /// Inner solver: exact | exact-bf | exact-dc | exact-ie | greedy |
        /// self:<k>.
        #[arg(long, default_value = "exact")]
        inner: String,
        /// Check the guarantee against the exact optimum (exit 3 on failure).
        #[arg(long)]
        verify: bool,
        /// Scan widths linearly instead of binary search (bandwidth tree).
        #[arg(long)]
        linear_b: bool,
        /// Peeling coloring: solve independent sets via the reduction at
        /// this rate (e.g. `2`) instead of exactly.
        #[arg(long)]
        mis_rate: Option<String>,
    },
    /// Solve an instance exactly with the oracle solvers.
    Verify {
        problem: String,
        instance: PathBuf,
    },
    /// Generate a random instance in canonical format.
    Gen {
        /// One of: graph, setsystem, tsp.
        kind: String,
        #[arg(long)]
        n: usize,
        /// Number of sets (setsystem).
        #[arg(long, default_value_t = 8)]
        m: usize,
        /// Edge probability (graph).
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Element membership probability (setsystem).
        #[arg(long, default_value_t = 0.4)]
        density: f64,
        #[arg(long, default_value_t = 1)]
        wmin: u64,
        #[arg(long, default_value_t = 9)]
        wmax: u64,
        /// RNG seed; generated from the clock when omitted.
        #[arg(long)]
        seed: Option<u64>,
        /// Add a uniform random spanning tree first (graph).
        #[arg(long)]
        connected: bool,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a verification benchmark suite and print the rate table.
    Bench {
        /// One of: bandwidth, setcover-universe, setcover-merge, mis,
        /// coloring, tsp, mds, compose.
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn limits_from(limit_n: Option<usize>, limit_m: Option<usize>) -> Limits {
    let mut limits = Limits::default();
    if let Some(n) = limit_n {
        limits = limits.with_n(n);
    }
    if let Some(m) = limit_m {
        limits = limits.with_m(m);
    }
    limits
}

fn read_instance(path: &PathBuf) -> Result<String, RunError> {
    std::fs::read_to_string(path)
        .map_err(|e| RunError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn dispatch(cli: Cli) -> Result<(), RunError> {
    let limits = limits_from(cli.limit_n, cli.limit_m);
    match cli.cmd {
        Cmd::Solve {
            problem,
            instance,
            rate,
            scale,
            method,
            inner,
            verify,
            linear_b,
            mis_rate,
        } => {
            let text = read_instance(&instance)?;
            let opts = SolveOptions {
                rate,
                scale,
                method,
                inner,
                verify,
                jobs: cli.jobs,
                linear_b,
                mis_rate,
                limits,
            };
            let report = run_solve(&problem, &text, &instance.display().to_string(), &opts)?;
            match cli.format.as_str() {
                "table" => print!("{}", report.to_table()),
                _ => println!("{}", report.to_json()),
            }
            Ok(())
        }
        Cmd::Verify { problem, instance } => {
            let text = read_instance(&instance)?;
            let report = run_verify(&problem, &text, &instance.display().to_string(), &limits)?;
            println!("{}", report.to_json());
            Ok(())
        }
        Cmd::Gen {
            kind,
            n,
            m,
            p,
            density,
            wmin,
            wmax,
            seed,
            connected,
            output,
        } => {
            let seed = seed.unwrap_or_else(|| {
                std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_nanos() as u64)
                    .unwrap_or(0)
            });
            let text = match kind.as_str() {
                "graph" => serialize_graph(&gen_graph(n, p, seed, connected)?),
                "setsystem" => {
                    serialize_setsystem(&gen_setsystem(n, m, density, wmin, wmax, seed)?)
                }
                "tsp" => serialize_tsp(&gen_semimetric(n, seed)?),
                other => {
                    return Err(RunError::Usage(format!(
                        "unknown kind `{other}` (expected graph|setsystem|tsp)"
                    )))
                }
            };
            match output {
                Some(path) => std::fs::write(&path, &text).map_err(|e| {
                    RunError::Usage(format!("cannot write {}: {e}", path.display()))
                })?,
                None => {
                    let mut stdout = std::io::stdout().lock();
                    let _ = stdout.write_all(text.as_bytes());
                }
            }
            eprintln!("seed: {seed}");
            Ok(())
        }
        Cmd::Bench {
            suite,
            n,
            count,
            seed,
        } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cli.jobs.max(1))
                .build()
                .map_err(|e| RunError::Failure(e.to_string()))?;
            let opts = BenchOptions {
                n,
                count,
                seed,
                limits,
            };
            let table = pool.install(|| run_bench(&suite, &opts))?;
            print!("{table}");
            Ok(())
        }
    }
}
