//! Argument handling and command dispatch for the `abacus-lab` binary.
//!
//! [`dispatch_with_input`] takes its batch input as a reader, so tests can drive
//! it in-process and inspect the exit code and both outputs.

use std::io::BufRead;

use abacus_lab::abacus::{beta_set, render};
use abacus_lab::classes::classify_partition;
use abacus_lab::error::Error;
use abacus_lab::extremal::{core_and_weight, maximize, min_weight_and_family, minimize};
use abacus_lab::mullineux::{ama, ama_trace, mullineux};
use abacus_lab::oracle::{default_pairs, run_sweep, SweepConfig};
use abacus_lab::params::{check_e, Params};
use abacus_lab::partition::Partition;
use abacus_lab::rim::j_map;
use abacus_lab::runner::{runner_matrix_of_partition, RunnerMatrix};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "abacus-lab",
    version,
    about = "James abacus tools for the Mullineux map and extremal partitions"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Number of abacus runners.
    #[arg(long, global = true)]
    e: Option<i64>,
    /// Modulus for emptinesses and arm lengths.
    #[arg(long, global = true)]
    d: Option<i64>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Append ASCII abaci.
    #[arg(long, global = true)]
    render: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The Mullineux image of an e-regular partition.
    Mullineux {
        /// Print the conjugate of the image, which is what the abacus algorithm produces.
        #[arg(long)]
        prime: bool,
        /// Print every (S, T) state of the abacus algorithm.
        #[arg(long)]
        trace: bool,
        partition: Option<String>,
    },
    /// The e-core and e-weight.
    Core { partition: Option<String> },
    /// Balanced, shift balanced, skewed and shift skewed flags with witnesses.
    Classify { partition: Option<String> },
    /// The d-runner matrix.
    RunnerMatrix { partition: Option<String> },
    /// Least-weight partitions with a given e-core and d-runner matrix.
    Family {
        #[arg(long)]
        core: String,
        #[arg(long)]
        matrix: String,
    },
    /// The greatest partition with the same e-core and d-runner matrix.
    Maximize { partition: Option<String> },
    /// The least partition with the same e-core and d-runner matrix.
    Minimize { partition: Option<String> },
    /// Remove the proper e-rim (Xu's J map).
    J { partition: Option<String> },
    /// Run every property sweep and print a JSON line per property.
    Verify {
        #[arg(long)]
        max_n: Option<usize>,
        /// Comma separated d:e pairs.
        #[arg(long)]
        pairs: Option<String>,
    },
    /// Draw the canonical β-set on an abacus with e runners.
    Render { partition: Option<String> },
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidE(_)
        | Error::InvalidPair { .. }
        | Error::Parse { .. }
        | Error::MalformedBetaSet(_)
        | Error::MatrixShape { .. } => EXIT_VALIDATION,
        Error::SwapCap(_) | Error::Invariant(_) => EXIT_INTERNAL,
        _ => EXIT_PRECONDITION,
    }
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(exit_code(&err), err.to_string())
    }
}

fn validation(msg: impl Into<String>) -> Failure {
    Failure(EXIT_VALIDATION, msg.into())
}

/// Runs one invocation, reading batch input from standard input when a
/// command that takes a partition is given none.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = std::io::stdin();
    let mut lock = stdin.lock();
    dispatch_with_input(argv, &mut lock)
}

pub fn dispatch_with_input<I, T>(argv: I, input: &mut dyn BufRead) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome::fail(EXIT_VALIDATION, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    let threads = std::env::var("ABACUS_LAB_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0);
    let pool = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(pool) => pool,
        Err(err) => return Outcome::fail(EXIT_INTERNAL, err.to_string()),
    };
    match run(&cli, input, &pool) {
        Ok(outcome) => outcome,
        Err(Failure(code, msg)) => Outcome::fail(code, msg),
    }
}

fn need_e(g: &Global) -> Result<i64, Failure> {
    let e = g.e.ok_or_else(|| validation("--e is required"))?;
    Ok(check_e(e)?)
}

fn need_params(g: &Global) -> Result<Params, Failure> {
    let e = g.e.ok_or_else(|| validation("--e is required"))?;
    let d = g.d.ok_or_else(|| validation("--d is required"))?;
    Ok(Params::new(d, e)?)
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    Ok(text.trim().parse::<Partition>()?)
}

/// Applies `f` to the given partition, or to every nonblank stdin line.
fn per_partition<F>(
    arg: &Option<String>,
    input: &mut dyn BufRead,
    pool: &rayon::ThreadPool,
    f: F,
) -> Result<Outcome, Failure>
where
    F: Fn(&Partition) -> Result<String, Failure> + Sync,
{
    if let Some(text) = arg {
        let mut out = f(&parse_partition(text)?)?;
        if !out.ends_with('\n') {
            out.push('\n');
        }
        return Ok(Outcome::ok(out));
    }
    let mut lines = Vec::new();
    for line in input.lines() {
        let line = line.map_err(|e| Failure(EXIT_INTERNAL, e.to_string()))?;
        if !line.trim().is_empty() {
            lines.push(line);
        }
    }
    let results: Vec<Result<String, Failure>> = pool.install(|| {
        lines
            .par_iter()
            .map(|line| parse_partition(line).and_then(|p| f(&p)))
            .collect()
    });
    let mut stdout = String::new();
    for (line, result) in lines.iter().zip(results) {
        match result {
            Ok(text) => {
                stdout.push_str(text.trim_end_matches('\n'));
                stdout.push('\n');
            }
            Err(Failure(code, msg)) => {
                return Ok(Outcome {
                    code,
                    stdout,
                    stderr: format!("{}: {msg}\n", line.trim()),
                });
            }
        }
    }
    Ok(Outcome::ok(stdout))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serializes")
}

fn with_render(text: String, g: &Global, e: i64, parts: &[&Partition]) -> String {
    if !g.render {
        return text;
    }
    let mut out = text;
    for p in parts {
        out.push_str(&format!("\n{p}\n{}", render(&beta_set(p, 0), e, &[])));
    }
    out
}

fn run(cli: &Cli, input: &mut dyn BufRead, pool: &rayon::ThreadPool) -> Result<Outcome, Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Mullineux {
            prime,
            trace,
            partition,
        } => {
            let e = need_e(g)?;
            let d = if *trace { g.d } else { None };
            per_partition(partition, input, pool, |lambda| {
                let image = if *prime {
                    ama(lambda, e)?
                } else {
                    mullineux(lambda, e)?
                };
                let tr = if *trace {
                    Some(ama_trace(lambda, e, d)?)
                } else {
                    None
                };
                let text = if g.json {
                    let mut v = json!({"input": lambda, "e": e, "prime": prime, "image": image});
                    if let Some(tr) = &tr {
                        v["trace"] = serde_json::to_value(tr).expect("trace serializes");
                    }
                    v.to_string()
                } else {
                    let mut text = image.to_string();
                    if let Some(tr) = &tr {
                        for (k, st) in tr.states.iter().enumerate() {
                            let t: Vec<String> = st.t.iter().map(|v| v.to_string()).collect();
                            text.push_str(&format!(
                                "\nstep {k}: S = {}; T = {{{}}}",
                                st.s,
                                t.join(",")
                            ));
                            if let (Some(ok), Some(m)) = (st.combined_pair, &st.combined_matrix) {
                                text.push_str(&format!("; combined pair {ok}; matrix {m}"));
                            }
                        }
                    }
                    text
                };
                Ok(with_render(text, g, e, &[lambda, &image]))
            })
        }
        Command::Core { partition } => {
            let e = need_e(g)?;
            per_partition(partition, input, pool, |lambda| {
                let (core, weight) = core_and_weight(lambda, e)?;
                let text = json!({"core": core, "weight": weight}).to_string();
                Ok(with_render(text, g, e, &[lambda, &core]))
            })
        }
        Command::Classify { partition } => {
            let pr = need_params(g)?;
            per_partition(partition, input, pool, |lambda| {
                Ok(with_render(
                    to_json(&classify_partition(lambda, pr)),
                    g,
                    pr.e(),
                    &[lambda],
                ))
            })
        }
        Command::RunnerMatrix { partition } => {
            let pr = need_params(g)?;
            per_partition(partition, input, pool, |lambda| {
                let m = runner_matrix_of_partition(lambda, pr);
                let text = if g.json { to_json(&m) } else { m.to_string() };
                Ok(with_render(text, g, pr.e(), &[lambda]))
            })
        }
        Command::Family { core, matrix } => {
            let pr = need_params(g)?;
            let gamma = parse_partition(core)?;
            let rows: Vec<Vec<u64>> = serde_json::from_str(matrix)
                .map_err(|e| validation(format!("cannot parse --matrix {matrix:?}: {e}")))?;
            let fam = min_weight_and_family(&gamma, &RunnerMatrix::from_rows(pr, rows)?)?;
            let mut text = to_json(&fam);
            text.push('\n');
            Ok(Outcome::ok(with_render(text, g, pr.e(), &[&fam.max_elem])))
        }
        Command::Maximize { partition } | Command::Minimize { partition } => {
            let pr = need_params(g)?;
            let up = matches!(cli.command, Command::Maximize { .. });
            per_partition(partition, input, pool, |lambda| {
                let result = if up {
                    maximize(lambda, pr)?
                } else {
                    minimize(lambda, pr)?
                };
                let text = if g.json {
                    json!({"input": lambda, "result": result}).to_string()
                } else {
                    result.to_string()
                };
                Ok(with_render(text, g, pr.e(), &[lambda, &result]))
            })
        }
        Command::J { partition } => {
            let e = need_e(g)?;
            per_partition(partition, input, pool, |lambda| {
                let image = j_map(lambda, e)?;
                let text = if g.json {
                    json!({"input": lambda, "e": e, "j": image}).to_string()
                } else {
                    image.to_string()
                };
                Ok(with_render(text, g, e, &[lambda, &image]))
            })
        }
        Command::Render { partition } => {
            let e = need_e(g)?;
            per_partition(partition, input, pool, |lambda| {
                let pic = render(&beta_set(lambda, 0), e, &[]);
                Ok(if g.json {
                    json!({"partition": lambda, "e": e, "abacus": pic}).to_string()
                } else {
                    pic
                })
            })
        }
        Command::Verify { max_n, pairs } => {
            let mut cfg = SweepConfig::default();
            if let Some(n) = max_n {
                cfg.max_n = *n;
            }
            if let Some(text) = pairs {
                cfg.d_pairs = text
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| s.trim().parse::<Params>())
                    .collect::<Result<_, _>>()?;
                if cfg.d_pairs.is_empty() {
                    cfg.d_pairs = default_pairs();
                }
            }
            let report = pool.install(|| run_sweep(&cfg));
            let stdout = report.to_json_lines();
            if report.ok() {
                Ok(Outcome::ok(stdout))
            } else {
                Ok(Outcome {
                    code: EXIT_INTERNAL,
                    stdout,
                    stderr: "property sweep found a counterexample\n".into(),
                })
            }
        }
    }
}
