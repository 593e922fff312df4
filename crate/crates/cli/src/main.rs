//! Command-line front end for the harmonic-algebra kernel.
//!
//! Subcommands: `expand` (apply a structure map and print the canonical
//! polynomial), `verify` (run an identity over a parameter grid, one JSON
//! record per grid point on stdout), `eval` (numeric zeta evaluation with
//! optional pi-power reconstruction) and `bb` (the block-insertion sums).
//!
//! Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
//! parse errors.

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use mzv_core::numeric::{
    bb_star_sum, eval_z, eval_zbar, mzv_numeric, reconstruct_rational, BigReal,
};
use mzv_core::text::{parse_index, parse_zpoly, render_zpoly};
use mzv_core::verify::{
    verify_harmonic_identity, verify_hom_consistency, verify_lifted_identity,
    verify_product_oracles, verify_series_identity, VerifyReport,
};

#[derive(Parser)]
#[command(name = "mzv", version, about = "Exact harmonic-algebra kernel and zeta evaluator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a structure map to index arguments and print the expansion.
    Expand {
        /// One of: star, sha, d
        op: String,
        /// Index literals like `[2,1]`; two for star/sha, one for d
        inputs: Vec<String>,
    },
    /// Verify an identity family over a grid; emits one JSON record per point.
    Verify(VerifyArgs),
    /// Evaluate Z (or Zbar with --star) on an index or polynomial.
    Eval(EvalArgs),
    /// Evaluate the block-insertion sum Zbar({2}^m sha {3,1}^n).
    Bb(BbArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: mthm, inA, informal, oracles
    kind: String,
    /// Range for the first letter parameter, e.g. 2 or 1..3 (inclusive)
    #[arg(long, default_value = "1..2")]
    a: String,
    /// Range for the second letter parameter
    #[arg(long, default_value = "1..2")]
    b: String,
    /// Range for the third letter parameter
    #[arg(long, default_value = "1..2")]
    c: String,
    /// Range for the first exponent
    #[arg(long, default_value = "0..2")]
    m: String,
    /// Range for the second exponent
    #[arg(long, default_value = "0..1")]
    n: String,
    /// Weight bound for the series identity (informal only)
    #[arg(long = "W", default_value_t = 4)]
    weight_bound: u32,
    /// Exhaustive index pool depth (oracles only)
    #[arg(long, default_value_t = 3)]
    depth: usize,
    /// Largest index entry in the pool (oracles only)
    #[arg(long, default_value_t = 3)]
    entry: u64,
    /// Number of extra random pairs (oracles only)
    #[arg(long, default_value_t = 100)]
    random: usize,
    /// Seed for the random pairs (oracles only)
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Verifier thread count; never affects output content
    #[arg(long, short, default_value_t = 1)]
    jobs: usize,
    /// Include per-point wall-clock timings (makes output nondeterministic)
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// Index literal like `[2,1]`
    #[arg(long, conflicts_with = "poly", conflicts_with = "poly_file")]
    index: Option<String>,
    /// Polynomial literal like `[4]:1, [3,1]:1`
    #[arg(long)]
    poly: Option<String>,
    /// Path to a file holding one polynomial in the same grammar
    #[arg(long, conflicts_with = "poly")]
    poly_file: Option<String>,
    /// Evaluate Zbar (block-sum transform first) instead of Z
    #[arg(long)]
    star: bool,
    /// Absolute error target
    #[arg(long, default_value_t = 1e-10)]
    err: f64,
    /// Reconstruct the value as a rational multiple of pi^POWER
    #[arg(long)]
    pi_power: Option<u32>,
    /// Largest denominator accepted by the reconstruction
    #[arg(long, default_value_t = 100_000)]
    denom_bound: u64,
}

#[derive(Args)]
struct BbArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    /// Absolute error target
    #[arg(long, default_value_t = 1e-10)]
    err: f64,
    /// Pi power for reconstruction; defaults to 2m + 4n
    #[arg(long)]
    pi_power: Option<u32>,
    /// Largest denominator accepted by the reconstruction
    #[arg(long, default_value_t = 100_000)]
    denom_bound: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Expand { op, inputs } => cmd_expand(&op, &inputs).map(|()| true),
        Command::Verify(args) => cmd_verify(args),
        Command::Eval(args) => cmd_eval(args).map(|()| true),
        Command::Bb(args) => cmd_bb(args).map(|()| true),
    }
}

fn cmd_expand(op: &str, inputs: &[String]) -> Result<()> {
    let parsed: Vec<_> = inputs
        .iter()
        .map(|s| parse_index(s).with_context(|| format!("in input {s:?}")))
        .collect::<Result<_, _>>()?;
    let result = match (op, parsed.as_slice()) {
        ("star", [u, v]) => u.poly().star(&v.poly()),
        ("sha", [u, v]) => u.poly().sha(&v.poly()),
        ("d", [w]) => w.poly().dmap(),
        ("star" | "sha", _) => bail!("{op} takes exactly two index arguments"),
        ("d", _) => bail!("d takes exactly one index argument"),
        _ => bail!("unknown operation {op:?}; expected star, sha or d"),
    };
    println!("{}", render_zpoly(&result));
    Ok(())
}

/// Inclusive range grammar: a single value `2` or a span `0..3`.
fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<i64>> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: i64 = lo.trim().parse().context("bad range start")?;
        let hi: i64 = hi.trim().parse().context("bad range end")?;
        if lo > hi {
            bail!("empty range {text:?}");
        }
        Ok(lo..=hi)
    } else {
        let v: i64 = text.trim().parse().context("bad range value")?;
        Ok(v..=v)
    }
}

fn run_grid<P, F>(points: Vec<P>, jobs: usize, f: F) -> Result<Vec<VerifyReport>>
where
    P: Send + Sync,
    F: Fn(&P) -> VerifyReport + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .context("building the worker pool")?;
    use rayon::prelude::*;
    Ok(pool.install(|| points.par_iter().map(&f).collect()))
}

fn cmd_verify(args: VerifyArgs) -> Result<bool> {
    let reports = match args.kind.as_str() {
        "mthm" => {
            let mut points = Vec::new();
            for a in parse_range(&args.a)? {
                for b in parse_range(&args.b)? {
                    for c in parse_range(&args.c)? {
                        for m in parse_range(&args.m)? {
                            for n in parse_range(&args.n)? {
                                if a < 1 || b < 1 || c < 1 || m < 0 || n < 0 {
                                    bail!("letters need a,b,c >= 1 and exponents m,n >= 0");
                                }
                                points.push((a as u64, b as u64, c as u64, m as u32, n as u32));
                            }
                        }
                    }
                }
            }
            run_grid(points, args.jobs, |&(a, b, c, m, n)| {
                verify_harmonic_identity(a, b, c, m, n)
            })?
        }
        "inA" => {
            let mut points = Vec::new();
            for m in parse_range(&args.m)? {
                for n in parse_range(&args.n)? {
                    if m < 0 || n < 0 {
                        bail!("exponents m,n must be >= 0");
                    }
                    points.push((m as u32, n as u32));
                }
            }
            run_grid(points, args.jobs, |&(m, n)| verify_lifted_identity(m, n))?
        }
        "informal" => {
            let points: Vec<u32> = (0..=args.weight_bound).collect();
            run_grid(points, args.jobs, |&w| verify_series_identity(w))?
        }
        "oracles" => {
            let mut reports =
                verify_product_oracles(args.depth, args.entry, args.random, args.seed);
            let mut points = Vec::new();
            for a in parse_range(&args.a)? {
                for b in parse_range(&args.b)? {
                    for c in parse_range(&args.c)? {
                        for m in parse_range(&args.m)? {
                            for n in parse_range(&args.n)? {
                                if a < 1 || b < 1 || c < 1 || m < 0 || n < 0 {
                                    bail!("letters need a,b,c >= 1 and exponents m,n >= 0");
                                }
                                points.push((a as u64, b as u64, c as u64, m as u32, n as u32));
                            }
                        }
                    }
                }
            }
            reports.extend(run_grid(points, args.jobs, |&(a, b, c, m, n)| {
                verify_hom_consistency(a, b, c, m, n)
            })?);
            reports
        }
        other => bail!("unknown verify kind {other:?}; expected mthm, inA, informal or oracles"),
    };

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut all_passed = true;
    for report in &reports {
        all_passed &= report.pass;
        writeln!(out, "{}", report_json(report, args.timings))?;
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    eprintln!(
        "{}: {} point(s), {} failed",
        args.kind,
        reports.len(),
        failed
    );
    Ok(all_passed)
}

fn report_json(report: &VerifyReport, timings: bool) -> String {
    let mut params = serde_json::Map::new();
    for (k, v) in &report.params {
        params.insert(k.clone(), serde_json::json!(v));
    }
    let mut record = serde_json::json!({
        "identity": report.identity,
        "params": params,
        "pass": report.pass,
        "diff": report.diff,
    });
    if timings {
        record["elapsed_ms"] = serde_json::json!(report.elapsed.as_secs_f64() * 1e3);
    }
    if let Some(note) = &report.note {
        record["note"] = serde_json::json!(note);
    }
    record.to_string()
}

fn value_record(
    v: &BigReal,
    pi_power: Option<u32>,
    denom_bound: u64,
    extra: serde_json::Value,
) -> String {
    let digits = (-v.err().log10()).ceil().max(1.0) as usize + 2;
    let reconstructed = pi_power.and_then(|w| {
        reconstruct_rational(v, w, &BigInt::from(denom_bound), 0.0)
            .map(|q| mzv_core::rational::render(&q))
    });
    let mut record = serde_json::json!({
        "value": v.to_decimal(digits.min(60)),
        "err": v.err(),
        "reconstructed": reconstructed,
    });
    if let Some(w) = pi_power {
        record["pi_power"] = serde_json::json!(w);
    }
    if let serde_json::Value::Object(extra) = extra {
        for (k, val) in extra {
            record[k] = val;
        }
    }
    record.to_string()
}

fn cmd_eval(args: EvalArgs) -> Result<()> {
    let poly = if let Some(index) = &args.index {
        parse_index(index)?.poly()
    } else if let Some(text) = &args.poly {
        parse_zpoly(text)?
    } else if let Some(path) = &args.poly_file {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        parse_zpoly(text.trim())?
    } else {
        return Err(anyhow!("one of --index, --poly or --poly-file is required"));
    };

    let value = if args.star {
        eval_zbar(&poly, args.err)
    } else if let Some(index) = &args.index {
        mzv_numeric(&parse_index(index)?, args.err)
    } else {
        eval_z(&poly, args.err)
    }?;
    println!(
        "{}",
        value_record(
            &value,
            args.pi_power,
            args.denom_bound,
            serde_json::json!({ "input": render_zpoly(&poly), "star": args.star }),
        )
    );
    Ok(())
}

fn cmd_bb(args: BbArgs) -> Result<()> {
    let value = bb_star_sum(args.m, args.n, args.err)?;
    let pi_power = Some(args.pi_power.unwrap_or(2 * args.m + 4 * args.n));
    println!(
        "{}",
        value_record(
            &value,
            pi_power,
            args.denom_bound,
            serde_json::json!({ "m": args.m, "n": args.n }),
        )
    );
    Ok(())
}
