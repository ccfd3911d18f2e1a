//! Command-line front end: single-value queries (dim, bounds, Mullineux,
//! signature reports, restriction depths, crystal graphs) and the batch
//! verification sweep.
//!
//! Exit codes: 0 success / all checks pass, 1 at least one bound or
//! balance violation in a sweep, 2 usage error, 3 oracle out of range on
//! a directly requested computation, 4 I/O error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use symrep::bounds::{
    best_lower_bound, first_row_bound, james_bound, lemma_l1_bound, theorem_a_bound,
    theorem_b_bound, theorem_b_k, theorem_c_bound, two_row_bound, AMode, ExactBound,
};
use symrep::verify::{run_verify, BoundSelector, VerifyConfig};
use symrep::{
    a_crystal, crystal_graph, is_js, mullineux, normal_report, Error, Oracle, OracleCaps,
    Partition, PrimeChar,
};

#[derive(Parser)]
#[command(name = "symrep", version, about = "Modular representation combinatorics of symmetric groups", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Target {
    /// Characteristic (a prime)
    #[arg(long)]
    p: u32,
    /// Partition as comma-separated parts, e.g. 5,1
    #[arg(long)]
    lambda: String,
}

#[derive(Args)]
struct CapsArgs {
    #[arg(long, default_value_t = OracleCaps::default().max_tableaux)]
    max_tableaux: u64,
    #[arg(long, default_value_t = OracleCaps::default().max_tabloids)]
    max_tabloids: u64,
}

impl CapsArgs {
    fn caps(&self) -> OracleCaps {
        OracleCaps {
            max_tableaux: self.max_tableaux,
            max_tabloids: self.max_tabloids,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// dim D^λ over F_p (brute-force oracle)
    Dim {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        caps: CapsArgs,
    },
    /// Evaluate dimension lower bounds for λ
    Bound {
        #[command(flatten)]
        target: Target,
        /// One of A, james, B, C, L1, two_row, first_row; omit for the full report
        #[arg(long)]
        which: Option<String>,
        /// Theorem B restriction depth source: safe, oracle, or crystal
        #[arg(long, default_value = "safe")]
        a_mode: String,
        #[command(flatten)]
        caps: CapsArgs,
    },
    /// The Mullineux image λ^M
    Mullineux {
        #[command(flatten)]
        target: Target,
    },
    /// Jantzen–Seitz test (restriction to S_{n−1} irreducible)
    Js {
        #[command(flatten)]
        target: Target,
    },
    /// Signature / normal-node report for every residue
    Normal {
        #[command(flatten)]
        target: Target,
    },
    /// Restriction depths: oracle minimal a and crystal BFS upper bound
    A {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        caps: CapsArgs,
    },
    /// Crystal graph on all p-regular partitions of size ≤ max-n
    Crystal {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        max_n: u32,
        /// dot or json
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Sweep all p-regular λ up to max-n and check every bound against the oracle
    Verify {
        /// Primes to sweep, comma separated
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        p: Vec<u32>,
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        /// Subset of bounds: A,james,B,C,L1,two_row,first_row (default all)
        #[arg(long, value_delimiter = ',')]
        which: Option<Vec<String>>,
        #[arg(long, default_value = "oracle")]
        a_mode: String,
        /// Report destination (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// json or csv
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        caps: CapsArgs,
        /// JSONL dimension cache to read (only if trusted) and write
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Consult the cache for correctness-relevant values
        #[arg(long, default_value_t = false)]
        trust_cache: bool,
    },
}

fn parse_target(t: &Target) -> Result<(Partition, PrimeChar), Error> {
    let p = PrimeChar::new(t.p)?;
    let la: Partition = t.lambda.parse()?;
    Ok((la, p))
}

fn exit_for(err: &Error) -> ExitCode {
    match err {
        Error::OracleOutOfRange { .. } => ExitCode::from(3),
        Error::Io(_) => ExitCode::from(4),
        _ => ExitCode::from(2),
    }
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    exit_for(&err)
}

fn run() -> Result<ExitCode, Error> {
    match Cli::parse().cmd {
        Cmd::Dim { target, caps } => {
            let (la, p) = parse_target(&target)?;
            let oracle = Oracle::new(caps.caps());
            println!("{}", oracle.dim(&la, &p)?);
        }
        Cmd::Bound {
            target,
            which,
            a_mode,
            caps,
        } => {
            let (la, p) = parse_target(&target)?;
            let a_mode: AMode = a_mode.parse()?;
            let a_value = match a_mode {
                AMode::Oracle => Some(Oracle::new(caps.caps()).minimal_a(&la, &p)?),
                _ => None,
            };
            match which {
                None => {
                    let report = best_lower_bound(&la, &p, a_mode, a_value)?;
                    println!("{}", serde_json::to_string_pretty(&report)?);
                }
                Some(which) => print_single_bound(&la, &p, &which, a_mode, a_value)?,
            }
        }
        Cmd::Mullineux { target } => {
            let (la, p) = parse_target(&target)?;
            println!("{}", mullineux(&la, &p)?);
        }
        Cmd::Js { target } => {
            let (la, p) = parse_target(&target)?;
            println!("{}", is_js(&la, &p)?);
        }
        Cmd::Normal { target } => {
            let (la, p) = parse_target(&target)?;
            let reports: Vec<_> = p
                .residues()
                .map(|i| normal_report(&la, i, &p))
                .collect::<Result<_, _>>()?;
            println!("{}", serde_json::to_string_pretty(&reports)?);
        }
        Cmd::A { target, caps } => {
            let (la, p) = parse_target(&target)?;
            let a_oracle = Oracle::new(caps.caps()).minimal_a(&la, &p)?;
            let a_cry = a_crystal(&la, &p)?;
            println!(
                "{}",
                serde_json::json!({"a_oracle": a_oracle, "a_crystal": a_cry})
            );
        }
        Cmd::Crystal { p, max_n, format } => {
            let p = PrimeChar::new(p)?;
            let g = crystal_graph(max_n, &p)?;
            match format.as_str() {
                "dot" => print!("{}", g.to_dot()),
                "json" => println!("{}", serde_json::to_string_pretty(&g.to_json())?),
                other => {
                    return Err(Error::BadParams(format!(
                        "unknown crystal format {other:?} (expected dot or json)"
                    )))
                }
            }
        }
        Cmd::Verify {
            p,
            max_n,
            which,
            a_mode,
            out,
            format,
            jobs,
            seed,
            caps,
            cache,
            trust_cache,
        } => {
            let mut config = VerifyConfig::new(p, max_n)
                .with_a_mode(a_mode.parse()?)
                .with_parallelism(jobs);
            if let Some(which) = which {
                config.bounds = which
                    .iter()
                    .map(|s| s.parse::<BoundSelector>())
                    .collect::<Result<_, _>>()?;
            }
            config.max_tableaux = caps.max_tableaux;
            config.max_tabloids = caps.max_tabloids;
            config.seed = seed;
            config.cache_path = cache;
            config.trust_cache = trust_cache;
            let report = run_verify(&config)?;
            let rendered = match format.as_str() {
                "json" => report.to_json()?,
                "csv" => report.to_csv(),
                other => {
                    return Err(Error::BadParams(format!(
                        "unknown report format {other:?} (expected json or csv)"
                    )))
                }
            };
            match out {
                Some(path) => std::fs::write(path, rendered)?,
                None => {
                    let mut stdout = std::io::stdout().lock();
                    stdout.write_all(rendered.as_bytes())?;
                    if !rendered.ends_with('\n') {
                        stdout.write_all(b"\n")?;
                    }
                }
            }
            eprintln!(
                "records={} out_of_range={} checks={} violations={} balance_failures={} a_gaps={}",
                report.summary.records,
                report.summary.out_of_range,
                report.summary.bound_checks,
                report.summary.violations,
                report.summary.balance_failures,
                report.summary.a_gaps.len(),
            );
            if report.has_violations() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_single_bound(
    la: &Partition,
    p: &PrimeChar,
    which: &str,
    a_mode: AMode,
    a_value: Option<u32>,
) -> Result<(), Error> {
    let n = la.n();
    let value = match which {
        "A" => theorem_a_bound(la, p)?
            .map(ExactBound::Rational)
            .ok_or_else(|| Error::PreconditionFailed("Theorem A not applicable".into()))?,
        "james" => {
            let m = n as i64 - la.first() as i64;
            ExactBound::Rational(james_bound(m, n as i64)?)
        }
        "B" => {
            let k = theorem_b_k(la, p)?;
            match a_mode {
                AMode::Safe => ExactBound::TwoTimesThreePow {
                    t: n as i64 - k as i64,
                },
                AMode::Oracle => theorem_b_bound(n, k, a_value.ok_or(Error::MissingA)?)?,
                AMode::Crystal => theorem_b_bound(n, k, a_crystal(la, p)?)?,
            }
        }
        "C" => ExactBound::from_int(theorem_c_bound(la)?),
        "L1" => ExactBound::from_int(lemma_l1_bound(la, p)?),
        "two_row" => {
            if la.len() > 2 || la.is_empty() {
                return Err(Error::PreconditionFailed(
                    "two-row bound needs a nonempty partition with at most two rows".into(),
                ));
            }
            ExactBound::from_int(two_row_bound(la.part(1), la.part(2), p)?)
        }
        "first_row" => first_row_bound(la, p)?
            .map(ExactBound::from_int)
            .ok_or_else(|| Error::PreconditionFailed("first-row condition fails".into()))?,
        other => {
            return Err(Error::BadParams(format!(
                "unknown bound {other:?} (expected A, james, B, C, L1, two_row, first_row)"
            )))
        }
    };
    // Rationals print bare (e.g. 81 or 35/8); the Theorem-B value is
    // irrational and prints as its exact exponent form {"t": t}.
    match &value {
        ExactBound::Rational(_) => println!("{}", value.display_value()),
        ExactBound::TwoTimesThreePow { .. } => println!("{}", serde_json::to_string(&value)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => fail(e),
    }
}
