//! Command-line interface: lemma verification against the literature,
//! ab-diagram classification, Gröbner-based scheme tests, spectral
//! factorization, and K-theoretic partition-function series.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 budget exhausted.

mod commands;
mod registry;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "adhm", version, about = "Framed symplectic/orthogonal ADHM data toolkit")]
struct Cli {
    /// RNG seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Coefficient field: `q` (rationals) or `fp:<prime>`.
    #[arg(long, global = true, default_value = "q")]
    field: String,

    /// Truncation order (total q-degree) for series commands.
    #[arg(long, global = true, default_value_t = 8)]
    order: i64,

    /// Write the JSON report to this file in addition to stdout.
    #[arg(long, global = true, value_name = "FILE")]
    json_out: Option<PathBuf>,

    /// S-pair budget for Gröbner computations.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Run independent checks on multiple threads.
    #[arg(long, global = true, default_value_t = false)]
    parallel: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the lemma checks against their expected values.
    Verify {
        /// Only run checks whose id matches this glob (e.g. `kp.*`).
        filter: Option<String>,
    },
    /// Classify a fixture's ab-diagram or enumerate all valid diagrams.
    Abdiagram {
        /// Fixture datum to classify (see `adhm fixtures`).
        #[arg(long)]
        classify: Option<String>,
        /// Number of `a` letters (W dimension) when enumerating.
        #[arg(long)]
        na: Option<usize>,
        /// Number of `b` letters (V dimension) when enumerating.
        #[arg(long)]
        nb: Option<usize>,
    },
    /// Build an ideal, compute a Gröbner basis, and report scheme invariants.
    Groebner {
        /// Ideal kind: mu, mu_traceless, rho, pi_image_tags, commutator, product.
        #[arg(long)]
        kind: String,
        /// Framing dimension N.
        #[arg(long)]
        n: usize,
        /// Gauge dimension k.
        #[arg(long)]
        k: usize,
        /// Symmetry flavor: `sp` or `so`.
        #[arg(long, default_value = "so")]
        flavor: String,
    },
    /// Factor a datum by the spectrum of B1 and verify the round trip.
    Factorize {
        /// Fixture datum to factor (see `adhm fixtures`).
        #[arg(long, conflicts_with = "input")]
        fixture: Option<String>,
        /// JSON file with a datum in the fixtures schema.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Expected spectral supports, e.g. "1/2,1/2;-1/2,-1/2".
        #[arg(long)]
        supports: Option<String>,
    },
    /// Compute partition-function terms Z_k up to a gauge-size bound.
    Nekrasov {
        /// Symmetry flavor: `sp` or `so`.
        #[arg(long)]
        flavor: String,
        /// Framing dimension N.
        #[arg(long)]
        n: usize,
        /// Largest gauge dimension k to include.
        #[arg(long)]
        kmax: usize,
    },
    /// List the built-in fixtures, or print one by name.
    Fixtures {
        /// Fixture name to print.
        name: Option<String>,
    },
}

fn emit(value: &serde_json::Value, json_out: Option<&PathBuf>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    println!("{text}");
    if let Some(path) = json_out {
        std::fs::write(path, &text)?;
    }
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    match &cli.cmd {
        Cmd::Verify { filter } => {
            let reports = registry::run_all(filter.as_deref().unwrap_or("*"), cli.parallel);
            if reports.is_empty() {
                eprintln!("warning: no checks match the given filter");
            }
            let mut all_pass = true;
            for r in &reports {
                println!(
                    "{:<4} {}  computed={} expected={}",
                    r.status.to_uppercase(),
                    r.id,
                    r.computed,
                    r.expected
                );
                all_pass &= r.status == "pass";
            }
            println!(
                "{}/{} checks passed",
                reports.iter().filter(|r| r.status == "pass").count(),
                reports.len()
            );
            println!("\nCitations:");
            for r in &reports {
                println!("  [{}] {}", r.id, r.citation);
            }
            emit(&serde_json::to_value(&reports)?, cli.json_out.as_ref())?;
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Cmd::Abdiagram { classify, na, nb } => {
            let v = commands::cmd_abdiagram(classify.as_deref(), *na, *nb)?;
            if let Some(text) = v.pointer("/diagram/text").and_then(|t| t.as_str()) {
                println!("{text}");
            }
            emit(&v, cli.json_out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Groebner { kind, n, k, flavor } => {
            let kind = commands::parse_kind(kind)?;
            let flavor = commands::parse_flavor(flavor)?;
            let field = commands::parse_field(&cli.field)?;
            let (v, exhausted) = commands::cmd_groebner(kind, *n, *k, flavor, field, cli.budget)?;
            emit(&v, cli.json_out.as_ref())?;
            Ok(if exhausted { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Cmd::Factorize { fixture, input, supports } => {
            let v =
                commands::cmd_factorize(fixture.as_deref(), input.as_deref(), supports.as_deref())?;
            emit(&v, cli.json_out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Nekrasov { flavor, n, kmax } => {
            let flavor = commands::parse_flavor(flavor)?;
            let v = commands::cmd_nekrasov(flavor, *n, *kmax, cli.order)?;
            emit(&v, cli.json_out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Fixtures { name } => {
            let v = commands::cmd_fixtures(name.as_deref())?;
            emit(&v, cli.json_out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
