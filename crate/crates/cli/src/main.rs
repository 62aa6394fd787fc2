//! `matdarboux` command-line interface.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 on
//! usage or input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use matdarboux::algebra::Params;
use matdarboux::catalog::{catalog_list, complete_params, default_samples, entry, parse_param, run_entry};
use matdarboux::io::{certificate_value, parse_operator, parse_weight, solve_value};
use matdarboux::report::{CheckStatus, Report};
use matdarboux::{solve_bounded_order, verify_strong, Caps};

const CAP_ENV: &str = "MATDARBOUX_CAP";

#[derive(Parser)]
#[command(name = "matdarboux", version, about = "Exact verification of Darboux transformations of matrix weights")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in examples.
    Catalog,
    /// Run the checklist of a built-in example.
    Verify {
        /// Catalog id (see `catalog`).
        #[arg(long)]
        example: String,
        /// Parameter value `name=p/q`; missing ones take the first default sample.
        #[arg(long = "param", value_name = "K=V", conflicts_with = "all_samples")]
        params: Vec<String>,
        /// Run every default parameter sample.
        #[arg(long)]
        all_samples: bool,
        /// Degree cap for the finite checks [default: $MATDARBOUX_CAP or 12].
        #[arg(long)]
        cap: Option<usize>,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a transformer given as JSON files.
    VerifyFile {
        /// Source weight W (JSON)
        #[arg(long)]
        weight: PathBuf,
        /// Transformer V (operator JSON)
        #[arg(long)]
        transformer: PathBuf,
        /// Target weight W̃ (JSON)
        #[arg(long)]
        target: PathBuf,
        /// Degree cap for the finite checks [default: $MATDARBOUX_CAP or 12]
        #[arg(long)]
        cap: Option<usize>,
        /// Write the JSON certificate here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the operators of order at most `--max-order` in D(W).
    Solve {
        /// Weight W (JSON)
        #[arg(long)]
        weight: PathBuf,
        /// Largest operator order to search
        #[arg(long)]
        max_order: usize,
        /// Write the JSON basis here
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn caps(cap: Option<usize>) -> Result<Caps> {
    let n = match cap {
        Some(n) => n,
        None => match std::env::var(CAP_ENV) {
            Ok(v) => v.trim().parse().with_context(|| format!("{CAP_ENV}={v} is not a nonnegative integer"))?,
            Err(_) => Caps::default().degree,
        },
    };
    Ok(Caps { degree: n, n_check: n })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display()))
}

fn print_report(r: &Report) {
    for s in &r.samples {
        let params: Vec<String> = s.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!("{} [{}]", r.entry, params.join(", "));
        for c in &s.checks {
            match c.status {
                CheckStatus::Pass => println!("  PASS {}", c.name),
                CheckStatus::Fail => println!("  FAIL {}: {}", c.name, c.detail),
                CheckStatus::RecordedDiscrepancy => println!("  DISCREPANCY {}: {}", c.name, c.detail),
            }
        }
    }
    let checks: Vec<_> = r.samples.iter().flat_map(|s| &s.checks).collect();
    let failed = checks.iter().filter(|c| c.status == CheckStatus::Fail).count();
    let noted = checks.iter().filter(|c| c.status == CheckStatus::RecordedDiscrepancy).count();
    println!("{} checks, {failed} failed, {noted} recorded discrepancies", checks.len());
}

fn verify(example: &str, params: &[String], all: bool, cap: Option<usize>, out: Option<&Path>) -> Result<bool> {
    let info = entry(example)?;
    if info.stub {
        bail!("`{example}` is not verifiable: {}", info.summary);
    }
    let samples = if all {
        default_samples(example)?
    } else {
        let mut given = Params::new();
        for p in params {
            let (k, v) = parse_param(p)?;
            given.insert(k, v);
        }
        vec![complete_params(example, &given)?]
    };
    let report = run_entry(example, &samples, caps(cap)?)?;
    print_report(&report);
    if let Some(path) = out {
        write(path, &report.to_json())?;
    }
    Ok(report.passed())
}

fn verify_file(weight: &Path, transformer: &Path, target: &Path, cap: Option<usize>, out: Option<&Path>) -> Result<bool> {
    let w = parse_weight(&read(weight)?).with_context(|| format!("in {}", weight.display()))?;
    let v = parse_operator(&read(transformer)?).with_context(|| format!("in {}", transformer.display()))?;
    let wt = parse_weight(&read(target)?).with_context(|| format!("in {}", target.display()))?;
    let cert = verify_strong(&v, &w, &wt, caps(cap)?)?;
    for (name, ok) in cert.flags.named() {
        println!("{} {name}", if ok { "PASS" } else { "FAIL" });
    }
    for d in &cert.diagnostics {
        println!("  {d}");
    }
    println!(
        "{}",
        if cert.is_strong() {
            "strong Darboux transformation"
        } else if cert.is_plain() {
            "Darboux transformation, not strong"
        } else {
            "not a Darboux transformation"
        }
    );
    if let Some(path) = out {
        let name = |p: &Path| p.display().to_string();
        let value = certificate_value(&cert, &name(weight), &name(transformer), &name(target));
        write(path, &serde_json::to_string_pretty(&value)?)?;
    }
    Ok(cert.is_strong())
}

fn solve(weight: &Path, max_order: usize, out: Option<&Path>) -> Result<bool> {
    let w = parse_weight(&read(weight)?).with_context(|| format!("in {}", weight.display()))?;
    let r = solve_bounded_order(&w, max_order, max_order + 2)?;
    println!("dimension {}", r.dimension());
    for (k, d) in r.basis.iter().enumerate() {
        println!("  B{k} = {d}");
    }
    if let Some(path) = out {
        write(path, &serde_json::to_string_pretty(&solve_value(&r, &weight.display().to_string()))?)?;
    }
    Ok(r.all_members && r.symmetric_split_holds())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Catalog => {
            for e in catalog_list() {
                let params = e.params.join(", ");
                println!("{:<24} [{params}] {}", e.id, e.summary);
            }
            Ok(true)
        }
        Command::Verify { example, params, all_samples, cap, out } => {
            verify(&example, &params, all_samples, cap, out.as_deref())
        }
        Command::VerifyFile { weight, transformer, target, cap, out } => {
            verify_file(&weight, &transformer, &target, cap, out.as_deref())
        }
        Command::Solve { weight, max_order, out } => solve(&weight, max_order, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
