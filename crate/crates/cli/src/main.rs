use std::path::{Path, PathBuf};
use std::process::ExitCode;

use affcohom::experiments::{all_pass, check_suite, render, run_all, ExperimentConfig, ExperimentReport, ReportFormat};
use affcohom::Error;
use anyhow::Context;
use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "affcohom", version, about = "Exact cohomology experiments for affine representations")]
struct Cli {
    /// JSON file with experiment parameters; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Dimension of R^m (2 or 3).
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Degree bound for symbolic identities (1..=6).
    #[arg(long, global = true)]
    degree: Option<u32>,
    /// Euler-weight window as `lo,hi`.
    #[arg(long, global = true, value_parser = parse_window)]
    window: Option<(i64, i64)>,
    /// Output file; stdout if absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Axiom and validation checks.
    Check,
    /// One experiment from the catalog.
    Run { experiment: String },
    /// The whole catalog.
    RunAll,
    /// Render reports, from `--input` or by running the catalog.
    Report {
        #[arg(long, default_value = "json")]
        format: ReportFormat,
        /// Canonical JSON reports to render instead of running.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected lo,hi, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Invalid parameters are distinguished from computation failures.
enum Failure {
    Config(anyhow::Error),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

fn classify(e: Error) -> Failure {
    match e {
        Error::Infeasible(_) | Error::Parse(_) => Failure::Config(e.into()),
        other => Failure::Runtime(other.into()),
    }
}

fn load_config(cli: &Cli) -> Result<ExperimentConfig, Failure> {
    let mut config = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(Failure::Config)?;
            serde_json::from_str(&text)
                .with_context(|| format!("parsing {}", path.display()))
                .map_err(Failure::Config)?
        }
        None => ExperimentConfig::default(),
    };
    if let Some(m) = cli.m {
        config.m = m;
    }
    if let Some(d) = cli.degree {
        config.degree = d;
    }
    if let Some(w) = cli.window {
        config.window = w;
    }
    config.validate().map_err(classify)?;
    Ok(config)
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn execute(cli: &Cli) -> Result<bool, Failure> {
    let mut config = load_config(cli)?;
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Check => {
            let results = check_suite(&config).map_err(classify)?;
            let text = serde_json::to_string_pretty(&results).context("serializing checks")?;
            emit(out, &text)?;
            for r in &results {
                eprintln!("{} {}: {}", if r.pass { "pass" } else { "FAIL" }, r.name, r.detail);
            }
            Ok(results.iter().all(|r| r.pass))
        }
        Command::Run { experiment } => {
            config.experiment = Some(experiment.clone());
            config.validate().map_err(classify)?;
            finish(&run_all(&config).map_err(classify)?, ReportFormat::Json, out)
        }
        Command::RunAll => {
            config.experiment = None;
            finish(&run_all(&config).map_err(classify)?, ReportFormat::Json, out)
        }
        Command::Report { format, input } => {
            let reports: Vec<ExperimentReport> = match input {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))
                        .map_err(Failure::Config)?;
                    serde_json::from_str(&text)
                        .with_context(|| format!("parsing reports in {}", path.display()))
                        .map_err(Failure::Config)?
                }
                None => run_all(&config).map_err(classify)?,
            };
            finish(&reports, *format, out)
        }
    }
}

fn finish(reports: &[ExperimentReport], format: ReportFormat, out: Option<&Path>) -> Result<bool, Failure> {
    emit(out, &render(reports, format).map_err(classify)?)?;
    for r in reports {
        eprintln!("{} {} ({} ms)", if r.pass { "pass" } else { "FAIL" }, r.name, r.runtime_ms);
        if !r.pass {
            eprintln!("  expected {}\n  computed {}", r.expected.value, r.computed);
        }
    }
    Ok(all_pass(reports))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Config(e)) => {
            eprintln!("invalid configuration: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
