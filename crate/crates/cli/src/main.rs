use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use fuzzy_reductive::harness::{CheckLabel, CheckRecord};
use fuzzy_reductive::{
    load_config, oracle_check, parse_config, render_report, render_tables, run_suite, Class,
    ExperimentConfig, OutputFormat,
};

/// Reductive-property evaluation of fuzzy modus ponens / tollens methods.
#[derive(Parser)]
#[command(name = "fuzzy-reductive", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the configured methods and render a report.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Restrict to class 1 or class 2.
        #[arg(long, value_parser = parse_class)]
        class: Option<Class>,
        /// Method filter: `cri`, `cri:goedel`, `dmm:two-valued`, ...
        #[arg(long)]
        method: Option<String>,
        /// Overrides the `format` key of the config.
        #[arg(long)]
        format: Option<OutputFormat>,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Audit every cell against the independent oracle and the published
    /// values. Exits 1 only if an implementation bug is found.
    Check {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Regenerate all reference tables as markdown files.
    Tables {
        #[arg(long, default_value = "tables")]
        out_dir: PathBuf,
        /// Defaults to the standard suite over both classes.
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

fn parse_class(s: &str) -> Result<Class, String> {
    let id: u8 = s.parse().map_err(|_| format!("class must be 1 or 2, got '{s}'"))?;
    Class::try_from(id)
}

fn load(path: &Path) -> Result<ExperimentConfig> {
    load_config(path).with_context(|| format!("loading {}", path.display()))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_record(r: &CheckRecord) {
    let class = r.class.map_or("-".to_string(), |c| c.id().to_string());
    let table = r.table.map_or("oracle".to_string(), |t| format!("table {t}"));
    let status = r.status.map_or("", |s| s.id());
    println!(
        "{:<18}  {:<20}  class {class}  {:<14}  {:<9}  ref {}  oracle {}  delta {:.4}  {status}",
        r.label.id(),
        r.variant.id(),
        r.cell,
        table,
        r.reference,
        r.oracle,
        r.delta,
    );
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Run {
            config,
            class,
            method,
            format,
            out,
        } => {
            let config = load(&config)?.restrict(class, method.as_deref())?;
            let report = run_suite(&config)?;
            let text = render_report(&report, format.unwrap_or(config.format));
            write_or_print(out.as_deref(), &text)?;
        }
        Command::Check { config, tolerance } => {
            let mut config = load(&config)?;
            if let Some(tol) = tolerance {
                anyhow::ensure!(tol.is_finite() && tol > 0.0, "tolerance must be positive, got {tol}");
                config.tolerance = tol;
            }
            let records = oracle_check(&config)?;
            let count = |label| records.iter().filter(|r| r.label == label).count();
            for r in records.iter().filter(|r| r.label != CheckLabel::MatchesPaper) {
                print_record(r);
            }
            let bugs = count(CheckLabel::ImplementationBug);
            println!(
                "{} records: {} match, {} errata, {bugs} implementation bugs",
                records.len(),
                count(CheckLabel::MatchesPaper),
                count(CheckLabel::PaperErratum),
            );
            if bugs > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Tables { out_dir, config } => {
            let config = match config {
                Some(path) => load(&path)?,
                None => parse_config("classes = [1, 2]")?,
            };
            let report = run_suite(&config)?;
            fs::create_dir_all(&out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
            for (name, text) in render_tables(&report) {
                let path = out_dir.join(&name);
                fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
                println!("{}", path.display());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
