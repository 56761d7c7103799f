use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use corner_cli::{run_batch, run_file, Overrides, Report};

#[derive(Parser)]
#[command(name = "corner", version, about = "Run harmonic-corner scenarios and write reports")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario file, or every `*.json` in a directory with `--batch`.
    Run {
        #[arg(required_unless_present = "batch", conflicts_with = "batch")]
        file: Option<PathBuf>,
        /// Output directory (one subdirectory per scenario in batch mode).
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        batch: Option<PathBuf>,
        /// Series truncation order, overriding the scenario.
        #[arg(long)]
        trunc_order: Option<usize>,
        /// Seed for sampled checks, overriding the scenario.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn print_report(label: &str, report: &Report) {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!("{status} {label} ({} checks)", report.summary.checks.len());
    for c in report.failed_checks() {
        println!("  failed {}: {}", c.name, c.detail);
    }
}

fn main() -> ExitCode {
    let Command::Run { file, out, batch, trunc_order, seed } = Cli::parse().command;
    let ov = Overrides { trunc_order, seed };
    if let Some(dir) = batch {
        let results = match run_batch(&dir, &out, ov) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(e.exit_code());
            }
        };
        let mut code = 0u8;
        for (path, res) in results {
            match res {
                Ok(report) => {
                    print_report(&path.display().to_string(), &report);
                    if !report.passed() {
                        code = code.max(1);
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    code = code.max(e.exit_code());
                }
            }
        }
        return ExitCode::from(code);
    }
    let file = file.expect("clap requires a file without --batch");
    match run_file(&file, &out, ov) {
        Ok(report) => {
            print_report(&file.display().to_string(), &report);
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
