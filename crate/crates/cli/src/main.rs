use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lightsim::io::format_sci;
use lightsim::selftest::selftest;
use lightsim::{run_to_dir, CliError, ScenarioConfig, ScenarioKind, ScenarioReport};

#[derive(Parser)]
#[command(name = "lightsim", version, about = "Structured-light scenario runner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the scenario described by a config file.
    Run {
        config: PathBuf,
        /// Output directory (overrides the config's [output] dir).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed for randomized scenarios.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the grid size.
        #[arg(long = "grid-n")]
        grid_n: Option<usize>,
    },
    /// Print the available scenarios.
    ListScenarios,
    /// Run every scenario at n = 256 twice and compare the outputs.
    Selftest {
        /// Keep the outputs of the second run here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn print_rows(report: &ScenarioReport) {
    for r in &report.rows {
        println!(
            "{:<4} {:<40} {:>24} (expected {}, tol {})",
            if r.pass { "ok" } else { "FAIL" },
            r.quantity,
            format_sci(r.value),
            format_sci(r.expected),
            format_sci(r.tolerance),
        );
    }
}

fn run(config: PathBuf, out: Option<PathBuf>, seed: Option<u64>, grid_n: Option<usize>) -> Result<bool, CliError> {
    let mut cfg = ScenarioConfig::load(&config)?;
    if let Some(seed) = seed {
        cfg = cfg.with_seed(seed);
    }
    if let Some(n) = grid_n {
        if !cfg.scenario.uses_grid() {
            return Err(CliError::Config(format!("scenario {} has no grid", cfg.scenario)));
        }
        cfg = cfg.with_grid_n(n)?;
    }
    let dir = out
        .or_else(|| cfg.output_dir.clone())
        .unwrap_or_else(|| PathBuf::from("out").join(cfg.scenario.name()));
    let report = run_to_dir(&cfg, &dir)?;
    print_rows(&report);
    println!("{}: outputs in {}", cfg.scenario, dir.display());
    Ok(report.passed())
}

fn run_selftest(out: Option<PathBuf>) -> Result<bool, CliError> {
    let result = selftest(out.as_deref())?;
    for (report, elapsed) in &result.reports {
        println!(
            "{:<4} {:<24} {:>3} checks {:>8.2} s",
            if report.passed() { "ok" } else { "FAIL" },
            report.scenario,
            report.rows.len(),
            elapsed.as_secs_f64(),
        );
        for r in report.failures() {
            println!("     {} = {} (expected {}, tol {})", r.quantity, format_sci(r.value), format_sci(r.expected), format_sci(r.tolerance));
        }
    }
    if result.mismatches.is_empty() {
        println!("determinism: {} files bit-identical across two runs", result.files_compared);
    } else {
        println!("determinism: {} files differ:", result.mismatches.len());
        for m in &result.mismatches {
            println!("     {m}");
        }
    }
    println!("selftest finished in {:.2} s", result.elapsed.as_secs_f64());
    Ok(result.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run {
            config,
            out,
            seed,
            grid_n,
        } => run(config, out, seed, grid_n),
        Command::ListScenarios => {
            for kind in ScenarioKind::ALL {
                println!("{:<24} {}", kind.name(), kind.description());
            }
            Ok(true)
        }
        Command::Selftest { out } => run_selftest(out),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("lightsim: one or more checks exceeded tolerance");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("lightsim: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
