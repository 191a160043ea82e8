use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use thermal_mirror::cli::{self, Command, Options, EXIT_CONFIG};
use thermal_mirror::config::RunConfig;

#[derive(Parser)]
#[command(name = "thermal-mirror", version, about = "Motional radiation force on a mirror in a thermal field (1+1D)")]
struct Args {
    #[command(subcommand)]
    command: Cmd,

    /// Run configuration (key = value, optional [model] section)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write CSV output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Relative tolerance for the route cross-checks
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Negate the model's second amplitude derivatives (verifier self-test)
    #[arg(long, global = true, hide = true)]
    inject_fault: bool,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Viscosity and mass correction at one temperature
    Coeffs,
    /// Coefficients over a temperature range, as CSV
    Sweep,
    /// Susceptibility on a frequency grid, as CSV
    Chi,
    /// Run the invariant suite for the configured model
    Verify,
    /// Quasistatic force along a trajectory, as CSV
    Force,
    /// Model summary and validation report
    ModelInfo,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Cmd::Coeffs => Command::Coeffs,
        Cmd::Sweep => Command::Sweep,
        Cmd::Chi => Command::Chi,
        Cmd::Verify => Command::Verify,
        Cmd::Force => Command::Force,
        Cmd::ModelInfo => Command::ModelInfo,
    };
    let config = match &args.config {
        Some(path) => RunConfig::from_file(path),
        None => Ok(RunConfig::default()),
    };
    let config = match config {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG as u8);
        }
    };
    let opts = Options {
        tol: args.tol,
        inject_fault: args.inject_fault,
    };
    let outcome = cli::run(command, &config, &opts).and_then(|o| {
        let csv = cli::deliver_csv(&o, args.out.as_deref())?;
        Ok((o, csv))
    });
    match outcome {
        Ok((o, csv)) => {
            print!("{}", o.stdout);
            if let Some(csv) = csv {
                // coeffs prints a readable report; its CSV row only goes to --out
                if command != Command::Coeffs {
                    print!("{csv}");
                }
            }
            for w in &o.warnings {
                eprintln!("warning: {w}");
            }
            ExitCode::from(o.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.exit_code as u8)
        }
    }
}
