use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use tenalg::checks::{run_checks, CheckConfig};
use tenalg::eval::evaluate_text;
use tenalg::products::{phi_matrix, PhiMode};
use tenalg::SpaceSpec;

/// Exact-arithmetic tensor algebra calculator and invariant check-runner.
#[derive(Parser)]
#[command(name = "tenalg", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression against a space file and print its
    /// canonical form.
    Eval {
        /// Space specification file
        #[arg(long)]
        space: PathBuf,
        /// Expression, e.g. "e1 @ f1 + 1/2"
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run the randomized invariant suites and print a report.
    Check {
        #[arg(long)]
        space: PathBuf,
        /// Master seed; every suite derives its own stream from it
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Largest grade of randomly drawn words (at most 5)
        #[arg(long = "max-grade", default_value_t = 4)]
        max_grade: usize,
        /// Trials per suite
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Omit per-suite timings so reports compare byte-for-byte
        #[arg(long, default_value_t = false)]
        no_timing: bool,
    },
    /// Print the matrix of the phi map over the canonical graded basis,
    /// with a triangularity verdict.
    PhiMatrix {
        #[arg(long)]
        space: PathBuf,
        /// tensor | sym | asym
        #[arg(long)]
        mode: String,
        #[arg(long = "max-grade")]
        max_grade: usize,
    },
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn load_space(path: &PathBuf) -> Result<SpaceSpec, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    SpaceSpec::parse(&text).map_err(|e| e.to_string())
}

fn run() -> Result<(), (u8, String)> {
    let cli = Cli::parse();
    let usage = |message: String| (EXIT_USAGE, message);
    match cli.command {
        Command::Eval { space, expr } => {
            let spec = load_space(&space).map_err(usage)?;
            let printed = evaluate_text(&expr, &spec).map_err(|e| usage(e.to_string()))?;
            println!("{printed}");
            Ok(())
        }
        Command::Check {
            space,
            seed,
            max_grade,
            trials,
            no_timing,
        } => {
            let spec = load_space(&space).map_err(usage)?;
            if max_grade > 5 {
                return Err(usage(format!(
                    "--max-grade {max_grade} exceeds the randomized-suite cap of 5"
                )));
            }
            let cfg = CheckConfig {
                seed,
                max_grade,
                trials,
                mutation: None,
            };
            let report = run_checks(&spec, &cfg);
            println!("{}", report.text(!no_timing));
            if report.all_passed() {
                Ok(())
            } else {
                Err((EXIT_CHECK_FAILED, String::new()))
            }
        }
        Command::PhiMatrix {
            space,
            mode,
            max_grade,
        } => {
            let spec = load_space(&space).map_err(usage)?;
            let mode: PhiMode = mode.parse().map_err(usage)?;
            let matrix = phi_matrix(&spec, mode, max_grade).map_err(|e| usage(e.to_string()))?;
            println!("{}", matrix.text());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            if !message.is_empty() {
                eprintln!("error: {message}");
            }
            ExitCode::from(code)
        }
    }
}
