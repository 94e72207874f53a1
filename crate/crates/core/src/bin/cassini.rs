use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cassini::ball::Radius;
use cassini::comparisons::{Endpoint, TheoremId};
use cassini::harness::{self, exit, BallFormat, RunConfig, Suite, DEFAULT_SAMPLES, DEFAULT_SEED};
use cassini::Result;

#[derive(Parser)]
#[command(
    name = "cassini",
    version,
    about = "Cassinian-type metrics on punctured spaces: verification and figures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write reports.jsonl and summary.txt.
    Verify {
        /// Suites to run (repeatable, default all).
        #[arg(long = "suite", value_name = "NAME")]
        suites: Vec<Suite>,
        #[arg(long, env = "CASSINI_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value = "cassini-report")]
        out: PathBuf,
        /// Tolerance override such as `density=1e-3` (repeatable).
        #[arg(long = "tol", value_name = "KEY=VALUE")]
        tolerances: Vec<String>,
    },
    /// Print the boundary of the ball of radius R centred at e1 in R^2 \ {0}.
    Ball {
        /// Radius, e.g. `0.9`, `log3`, `log8.8`.
        #[arg(long = "r", allow_hyphen_values = true)]
        radius: String,
        #[arg(long = "n", default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value = "csv")]
        format: BallFormat,
    },
    /// Write the four-ball overlay for radii log 3, log 5, log 7, log 8.8.
    Figure1 {
        #[arg(long, default_value = "figure1.svg")]
        out: PathBuf,
    },
    /// Ratio table along a sharpness family and its extrapolated limit.
    Sharpness {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long)]
        endpoint: Endpoint,
        #[arg(long, default_value_t = 1e-6)]
        tmin: f64,
    },
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Verify {
            suites,
            seed,
            samples,
            dim,
            out,
            tolerances,
        } => {
            let mut cfg = RunConfig {
                seed,
                dim,
                samples,
                output_dir: out,
                ..RunConfig::default()
            };
            for t in &tolerances {
                cfg.tolerances.apply(t)?;
            }
            let suites = if suites.is_empty() { Suite::ALL.to_vec() } else { suites };
            let outcome = harness::cmd_verify(&cfg, &suites)?;
            print!("{}", outcome.summary_text());
            Ok(outcome.exit_code)
        }
        Command::Ball {
            radius,
            samples,
            format,
        } => {
            let radius: Radius = radius.parse()?;
            let text = harness::cmd_ball(radius, samples, format)?;
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(exit::SUCCESS)
        }
        Command::Figure1 { out } => {
            harness::cmd_figure1(&out)?;
            println!("wrote {}", out.display());
            Ok(exit::SUCCESS)
        }
        Command::Sharpness {
            theorem,
            endpoint,
            tmin,
        } => {
            let result = harness::cmd_sharpness(theorem, endpoint, tmin)?;
            std::io::stdout().write_all(result.to_csv().as_bytes())?;
            Ok(result.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit::ERROR
        }
    };
    ExitCode::from(code as u8)
}
