//! `stretch`: experiment runner for stretch paths on the punctured torus and the
//! four-punctured sphere.
//!
//! Every command writes a CSV table (to `--out`, or stdout) and a summary (to stdout when
//! `--out` is given, otherwise stderr; JSON with `--json`). Exit status: 0 when the
//! command's checks pass, 1 when they fail or the computation leaves floating-point range,
//! 2 on invalid configuration.

mod commands;
mod config;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use stretch_core::slopes::Slope;

use crate::commands::{Failure, Report};
use crate::config::RunConfig;

#[derive(Parser, Debug)]
#[command(name = "stretch", version, about = "Stretch-path experiments on shear-coordinate surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonArgs,
}

/// Flags shared by every command. Unset times and catalog sizes take per-command defaults.
#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// Parameter of the four-punctured-sphere example, in (0, 0.5).
    #[arg(long, global = true, default_value_t = 1e-3)]
    eps: f64,
    #[arg(long, global = true, allow_negative_numbers = true)]
    tmin: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    tmax: Option<f64>,
    #[arg(long, global = true, default_value_t = 0.05)]
    tstep: f64,
    /// Largest slope denominator enumerated.
    #[arg(long, global = true)]
    maxq: Option<u32>,
    /// Short-curve threshold (default 2 asinh 1).
    #[arg(long = "epsB", global = true)]
    eps_b: Option<f64>,
    /// CSV destination (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit the summary as JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Core-curve length along the annulus example against the model `εe^t + e^{-e^t}`.
    Example28 {
        /// Additive window on the argmin time.
        #[arg(long, default_value_t = 2.0)]
        window: f64,
        /// Multiplicative window on lengths and twisting.
        #[arg(long, default_value_t = 16.0)]
        factor: f64,
    },
    /// Length-ratio lower bounds along stretch paths of random tori never exceed the time.
    StretchAudit {
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Length-ratio lower bound between the path points at `--tmin` and `--tmax`.
    Dist {
        #[arg(long, value_enum, default_value_t = commands::SurfaceChoice::S04)]
        surface: commands::SurfaceChoice,
    },
    /// Systoles along the annulus example, with quasi-geodesic and Lipschitz audits.
    ShadowAudit,
    /// Farey distance against the intersection-number bound for all slope pairs.
    Farey,
    /// Horizontality certificate on the annulus example, and its persistence to `--tmax`.
    Horizontal {
        /// Slope of the closed leaf.
        #[arg(long, default_value = "1/0")]
        leaf: Slope,
        /// Slope of the curve to certify (defaults to the leaf).
        #[arg(long)]
        alpha: Option<Slope>,
        /// Slope of the short anchor curve.
        #[arg(long, default_value = "0/1")]
        gamma: Slope,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long = "L", default_value_t = 0.5)]
        l: f64,
        /// Periods of the leaf searched.
        #[arg(long, default_value_t = 4)]
        periods: u32,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Example28 { .. } => "example28",
            Command::StretchAudit { .. } => "stretch-audit",
            Command::Dist { .. } => "dist",
            Command::ShadowAudit => "shadow-audit",
            Command::Farey => "farey",
            Command::Horizontal { .. } => "horizontal",
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let cfg = RunConfig::resolve(cli.command.name(), &cli.common)?;
    match &cli.command {
        Command::Example28 { window, factor } => commands::example28(&cfg, *window, *factor),
        Command::StretchAudit { samples } => commands::stretch_audit(&cfg, *samples),
        Command::Dist { surface } => commands::dist(&cfg, *surface),
        Command::ShadowAudit => commands::shadow_audit(&cfg),
        Command::Farey => commands::farey(&cfg),
        Command::Horizontal { leaf, alpha, gamma, n, l, periods } => {
            let opts = commands::HorizontalOpts {
                leaf: *leaf,
                alpha: alpha.unwrap_or(*leaf),
                gamma: *gamma,
                n: *n,
                l: *l,
                periods: *periods,
            };
            commands::horizontal(&cfg, &opts)
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> std::io::Result<()> {
    let summary = if cli.common.json {
        serde_json::to_string_pretty(&report.summary).expect("summary serializes") + "\n"
    } else {
        commands::summary_text(&report.summary)
    };
    match &cli.common.out {
        Some(path) => {
            fs::write(path, &report.csv)?;
            std::io::stdout().write_all(summary.as_bytes())
        }
        None => {
            std::io::stdout().write_all(report.csv.as_bytes())?;
            std::io::stderr().write_all(summary.as_bytes())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if let Err(e) = emit(&cli, &report) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
