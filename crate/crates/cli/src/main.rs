//! `mfc`: sample, verify and integrate framed curves from a JSON config.

mod config;
mod error;
mod eval;
mod example;
mod flow;
mod table;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::table::{write_bytes, write_csv};

#[derive(Parser)]
#[command(name = "mfc", version, about = "Frames, curvatures and spinor flows of non-null framed curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Overrides {
    /// Run configuration (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Output file; defaults to the config's `outputs` entry, then stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    step: Option<f64>,
    #[arg(long)]
    theta0: Option<f64>,
}

impl Overrides {
    fn load(&self) -> Result<RunConfig, CliError> {
        let mut cfg = RunConfig::load(&self.config)?;
        if let Some(t) = self.tol {
            cfg.tol = t;
        }
        if let Some(h) = self.step {
            cfg.step = h;
        }
        if let Some(t) = self.theta0 {
            cfg.theta0 = t;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate frame, curvatures and adapted data on the sample grid.
    Eval(Overrides),
    /// Run the framed-curve, frame-equation and spinor checks.
    Verify(Overrides),
    /// Integrate a single spinor equation along the curve.
    SpinorFlow {
        #[command(flatten)]
        args: Overrides,
        /// Equation kind, e.g. spacelike-general or timelike-frenet.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Write a built-in example's config, tables and report.
    Example {
        /// spacelike1 or timelike1
        name: String,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Eval(o) => {
            let cfg = o.load()?;
            let rows = eval::run(&cfg)?;
            let out = o.out.or(cfg.outputs.eval);
            write_csv(out.as_deref(), &eval::HEADER, &rows)
        }
        Command::Verify(o) => {
            let cfg = o.load()?;
            let report = verify::run(&cfg)?;
            let text = report.render(cfg.tol);
            print!("{text}");
            if let Some(p) = o.out.or(cfg.outputs.report) {
                write_bytes(Some(&p), text.as_bytes())?;
            }
            match report.first_failure(cfg.tol) {
                None => Ok(()),
                Some(name) => Err(CliError::Verify(name.to_string())),
            }
        }
        Command::SpinorFlow { args, kind } => {
            let cfg = args.load()?;
            let kind = flow::parse_kind(kind.as_deref(), &cfg)?;
            let rows = flow::run(&cfg, kind)?;
            let out = args.out.or(cfg.outputs.flow);
            write_csv(out.as_deref(), &flow::HEADER, &rows)
        }
        Command::Example { name, out } => match example::run(&name, &out)? {
            None => Ok(()),
            Some(failed) => Err(CliError::Verify(failed)),
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
