//! `surfineq` command-line front end.

mod commands;
mod output;
mod surface;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use surfineq::io::SweepSpec;
use surfineq::Error;

use commands::Suite;
use output::Output;
use surface::{read, SurfaceArgs};

#[derive(Parser)]
#[command(name = "surfineq", version, about = "Curvature inequalities for surfaces of revolution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Directory for `<command>.csv`, `<command>.json` and curve files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Area, volume, curvature integrals, diameter and ratios of one surface.
    Quantities(SurfaceArgs),
    /// Check inequality suites on one surface or a sweep.
    Verify {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Sweep spec (JSON); replaces the single-surface flags.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, value_delimiter = ',', default_values_t = [1.0, 1.5, 2.0, 3.0])]
        p: Vec<f64>,
    },
    /// Fold and sort the angle function and compare the three surfaces.
    Rearrange(SurfaceArgs),
    /// Slicing and strip-bound constants.
    Constants {
        #[arg(long, value_delimiter = ',', default_values_t = [1.0, 2.0])]
        p: Vec<f64>,
    },
    /// Isoperimetric-ratio rate under mean curvature flow.
    Flow {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value_t = 1e-5)]
        tau: f64,
    },
    /// Closed curve attaining the strip energy bound.
    Extremal {
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long, default_value_t = 4096)]
        n: usize,
    },
    /// Quantities over a family sweep.
    Sweep {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = [1.0, 1.5, 2.0, 3.0])]
        p: Vec<f64>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Quantities(_) => "quantities",
            Command::Verify { .. } => "verify",
            Command::Rearrange(_) => "rearrange",
            Command::Constants { .. } => "constants",
            Command::Flow { .. } => "flow",
            Command::Extremal { .. } => "extremal",
            Command::Sweep { .. } => "sweep",
        }
    }

    fn run(&self) -> surfineq::Result<Output> {
        match self {
            Command::Quantities(s) => commands::quantities(&s.build()?),
            Command::Verify { surface, spec: Some(path), suite, p } => {
                if surface.family.is_some() || surface.surface.is_some() || surface.curve.is_some() {
                    return Err(Error::Parse("--spec replaces the single-surface flags".into()));
                }
                commands::verify_sweep(&SweepSpec::parse(&read(path)?)?, &[*suite], p)
            }
            Command::Verify { surface, spec: None, suite, p } => commands::verify(&[surface.build()?], &[*suite], p),
            Command::Rearrange(s) => commands::rearrange(&s.build()?),
            Command::Constants { p } => commands::constants_table(p),
            Command::Flow { surface, tau } => commands::flow(&surface.build()?, *tau),
            Command::Extremal { p, n } => commands::extremal(*p, *n),
            Command::Sweep { spec, p } => commands::sweep(&SweepSpec::parse(&read(spec)?)?, p),
        }
    }
}

/// Verification failures exit with 1, bad input with 2.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification { .. } | Error::Accuracy { .. } => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let out = match cli.command.run() {
        Ok(o) => o,
        Err(e) => {
            eprintln!("surfineq {name}: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    print!("{}", out.csv);
    if let Some(dir) = &cli.out {
        if let Err(e) = output::write(dir, name, &out) {
            eprintln!("surfineq {name}: {e}");
            return ExitCode::from(2);
        }
    }
    if out.failures.is_empty() {
        return ExitCode::SUCCESS;
    }
    for f in &out.failures {
        eprintln!("FAILED {f}");
    }
    ExitCode::from(1)
}
