use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dirant_cli::{cmd_experiment, cmd_orient, cmd_plot, cmd_verify, cmd_witness, WitnessKind, EXIT_INPUT};

/// Orient directional antennas so the communication graph is strongly connected.
#[derive(Parser)]
#[command(name = "dirant", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an orientation for a point file.
    Orient {
        #[arg(long)]
        input: PathBuf,
        /// Antenna aperture in degrees: 90 or 180.
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check strong connectivity of an orientation.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        orientation: PathBuf,
        /// Defaults to the radius recorded in the orientation file.
        #[arg(long)]
        radius: Option<f64>,
    },
    /// Write a lower-bound point set.
    Witness {
        #[arg(long, value_enum)]
        kind: WitnessKind,
        /// Point count for `collinear`, arm length for `tripod180`.
        #[arg(long)]
        param: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render an instance as SVG.
    Plot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        orientation: Option<PathBuf>,
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Orient and verify a batch of random instances.
    Experiment {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Orient { input, alpha, out: path } => cmd_orient(&input, alpha, &path, &mut out),
        Command::Verify {
            input,
            orientation,
            radius,
        } => cmd_verify(&input, &orientation, radius, &mut out),
        Command::Witness { kind, param, out: path } => cmd_witness(kind, param, &path, &mut out),
        Command::Plot {
            input,
            orientation,
            radius,
            out: path,
        } => cmd_plot(&input, orientation.as_deref(), radius, &path, &mut out),
        Command::Experiment { alpha, n, trials, seed } => cmd_experiment(alpha, n, trials, seed, &mut out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
