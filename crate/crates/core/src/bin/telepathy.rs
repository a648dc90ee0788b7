use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use telepathy::report::{classical_report, quantum_report, threshold_report};
use telepathy::rindler::UnruhModes;
use telepathy::sweep::{emit, OutputFormat, SweepConfig, DEFAULT_STEPS};
use telepathy::Error;

#[derive(Parser)]
#[command(
    name = "telepathy",
    version,
    about = "Magic Square game under the Unruh effect"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Modes {
    All,
    BobOnly,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive classical optimum
    Classical,
    /// Win probability at acceleration parameter r
    Quantum {
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
        /// Modes that undergo the Unruh transformation
        #[arg(long, value_enum, default_value = "all")]
        modes: Modes,
    },
    /// Win probability over a uniform grid of r
    Sweep {
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        r_min: f64,
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4, allow_negative_numbers = true)]
        r_max: f64,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Leave the closed-form column empty
        #[arg(long)]
        no_closed_form: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Acceleration at which p(r) reaches the classical bound
    Threshold {
        #[arg(long, default_value_t = 1e-9, allow_negative_numbers = true)]
        tol: f64,
    },
}

fn print(text: &str) -> Result<(), Error> {
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Classical => print(&classical_report()),
        Command::Quantum { r, modes } => {
            let modes = match modes {
                Modes::All => UnruhModes::All,
                Modes::BobOnly => UnruhModes::BobOnly,
            };
            print(&quantum_report(r, modes)?)
        }
        Command::Sweep {
            r_min,
            r_max,
            steps,
            format,
            no_closed_form,
            out,
        } => {
            let config = SweepConfig {
                r_min,
                r_max,
                steps,
                format: match format {
                    Format::Csv => OutputFormat::Csv,
                    Format::Json => OutputFormat::Json,
                },
                include_closed_form: !no_closed_form,
            };
            config.validate()?;
            match out {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(path)?);
                    emit(&config, &mut file)?;
                    file.flush()?;
                    Ok(())
                }
                None => emit(&config, io::stdout().lock()),
            }
        }
        Command::Threshold { tol } => print(&threshold_report(tol)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
