//! `fourier-adder`: run the QFT adders, verification sweeps and gate-count
//! tables from the command line.
//!
//! Exit codes: 0 success, 1 verification failure or bad input data, 2 usage
//! error.

mod render;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fourier_adder::json::{matrix_to_json, state_from_json, state_to_json};
use fourier_adder::metrics::complexity_table;
use fourier_adder::oracle::{circuit_to_matrix, DEFAULT_TOLERANCE};
use fourier_adder::{
    const_adder_circuit, draper_adder_circuit, qft_circuit, ConstAdderSpec, DraperAdderSpec,
    StateVector,
};

const TOLERANCE_VAR: &str = "FOURIER_ADDER_TOL";

#[derive(Parser)]
#[command(
    name = "fourier-adder",
    version,
    about = "QFT-based quantum adders on a statevector simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Add a classical constant to an N-qubit register.
    Add {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=26))]
        n: u32,
        #[arg(long = "const", allow_negative_numbers = true)]
        constant: i64,
        /// Basis value, or path to a state JSON file.
        #[arg(long)]
        input: String,
        /// Emit the output state as JSON.
        #[arg(long, conflicts_with = "table")]
        json: bool,
        /// Print nonzero amplitudes as a table (default).
        #[arg(long)]
        table: bool,
    },
    /// Draper register-by-register addition, |a, b> -> |a, a+b mod 2^N>.
    AddReg {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=13))]
        n: u32,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run verification sweeps against the dense oracles.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=10))]
        n_max: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit check reports as a JSON array.
        #[arg(long)]
        json: bool,
    },
    /// Operation-count table for both adders.
    Counts {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=31))]
        n_max: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Dump the QFT circuit (or its matrix) as JSON.
    QftDump {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=6))]
        n: u32,
        #[arg(long)]
        matrix: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Const,
    Draper,
    Equivalence,
    Modularity,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

enum Failure {
    Usage(String),
    Data(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure
where
    E: Into<fourier_adder::Error>,
{
    fn from(e: E) -> Self {
        Failure::Data(e.to_string())
    }
}

fn tolerance() -> Result<f64, Failure> {
    match std::env::var(TOLERANCE_VAR) {
        Err(_) => Ok(DEFAULT_TOLERANCE),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => Err(Failure::Usage(format!(
                "{TOLERANCE_VAR} must be a positive number, got {raw:?}"
            ))),
        },
    }
}

fn read_input(n: usize, input: &str) -> Result<StateVector, Failure> {
    if let Ok(value) = input.parse::<u64>() {
        return Ok(StateVector::basis(n, value)?);
    }
    let path = PathBuf::from(input);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Failure::Data(format!("cannot read {}: {e}", path.display())))?;
    let state = state_from_json(&text)
        .map_err(|e| Failure::Data(format!("invalid state file {}: {e}", path.display())))?;
    if state.n_qubits() != n {
        return Err(Failure::Data(format!(
            "state file {} holds {} qubits, --n is {n}",
            path.display(),
            state.n_qubits()
        )));
    }
    Ok(state)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Add {
            n,
            constant,
            input,
            json,
            table: _,
        } => {
            let n = n as usize;
            let mut state = read_input(n, &input)?;
            const_adder_circuit(&ConstAdderSpec::new(n, constant)?).run(&mut state)?;
            if json {
                println!("{}", state_to_json(&state));
            } else {
                print!("{}", render::amplitude_table(&state));
            }
        }
        Command::AddReg { n, a, b, json } => {
            let spec = DraperAdderSpec::new(n as usize)?;
            let mut state = StateVector::basis(spec.total_qubits(), spec.encode(a, b)?)?;
            draper_adder_circuit(&spec).run(&mut state)?;
            if json {
                println!("{}", state_to_json(&state));
            } else {
                print!("{}", render::register_pair(&spec, &state, tolerance()?));
            }
        }
        Command::Verify {
            suite,
            n_max,
            seed,
            json,
        } => {
            let reports = verify::run(suite, n_max as usize, seed, tolerance()?)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                );
            } else {
                for r in &reports {
                    println!("{}", render::report_line(r));
                }
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            if !json {
                println!("{} checks, {failed} failed", reports.len());
            }
            if failed > 0 {
                return Err(Failure::Verification);
            }
        }
        Command::Counts { n_max, format } => {
            let rows = complexity_table(n_max as usize)?;
            match format {
                Format::Csv => {
                    println!("N,T_const,T_draper_inner,swaps");
                    for r in rows {
                        println!("{},{},{},{}", r.n, r.t_const, r.t_draper_inner, r.qft_swaps);
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&rows).expect("rows serialize")
                ),
            }
        }
        Command::QftDump { n, matrix } => {
            let circuit = qft_circuit(n as usize)?;
            if matrix {
                println!("{}", matrix_to_json(&circuit_to_matrix(&circuit)?));
            } else {
                println!(
                    "{}",
                    serde_json::to_string(&circuit).expect("circuit serializes")
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}
