use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use weilzeta::commands::{self, Format};
use weilzeta::io::{parse_rational, read_gram};
use weilzeta::{exit, parallel, suites, CliError};
use weilzeta_core::Weight;

/// Exact Fourier coefficients of (mock) Eisenstein series for the Weil
/// representation of an even lattice.
///
/// Lattices are read from JSON files of the form {"gram": [[2, 1], [1, 2]]}.
/// Rationals are written "p/q". Exit codes: 0 ok, 1 verification mismatch,
/// 2 malformed input, 3 invalid lattice, 4 weight/signature parity violation, 5 internal failure.
#[derive(Parser)]
#[command(name = "weilzeta", version)]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signature, discriminant group, level and coset table.
    Discform {
        gram: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Holomorphic part E_k up to exponent prec.
    Eisenstein {
        gram: PathBuf,
        #[arg(short, long)]
        weight: String,
        #[arg(short, long)]
        prec: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Theta series of a negative definite lattice up to exponent prec.
    Theta {
        gram: PathBuf,
        #[arg(short, long)]
        prec: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Weight 1 / 2 constants or the weight 3/2 shadow (exponents down to -prec).
    Corrections {
        gram: PathBuf,
        #[arg(short, long)]
        weight: String,
        #[arg(short, long, default_value = "1")]
        prec: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Local Euler factor L_p(n, gamma, s) as a rational function of t = p^-s.
    Localfactor {
        gram: PathBuf,
        #[arg(long)]
        p: u64,
        /// Comma separated coordinates of gamma in the dual basis (default 0).
        #[arg(long)]
        gamma: Option<String>,
        #[arg(short, long, default_value = "0")]
        n: String,
    },
    /// Hurwitz class numbers H(n).
    Hurwitz {
        #[arg(required = true)]
        n: Vec<String>,
    },
    /// Run a verification suite; exit 1 on the first mismatch.
    Verify { suite: String },
}

fn weight(s: &str) -> Result<Weight, CliError> {
    Weight::parse(s).map_err(|_| CliError::usage(format!("weight must be p/q with 2k integral and k > 0, got {s:?}")))
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Discform { gram, format } => commands::discform(&read_gram(&gram)?, format),
        Command::Eisenstein { gram, weight: k, prec, format } => {
            let l = read_gram(&gram)?;
            commands::eisenstein(&l, &weight(&k)?, &parse_rational("prec", &prec)?, format)
        }
        Command::Theta { gram, prec, format } => {
            commands::theta(&read_gram(&gram)?, &parse_rational("prec", &prec)?, format)
        }
        Command::Corrections { gram, weight: k, prec, format } => {
            let l = read_gram(&gram)?;
            commands::corrections(&l, &weight(&k)?, &parse_rational("prec", &prec)?, format)
        }
        Command::Localfactor { gram, p, gamma, n } => {
            let l = read_gram(&gram)?;
            let gamma = match gamma {
                Some(g) => g.split(',').map(|x| parse_rational("gamma", x)).collect::<Result<Vec<_>, _>>()?,
                None => vec![parse_rational("gamma", "0")?; l.dim()],
            };
            commands::localfactor(&l, &gamma, &parse_rational("n", &n)?, p)
        }
        Command::Hurwitz { n } => {
            let ns = n.iter().map(|x| parse_rational("n", x)).collect::<Result<Vec<_>, _>>()?;
            Ok(commands::hurwitz_values(&ns))
        }
        Command::Verify { suite } => {
            let run = suites::find(&suite).ok_or_else(|| {
                CliError::usage(format!("unknown suite {suite:?}; available: {}", suites::names().join(", ")))
            })?;
            let checked = run()?;
            Ok(format!("{suite}: {checked} exact comparisons passed\n"))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = parallel::pool().and_then(|pool| pool.install(|| run(cli.command))).and_then(|out| match &cli.output {
        Some(path) => fs::write(path, out).map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{out}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::from(exit::OK as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
