//! Thin command-line front end over the library.
//!
//! Exit codes: 0 success, 1 usage or parse errors, 2 validation errors,
//! 3 basis verification mismatch.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use mwgb::driver::{self, Strategy};
use mwgb::grading::MDeg;
use mwgb::system::SystemFile;
use mwgb::Error;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "mwgb",
    about = "Truncated Gröbner bases for weighted homogeneous systems",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a truncated Gröbner basis and print it with run statistics.
    Gb {
        file: PathBuf,
        #[arg(long, value_parser = parse_strategy)]
        strategy: Strategy,
        /// First-row degree bound; falls back to the file's dmax line.
        #[arg(long)]
        dmax: Option<i64>,
        /// Cap on worker threads for parallel batches.
        #[arg(long)]
        threads: Option<usize>,
        /// Cross-check the truncated leading monomials against a Buchberger
        /// computation (small inputs only).
        #[arg(long)]
        verify: bool,
        /// Also write the statistics as key=value lines to this path.
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Series and regularity reports.
    Analyze {
        file: PathBuf,
        #[command(subcommand)]
        kind: AnalyzeKind,
    },
    /// Emit a seeded random system for the weights of a template file.
    Random {
        #[arg(long = "weights-file")]
        weights_file: PathBuf,
        /// Generator degrees: coordinates comma-separated, generators
        /// semicolon-separated, e.g. "10,5;10,5".
        #[arg(long)]
        degrees: String,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum AnalyzeKind {
    /// Hilbert series tables: algebra, predictions, and dimension counts.
    Hilbert {
        #[arg(long)]
        bound: i64,
    },
    /// Regularity classification via multiplication-map ranks.
    Classify {
        #[arg(long)]
        bound: i64,
    },
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 1,
        Error::VerifyMismatch { .. } => 3,
        _ => 2,
    }
}

fn load(path: &Path) -> Result<SystemFile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    SystemFile::parse(&text)
}

fn parse_degrees(text: &str, k: usize) -> Result<Vec<MDeg>, Error> {
    let mut out = Vec::new();
    for part in text.split(';') {
        let coords: Vec<i64> = part
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::Validation(format!("invalid degree coordinate '{t}'")))
            })
            .collect::<Result<_, _>>()?;
        if coords.len() != k {
            return Err(Error::Validation(format!(
                "degree '{part}' has {} coordinates, expected {k}",
                coords.len()
            )));
        }
        out.push(MDeg::new(coords));
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.cmd {
        Cmd::Gb {
            file,
            strategy,
            dmax,
            threads,
            verify,
            stats,
        } => {
            let sys = load(&file)?;
            let out = driver::compute_gb(&sys, strategy, dmax, threads, verify)?;
            print!("{}", out.basis_text);
            println!();
            println!("{}", out.report.table());
            println!();
            print!("{}", out.report.kv_lines());
            if let Some(path) = stats {
                std::fs::write(&path, out.report.kv_lines()).map_err(|e| {
                    Error::Validation(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            Ok(())
        }
        Cmd::Analyze { file, kind } => {
            let sys = load(&file)?;
            match kind {
                AnalyzeKind::Hilbert { bound } => {
                    print!("{}", driver::analyze_hilbert(&sys, bound)?);
                }
                AnalyzeKind::Classify { bound } => {
                    let (_, text) = driver::analyze_classify(&sys, bound)?;
                    print!("{text}");
                }
            }
            Ok(())
        }
        Cmd::Random {
            weights_file,
            degrees,
            seed,
        } => {
            let template = load(&weights_file)?;
            let degrees = parse_degrees(&degrees, template.k())?;
            let generated = driver::generate_random(&template, &degrees, seed)?;
            print!("{}", generated.emit());
            Ok(())
        }
    }
}
