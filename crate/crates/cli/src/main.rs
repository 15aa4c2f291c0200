mod compute;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gkmin::klpoly::DEFAULT_MAX_ENTRIES;
use gkmin::{Error, KlOracle};

use crate::compute::Object;
use crate::verify::Suite;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

/// Exact computations and identity checks for minimal-GK-dimension representations of GL_n(C).
#[derive(Parser)]
#[command(name = "gkmin", version)]
struct Cli {
    /// Largest degree n for which Kazhdan-Lusztig polynomials are computed.
    #[arg(long, global = true, env = "GKMIN_ORACLE_MAX_N", default_value_t = gkmin::klpoly::DEFAULT_MAX_N)]
    oracle_max_n: usize,

    /// Output format; csv is available for reports, matrices and tables only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites for one degree n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Seed for the randomized weight samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print one object as JSON.
    Compute {
        #[command(subcommand)]
        object: Object,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let oracle = KlOracle::new(cli.oracle_max_n, DEFAULT_MAX_ENTRIES);
    let result = match cli.command {
        Command::Verify { n, suite, seed } => {
            if n < 2 {
                eprintln!("error: verify needs --n >= 2, got {n}");
                return ExitCode::from(EXIT_USAGE);
            }
            let report = verify::run(n, suite, seed, &oracle);
            let text = match cli.format {
                Format::Json => format!("{}\n", report.to_json()),
                Format::Csv => report.to_csv(),
            };
            if let Err(e) = emit(&cli.out, &text) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            return ExitCode::from(report.exit_code());
        }
        Command::Compute { object } => compute::run(&object, &oracle, cli.format),
    };
    match result {
        Ok(text) => match emit(&cli.out, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_USAGE)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}

impl verify::Report {
    fn exit_code(&self) -> u8 {
        if self.has_resource_error() {
            EXIT_RESOURCE
        } else if self.all_passed() {
            0
        } else {
            EXIT_FAIL
        }
    }
}
