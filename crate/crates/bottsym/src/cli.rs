//! Command-line front end.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 unmet precondition
//! (non-symplectic input, size limit), 4 theorem mismatch.

use std::io::{self, Read, Write};
use std::path::PathBuf;

use bottsym_core::BottMatrix;
use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::census::{self, CensusError, CensusOptions};
use crate::document::{to_inline, MatrixDocument, ParseError};
use crate::report::{self, ReportDocument, ReportError};

#[derive(Debug, Parser)]
#[command(
    name = "bottsym",
    version,
    about = "Symplectic and Kähler real Bott manifolds"
)]
pub struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct MatrixInput {
    /// Matrix file (`-` for stdin).
    #[arg(required_unless_present = "matrix", conflicts_with = "matrix")]
    pub file: Option<PathBuf>,
    /// Inline matrix, rows separated by `;`, e.g. "0110;0011;0000;0000".
    #[arg(long)]
    pub matrix: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orientability, symplecticness, Kähler-ness, flux rank and a pairing.
    Check(MatrixInput),
    /// Betti numbers and Poincaré polynomial.
    Betti {
        #[command(flatten)]
        input: MatrixInput,
        /// List the invariant monomial basis in each degree.
        #[arg(long)]
        basis: bool,
    },
    /// The symplectic form built from the column pairing.
    Omega(MatrixInput),
    /// Complex coordinates and the action of each generator on them.
    Kahler(MatrixInput),
    /// Flux-group rank, Darboux basis and generator classes.
    Flux(MatrixInput),
    /// Count orientable and symplectic matrices of size N.
    Census {
        n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Also run the cohomological oracle on every matrix.
        #[arg(long)]
        oracle: bool,
    },
    /// Cross-check the pairing criterion against both cohomological oracles.
    Verify { n: usize },
    /// List the symplectic matrices of size N.
    List {
        n: usize,
        /// Skip the zero matrix.
        #[arg(long)]
        nonzero: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error("{0}")]
    Output(#[from] io::Error),
    #[error("criterion and oracle disagree on {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } | CliError::Output(_) => 2,
            CliError::Report(ReportError::NotSymplectic(_)) => 3,
            CliError::Report(ReportError::Core(_)) => 3,
            CliError::Census(CensusError::LimitExceeded { .. }) => 3,
            CliError::Census(CensusError::Core(_)) => 3,
            CliError::Census(CensusError::Mismatch(_)) | CliError::Mismatch(_) => 4,
        }
    }
}

fn load(input: &MatrixInput) -> Result<BottMatrix, CliError> {
    if let Some(inline) = &input.matrix {
        return Ok(MatrixDocument::parse_inline(inline)?.matrix);
    }
    let path = input
        .file
        .as_ref()
        .expect("clap requires a file or --matrix");
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?
    };
    Ok(MatrixDocument::parse(&text)?.matrix)
}

fn emit(out: &mut dyn Write, doc: &ReportDocument, json: bool) -> Result<(), CliError> {
    if json {
        writeln!(out, "{}", doc.to_json())?;
    } else {
        write!(out, "{}", doc.to_text())?;
    }
    Ok(())
}

/// Runs one command, writing the report to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let doc = match &cli.command {
        Command::Check(input) => report::check(&load(input)?),
        Command::Betti { input, basis } => report::betti_report(&load(input)?, *basis),
        Command::Omega(input) => report::omega(&load(input)?)?,
        Command::Kahler(input) => report::kahler(&load(input)?)?,
        Command::Flux(input) => report::flux(&load(input)?)?,
        Command::Census { n, workers, oracle } => {
            let options = CensusOptions {
                use_oracle: *oracle,
                workers: *workers,
                limit: None,
            };
            let result = census::census(*n, &options)?;
            writeln!(err, "census of size {n} took {:.3?}", result.elapsed)?;
            emit(out, &report::census(&result), cli.json)?;
            if let Some(first) = result.counts.mismatches.first() {
                writeln!(err, "counterexample {}", to_inline(first))?;
                return Err(CliError::Mismatch(to_inline(first)));
            }
            return Ok(());
        }
        Command::Verify { n } => match census::cross_validate(*n) {
            Ok(v) => report::verify(&v),
            Err(CensusError::Mismatch(m)) => {
                writeln!(
                    err,
                    "counterexample {}: symplectic={} matching_oracle={} randomized_oracle={} orientable={}",
                    to_inline(&m.matrix),
                    m.symplectic,
                    m.matching_oracle,
                    m.randomized_oracle,
                    m.orientable
                )?;
                return Err(CensusError::Mismatch(m).into());
            }
            Err(e) => return Err(e.into()),
        },
        Command::List { n, nonzero } => {
            let matrices = census::list_symplectic(*n, *nonzero)?;
            report::list(*n, *nonzero, &matrices)
        }
    };
    emit(out, &doc, cli.json)
}
