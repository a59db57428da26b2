//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rplink_core::diagram::{parse_pld, to_s3d, DiagramError, FormatError, SkeinTriple};
use rplink_core::invariants::InvariantError;
use rplink_core::{ProjectiveDiagram, Sign};
use serde::Serialize;
use thiserror::Error;

use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "rplink", version, about = "Twisted Alexander polynomials and torsion of links in RP^3")]
struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Homology, torsion class and generator images.
    Info { file: PathBuf },
    /// The simplified group presentation.
    Presentation { file: PathBuf },
    /// Twisted and untwisted Alexander polynomials.
    Alex { file: PathBuf },
    /// Torsion representative, normalized function and symmetry exponent.
    Nabla { file: PathBuf },
    /// Skein relation at a crossing, or for three given diagrams.
    Skein {
        #[arg(required_unless_present = "explicit", requires = "crossing")]
        file: Option<PathBuf>,
        #[arg(long)]
        crossing: Option<u32>,
        #[arg(long, num_args = 3, value_names = ["PLUS", "MINUS", "ZERO"], conflicts_with_all = ["file", "crossing"])]
        explicit: Option<Vec<PathBuf>>,
    },
    /// Cover product formula for a nontorsion link.
    Cover { file: PathBuf },
    /// Lift to the 3-sphere through the double cover.
    Lift {
        file: PathBuf,
        /// Write the `.s3d` file here instead of embedding it in the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
}

fn load(path: &Path) -> Result<ProjectiveDiagram, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: shown.clone(), source })?;
    parse_pld(&text).map_err(|source| CliError::Format { path: shown, source })
}

fn emit(out: &mut dyn Write, format: Format, value: &impl Serialize) -> Result<(), CliError> {
    let v = serde_json::to_value(value).expect("reports serialize");
    let s = match format {
        Format::Json => serde_json::to_string_pretty(&v).expect("reports serialize") + "\n",
        Format::Text => crate::text::render(&v),
    };
    out.write_all(s.as_bytes())?;
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let f = cli.format;
    match cli.command {
        Command::Info { file } => emit(out, f, &report::info(&load(&file)?)?)?,
        Command::Presentation { file } => emit(out, f, &report::presentation(&load(&file)?)?)?,
        Command::Alex { file } => emit(out, f, &report::alex(&load(&file)?)?)?,
        Command::Nabla { file } => emit(out, f, &report::nabla(&load(&file)?)?)?,
        Command::Skein { file, crossing, explicit } => {
            let (triple, id) = match (explicit, file, crossing) {
                (Some(paths), _, _) => {
                    let [plus, minus, zero] = [0, 1, 2].map(|k| load(&paths[k]));
                    (SkeinTriple::from_parts(plus?, minus?, zero?), None)
                }
                (None, Some(file), Some(id)) => {
                    // a negative crossing makes the input L₋; its flip is L₊
                    let d = load(&file)?;
                    let sign = d.crossing(id).ok_or(DiagramError::UnknownCrossing { id })?.sign;
                    let plus = if sign == Sign::Negative { d.flip_crossing(id)? } else { d };
                    (plus.skein_triple(id)?, Some((id, sign)))
                }
                _ => unreachable!("clap enforces a file with a crossing, or --explicit"),
            };
            let r = report::skein(&triple, id)?;
            emit(out, f, &r)?;
            if r.failed() {
                return Ok(EXIT_VERIFY);
            }
        }
        Command::Cover { file } => {
            let r = report::cover(&load(&file)?)?;
            emit(out, f, &r)?;
            if !r.holds {
                return Ok(EXIT_VERIFY);
            }
        }
        Command::Lift { file, out: path } => {
            let l = load(&file)?.lift()?;
            let shown = path.as_ref().map(|p| p.display().to_string());
            if let (Some(p), Some(s)) = (&path, &shown) {
                std::fs::write(p, to_s3d(&l.diagram)).map_err(|source| CliError::Write { path: s.clone(), source })?;
            }
            emit(out, f, &report::lift(&l, shown))?;
        }
    }
    Ok(EXIT_OK)
}

/// Runs one invocation; `args` includes the program name. Reports go to
/// `out`, one-line diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
        Err(e) => {
            // clap's first paragraph, folded onto one line
            let rendered = e.render().to_string();
            let words: Vec<&str> = rendered.lines().take_while(|l| !l.trim().is_empty()).flat_map(|l| l.split_whitespace()).collect();
            let _ = writeln!(err, "rplink: {}", words.join(" ").trim_start_matches("error: "));
            return EXIT_INVALID;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "rplink: {e}");
            EXIT_INVALID
        }
    }
}
