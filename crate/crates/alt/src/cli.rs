//! The `alt` command line.

use std::fs::File;
use std::io::Write;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use alt_core::content::cloud_frequencies;
use alt_core::{Lexicon, Profile, ReadabilityReport, ReportOptions};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::input::{load_lexicon, read_text, LexiconPaths};
use crate::{json, server, tables, text, AppError};

/// Readability analysis for Portuguese text.
#[derive(Debug, Parser)]
#[command(name = "alt", version, about)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze a document (stdin when no file is given).
    Analyze(AnalyzeArgs),
    /// Fit `gl = c1 + c2 x + c3 y` to a CSV sample with columns x,y,gl.
    Calibrate(CalibrateArgs),
    /// Correlate paired indices from a CSV with columns id,metric,alt,ref.
    Compare(CompareArgs),
    /// Word-cloud frequencies of a document.
    Cloud(CloudArgs),
    /// Run the HTTP service.
    Serve(ServeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Adapted,
    Original,
}

impl From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Self {
        match p {
            ProfileArg::Adapted => Profile::AdaptedPt,
            ProfileArg::Original => Profile::Original,
        }
    }
}

#[derive(Debug, Args)]
struct LexiconArgs {
    /// Frequency bank, one token per line in rank order.
    #[arg(long, env = "ALT_WORDBANK", value_name = "PATH")]
    wordbank: Option<PathBuf>,
    /// Stopword list for the word cloud.
    #[arg(long, env = "ALT_STOPWORDS", value_name = "PATH")]
    stopwords: Option<PathBuf>,
}

impl LexiconArgs {
    fn load(&self) -> Result<Lexicon, AppError> {
        load_lexicon(&LexiconPaths {
            wordbank: self.wordbank.clone(),
            stopwords: self.stopwords.clone(),
        })
    }
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Input file, `-` for stdin.
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Comma-separated words to count.
    #[arg(long, value_delimiter = ',')]
    keywords: Vec<String>,
    /// Word-cloud size.
    #[arg(long, default_value_t = ReportOptions::DEFAULT_TOP_N as u64, value_parser = clap::value_parser!(u64).range(1..))]
    topn: u64,
    /// Coefficients for the headline result; `original` also adds the
    /// original indices to the report.
    #[arg(long, value_enum, default_value_t = ProfileArg::Adapted)]
    profile: ProfileArg,
    #[command(flatten)]
    lexicon: LexiconArgs,
}

#[derive(Debug, Args)]
struct CalibrateArgs {
    /// CSV file, `-` for stdin.
    csv: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the residuals, one per line.
    #[arg(long, value_name = "PATH")]
    residuals: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// CSV file, `-` for stdin.
    csv: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct CloudArgs {
    /// Input file, `-` for stdin.
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = ReportOptions::DEFAULT_TOP_N as u64, value_parser = clap::value_parser!(u64).range(1..))]
    topn: u64,
    #[command(flatten)]
    lexicon: LexiconArgs,
}

#[derive(Debug, Args)]
struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    port: u16,
    /// Address to bind.
    #[arg(long, default_value = "127.0.0.1")]
    host: IpAddr,
    /// Allowed browser origin; any origin when omitted.
    #[arg(long, value_name = "ORIGIN")]
    cors_origin: Option<String>,
    #[command(flatten)]
    lexicon: LexiconArgs,
}

fn emit(out: &mut dyn Write, s: &str) -> Result<(), AppError> {
    out.write_all(s.as_bytes())
        .and_then(|_| {
            if s.ends_with('\n') {
                Ok(())
            } else {
                out.write_all(b"\n")
            }
        })
        .map_err(|e| AppError::io("-", e))
}

fn open_csv(path: &Path) -> Result<Box<dyn std::io::Read>, AppError> {
    if path == Path::new("-") {
        Ok(Box::new(std::io::stdin()))
    } else {
        Ok(Box::new(
            File::open(path).map_err(|e| AppError::io(path, e))?,
        ))
    }
}

/// Parses the process arguments and runs the chosen command.
pub fn run() -> Result<(), AppError> {
    run_with(Cli::parse(), &mut std::io::stdout().lock())
}

/// Parses `args` (program name first) and runs the command, writing its
/// output to `out`. Argument errors come back as [`clap::Error`].
pub fn run_args<I, T>(args: I, out: &mut dyn Write) -> Result<Result<(), AppError>, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Ok(run_with(Cli::try_parse_from(args)?, out))
}

/// Runs an already-parsed command line.
pub fn run_with(cli: Cli, out: &mut dyn Write) -> Result<(), AppError> {
    match cli.command {
        Command::Analyze(a) => {
            let lexicon = a.lexicon.load()?;
            let input = read_text(a.file.as_deref())?;
            let options = ReportOptions {
                keywords: a
                    .keywords
                    .into_iter()
                    .filter(|k| !k.trim().is_empty())
                    .collect(),
                top_n: a.topn as usize,
                profile: a.profile.into(),
            };
            let report = ReadabilityReport::build(&input, &lexicon, &options)?;
            match a.format {
                Format::Json => emit(out, &json::report_to_string(&report)),
                Format::Text => emit(out, &text::report(&report, options.profile)),
            }
        }
        Command::Cloud(a) => {
            let lexicon = a.lexicon.load()?;
            let input = read_text(a.file.as_deref())?;
            let entries = cloud_frequencies(&input, &lexicon, a.topn as usize);
            match a.format {
                Format::Json => emit(out, &json::cloud_to_string(&entries)),
                Format::Text => emit(out, &text::cloud(&entries)),
            }
        }
        Command::Calibrate(a) => {
            let sample = tables::read_sample(open_csv(&a.csv)?)?;
            let fit = tables::fit(&sample)?;
            if let Some(path) = &a.residuals {
                std::fs::write(path, tables::residuals_text(&fit))
                    .map_err(|e| AppError::io(path, e))?;
            }
            match a.format {
                Format::Json => emit(out, &tables::fit_json(&fit)),
                Format::Text => emit(out, &tables::fit_text(&fit)),
            }
        }
        Command::Compare(a) => {
            let groups = tables::read_pairs(open_csv(&a.csv)?)?;
            let rows = tables::compare_groups(&groups)?;
            match a.format {
                Format::Json => emit(out, &tables::comparison_json(&rows)),
                Format::Text => emit(out, &tables::comparison_text(&rows)),
            }
        }
        Command::Serve(a) => {
            let lexicon = Arc::new(a.lexicon.load()?);
            let cors = server::cors_layer(a.cors_origin.as_deref()).map_err(AppError::Format)?;
            let app = server::router(lexicon, cors);
            let addr = SocketAddr::new(a.host, a.port);
            tokio::runtime::Runtime::new()
                .and_then(|rt| rt.block_on(server::serve(addr, app)))
                .map_err(|e| AppError::Format(format!("server on {addr}: {e}")))
        }
    }
}
