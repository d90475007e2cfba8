//! `binbench`: binarize pages, score binarizations against ground truth,
//! rank methods and generate synthetic corpora.
//!
//! Exit status: 0 ok, 2 unreadable input, 3 bad parameters, 4 image size
//! mismatch, 5 fewer than two methods to rank, 6 output I/O failure.

mod commands;
mod config;
mod failure;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::config::Config;
use crate::failure::{CliResult, Failure};

#[derive(Parser, Debug)]
#[command(name = "binbench", version, about = "Document binarization benchmark")]
struct Cli {
    /// JSON file with default options for every command
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Binarize one page, or every page of a manifest
    Binarize(BinarizeArgs),
    /// Compute the six measures for every (image, method) of a manifest
    Evaluate(EvaluateArgs),
    /// Score and rank methods from `evaluate` JSON output
    Rank(RankArgs),
    /// Generate a synthetic corpus with ground truth
    Gen(GenArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct BinarizeArgs {
    /// Input page (PGM/PPM/PBM)
    #[arg(long, short, required_unless_present = "manifest", conflicts_with = "manifest")]
    pub input: Option<PathBuf>,
    /// Output mask; `.pbm` writes P4, anything else an 8-bit PGM
    #[arg(long, short, required_unless_present = "manifest")]
    pub output: Option<PathBuf>,
    /// Corpus manifest; binarizes every page with every selected method
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Batch output directory, relative to the manifest
    #[arg(long, default_value = "bin", requires = "manifest")]
    pub outdir: PathBuf,
    /// Method; repeatable in batch mode (default: all)
    #[arg(long, short)]
    pub method: Vec<String>,
    /// JSON file with binarizer parameters
    #[arg(long, value_name = "FILE")]
    pub params: Option<PathBuf>,
    /// Also write su-contrast intermediate stages next to the output
    #[arg(long)]
    pub debug: bool,
}

#[derive(Args, Debug)]
pub struct EvaluateArgs {
    #[arg(long)]
    pub manifest: PathBuf,
    /// Output file (default: stdout)
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, value_parser = parse_nrm)]
    pub nrm_mode: Option<binbench::metrics::NrmMode>,
    #[arg(long, value_parser = parse_mpm)]
    pub mpm_d: Option<binbench::metrics::MpmNormalization>,
}

#[derive(Args, Debug)]
pub struct RankArgs {
    /// JSON written by `evaluate --format json`
    #[arg(long, short)]
    pub input: PathBuf,
    /// Output file (default: stdout)
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long)]
    pub outdir: PathBuf,
    /// Number of pages
    #[arg(long, short)]
    pub n: Option<usize>,
    /// Page i uses seed + i
    #[arg(long)]
    pub seed: Option<u64>,
    /// clean, phibc-like or heavy
    #[arg(long)]
    pub profile: Option<String>,
    #[arg(long)]
    pub width: Option<usize>,
    #[arg(long)]
    pub height: Option<usize>,
    #[arg(long)]
    pub strokes: Option<usize>,
    #[arg(long)]
    pub stroke_width_min: Option<usize>,
    #[arg(long)]
    pub stroke_width_max: Option<usize>,
    /// Degradation strength override, e.g. `bleed-through=0.5`; repeatable
    #[arg(long, value_name = "KIND=VALUE")]
    pub intensity: Vec<String>,
}

fn parse_nrm(s: &str) -> Result<binbench::metrics::NrmMode, String> {
    s.parse().map_err(|e: binbench::Error| e.to_string())
}

fn parse_mpm(s: &str) -> Result<binbench::metrics::MpmNormalization, String> {
    s.parse().map_err(|e: binbench::Error| e.to_string())
}

fn init_threads() -> CliResult {
    let Ok(v) = std::env::var("BINBENCH_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::params(format!("BINBENCH_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::params(e.to_string()))
}

fn run(cli: Cli) -> CliResult {
    init_threads()?;
    let config = Config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Binarize(a) => commands::binarize::run(&a, &config.binarize),
        Command::Evaluate(a) => commands::evaluate::run(&a, &config.evaluate),
        Command::Rank(a) => commands::rank::run(&a, &config.rank),
        Command::Gen(a) => commands::gen::run(&a, &config.gen),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { failure::PARAMS } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("binbench: {f}");
            ExitCode::from(f.code)
        }
    }
}
