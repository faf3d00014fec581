//! Command-line surface: `build`, `verify`, `stats`, and `trace`
//! subcommands over the full pipeline, with deterministic text, JSON, and
//! binary output.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::builder::{build_suffixient, BuildOutput, RunStats};
use crate::error::{Error, Result};
use crate::index::IndexArrays;
use crate::oracle;
use crate::stream::{ArraySource, TripleStream};
use crate::text::{load_text, parse_fasta, reverse_text, SentinelPolicy, Symbol, Text};
use crate::trace::{render, trace_build};

/// Readability cap for the `trace` subcommand.
const TRACE_CAP: usize = 64;

#[derive(Parser)]
#[command(
    name = "suffixient",
    version,
    about = "Compute minimum-size suffixient arrays in one pass"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the suffixient array of a text.
    Build(BuildArgs),
    /// Build, then check the result against the brute-force oracles.
    Verify(VerifyArgs),
    /// Build and report work counters.
    Stats(StatsArgs),
    /// Print a per-iteration trace of the construction.
    Trace(InputArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Raw,
    Fasta,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sentinel {
    /// Append a fresh terminator smaller than every input byte.
    Append,
    /// Require the input to end with a unique, strictly minimal byte.
    Require,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputMode {
    Text,
    Json,
    Binary,
}

#[derive(Args)]
struct InputArgs {
    /// Input file path.
    #[arg(long)]
    input: PathBuf,
    /// Input format.
    #[arg(long, value_enum, default_value_t = Format::Raw)]
    format: Format,
    /// Sentinel handling.
    #[arg(long, value_enum, default_value_t = Sentinel::Append)]
    sentinel: Sentinel,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = OutputMode::Text)]
    output: OutputMode,
    /// Report 0-based positions instead of the default 1-based.
    #[arg(long)]
    zero_based: bool,
    /// Also write the SA/LCP/BWT arrays of the reversed text to PATH.
    #[arg(long, value_name = "PATH")]
    dump_arrays: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Largest n accepted by the oracle checks.
    #[arg(long, default_value_t = 2000)]
    verify_cap: usize,
    /// Largest n for the exhaustive minimality search.
    #[arg(long, default_value_t = oracle::EXHAUSTIVE_CAP)]
    min_cap: usize,
    /// Fail instead of skipping when n exceeds the minimality cap.
    #[arg(long)]
    require_min: bool,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Report the suffix-tree height of the reversed text when n is at
    /// most this cap (the oracle computing it is quadratic).
    #[arg(long, default_value_t = 2000)]
    verify_cap: usize,
}

#[derive(Serialize)]
struct CharGroup {
    character: String,
    positions: Vec<usize>,
}

#[derive(Serialize)]
struct OutputDocument {
    positions: Vec<usize>,
    per_char_groups: Vec<CharGroup>,
    stats: RunStats,
}

#[derive(Serialize)]
struct StatsDocument {
    stats: RunStats,
    /// Oracle suffix-tree height of the reversed text; absent above the
    /// cap. `stats.stack_max_depth <= suffix_tree_height + 1` must hold.
    #[serde(skip_serializing_if = "Option::is_none")]
    suffix_tree_height: Option<usize>,
}

fn read_input(args: &InputArgs) -> Result<Text> {
    let raw = fs::read(&args.input)?;
    let bytes = match args.format {
        Format::Raw => raw,
        Format::Fasta => parse_fasta(&raw)?,
    };
    let policy = match args.sentinel {
        Sentinel::Append => SentinelPolicy::Append,
        Sentinel::Require => SentinelPolicy::Require,
    };
    load_text(&bytes, policy)
}

fn display_char(rank: Symbol, text: &Text) -> String {
    if rank == 0 {
        return "$".to_string();
    }
    let b = text.rank_to_byte()[rank as usize];
    if b.is_ascii_graphic() || b == b' ' {
        (b as char).to_string()
    } else {
        format!("0x{b:02X}")
    }
}

fn run_pipeline(text: &Text) -> Result<(IndexArrays, BuildOutput)> {
    let arrays = IndexArrays::build(&reverse_text(text));
    let mut stream = TripleStream::new(ArraySource::new(&arrays));
    let out = build_suffixient(&mut stream)?;
    Ok((arrays, out))
}

/// Stdout payload plus a human-readable note for stderr.
fn cmd_build(args: &BuildArgs) -> Result<(Vec<u8>, String)> {
    let text = read_input(&args.input)?;
    let (arrays, out) = run_pipeline(&text)?;
    if let Some(path) = &args.dump_arrays {
        let mut f = fs::File::create(path)?;
        arrays.dump(&mut f)?;
    }
    let shift = usize::from(args.zero_based);
    let positions: Vec<usize> = out.array.positions().iter().map(|p| p - shift).collect();
    match args.output {
        OutputMode::Text => {
            let mut buf = String::new();
            for p in &positions {
                buf.push_str(&p.to_string());
                buf.push('\n');
            }
            let note = serde_json::to_string(&out.stats).expect("stats serialize");
            Ok((buf.into_bytes(), note))
        }
        OutputMode::Json => {
            let doc = OutputDocument {
                positions,
                per_char_groups: out
                    .array
                    .groups()
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| !g.is_empty())
                    .map(|(rank, g)| CharGroup {
                        character: display_char(rank as Symbol, &text),
                        positions: g.iter().map(|p| p - shift).collect(),
                    })
                    .collect(),
                stats: out.stats,
            };
            let mut buf = serde_json::to_vec_pretty(&doc).expect("doc serialize");
            buf.push(b'\n');
            Ok((buf, String::new()))
        }
        OutputMode::Binary => {
            let mut buf = Vec::with_capacity(4 + 8 * (3 + positions.len()));
            buf.extend_from_slice(b"SFXA");
            for v in [out.stats.n, out.stats.sigma, out.stats.chi] {
                buf.extend_from_slice(&(v as u64).to_le_bytes());
            }
            for p in &positions {
                buf.extend_from_slice(&(*p as u64).to_le_bytes());
            }
            Ok((buf, String::new()))
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<Vec<u8>> {
    let text = read_input(&args.input)?;
    let n = text.len();
    if n > args.verify_cap {
        return Err(Error::SizeLimit { n, cap: args.verify_cap });
    }
    let (arrays, out) = run_pipeline(&text)?;
    let catalog = oracle::RightMaximalCatalog::build(&text);
    let mut report = String::new();

    let expected = oracle::naive_full_l(&arrays);
    if out.array.positions() != expected.as_slice() {
        return Err(Error::VerificationFailed(format!(
            "output {:?} differs from brute-force list {:?}",
            out.array.positions(),
            expected
        )));
    }
    report.push_str("ok: output equals brute-force candidate list\n");

    if !oracle::verify_suffixient(&catalog, n, out.array.positions()) {
        return Err(Error::VerificationFailed(
            "output does not cover every right-maximal extension".into(),
        ));
    }
    report.push_str("ok: every one-character right-maximal extension is covered\n");

    if !oracle::colex_ordered(&text, out.array.positions()) {
        return Err(Error::VerificationFailed(
            "output prefixes are not in colexicographic order".into(),
        ));
    }
    report.push_str("ok: positions are in colexicographic prefix order\n");

    if n <= args.min_cap {
        let min = oracle::exhaustive_min_size(&text)?;
        if out.array.chi() != min {
            return Err(Error::VerificationFailed(format!(
                "output size {} exceeds exhaustive minimum {}",
                out.array.chi(),
                min
            )));
        }
        report.push_str("ok: size matches the exhaustive minimum\n");
    } else if args.require_min {
        return Err(Error::SizeLimit { n, cap: args.min_cap });
    } else {
        report.push_str(&format!(
            "skipped: exhaustive minimality (n = {} > cap {})\n",
            n, args.min_cap
        ));
    }
    Ok(report.into_bytes())
}

fn cmd_stats(args: &StatsArgs) -> Result<Vec<u8>> {
    let text = read_input(&args.input)?;
    let (_, out) = run_pipeline(&text)?;
    let height = (text.len() <= args.verify_cap)
        .then(|| oracle::suffix_tree_height(&reverse_text(&text)));
    let doc = StatsDocument { stats: out.stats, suffix_tree_height: height };
    let mut buf = serde_json::to_vec_pretty(&doc).expect("stats serialize");
    buf.push(b'\n');
    Ok(buf)
}

fn cmd_trace(args: &InputArgs) -> Result<Vec<u8>> {
    let text = read_input(args)?;
    if text.len() > TRACE_CAP {
        return Err(Error::SizeLimit { n: text.len(), cap: TRACE_CAP });
    }
    let arrays = IndexArrays::build(&reverse_text(&text));
    let trace = trace_build(&arrays)?;
    Ok(render(&trace, &text).into_bytes())
}

fn execute(cli: &Cli) -> Result<(Vec<u8>, String)> {
    match &cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Verify(args) => Ok((cmd_verify(args)?, String::new())),
        Command::Stats(args) => Ok((cmd_stats(args)?, String::new())),
        Command::Trace(args) => Ok((cmd_trace(args)?, String::new())),
    }
}

/// Parses the process arguments, runs the selected command, and returns
/// the process exit status.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((stdout, note)) => {
            let out = std::io::stdout();
            out.lock().write_all(&stdout).expect("write stdout");
            if !note.is_empty() {
                eprintln!("{note}");
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
