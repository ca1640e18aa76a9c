use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use plethyrs::analytics::{histogram_csv, SequenceReport};
use plethyrs::bench;
use plethyrs::cache::{find_offsets_par, SharedCharacterTable};
use plethyrs::engine::{full_expansion, hcseq, hcseq_verified, hook_column_part, Engine, EngineError};
use plethyrs::expr::{parse, TypedExpression};
use plethyrs::io;
use plethyrs::verify::{run_suite, Suite};
use plethyrs_core::flip::{hc_sequence, FlipMode};

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_REFUSED: u8 = 4;

#[derive(Parser)]
#[command(name = "plethyrs", version, about = "Hook+column coefficients of iterated plethysms")]
struct Cli {
    /// Worker threads for parallel projection and offset search.
    #[arg(long, global = true, env = "PLETHYRS_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Oracle,
    Alphabet,
    Formula,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Oracle => Engine::Oracle,
            EngineArg::Alphabet => Engine::Alphabet,
            EngineArg::Formula => Engine::Formula,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Schur expansion of an expression.
    Expand {
        expr: String,
        /// Only hook+column coefficients.
        #[arg(long)]
        hc_only: bool,
        /// Only the hook+columns with this many trailing 1s.
        #[arg(long)]
        gamma: Option<u32>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Engine for hook+column coefficients.
        #[arg(long, value_enum, default_value = "oracle")]
        engine: EngineArg,
        /// Allow full expansions above degree 24.
        #[arg(long)]
        force: bool,
    },
    /// Hook+column sequence Σ(f, γ).
    Hcseq {
        expr: String,
        #[arg(long, default_value_t = 0)]
        gamma: u32,
        #[arg(long, value_enum, default_value = "alphabet")]
        engine: EngineArg,
        /// Run every applicable engine and require agreement.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Closed formulas and flip mechanics against the oracle.
    Verify {
        /// Suite name, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Symmetry, unimodality, log-concavity and Gaussian fit of Σ(f, γ).
    Stats {
        expr: String,
        #[arg(long, default_value_t = 0)]
        gamma: u32,
        #[arg(long, value_enum, default_value = "alphabet")]
        engine: EngineArg,
        /// `json` for the report, `csv` for the histogram.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Engine timings on chains built from the prime factors of each degree.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "oracle,alphabet")]
        engines: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "12,16,32")]
        degrees: Vec<u32>,
    },
    /// Flip-symmetry offsets of an expression.
    Flipcheck {
        expr: String,
        /// Also try offsets 0 and 1.
        #[arg(long)]
        extended: bool,
        #[arg(long, value_enum, default_value = "alphabet")]
        engine: EngineArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let code = match e {
            EngineError::NoFormula(_) | EngineError::DegreeGuard(_) => EXIT_REFUSED,
            EngineError::Disagreement { .. } => EXIT_VERIFY,
            EngineError::Math(_) => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn parse_expr(text: &str) -> Result<TypedExpression, Failure> {
    parse(text).map_err(|e| Failure { code: EXIT_PARSE, message: format!("parse error {e}\n  {text}\n  {}^", " ".repeat(e.offset)) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // Fails only if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let memo = SharedCharacterTable::new();
    match run(&memo, cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Writes to stdout; a closed pipe ends the process quietly.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if std::io::stdout().lock().write_fmt(format_args!($($arg)*)).is_err() {
            std::process::exit(0);
        }
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        out!($($arg)*);
        out!("\n");
    }};
}

fn run(memo: &SharedCharacterTable, command: Command) -> Result<(), Failure> {
    match command {
        Command::Expand { expr, hc_only, gamma, format, engine, force } => {
            let e = parse_expr(&expr)?;
            let mut f = if hc_only || gamma.is_some() {
                hook_column_part(memo, &e, engine.into())?
            } else {
                full_expansion(memo, &e, force)?
            };
            if let Some(g) = gamma {
                f = f.filter(|lam| lam.hook_column().is_some_and(|h| h.gamma == g));
            }
            match format {
                Format::Table => outln!("{f}"),
                Format::Json => outln!("{}", io::schur_to_json(&f)),
                Format::Csv => out!("{}", io::schur_to_csv(&f)),
            }
        }
        Command::Hcseq { expr, gamma, engine, verify, format } => {
            let e = parse_expr(&expr)?;
            let seq = if verify {
                hcseq_verified(memo, &e, gamma)?
            } else {
                hcseq(memo, &e, gamma, engine.into())?
            };
            match format {
                Format::Table => outln!("{}", io::hcseq_tuple(&seq)),
                Format::Json => outln!("{}", io::hcseq_to_json(&seq)),
                Format::Csv => {
                    outln!("{}", io::hcseq_csv_header(seq.len()));
                    outln!("{}", io::hcseq_csv_row(&seq));
                }
            }
        }
        Command::Verify { suite, max_degree } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(|m| Failure { code: EXIT_PARSE, message: m })?]
            };
            let mut failed = 0usize;
            let mut total = 0usize;
            for s in suites {
                let results = run_suite(memo, s, max_degree.unwrap_or(s.default_max_degree()))?;
                for r in &results {
                    outln!("[{s}] {r}");
                }
                total += results.len();
                failed += results.iter().filter(|r| !r.passed).count();
            }
            outln!("{} of {total} cases passed", total - failed);
            if failed > 0 {
                return Err(Failure { code: EXIT_VERIFY, message: format!("{failed} cases failed") });
            }
        }
        Command::Stats { expr, gamma, engine, format } => {
            let e = parse_expr(&expr)?;
            let seq = hcseq(memo, &e, gamma, engine.into())?;
            match format {
                Format::Csv => {
                    let csv = histogram_csv(seq.entries())
                        .map_err(|err| Failure { code: EXIT_FAILURE, message: err.to_string() })?;
                    out!("{csv}");
                }
                _ => {
                    let report = SequenceReport::new(e.to_string(), &seq);
                    let json = serde_json::to_string_pretty(&report).expect("report serializes");
                    outln!("{json}");
                }
            }
        }
        Command::Bench { engines, degrees } => {
            let engines = engines
                .iter()
                .map(|s| s.parse::<Engine>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|m| Failure { code: EXIT_PARSE, message: m })?;
            out!("{}", bench::render(&bench::run(&engines, &degrees)));
        }
        Command::Flipcheck { expr, extended, engine, format } => {
            let e = parse_expr(&expr)?;
            let f = hook_column_part(memo, &e, engine.into())?;
            let mode = if extended { FlipMode::Extended } else { FlipMode::Standard };
            let offsets = find_offsets_par(&f, mode);
            match format {
                Format::Json => {
                    let items: Vec<serde_json::Value> = offsets
                        .iter()
                        .map(|o| serde_json::json!({ "r": o.r, "extended": o.extended }))
                        .collect();
                    outln!("{}", serde_json::json!({ "expression": e.to_string(), "offsets": items }));
                }
                _ => {
                    let items: Vec<String> = offsets
                        .iter()
                        .map(|o| if o.extended { format!("{} (extended)", o.r) } else { o.r.to_string() })
                        .collect();
                    outln!("offsets: {}", if items.is_empty() { "none".to_string() } else { items.join(", ") });
                    for g in 0..=e.degree().saturating_sub(1) {
                        let seq = hc_sequence(&f, g);
                        if !seq.nonzero_core().is_empty() {
                            outln!("gamma {g}: {}", io::hcseq_tuple(&seq));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
