//! CLI over the codec: CSV encode/decode, raw pair/unpair, the verification
//! sweep, and a single-value trace.
//!
//! Exit codes: 0 success, 1 usage error (argument parsing), 2 data error
//! (malformed payloads, CSV cells, IO). Diagnostics go to stderr.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use cxcodec::dataset::{transform_csv, ColumnSpec, Direction};
use cxcodec::experiment::{run_sweep, trace, SweepConfig};
use cxcodec::literal::parse_complex;
use cxcodec::metrics::ErrorStats;
use cxcodec::pairing;
use cxcodec::representation::Method;

#[derive(Parser)]
#[command(name = "cxcodec", version, about = "Pack complex numbers into single wide naturals and back")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode complex-literal CSV columns into representation columns.
    Encode(EncodeArgs),
    /// Decode representation CSV columns back into complex literals.
    Decode(DecodeArgs),
    /// Pair two 64-bit naturals into one 128-bit natural.
    Pair {
        /// Pairing function.
        #[arg(long)]
        function: PairFunction,
        p: u64,
        q: u64,
    },
    /// Invert a pairing: print the two 64-bit components as `p q`.
    Unpair {
        /// Pairing function.
        #[arg(long)]
        function: PairFunction,
        value: u128,
    },
    /// Run the random roundtrip-error sweep and print a report.
    Verify {
        /// Number of random samples.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// RNG seed (the sweep is fully deterministic in it).
        #[arg(long)]
        seed: u64,
        /// Comma-separated methods (default: all four).
        #[arg(long, value_delimiter = ',')]
        methods: Option<Vec<Method>>,
        /// Parallel shards; the report is shard-count invariant.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        shards: u32,
        /// Report format.
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
    /// Print every intermediate value for one complex literal.
    Trace {
        /// Complex literal, e.g. "1.5-2.25i".
        literal: String,
    },
}

#[derive(Args)]
struct EncodeArgs {
    /// Encoding method.
    #[arg(long)]
    method: Method,
    /// Input CSV path.
    #[arg(long)]
    input: PathBuf,
    /// Output CSV path.
    #[arg(long)]
    output: PathBuf,
    /// Target column, by header name or zero-based index; repeatable.
    #[arg(long = "column", required = true)]
    columns: Vec<String>,
    /// Write values normalized by 1e37 as binary64 instead (one-way).
    #[arg(long)]
    normalize: bool,
}

#[derive(Args)]
struct DecodeArgs {
    /// Encoding method the columns were produced with.
    #[arg(long)]
    method: Method,
    /// Input CSV path.
    #[arg(long)]
    input: PathBuf,
    /// Output CSV path.
    #[arg(long)]
    output: PathBuf,
    /// Target column, by header name or zero-based index; repeatable.
    #[arg(long = "column", required = true)]
    columns: Vec<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PairFunction {
    Cantor,
    Szudzik,
    Interleave,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Table,
    Csv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap routes help/version to stdout, real errors to stderr.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Pair { function, p, q } => {
            let value = match function {
                PairFunction::Cantor => pairing::cantor_pair(p, q).map_err(|e| e.to_string())?,
                PairFunction::Szudzik => pairing::szudzik_pair(p, q),
                PairFunction::Interleave => pairing::interleave(p, q),
            };
            println!("{value}");
            Ok(())
        }
        Command::Unpair { function, value } => {
            let (p, q) = match function {
                PairFunction::Cantor => pairing::cantor_unpair(value).map_err(|e| e.to_string())?,
                PairFunction::Szudzik => pairing::szudzik_unpair(value),
                PairFunction::Interleave => pairing::deinterleave(value),
            };
            println!("{p} {q}");
            Ok(())
        }
        Command::Trace { literal } => {
            let c = parse_complex(&literal).map_err(|e| e.to_string())?;
            let record = trace(c).map_err(|e| e.to_string())?;
            let mut stdout = io::stdout().lock();
            for (label, value) in &record.entries {
                writeln!(stdout, "{label}: {value}").map_err(|e| e.to_string())?;
            }
            Ok(())
        }
        Command::Verify { samples, seed, methods, shards, format } => {
            let cfg = SweepConfig {
                seed,
                sample_count: samples,
                methods: methods.unwrap_or_else(|| Method::ALL.to_vec()),
                shard_count: shards,
                ..SweepConfig::default()
            };
            let stats = run_sweep(&cfg).map_err(|e| e.to_string())?;
            print_report(&stats, format);
            Ok(())
        }
        Command::Encode(args) => {
            let specs = column_specs(&args.columns, args.method, args.normalize);
            transform_files(&args.input, &args.output, &specs, Direction::Encode)
        }
        Command::Decode(args) => {
            let specs = column_specs(&args.columns, args.method, false);
            transform_files(&args.input, &args.output, &specs, Direction::Decode)
        }
    }
}

fn column_specs(columns: &[String], method: Method, normalize: bool) -> Vec<ColumnSpec> {
    columns
        .iter()
        .map(|column| ColumnSpec { column: column.clone(), method, normalize })
        .collect()
}

fn transform_files(
    input: &PathBuf,
    output: &PathBuf,
    specs: &[ColumnSpec],
    direction: Direction,
) -> Result<(), String> {
    let reader = File::open(input).map_err(|e| format!("{}: {e}", input.display()))?;
    let writer = File::create(output).map_err(|e| format!("{}: {e}", output.display()))?;
    transform_csv(reader, writer, specs, direction).map_err(|e| e.to_string())
}

fn print_report(stats: &BTreeMap<Method, ErrorStats>, format: ReportFormat) {
    match format {
        ReportFormat::Csv => {
            println!("method,max_error,avg_error");
            for (m, s) in stats {
                println!("{m},{:e},{:e}", s.max_error, s.mean());
            }
        }
        ReportFormat::Table => {
            println!("{:<22} {:<24} {}", "method", "max_error", "avg_error");
            for (m, s) in stats {
                let max = format!("{:e}", s.max_error);
                println!("{:<22} {:<24} {:e}", m.name(), max, s.mean());
            }
        }
    }
}
