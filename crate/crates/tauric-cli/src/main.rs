use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tauric_cli::batch::{exit_code, run_batch, Outcome, RunOptions};
use tauric_cli::fixtures::{builtin_fixture, fixture_ids};
use tauric_cli::formats::{parse_polytope_file, InputFormat};
use tauric_cli::record::PolytopeRecord;
use tauric_cli::report::{
    csv_string, json_string_with, summary_line, tau_csv_string, tau_json_string,
};

/// Exact invariants of smooth toric Fano varieties from their polytopes,
/// with Mukai-type conjecture checks over whole databases.
#[derive(Parser)]
#[command(name = "tauric", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline: validate, compute invariants, check both conjectures
    Check(RunArgs),
    /// Invariant reports without conjecture verdicts
    Invariants(RunArgs),
    /// Total index and partition certificate only
    Tau(RunArgs),
    /// List built-in fixture ids
    Fixtures,
}

#[derive(Args)]
struct RunArgs {
    /// Input polytope files
    files: Vec<PathBuf>,

    /// Built-in fixture id (repeatable); see `tauric fixtures`
    #[arg(short = 'F', long = "fixture", value_name = "ID")]
    fixtures: Vec<String>,

    /// Input file format
    #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,

    /// Treat PLAIN matrices as transposed: columns are vertices
    #[arg(long)]
    transpose: bool,

    /// Report output format
    #[arg(long, value_enum, default_value_t = ReportArg::Csv)]
    report: ReportArg,

    /// Write the report to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Cross-check the total index against the brute-force oracle
    #[arg(long)]
    oracle: bool,

    /// Worker threads for batch processing
    #[arg(long, default_value_t = 1, value_name = "N")]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Check,
    Invariants,
    Tau,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check(args) => run(args, Mode::Check),
        Command::Invariants(args) => run(args, Mode::Invariants),
        Command::Tau(args) => run(args, Mode::Tau),
        Command::Fixtures => {
            let mut text = String::new();
            for id in fixture_ids() {
                text.push_str(id);
                text.push('\n');
            }
            match emit(&text, None) {
                Ok(()) => 0,
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
                Err(e) => {
                    eprintln!("tauric: {e}");
                    2
                }
            }
        }
    };
    ExitCode::from(code as u8)
}

fn run(args: RunArgs, mode: Mode) -> i32 {
    let records = match collect_records(&args) {
        Ok(records) => records,
        Err(message) => {
            eprintln!("tauric: {message}");
            return 2;
        }
    };

    let options = RunOptions {
        oracle: args.oracle,
        jobs: args.jobs.max(1),
    };
    let batch = run_batch(records, &options);

    let rendered = match (mode, args.report) {
        (Mode::Tau, ReportArg::Csv) => tau_csv_string(&batch),
        (Mode::Tau, ReportArg::Json) => tau_json_string(&batch),
        (Mode::Check, ReportArg::Csv) | (Mode::Invariants, ReportArg::Csv) => csv_string(&batch),
        (Mode::Check, ReportArg::Json) => json_string_with(&batch, true),
        (Mode::Invariants, ReportArg::Json) => json_string_with(&batch, false),
    };

    if let Err(e) = emit(&rendered, args.out.as_deref()) {
        // A consumer that stopped reading is not an error worth failing on.
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("tauric: {e}");
            return 2;
        }
    }

    for entry in &batch.entries {
        match &entry.outcome {
            Outcome::Rejected { reason } => {
                eprintln!("reject {}: {reason}", entry.record.name);
            }
            Outcome::Checked {
                total_index, mukai, ..
            } if mode == Mode::Check => {
                for (label, verdict) in [("total-index", total_index), ("mukai", mukai)] {
                    if let Some(detail) = &verdict.violation_detail {
                        eprintln!("violation {} [{label}]: {detail}", entry.record.name);
                    }
                }
            }
            _ => {}
        }
    }
    eprintln!("{}", summary_line(&batch.summary));

    match mode {
        Mode::Check => exit_code(&batch),
        // Without verdicts only rejects matter.
        Mode::Invariants | Mode::Tau => {
            if batch.summary.rejects > 0 {
                2
            } else {
                0
            }
        }
    }
}

fn collect_records(args: &RunArgs) -> Result<Vec<PolytopeRecord>, String> {
    if args.files.is_empty() && args.fixtures.is_empty() {
        return Err("no input: pass polytope files or --fixture ids".to_string());
    }
    let format = match args.format {
        FormatArg::Plain => InputFormat::Plain,
        FormatArg::Structured => InputFormat::Structured,
    };
    let mut records = Vec::new();
    for path in &args.files {
        let parsed =
            parse_polytope_file(path, format, args.transpose).map_err(|e| e.to_string())?;
        records.extend(parsed);
    }
    for id in &args.fixtures {
        records.push(builtin_fixture(id).map_err(|e| e.to_string())?);
    }
    Ok(records)
}

fn emit(text: &str, out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    }
}
