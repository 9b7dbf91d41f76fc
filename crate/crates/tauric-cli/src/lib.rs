//! Batch verification harness around the `tauric` library: file
//! ingestion, built-in fixtures, conjecture checking over whole polytope
//! lists, and machine-readable reports.

pub mod batch;
pub mod fixtures;
pub mod formats;
pub mod record;
pub mod report;

pub use batch::{exit_code, run_batch, BatchEntry, BatchReport, Outcome, RunOptions, Summary};
pub use fixtures::{builtin_fixture, fixture_ids, surface_fixtures};
pub use formats::{
    parse_plain, parse_polytope_file, parse_structured, serialize_plain, serialize_structured,
    InputFormat, ParseError,
};
pub use record::PolytopeRecord;
pub use report::{
    csv_string, json_string, json_string_with, summary_line, tau_csv_string, tau_json_string,
    write_csv, ReportFormat,
};
