//! Machine-readable report output.
//!
//! The CSV table has the fixed columns
//! `name,dim,n_rays,rho,fano_index,pseudo_index,tau,mukai_defect,
//! total_defect,is_product,factors,certificate` with the certificate as
//! semicolon-joined coordinate tuples and factors as `x`-joined integers.
//! Rejected records carry no invariants and are reported in the summary
//! and the JSON output instead. Output is byte-stable across runs for
//! identical input.

use std::io::Write;

use serde::Serialize;
use tauric::{ConjectureVerdict, InvariantReport};

use crate::batch::{BatchReport, Outcome, Summary};

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

pub const CSV_HEADER: [&str; 12] = [
    "name",
    "dim",
    "n_rays",
    "rho",
    "fano_index",
    "pseudo_index",
    "tau",
    "mukai_defect",
    "total_defect",
    "is_product",
    "factors",
    "certificate",
];

pub fn factors_string(factors: &Option<Vec<usize>>) -> String {
    factors
        .as_ref()
        .map(|f| {
            f.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join("x")
        })
        .unwrap_or_default()
}

pub fn certificate_string(report: &InvariantReport) -> String {
    report.certificate_strings().join(";")
}

/// Serializes the checked entries as CSV.
pub fn write_csv<W: Write>(report: &BatchReport, writer: W) -> std::io::Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record(CSV_HEADER)?;
    for entry in &report.entries {
        if let Outcome::Checked { report: r, .. } = &entry.outcome {
            out.write_record([
                r.name.clone(),
                r.dim.to_string(),
                r.n_rays.to_string(),
                r.rho.to_string(),
                r.fano_index.to_string(),
                r.pseudo_index.to_string(),
                r.tau.to_string(),
                r.mukai_defect.to_string(),
                r.total_defect.to_string(),
                r.is_product.to_string(),
                factors_string(&r.factors),
                certificate_string(r),
            ])?;
        }
    }
    out.flush()
}

pub fn csv_string(report: &BatchReport) -> String {
    let mut buf = Vec::new();
    write_csv(report, &mut buf).expect("csv into memory");
    String::from_utf8(buf).expect("csv is utf-8")
}

#[derive(Serialize)]
struct JsonVerdicts<'a> {
    total_index: &'a ConjectureVerdict,
    mukai: &'a ConjectureVerdict,
}

#[derive(Serialize)]
#[serde(untagged)]
enum JsonEntry<'a> {
    Checked {
        #[serde(flatten)]
        report: &'a InvariantReport,
        #[serde(skip_serializing_if = "Option::is_none")]
        verdicts: Option<JsonVerdicts<'a>>,
    },
    Rejected {
        name: &'a str,
        source: &'a str,
        rejected: &'a str,
    },
}

#[derive(Serialize)]
struct JsonReport<'a> {
    summary: &'a Summary,
    entries: Vec<JsonEntry<'a>>,
}

/// Serializes the full batch, rejects included, as pretty JSON mirroring
/// the invariant report field names. Verdicts are included when
/// `with_verdicts` is set; the `invariants` command leaves them out.
pub fn json_string_with(report: &BatchReport, with_verdicts: bool) -> String {
    let entries: Vec<JsonEntry> = report
        .entries
        .iter()
        .map(|entry| match &entry.outcome {
            Outcome::Checked {
                report: r,
                total_index,
                mukai,
            } => JsonEntry::Checked {
                report: r,
                verdicts: with_verdicts.then_some(JsonVerdicts { total_index, mukai }),
            },
            Outcome::Rejected { reason } => JsonEntry::Rejected {
                name: &entry.record.name,
                source: &entry.record.source,
                rejected: reason,
            },
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&JsonReport {
        summary: &report.summary,
        entries,
    })
    .expect("report serializes");
    out.push('\n');
    out
}

pub fn json_string(report: &BatchReport) -> String {
    json_string_with(report, true)
}

/// CSV with only the total-index columns, for the `tau` command.
pub fn tau_csv_string(report: &BatchReport) -> String {
    let mut out = csv::Writer::from_writer(Vec::new());
    out.write_record(["name", "tau", "certificate"])
        .expect("csv");
    for entry in &report.entries {
        if let Outcome::Checked { report: r, .. } = &entry.outcome {
            out.write_record([r.name.clone(), r.tau.to_string(), certificate_string(r)])
                .expect("csv");
        }
    }
    String::from_utf8(out.into_inner().expect("csv into memory")).expect("csv is utf-8")
}

/// JSON with only the total-index fields, rejects included.
pub fn tau_json_string(report: &BatchReport) -> String {
    #[derive(Serialize)]
    #[serde(untagged)]
    enum TauEntry<'a> {
        Checked {
            name: &'a str,
            tau: u64,
            certificate: Vec<String>,
        },
        Rejected {
            name: &'a str,
            rejected: &'a str,
        },
    }
    let entries: Vec<TauEntry> = report
        .entries
        .iter()
        .map(|entry| match &entry.outcome {
            Outcome::Checked { report: r, .. } => TauEntry::Checked {
                name: &r.name,
                tau: r.tau,
                certificate: r.certificate_strings(),
            },
            Outcome::Rejected { reason } => TauEntry::Rejected {
                name: &entry.record.name,
                rejected: reason,
            },
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&entries).expect("tau report serializes");
    out.push('\n');
    out
}

/// One-line human summary, printed to stderr by the harness.
pub fn summary_line(summary: &Summary) -> String {
    format!(
        "checked={} equality={} violations={} rejects={}",
        summary.checked, summary.equality_cases, summary.violations, summary.rejects
    )
}
