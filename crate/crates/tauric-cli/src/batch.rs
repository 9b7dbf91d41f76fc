//! Batch verification: run the full pipeline and both conjecture checks
//! over a list of records.
//!
//! Records that fail validation become rejects with their diagnostic;
//! they never abort the batch. Output order always matches input order,
//! independent of how many workers ran the records.

use serde::Serialize;

use tauric::{
    check_mukai, check_total_index_conjecture, derive, total_index_bruteforce, ConjectureVerdict,
    InvariantReport,
};

use crate::record::PolytopeRecord;

#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Cross-check the total index against the brute-force oracle.
    pub oracle: bool,
    /// Worker threads; 1 runs the batch sequentially.
    pub jobs: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            oracle: false,
            jobs: 1,
        }
    }
}

/// One record's result.
#[derive(Debug, Clone)]
pub enum Outcome {
    Checked {
        report: InvariantReport,
        total_index: ConjectureVerdict,
        mukai: ConjectureVerdict,
    },
    Rejected {
        reason: String,
    },
}

#[derive(Debug, Clone)]
pub struct BatchEntry {
    pub record: PolytopeRecord,
    pub outcome: Outcome,
}

impl BatchEntry {
    pub fn is_violation(&self) -> bool {
        match &self.outcome {
            Outcome::Checked {
                total_index, mukai, ..
            } => !total_index.is_clean() || !mukai.is_clean(),
            Outcome::Rejected { .. } => false,
        }
    }
}

/// Summary counts; they always equal the sums over the entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checked: usize,
    pub equality_cases: usize,
    pub violations: usize,
    pub rejects: usize,
}

#[derive(Debug, Clone)]
pub struct BatchReport {
    pub entries: Vec<BatchEntry>,
    pub summary: Summary,
}

/// Exit code contract: 0 all verified, 1 at least one conjecture
/// violation, 2 rejects or input failures without violations. A violation
/// dominates a reject: it is the scientifically interesting outcome and
/// must stay machine-detectable in pipelines.
pub fn exit_code(report: &BatchReport) -> i32 {
    if report.summary.violations > 0 {
        1
    } else if report.summary.rejects > 0 {
        2
    } else {
        0
    }
}

/// Runs every record through validation, the invariant pipeline, and both
/// conjecture checks.
pub fn run_batch(records: Vec<PolytopeRecord>, options: &RunOptions) -> BatchReport {
    let entries: Vec<BatchEntry> = if options.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .expect("worker pool");
        pool.install(|| {
            use rayon::prelude::*;
            records
                .into_par_iter()
                .map(|r| run_record(r, options))
                .collect()
        })
    } else {
        records
            .into_iter()
            .map(|r| run_record(r, options))
            .collect()
    };

    let summary = Summary {
        checked: entries
            .iter()
            .filter(|e| matches!(e.outcome, Outcome::Checked { .. }))
            .count(),
        equality_cases: entries
            .iter()
            .filter(|e| match &e.outcome {
                Outcome::Checked { total_index, .. } => total_index.equality_case,
                Outcome::Rejected { .. } => false,
            })
            .count(),
        violations: entries.iter().filter(|e| e.is_violation()).count(),
        rejects: entries
            .iter()
            .filter(|e| matches!(e.outcome, Outcome::Rejected { .. }))
            .count(),
    };
    BatchReport { entries, summary }
}

fn run_record(record: PolytopeRecord, options: &RunOptions) -> BatchEntry {
    let outcome = match check_record(&record, options) {
        Ok(outcome) => outcome,
        Err(reason) => Outcome::Rejected { reason },
    };
    BatchEntry { record, outcome }
}

fn check_record(record: &PolytopeRecord, options: &RunOptions) -> Result<Outcome, String> {
    let poly = record.to_polytope().map_err(|e| e.to_string())?;
    let report = tauric::build_report(&poly).map_err(|e| e.to_string())?;
    if options.oracle {
        let derived = derive(&poly).map_err(|e| e.to_string())?;
        let oracle_tau = total_index_bruteforce(&derived.cone, derived.minus_k.coords())
            .map_err(|e| format!("oracle failed: {e}"))?;
        if oracle_tau != report.tau {
            return Err(format!(
                "oracle mismatch: dynamic program found {}, exhaustive search found {}",
                report.tau, oracle_tau
            ));
        }
    }
    let total_index = check_total_index_conjecture(&report);
    let mukai = check_mukai(&report);
    Ok(Outcome::Checked {
        report,
        total_index,
        mukai,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::surface_fixtures;
    use crate::record::PolytopeRecord;

    #[test]
    fn five_surfaces_check_cleanly() {
        let report = run_batch(surface_fixtures(), &RunOptions::default());
        assert_eq!(report.summary.checked, 5);
        assert_eq!(report.summary.violations, 0);
        assert_eq!(report.summary.rejects, 0);
        assert_eq!(report.summary.equality_cases, 2);
        let equality_names: Vec<&str> = report
            .entries
            .iter()
            .filter(|e| match &e.outcome {
                Outcome::Checked { total_index, .. } => total_index.equality_case,
                _ => false,
            })
            .map(|e| e.record.name.as_str())
            .collect();
        assert_eq!(equality_names, vec!["P2", "P1xP1"]);
        assert_eq!(exit_code(&report), 0);
    }

    #[test]
    fn singular_record_is_rejected_without_sinking_the_batch() {
        let mut records = surface_fixtures();
        records.insert(
            2,
            PolytopeRecord {
                name: "square".to_string(),
                dim: 2,
                vertices: vec![vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]],
                source: "test".to_string(),
            },
        );
        let report = run_batch(records, &RunOptions::default());
        assert_eq!(report.summary.checked, 5);
        assert_eq!(report.summary.rejects, 1);
        assert_eq!(report.summary.violations, 0);
        match &report.entries[2].outcome {
            Outcome::Rejected { reason } => assert!(reason.contains("not unimodular")),
            other => panic!("expected reject, got {other:?}"),
        }
        assert_eq!(exit_code(&report), 2);
    }

    #[test]
    fn empty_input_gives_empty_report() {
        let report = run_batch(Vec::new(), &RunOptions::default());
        assert_eq!(
            report.summary,
            Summary {
                checked: 0,
                equality_cases: 0,
                violations: 0,
                rejects: 0
            }
        );
        assert_eq!(exit_code(&report), 0);
    }

    #[test]
    fn oracle_cross_check_passes_on_surfaces() {
        let options = RunOptions {
            oracle: true,
            jobs: 1,
        };
        let report = run_batch(surface_fixtures(), &options);
        assert_eq!(report.summary.checked, 5);
        assert_eq!(report.summary.rejects, 0);
    }

    #[test]
    fn parallel_run_preserves_input_order() {
        let sequential = run_batch(surface_fixtures(), &RunOptions::default());
        let parallel = run_batch(
            surface_fixtures(),
            &RunOptions {
                oracle: false,
                jobs: 4,
            },
        );
        let names = |r: &BatchReport| {
            r.entries
                .iter()
                .map(|e| e.record.name.clone())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(&sequential), names(&parallel));
        assert_eq!(sequential.summary, parallel.summary);
    }
}
