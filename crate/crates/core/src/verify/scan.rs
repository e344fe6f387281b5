//! Exhaustive sweeps over enumerated partitions, fanned out over a rayon
//! pool. Output order is always the canonical enumeration order.

use rayon::prelude::*;
use serde::Serialize;

use super::conjecture::{conjecture_report, ConjectureReport};
use super::report::{verify_partition, VerificationReport};
use crate::partition::{enumerate_partitions, Partition};

fn in_pool<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> T {
    match workers {
        None => job(),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("failed to build worker pool")
            .install(job),
    }
}

fn partitions(n_max: usize) -> Vec<Partition> {
    enumerate_partitions(n_max).collect()
}

/// Verifies every partition with `n <= n_max`. `workers = None` uses the
/// global rayon pool.
pub fn scan(n_max: usize, workers: Option<usize>) -> Vec<VerificationReport> {
    let all = partitions(n_max);
    in_pool(workers, || all.par_iter().map(verify_partition).collect())
}

/// Conjecture observations for every singular partition with `n <= n_max`.
pub fn conjecture_scan(n_max: usize) -> Vec<ConjectureReport> {
    conjecture_scan_with(n_max, None)
}

pub fn conjecture_scan_with(n_max: usize, workers: Option<usize>) -> Vec<ConjectureReport> {
    let all = partitions(n_max);
    in_pool(workers, || {
        all.par_iter().filter_map(conjecture_report).collect()
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub partitions: usize,
    pub partitions_passed: usize,
    pub partitions_failed: usize,
    pub checks_run: usize,
    pub checks_failed: usize,
    pub checks_skipped: usize,
}

impl ScanSummary {
    pub fn from_reports(reports: &[VerificationReport]) -> Self {
        let mut s = Self::default();
        for r in reports {
            s.partitions += 1;
            if r.all_passed() {
                s.partitions_passed += 1;
            } else {
                s.partitions_failed += 1;
            }
            s.checks_run += r.checks.len();
            s.checks_failed += r.failures().count();
            s.checks_skipped += r.skipped.len();
        }
        s
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureSummary {
    pub partitions_scanned: usize,
    pub singular_partitions: usize,
    pub conjecture_i_holds: usize,
    pub conjecture_ii_holds: usize,
}

impl ConjectureSummary {
    pub fn from_reports(n_max: usize, reports: &[ConjectureReport]) -> Self {
        Self {
            partitions_scanned: enumerate_partitions(n_max).count(),
            singular_partitions: reports.len(),
            conjecture_i_holds: reports.iter().filter(|r| r.conjecture_i_holds).count(),
            conjecture_ii_holds: reports.iter().filter(|r| r.conjecture_ii_holds).count(),
        }
    }
}

/// One line of JSON-lines output.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportLine<'a> {
    Verification(&'a VerificationReport),
    Conjecture(&'a ConjectureReport),
    ScanSummary(&'a ScanSummary),
    ConjectureSummary(&'a ConjectureSummary),
}

impl ReportLine<'_> {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize to JSON")
    }
}
