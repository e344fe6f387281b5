//! Cross-verification of the closed forms and the conjecture scanner.

mod bfs;
mod conjecture;
mod report;
mod scan;

pub use bfs::{adjacency, bfs_distance_matrix};
pub use conjecture::{conjecture_report, ConjectureReport};
pub use report::{
    checks, cof_margin_rule_inertia, predicted_laplacian_inertia, verify_partition, Check,
    SkipReason, Skipped, VerificationReport, ALL_COFACTORS_MAX_ORDER,
};
pub use scan::{
    conjecture_scan, conjecture_scan_with, scan, ConjectureSummary, ReportLine, ScanSummary,
};
