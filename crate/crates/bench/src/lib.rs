//! Fixtures shared by the benchmarks.

use sqdist_core::Partition;

/// Representative inputs: all-large, mixed, singular, and complete graphs.
pub fn fixtures() -> Vec<(&'static str, Partition)> {
    [
        ("all_large_n10", "4,3,3"),
        ("mixed_n10", "3,2,2,1,1,1"),
        ("complete_k10", "1,1,1,1,1,1,1,1,1,1"),
        ("singular_n13", "8,3,1,1"),
        ("all_large_n14", "5,4,3,2"),
    ]
    .into_iter()
    .map(|(name, token)| (name, token.parse().expect("valid fixture")))
    .collect()
}
