//! Acceptance gate: every criterion runs at full scale with its tolerance
//! pinned in `chromabound::checks`, printing one pass/fail line each
//! (visible with `cargo test --test acceptance -- --nocapture`).

use std::time::{Duration, Instant};

use chromabound::checks::{run_check, Level};

fn criterion(number: usize, name: &str, budget: Option<Duration>) {
    let started = Instant::now();
    let result = run_check(name, Level::Full);
    let elapsed = started.elapsed();
    match &result {
        Ok(()) => println!("criterion {number} ({name}): PASS in {elapsed:.2?}"),
        Err(msg) => println!("criterion {number} ({name}): FAIL: {msg}"),
    }
    if let Err(msg) = result {
        panic!("criterion {number} ({name}) failed: {msg}");
    }
    if let Some(budget) = budget {
        assert!(
            elapsed < budget,
            "criterion {number} ({name}) took {elapsed:.2?}, budget {budget:?}"
        );
    }
}

#[test]
fn criterion_01_reference_table() {
    criterion(1, "reference-table", Some(Duration::from_secs(10)));
}

#[test]
fn criterion_02_comparator_anchors() {
    criterion(2, "comparator-anchors", Some(Duration::from_secs(5)));
}

#[test]
fn criterion_03_whitney_equals_dc() {
    criterion(3, "whitney-equals-dc", Some(Duration::from_secs(300)));
}

#[test]
fn criterion_04_partition_function() {
    criterion(4, "partition-function", None);
}

#[test]
fn criterion_05_penrose_identity() {
    criterion(5, "penrose-identity", None);
}

#[test]
fn criterion_06_ratio_bound() {
    criterion(6, "ratio-bound", None);
}

#[test]
fn criterion_07_zero_free_corpus() {
    criterion(7, "zero-free-corpus", None);
}

#[test]
fn criterion_08_series_identities() {
    criterion(8, "series-identities", None);
}

#[test]
fn criterion_09_monotonicity() {
    criterion(9, "monotonicity", Some(Duration::from_secs(120)));
}

#[test]
fn criterion_10_subtree_bounds() {
    criterion(10, "subtree-bounds", None);
}
