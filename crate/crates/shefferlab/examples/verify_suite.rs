//! Run the whole identity suite over the default parameter grid and print
//! the per-theorem tallies.
//!
//! Run with: cargo run --release --example verify_suite

use std::collections::BTreeMap;

use shefferlab::identities::{verify_suite, SuiteGrid, ALL_THEOREMS};

fn main() {
    let n_max = 6;
    let grid = SuiteGrid::default_grid(ALL_THEOREMS.to_vec(), n_max);
    let start = std::time::Instant::now();
    let (reports, summary) = verify_suite(&grid).expect("grid is valid");

    let mut tally: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for report in &reports {
        let entry = tally.entry(report.instance.theorem.tag()).or_default();
        entry.0 += usize::from(report.pass);
        entry.1 += 1;
    }
    for (tag, (passed, total)) in &tally {
        println!("{tag:24} {passed}/{total}");
    }
    println!(
        "\ntotal {} passed {} failed {} in {:?}",
        summary.total,
        summary.passed,
        summary.failed,
        start.elapsed()
    );
}
