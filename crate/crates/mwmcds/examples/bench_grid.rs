//! Run a small benchmark grid and print the CSV table.
//!
//! Run with: cargo run --release --example bench_grid

use mwmcds::annealer::SAParams;
use mwmcds::bench::{run_bench, BenchConfig, BenchRecord, GridRow};

fn main() {
    let cfg = BenchConfig {
        rows: (2..=6).map(|i| GridRow { n: 10 * i, target_m: 25 * i }).collect(),
        replicas: 3,
        master_seed: 1,
        solver: SAParams { max_iterations: 2000, ..Default::default() },
        ..BenchConfig::paper_grid()
    };
    let records = run_bench(&cfg).unwrap();
    println!("{}", BenchRecord::CSV_HEADER);
    for r in &records {
        println!("{}", r.csv_line());
    }
}
