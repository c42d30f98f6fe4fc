//! Generate a benchmark instance and run the annealer on it.
//!
//! Run with: cargo run --release --example solve_gsa

use mwmcds::annealer::{self, SAParams};
use mwmcds::instance::{generate_instance, GeneratorConfig};

fn main() {
    let cfg = GeneratorConfig { n: 30, target_m: 120, seed: 7, ..Default::default() };
    let g = generate_instance(&cfg).unwrap();
    println!("instance: n = {}, m = {}", g.n(), g.m());

    let params = SAParams { seed: 42, max_iterations: 5000, ..Default::default() };
    let result = annealer::run(&g, &params).unwrap();

    println!("dominators: {:?}", result.best_solution.members());
    println!(
        "F_c = {}, F_w = {} (intra {} + cover {}), F = {:.4}",
        result.objective.f_c,
        result.objective.f_w,
        result.objective.f_w1,
        result.objective.f_w2,
        result.objective.f
    );
    println!(
        "best found at iteration {} of {}, {:.1} ms",
        result.best_found_at,
        result.iterations_executed,
        result.wall_time.as_secs_f64() * 1000.0
    );
}
