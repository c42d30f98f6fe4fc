//! Compare the annealer against the exhaustive exact solver on a small
//! instance.
//!
//! Run with: cargo run --release --example exact_vs_gsa

use mwmcds::annealer::{self, SAParams};
use mwmcds::instance::{generate_instance, GeneratorConfig};
use mwmcds::objective::ScalarWeights;
use mwmcds::oracle;

fn main() {
    let g = generate_instance(&GeneratorConfig {
        n: 12,
        target_m: 24,
        seed: 3,
        ..Default::default()
    })
    .unwrap();

    let sw = ScalarWeights::default();
    let (opt_set, opt) = oracle::exact_optimum(&g, &sw, oracle::DEFAULT_ENUM_CAP).unwrap();
    println!("exact optimum: {:?} with F = {:.4}", opt_set.members(), opt.f);

    for seed in 0..5 {
        let params = SAParams { seed, ..Default::default() };
        let result = annealer::run(&g, &params).unwrap();
        let gap = (result.objective.f - opt.f) / opt.f * 100.0;
        println!(
            "seed {seed}: {:?} F = {:.4} (gap {:.2}%)",
            result.best_solution.members(),
            result.objective.f,
            gap
        );
    }
}
