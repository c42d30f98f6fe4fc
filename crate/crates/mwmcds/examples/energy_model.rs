//! Data-transfer energy of a backbone: closed form vs Monte Carlo.
//!
//! Run with: cargo run --release --example energy_model

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mwmcds::construct::generate_greedy;
use mwmcds::instance::{energy_expected, energy_simulate, generate_instance, GeneratorConfig};

fn main() {
    let cfg = GeneratorConfig {
        n: 25,
        target_m: 80,
        p_t: 0.6,
        p_d: 0.3,
        instants: 5,
        seed: 11,
        ..Default::default()
    };
    let g = generate_instance(&cfg).unwrap();
    let backbone = generate_greedy(&g);
    println!("backbone: {:?}", backbone.members());

    let expected = energy_expected(&g, &backbone, &cfg).unwrap();
    println!("expected energy: {expected:.2}");

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for reps in [10, 100, 1000, 10_000] {
        let mean: f64 = (0..reps)
            .map(|_| energy_simulate(&g, &backbone, &cfg, &mut rng).unwrap())
            .sum::<f64>()
            / reps as f64;
        println!("mean of {reps:5} simulations: {mean:.2}");
    }
}
