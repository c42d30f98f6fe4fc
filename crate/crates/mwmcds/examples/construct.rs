//! Greedy and randomized construction of connected dominating sets.
//!
//! Run with: cargo run --example construct

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mwmcds::construct::{generate_greedy, generate_initial_pool, generate_random};
use mwmcds::graph::Graph;

fn main() {
    // A wheel: hub 0 plus a cycle 1..=6.
    let mut edges = vec![];
    for v in 1..=6usize {
        edges.push((0, v, 1.0));
        edges.push((v, if v == 6 { 1 } else { v + 1 }, 2.0));
    }
    let g = Graph::new(7, edges).unwrap();

    let greedy = generate_greedy(&g);
    println!("greedy construction: {:?}", greedy.members());

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..3 {
        let s = generate_random(&g, &mut rng);
        println!("random construction {i}: {:?} (cds = {})", s.members(), g.is_cds(&s));
    }

    let pool = generate_initial_pool(&g, 5, &mut rng).unwrap();
    println!("pool sizes: {:?}", pool.iter().map(|s| s.len()).collect::<Vec<_>>());
}
