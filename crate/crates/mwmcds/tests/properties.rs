//! Property tests over randomly generated connected graphs.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mwmcds::construct::{generate_greedy, generate_random};
use mwmcds::graph::{Graph, VertexSet};
use mwmcds::instance::{generate_instance, GeneratorConfig};
use mwmcds::neighborhood::{neighbor_greedy, neighbor_random};
use mwmcds::objective::{eval_scalarized, eval_weight, ScalarWeights};

fn connected_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, seed, density)| {
        let min_m = n.saturating_sub(1);
        let max_m = n * n.saturating_sub(1) / 2;
        let target_m = min_m + ((max_m - min_m) as f64 * density).round() as usize;
        generate_instance(&GeneratorConfig { n, target_m, seed, ..Default::default() })
            .expect("bounds are feasible")
    })
}

proptest! {
    #[test]
    fn constructions_and_moves_stay_feasible(g in connected_graph(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let greedy = generate_greedy(&g);
        prop_assert!(g.is_cds(&greedy));
        let random = generate_random(&g, &mut rng);
        prop_assert!(g.is_cds(&random));
        prop_assert!(g.is_cds(&neighbor_greedy(&g, &greedy)));
        prop_assert!(g.is_cds(&neighbor_random(&g, &random, &mut rng)));
    }

    // A CDS is by definition dominating and connected-induced; domination
    // checked against the raw double loop over all vertices and edges.
    #[test]
    fn is_dominating_matches_definition(g in connected_graph(), mask in any::<u64>()) {
        let s = VertexSet::from_mask(g.n(), mask & ((1 << g.n()) - 1));
        let direct = (0..g.n()).all(|v| {
            s.contains(v)
                || g.edges().iter().any(|&(a, b, _)| {
                    (a == v && s.contains(b)) || (b == v && s.contains(a))
                })
        });
        prop_assert_eq!(g.is_dominating(&s), direct);
        if g.is_cds(&s) {
            prop_assert!(g.is_dominating(&s) && g.is_connected_induced(&s));
        }
    }

    // Adding a vertex never increases the cover term f_w2.
    #[test]
    fn f_w2_monotone_under_insertion(g in connected_graph(), extra in any::<prop::sample::Index>()) {
        let mut s = generate_greedy(&g);
        let (_, before, _) = eval_weight(&g, &s).unwrap();
        let outside: Vec<usize> = (0..g.n()).filter(|&v| !s.contains(v)).collect();
        if !outside.is_empty() {
            s.insert(outside[extra.index(outside.len())]);
            let (_, after, _) = eval_weight(&g, &s).unwrap();
            prop_assert!(after <= before + 1e-9);
        }
    }

    // The scalarized value is an affine combination of the two normalized
    // terms whenever alpha + beta = 1.
    #[test]
    fn scalarization_is_affine(g in connected_graph(), alpha in 0.0f64..=1.0) {
        let sw = ScalarWeights::new(alpha, 1.0 - alpha).unwrap();
        let s = generate_greedy(&g);
        let obj = eval_scalarized(&g, &s, &sw).unwrap();
        let lo = obj.f_c_norm.min(obj.f_w_norm);
        let hi = obj.f_c_norm.max(obj.f_w_norm);
        prop_assert!(obj.f >= lo - 1e-12 && obj.f <= hi + 1e-12);
        prop_assert!((obj.f_w - (obj.f_w1 + obj.f_w2)).abs() < 1e-12);
        prop_assert!(obj.f_c_norm >= 0.0 && obj.f_c_norm <= 1.0);
        prop_assert!(obj.f_w_norm >= 0.0 && obj.f_w_norm <= 1.0);
    }

    // Serialized instances reload to the same graph.
    #[test]
    fn instance_text_round_trips(g in connected_graph()) {
        let reloaded = Graph::parse(&g.to_instance_text()).unwrap();
        prop_assert_eq!(reloaded.n(), g.n());
        prop_assert_eq!(reloaded.edges(), g.edges());
        prop_assert_eq!(reloaded.total_weight(), g.total_weight());
    }
}
