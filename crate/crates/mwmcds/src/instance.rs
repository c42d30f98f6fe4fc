//! Benchmark-instance generation for the data-transfer model, and the
//! energy consumption of a backbone under that model.
//!
//! Every non-dominator transfers over its cheapest edge to a dominator.
//! A successful transfer costs the full edge distance, a dropped one half
//! of it. Intra-backbone relay cost is not modeled.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("target edge count {target_m} out of range for n={n}: simple connected graphs need {min} <= m <= {max}")]
    InfeasibleEdgeCount { n: usize, target_m: usize, min: usize, max: usize },
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
    #[error("set is not a connected dominating set")]
    NotCds,
    #[error("graph construction failed: {0}")]
    Graph(#[from] crate::graph::GraphError),
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub n: usize,
    pub target_m: usize,
    /// Per-instant transfer probability.
    pub p_t: f64,
    /// Drop probability for a transfer.
    pub p_d: f64,
    /// Inclusive bounds for integer edge distances.
    pub distance_range: (u64, u64),
    /// Number of transfer rounds.
    pub instants: usize,
    pub seed: u64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            n: 20,
            target_m: 40,
            p_t: 0.5,
            p_d: 0.5,
            distance_range: (1, 100),
            instants: 1,
            seed: 0,
        }
    }
}

impl GeneratorConfig {
    fn validate(&self) -> Result<(), InstanceError> {
        if self.n == 0 {
            return Err(InstanceError::InvalidConfig("n must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.p_t) || !(0.0..=1.0).contains(&self.p_d) {
            return Err(InstanceError::InvalidConfig(format!(
                "p_t and p_d must be in [0,1], got {} and {}",
                self.p_t, self.p_d
            )));
        }
        if self.distance_range.0 == 0 || self.distance_range.0 > self.distance_range.1 {
            return Err(InstanceError::InvalidConfig(format!(
                "distance range must be positive and ordered, got {:?}",
                self.distance_range
            )));
        }
        Ok(())
    }
}

pub fn max_simple_edges(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Connected random graph with exactly `target_m` edges: a random spanning
/// tree first, then uniformly chosen extra pairs. Deterministic per seed.
pub fn generate_instance(cfg: &GeneratorConfig) -> Result<Graph, InstanceError> {
    cfg.validate()?;
    let n = cfg.n;
    let min_m = n.saturating_sub(1);
    let max_m = max_simple_edges(n);
    if cfg.target_m < min_m || cfg.target_m > max_m {
        return Err(InstanceError::InfeasibleEdgeCount {
            n,
            target_m: cfg.target_m,
            min: min_m,
            max: max_m,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut chosen = std::collections::HashSet::new();
    for i in 1..n {
        let u = order[i];
        let v = order[rng.random_range(0..i)];
        chosen.insert((u.min(v), u.max(v)));
    }
    let mut extra: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|p| !chosen.contains(p))
        .collect();
    extra.shuffle(&mut rng);
    for &p in extra.iter().take(cfg.target_m - chosen.len()) {
        chosen.insert(p);
    }

    let mut pairs: Vec<(usize, usize)> = chosen.into_iter().collect();
    pairs.sort_unstable();
    let edges = pairs
        .into_iter()
        .map(|(u, v)| {
            let w = rng.random_range(cfg.distance_range.0..=cfg.distance_range.1);
            (u, v, w as f64)
        })
        .collect();
    Ok(Graph::new(n, edges)?)
}

/// Instance file content with the generator settings as comment side-car.
pub fn instance_text(cfg: &GeneratorConfig, g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("# n {}\n", g.n()));
    out.push_str(&format!("# m {}\n", g.m()));
    out.push_str(&format!("# p_t {}\n", cfg.p_t));
    out.push_str(&format!("# p_d {}\n", cfg.p_d));
    out.push_str(&format!(
        "# distance_range {} {}\n",
        cfg.distance_range.0, cfg.distance_range.1
    ));
    out.push_str(&format!("# instants {}\n", cfg.instants));
    out.push_str(&format!("# seed {}\n", cfg.seed));
    out.push_str(&g.to_instance_text());
    out
}

fn cheapest_links(g: &Graph, s: &VertexSet) -> Result<Vec<f64>, InstanceError> {
    if !g.is_cds(s) {
        return Err(InstanceError::NotCds);
    }
    let mut out = Vec::new();
    for u in 0..g.n() {
        if s.contains(u) {
            continue;
        }
        let d = g
            .neighbors(u)
            .iter()
            .filter(|&&(v, _)| s.contains(v))
            .map(|&(_, w)| w)
            .fold(f64::INFINITY, f64::min);
        out.push(d);
    }
    Ok(out)
}

/// Closed-form expected total energy over all instants: each non-dominator
/// contributes p_t * (d * (1 - p_d) + d/2 * p_d) per instant, where d is
/// its cheapest distance to a dominator.
pub fn energy_expected(
    g: &Graph,
    s: &VertexSet,
    cfg: &GeneratorConfig,
) -> Result<f64, InstanceError> {
    let links = cheapest_links(g, s)?;
    let per_instant: f64 = links
        .iter()
        .map(|d| cfg.p_t * (d * (1.0 - cfg.p_d) + d / 2.0 * cfg.p_d))
        .sum();
    Ok(cfg.instants as f64 * per_instant)
}

/// Monte Carlo realization of the same model.
pub fn energy_simulate<R: Rng>(
    g: &Graph,
    s: &VertexSet,
    cfg: &GeneratorConfig,
    rng: &mut R,
) -> Result<f64, InstanceError> {
    let links = cheapest_links(g, s)?;
    let mut total = 0.0;
    for _ in 0..cfg.instants {
        for &d in &links {
            if rng.random_range(0.0..1.0) < cfg.p_t {
                if rng.random_range(0.0..1.0) < cfg.p_d {
                    total += d / 2.0;
                } else {
                    total += d;
                }
            }
        }
    }
    Ok(total)
}
