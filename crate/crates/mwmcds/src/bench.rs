//! Benchmark harness: generate an instance grid, run the greedy baseline
//! and the annealer on each, and collect rows suitable for CSV output.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::annealer::{self, SAParams};
use crate::construct::generate_greedy;
use crate::instance::{self, GeneratorConfig};
use crate::objective::eval_scalarized;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("bench config error: {0}")]
    Config(String),
    #[error(transparent)]
    Instance(#[from] crate::instance::InstanceError),
    #[error(transparent)]
    Anneal(#[from] crate::annealer::AnnealError),
    #[error(transparent)]
    Objective(#[from] crate::objective::ObjectiveError),
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GridRow {
    pub n: usize,
    pub target_m: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct BenchConfig {
    pub rows: Vec<GridRow>,
    /// Edge-count targets above the simple-graph maximum are clamped to it.
    pub clamp_edges: bool,
    pub p_t: f64,
    pub p_d: f64,
    pub distance_range: (u64, u64),
    pub instants: usize,
    pub replicas: usize,
    pub master_seed: u64,
    pub solver: SAParams,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig::paper_grid()
    }
}

impl BenchConfig {
    /// The n/m grid of the source comparison table. The n=100 row asks for
    /// more edges than a simple graph allows and is clamped at run time.
    pub fn paper_grid() -> Self {
        let rows = [
            (20, 224),
            (30, 474),
            (40, 869),
            (50, 1325),
            (60, 2208),
            (70, 2992),
            (80, 3928),
            (90, 5002),
            (100, 5053),
        ]
        .into_iter()
        .map(|(n, target_m)| GridRow { n, target_m })
        .collect();
        BenchConfig {
            rows,
            clamp_edges: true,
            p_t: 0.5,
            p_d: 0.5,
            distance_range: (1, 100),
            instants: 1,
            replicas: 3,
            master_seed: 1,
            solver: SAParams { max_iterations: 3000, ..Default::default() },
        }
    }

    pub fn from_toml(text: &str) -> Result<Self, BenchError> {
        toml::from_str(text).map_err(|e| BenchError::Config(e.to_string()))
    }

    fn validate(&self) -> Result<(), BenchError> {
        if self.rows.is_empty() {
            return Err(BenchError::Config("rows must be nonempty".into()));
        }
        if self.replicas == 0 {
            return Err(BenchError::Config("replicas must be >= 1".into()));
        }
        Ok(())
    }

    /// Seed derivation rule: master_seed + 10_000 * row_index + replica.
    pub fn seed_for(&self, row_index: usize, replica: usize) -> u64 {
        self.master_seed
            .wrapping_add(10_000u64.wrapping_mul(row_index as u64))
            .wrapping_add(replica as u64)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub m: usize,
    pub instance_seed: u64,
    pub gsa_size: usize,
    pub greedy_size: usize,
    pub gsa_f_w: f64,
    pub greedy_f_w: f64,
    pub gsa_f: f64,
    pub greedy_f: f64,
    pub gsa_energy: f64,
    pub greedy_energy: f64,
}

impl BenchRecord {
    pub const CSV_HEADER: &'static str =
        "n,m,instance_seed,gsa_size,greedy_size,gsa_f_w,greedy_f_w,gsa_f,greedy_f,gsa_energy,greedy_energy";

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.instance_seed,
            self.gsa_size,
            self.greedy_size,
            self.gsa_f_w,
            self.greedy_f_w,
            self.gsa_f,
            self.greedy_f,
            self.gsa_energy,
            self.greedy_energy
        )
    }
}

/// Runs the full grid: one instance per row, `replicas` annealer runs per
/// instance, keeping the best replica by the objective comparison.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    cfg.validate()?;
    let sw = cfg.solver.scalar_weights()?;
    let mut records = Vec::new();
    for (row_index, row) in cfg.rows.iter().enumerate() {
        let max_m = instance::max_simple_edges(row.n);
        let target_m = if cfg.clamp_edges {
            row.target_m.min(max_m).max(row.n.saturating_sub(1))
        } else {
            row.target_m
        };
        let instance_seed = cfg.seed_for(row_index, 0);
        let gen_cfg = GeneratorConfig {
            n: row.n,
            target_m,
            p_t: cfg.p_t,
            p_d: cfg.p_d,
            distance_range: cfg.distance_range,
            instants: cfg.instants,
            seed: instance_seed,
        };
        let g = instance::generate_instance(&gen_cfg)?;

        let greedy = generate_greedy(&g);
        let greedy_obj = eval_scalarized(&g, &greedy, &sw)?;
        let greedy_energy = instance::energy_expected(&g, &greedy, &gen_cfg)?;

        let mut best: Option<crate::annealer::RunResult> = None;
        for replica in 0..cfg.replicas {
            let params = SAParams { seed: cfg.seed_for(row_index, replica), ..cfg.solver };
            let result = annealer::run(&g, &params)?;
            let better = match &best {
                None => true,
                Some(b) => {
                    result.objective.compare(&b.objective) == std::cmp::Ordering::Less
                }
            };
            if better {
                best = Some(result);
            }
        }
        let best = best.expect("replicas >= 1");
        let gsa_energy = instance::energy_expected(&g, &best.best_solution, &gen_cfg)?;

        records.push(BenchRecord {
            n: g.n(),
            m: g.m(),
            instance_seed,
            gsa_size: best.objective.f_c,
            greedy_size: greedy_obj.f_c,
            gsa_f_w: best.objective.f_w,
            greedy_f_w: greedy_obj.f_w,
            gsa_f: best.objective.f,
            greedy_f: greedy_obj.f,
            gsa_energy,
            greedy_energy,
        });
    }
    Ok(records)
}
