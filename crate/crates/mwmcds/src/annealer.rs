//! Pool-seeded simulated annealing with Metropolis acceptance, k-step
//! geometric cooling and reheating back to the initial temperature.
//!
//! One run is strictly sequential and fully determined by the parameter
//! seed. A single ChaCha stream drives, in order per iteration: the move
//! coin, the pool draw (random branch only), the neighbor's internal
//! randomness, and the acceptance draw (only when the neighbor is not a
//! strict improvement).

use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::generate_initial_pool;
use crate::graph::{Graph, VertexSet};
use crate::neighborhood::{neighbor_greedy, neighbor_random};
use crate::objective::{eval_scalarized, ObjectiveValue, ScalarWeights};

#[derive(Debug, Error)]
pub enum AnnealError {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error(transparent)]
    Objective(#[from] crate::objective::ObjectiveError),
}

/// Which multiplier the cooling step applies when a temperature level ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum CoolingReading {
    /// T <- T * (1 - gamma).
    #[default]
    Literal,
    /// T <- T * gamma.
    Gamma,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default)]
pub struct SAParams {
    pub alpha: f64,
    pub beta: f64,
    pub t0: f64,
    pub k: usize,
    pub gamma: f64,
    pub cooling: CoolingReading,
    pub sol_size: usize,
    pub max_iterations: usize,
    pub seed: u64,
    /// Alg. threshold for choosing the greedy move: greedy when p > 0.5.
    pub greedy_move_threshold: f64,
    /// Record a per-iteration trace in the result.
    pub trace: bool,
}

impl Default for SAParams {
    fn default() -> Self {
        SAParams {
            alpha: 0.5,
            beta: 0.5,
            t0: 100.0,
            k: 3,
            gamma: 0.9,
            cooling: CoolingReading::Literal,
            sol_size: 50,
            max_iterations: 10_000,
            seed: 0,
            greedy_move_threshold: 0.5,
            trace: false,
        }
    }
}

impl SAParams {
    pub fn scalar_weights(&self) -> Result<ScalarWeights, AnnealError> {
        ScalarWeights::new(self.alpha, self.beta)
            .map_err(|e| AnnealError::InvalidParam(e.to_string()))
    }

    pub fn validate(&self) -> Result<(), AnnealError> {
        self.scalar_weights()?;
        if !(self.t0 > 1.0) {
            return Err(AnnealError::InvalidParam(format!(
                "t0 must be > 1 (reheating targets T < 1), got {}",
                self.t0
            )));
        }
        if !(self.gamma > 0.0 && self.gamma < 1.0) {
            return Err(AnnealError::InvalidParam(format!(
                "gamma must be in (0,1), got {}",
                self.gamma
            )));
        }
        if self.k == 0 {
            return Err(AnnealError::InvalidParam("k must be >= 1".into()));
        }
        if self.sol_size == 0 {
            return Err(AnnealError::InvalidParam("sol_size must be >= 1".into()));
        }
        if self.max_iterations == 0 {
            return Err(AnnealError::InvalidParam("max_iterations must be >= 1".into()));
        }
        Ok(())
    }

    fn cooling_multiplier(&self) -> f64 {
        match self.cooling {
            CoolingReading::Literal => 1.0 - self.gamma,
            CoolingReading::Gamma => self.gamma,
        }
    }
}

/// k-step geometric cooling with reheating to t0 once T would drop below 1.
#[derive(Debug, Clone)]
pub struct TemperatureSchedule {
    t0: f64,
    k: usize,
    multiplier: f64,
    level: i32,
    level_counter: usize,
}

impl TemperatureSchedule {
    pub fn new(t0: f64, k: usize, multiplier: f64) -> Self {
        TemperatureSchedule { t0, k, multiplier, level: 0, level_counter: 0 }
    }

    /// Closed form t0 * multiplier^level, so repeated cooling does not
    /// accumulate rounding error across levels.
    pub fn current(&self) -> f64 {
        self.t0 * self.multiplier.powi(self.level)
    }

    /// One end-of-iteration update: after k iterations at a level the
    /// temperature is multiplied; below 1 it reheats to t0. The threshold
    /// carries a small epsilon so a level that is 1.0 up to rounding (for
    /// example 100 * (1 - 0.9)^2) still runs at temperature ~1.
    pub fn step(&mut self) {
        self.level_counter += 1;
        if self.level_counter == self.k {
            self.level_counter = 0;
            self.level += 1;
            if self.current() < 1.0 - 1e-9 {
                self.level = 0;
            }
        }
    }
}

/// Metropolis rule: strict improvements always pass; otherwise accept with
/// probability exp(-(f_neighbor - f_current) / temperature). A zero delta
/// passes with probability one and consumes a draw.
pub fn accept<R: Rng>(
    temperature: f64,
    f_current: f64,
    f_neighbor: f64,
    rng: &mut R,
) -> bool {
    debug_assert!(temperature > 0.0);
    if f_neighbor < f_current {
        return true;
    }
    let p = (-(f_neighbor - f_current) / temperature).exp();
    rng.random_range(0.0..1.0) < p
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TraceRecord {
    pub iteration: usize,
    pub temperature: f64,
    pub incumbent_f: f64,
    pub neighbor_f: f64,
    pub accepted: bool,
    pub best_f: f64,
}

#[derive(Debug, Clone)]
pub struct RunResult {
    pub best_solution: VertexSet,
    pub objective: ObjectiveValue,
    pub iterations_executed: usize,
    pub best_found_at: usize,
    pub wall_time: Duration,
    pub trace: Option<Vec<TraceRecord>>,
}

/// Uniform draw from the (static) solution pool.
pub fn pick_pool_member<'a, R: Rng>(pool: &'a [VertexSet], rng: &mut R) -> &'a VertexSet {
    assert!(!pool.is_empty(), "pool must be nonempty");
    &pool[rng.random_range(0..pool.len())]
}

/// The GSA main loop.
pub fn run(g: &Graph, params: &SAParams) -> Result<RunResult, AnnealError> {
    params.validate()?;
    let sw = params.scalar_weights()?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    let pool = generate_initial_pool(g, params.sol_size, &mut rng)
        .map_err(|e| AnnealError::InvalidParam(e.to_string()))?;
    let pool_objs: Vec<ObjectiveValue> = pool
        .iter()
        .map(|s| eval_scalarized(g, s, &sw))
        .collect::<Result<_, _>>()?;

    let mut schedule = TemperatureSchedule::new(params.t0, params.k, params.cooling_multiplier());

    let best_idx = (0..pool.len())
        .min_by(|&a, &b| pool_objs[a].compare(&pool_objs[b]))
        .expect("pool is nonempty");
    let mut best = pool[best_idx].clone();
    let mut best_obj = pool_objs[best_idx];
    let mut best_found_at = 0usize;

    let mut current = best.clone();
    let mut current_obj = best_obj;

    let mut trace = params.trace.then(Vec::new);

    for iteration in 1..=params.max_iterations {
        let temperature = schedule.current();
        let p: f64 = rng.random_range(0.0..1.0);
        let neighbor = if p > params.greedy_move_threshold {
            neighbor_greedy(g, &current)
        } else {
            let idx = rng.random_range(0..pool.len());
            current = pool[idx].clone();
            current_obj = pool_objs[idx];
            neighbor_random(g, &current, &mut rng)
        };
        let neighbor_obj = eval_scalarized(g, &neighbor, &sw)?;
        debug_assert!(g.is_cds(&neighbor));

        if neighbor_obj.compare(&best_obj) == std::cmp::Ordering::Less {
            best = neighbor.clone();
            best_obj = neighbor_obj;
            best_found_at = iteration;
        }
        let accepted = accept(temperature, current_obj.f, neighbor_obj.f, &mut rng);
        if let Some(t) = trace.as_mut() {
            t.push(TraceRecord {
                iteration,
                temperature,
                incumbent_f: current_obj.f,
                neighbor_f: neighbor_obj.f,
                accepted,
                best_f: best_obj.f,
            });
        }
        if accepted {
            current = neighbor;
            current_obj = neighbor_obj;
        }
        schedule.step();
    }

    assert!(g.is_cds(&best), "best solution must be a CDS");
    let objective = eval_scalarized(g, &best, &sw)?;
    Ok(RunResult {
        best_solution: best,
        objective,
        iterations_executed: params.max_iterations,
        best_found_at,
        wall_time: start.elapsed(),
        trace,
    })
}
