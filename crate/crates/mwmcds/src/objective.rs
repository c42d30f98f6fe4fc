//! Cardinality and weight objectives, their normalizations and the
//! weighted-sum scalarization used to rank candidate solutions.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error)]
pub enum ObjectiveError {
    #[error("vertex {0} has no dominator in the given set")]
    UndominatedVertex(usize),
    #[error("invalid scalarization weights: alpha={alpha}, beta={beta} (must be in [0,1] and sum to 1)")]
    InvalidWeights { alpha: f64, beta: f64 },
}

/// Scalarization coefficients; alpha weighs cardinality, beta weighs weight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalarWeights {
    alpha: f64,
    beta: f64,
}

impl ScalarWeights {
    pub fn new(alpha: f64, beta: f64) -> Result<Self, ObjectiveError> {
        let valid = (0.0..=1.0).contains(&alpha)
            && (0.0..=1.0).contains(&beta)
            && (alpha + beta - 1.0).abs() <= 1e-9;
        if valid {
            Ok(ScalarWeights { alpha, beta })
        } else {
            Err(ObjectiveError::InvalidWeights { alpha, beta })
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

impl Default for ScalarWeights {
    fn default() -> Self {
        ScalarWeights { alpha: 0.5, beta: 0.5 }
    }
}

/// Full objective breakdown of one candidate solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveValue {
    pub f_c: usize,
    pub f_w1: f64,
    pub f_w2: f64,
    pub f_w: f64,
    pub f_c_norm: f64,
    pub f_w_norm: f64,
    pub f: f64,
}

impl ObjectiveValue {
    /// Total order by scalarized value, ties broken by smaller cardinality,
    /// then smaller weight. Comparisons are exact, no epsilon.
    pub fn compare(&self, other: &ObjectiveValue) -> Ordering {
        self.f
            .partial_cmp(&other.f)
            .expect("objective values are finite")
            .then(self.f_c.cmp(&other.f_c))
            .then(self.f_w.partial_cmp(&other.f_w).expect("finite"))
    }
}

pub fn eval_cardinality(s: &VertexSet) -> usize {
    s.len()
}

/// Weight objective: intra-set edge weights plus, for every outside vertex,
/// the cheapest edge to a member. Errors if some outside vertex has none.
pub fn eval_weight(g: &Graph, s: &VertexSet) -> Result<(f64, f64, f64), ObjectiveError> {
    let mut f_w1 = 0.0;
    for &(u, v, w) in g.edges() {
        if s.contains(u) && s.contains(v) {
            f_w1 += w;
        }
    }
    let mut f_w2 = 0.0;
    for u in 0..g.n() {
        if s.contains(u) {
            continue;
        }
        let best = g
            .neighbors(u)
            .iter()
            .filter(|&&(v, _)| s.contains(v))
            .map(|&(_, w)| w)
            .fold(f64::INFINITY, f64::min);
        if best.is_infinite() {
            return Err(ObjectiveError::UndominatedVertex(u));
        }
        f_w2 += best;
    }
    Ok((f_w1, f_w2, f_w1 + f_w2))
}

/// Normalized, scalarized objective. Cardinality is normalized by n, weight
/// by the sum of all edge weights; a single-vertex graph has weight term 0.
pub fn eval_scalarized(
    g: &Graph,
    s: &VertexSet,
    sw: &ScalarWeights,
) -> Result<ObjectiveValue, ObjectiveError> {
    let f_c = eval_cardinality(s);
    let (f_w1, f_w2, f_w) = eval_weight(g, s)?;
    let f_c_norm = f_c as f64 / g.n() as f64;
    let f_w_norm = if g.total_weight() > 0.0 {
        f_w / g.total_weight()
    } else {
        0.0
    };
    let f = sw.alpha() * f_c_norm + sw.beta() * f_w_norm;
    Ok(ObjectiveValue { f_c, f_w1, f_w2, f_w, f_c_norm, f_w_norm, f })
}
