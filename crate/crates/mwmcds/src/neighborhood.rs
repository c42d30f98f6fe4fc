//! Neighbor moves: remove one dominator, recolor, then repair with the
//! same growth loop used for construction.
//!
//! Removal candidates are restricted to non-articulation vertices of the
//! induced subgraph (any vertex when the set has at most two members), so
//! that repair always starts from a connected BLACK set and the output is
//! guaranteed feasible. If no candidate exists the input is returned
//! unchanged.

use rand::Rng;

use crate::construct::{grow, ColorState, Picker};
use crate::graph::{Graph, VertexId, VertexSet};

fn removal_candidates(g: &Graph, s: &VertexSet) -> Vec<VertexId> {
    if s.len() <= 1 {
        // Removing the sole member would force a rebuild from scratch;
        // a singleton solution is a fixed point of both moves.
        return Vec::new();
    }
    if s.len() == 2 {
        return s.members();
    }
    let articulation = g.articulation_vertices_of_induced(s);
    s.iter().filter(|&v| !articulation.contains(v)).collect()
}

/// Greedy move: drop the member with minimum static degree (ties to the
/// lowest id) among connectivity-safe candidates, then repair greedily.
pub fn neighbor_greedy(g: &Graph, s: &VertexSet) -> VertexSet {
    debug_assert!(g.is_cds(s));
    let candidates = removal_candidates(g, s);
    let Some(&v) = candidates.iter().min_by_key(|&&v| (g.degree(v), v)) else {
        return s.clone();
    };
    let mut out = s.clone();
    out.remove(v);
    // Recoloring by actual domination status: GRAY iff a dominator remains,
    // WHITE otherwise. This covers the removed vertex and its neighbors.
    let mut state = ColorState::from_set(g, &out);
    grow(g, &mut state, &mut out, &mut Picker::<rand::rngs::ThreadRng>::Greedy);
    debug_assert!(g.is_cds(&out));
    out
}

/// Random move: drop a uniformly chosen safe member, repair with uniform
/// growth choices.
pub fn neighbor_random<R: Rng>(g: &Graph, s: &VertexSet, rng: &mut R) -> VertexSet {
    debug_assert!(g.is_cds(s));
    let candidates = removal_candidates(g, s);
    if candidates.is_empty() {
        return s.clone();
    }
    let v = candidates[rng.random_range(0..candidates.len())];
    let mut out = s.clone();
    out.remove(v);
    let mut state = ColorState::from_set(g, &out);
    grow(g, &mut state, &mut out, &mut Picker::Random(rng));
    debug_assert!(g.is_cds(&out));
    out
}
