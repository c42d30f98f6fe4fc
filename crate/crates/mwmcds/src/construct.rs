//! Feasible-solution construction: deterministic greedy growth, its
//! randomized twin, and the initial solution pool.
//!
//! Construction is a coloring process. WHITE vertices are not yet
//! dominated, GRAY vertices are dominated but outside the solution, BLACK
//! vertices are in it. Growth promotes GRAY vertices until no WHITE
//! vertex remains, which makes feasibility structural: every promoted
//! vertex is adjacent to the existing BLACK set once it is nonempty.

use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("sol_size must be at least 1, got {0}")]
    EmptyPool(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    White,
    Gray,
    Black,
}

/// Per-vertex colors plus the maintained count of WHITE neighbors,
/// the current degree d_S(v) that drives greedy selection.
#[derive(Debug, Clone)]
pub struct ColorState {
    colors: Vec<Color>,
    white_degree: Vec<usize>,
    white_count: usize,
}

impl ColorState {
    /// All vertices WHITE; white degrees equal plain degrees.
    pub fn all_white(g: &Graph) -> Self {
        ColorState {
            colors: vec![Color::White; g.n()],
            white_degree: (0..g.n()).map(|v| g.degree(v)).collect(),
            white_count: g.n(),
        }
    }

    /// Colors derived from a membership set: BLACK for members, GRAY for
    /// dominated outsiders, WHITE for the rest.
    pub fn from_set(g: &Graph, s: &VertexSet) -> Self {
        let mut state = ColorState::all_white(g);
        for v in 0..g.n() {
            if s.contains(v) {
                state.set_color(g, v, Color::Black);
            } else if g.neighbors(v).iter().any(|&(u, _)| s.contains(u)) {
                state.set_color(g, v, Color::Gray);
            }
        }
        state
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v]
    }

    pub fn white_degree(&self, v: VertexId) -> usize {
        self.white_degree[v]
    }

    pub fn white_count(&self) -> usize {
        self.white_count
    }

    /// Marks the construction seed GRAY (it is not yet a member; the first
    /// growth step necessarily promotes it).
    pub fn seed_gray(&mut self, g: &Graph, v: VertexId) {
        self.set_color(g, v, Color::Gray);
    }

    fn set_color(&mut self, g: &Graph, v: VertexId, c: Color) {
        let old = self.colors[v];
        if old == c {
            return;
        }
        if old == Color::White {
            self.white_count -= 1;
            for &(u, _) in g.neighbors(v) {
                self.white_degree[u] -= 1;
            }
        }
        if c == Color::White {
            self.white_count += 1;
            for &(u, _) in g.neighbors(v) {
                self.white_degree[u] += 1;
            }
        }
        self.colors[v] = c;
    }

    /// Promotes `v` into `s`: BLACK color, WHITE neighbors become GRAY.
    fn promote(&mut self, g: &Graph, s: &mut VertexSet, v: VertexId) {
        self.set_color(g, v, Color::Black);
        s.insert(v);
        let grays: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .map(|&(u, _)| u)
            .filter(|&u| self.colors[u] == Color::White)
            .collect();
        for u in grays {
            self.set_color(g, u, Color::Gray);
        }
    }

    fn gray_vertices(&self, s: &VertexSet) -> Vec<VertexId> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == Color::Gray && !s.contains(v))
            .collect()
    }

    /// GRAY non-member with maximum white degree, ties to the lowest id.
    fn best_gray(&self, s: &VertexSet) -> Option<VertexId> {
        self.gray_vertices(s)
            .into_iter()
            .max_by_key(|&v| (self.white_degree[v], std::cmp::Reverse(v)))
    }
}

/// How growth steps pick among GRAY candidates.
pub(crate) enum Picker<'a, R: Rng> {
    Greedy,
    Random(&'a mut R),
}

impl<'a, R: Rng> Picker<'a, R> {
    fn pick(&mut self, state: &ColorState, s: &VertexSet) -> Option<VertexId> {
        match self {
            Picker::Greedy => state.best_gray(s),
            Picker::Random(rng) => {
                let grays = state.gray_vertices(s);
                if grays.is_empty() {
                    None
                } else {
                    Some(grays[rng.random_range(0..grays.len())])
                }
            }
        }
    }
}

/// Growth loop shared by construction and neighborhood repair. Promotes at
/// least once when `s` is empty (the seed must enter the solution), then
/// keeps promoting until no WHITE vertex remains.
pub(crate) fn grow<R: Rng>(
    g: &Graph,
    state: &mut ColorState,
    s: &mut VertexSet,
    picker: &mut Picker<R>,
) {
    while state.white_count() > 0 || s.is_empty() {
        let v = picker
            .pick(state, s)
            .expect("connected graph always exposes a GRAY vertex while growth is unfinished");
        state.promote(g, s, v);
    }
}

/// Deterministic greedy construction: seed the highest-degree vertex, then
/// repeatedly promote the GRAY vertex with the most WHITE neighbors.
pub fn generate_greedy(g: &Graph) -> VertexSet {
    let mut state = ColorState::all_white(g);
    let mut s = VertexSet::empty(g.n());
    let seed = (0..g.n())
        .max_by_key(|&v| (state.white_degree(v), std::cmp::Reverse(v)))
        .expect("graph is nonempty");
    state.seed_gray(g, seed);
    grow(g, &mut state, &mut s, &mut Picker::<rand::rngs::ThreadRng>::Greedy);
    debug_assert!(g.is_cds(&s));
    s
}

/// Randomized construction: uniform seed, uniform growth choices.
pub fn generate_random<R: Rng>(g: &Graph, rng: &mut R) -> VertexSet {
    let mut state = ColorState::all_white(g);
    let mut s = VertexSet::empty(g.n());
    let seed = rng.random_range(0..g.n());
    state.seed_gray(g, seed);
    grow(g, &mut state, &mut s, &mut Picker::Random(rng));
    debug_assert!(g.is_cds(&s));
    s
}

/// Initial pool: one greedy solution followed by `sol_size - 1` random ones.
pub fn generate_initial_pool<R: Rng>(
    g: &Graph,
    sol_size: usize,
    rng: &mut R,
) -> Result<Vec<VertexSet>, ConstructError> {
    if sol_size == 0 {
        return Err(ConstructError::EmptyPool(sol_size));
    }
    let mut pool = Vec::with_capacity(sol_size);
    pool.push(generate_greedy(g));
    for _ in 1..sol_size {
        pool.push(generate_random(g, rng));
    }
    Ok(pool)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn path4() -> Graph {
        Graph::new(4, vec![(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0)]).unwrap()
    }

    fn star5() -> Graph {
        Graph::new(5, vec![(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (0, 4, 1.0)]).unwrap()
    }

    #[test]
    fn greedy_star_picks_center() {
        assert_eq!(generate_greedy(&star5()).members(), vec![0]);
    }

    #[test]
    fn greedy_path4() {
        assert_eq!(generate_greedy(&path4()).members(), vec![1, 2]);
    }

    #[test]
    fn greedy_single_vertex() {
        let g = Graph::new(1, vec![]).unwrap();
        assert_eq!(generate_greedy(&g).members(), vec![0]);
    }

    #[test]
    fn greedy_is_deterministic() {
        let g = path4();
        assert_eq!(generate_greedy(&g), generate_greedy(&g));
    }

    #[test]
    fn random_k3_is_singleton() {
        let g = Graph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            assert_eq!(generate_random(&g, &mut rng).len(), 1);
        }
    }

    #[test]
    fn random_always_feasible() {
        let g = path4();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            assert!(g.is_cds(&generate_random(&g, &mut rng)));
        }
    }

    #[test]
    fn pool_shape() {
        let g = path4();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let pool = generate_initial_pool(&g, 5, &mut rng).unwrap();
        assert_eq!(pool.len(), 5);
        assert_eq!(pool[0], generate_greedy(&g));
        assert!(pool.iter().all(|s| g.is_cds(s)));

        let pool1 = generate_initial_pool(&g, 1, &mut rng).unwrap();
        assert_eq!(pool1, vec![generate_greedy(&g)]);

        assert!(generate_initial_pool(&g, 0, &mut rng).is_err());
    }

    #[test]
    fn from_set_matches_definition() {
        let g = path4();
        let s = VertexSet::from_members(4, &[1]);
        let state = ColorState::from_set(&g, &s);
        assert_eq!(state.color(1), Color::Black);
        assert_eq!(state.color(0), Color::Gray);
        assert_eq!(state.color(2), Color::Gray);
        assert_eq!(state.color(3), Color::White);
        assert_eq!(state.white_count(), 1);
        // 2's only WHITE neighbor is 3.
        assert_eq!(state.white_degree(2), 1);
        assert_eq!(state.white_degree(3), 0);
    }

    // Instrumented bookkeeping check: white_degree always equals a
    // from-scratch recount of WHITE neighbors.
    fn assert_degrees_consistent(g: &Graph, state: &ColorState) {
        for v in 0..g.n() {
            let recount = g
                .neighbors(v)
                .iter()
                .filter(|&&(u, _)| state.color(u) == Color::White)
                .count();
            assert_eq!(state.white_degree(v), recount, "vertex {v}");
        }
    }

    #[test]
    fn white_degree_bookkeeping() {
        let g = Graph::new(
            6,
            vec![
                (0, 1, 1.0),
                (1, 2, 1.0),
                (2, 3, 1.0),
                (3, 4, 1.0),
                (4, 5, 1.0),
                (5, 0, 1.0),
                (1, 4, 1.0),
            ],
        )
        .unwrap();
        let mut state = ColorState::all_white(&g);
        let mut s = VertexSet::empty(6);
        assert_degrees_consistent(&g, &state);
        state.set_color(&g, 1, Color::Gray);
        assert_degrees_consistent(&g, &state);
        while state.white_count() > 0 || s.is_empty() {
            let v = state.best_gray(&s).unwrap();
            state.promote(&g, &mut s, v);
            assert_degrees_consistent(&g, &state);
            // BLACK set stays connected as it grows.
            assert!(g.is_connected_induced(&s));
        }
        assert!(g.is_cds(&s));
    }
}
