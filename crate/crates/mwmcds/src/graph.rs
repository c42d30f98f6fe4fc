//! Immutable undirected edge-weighted graph plus the vertex-set predicates
//! (domination, induced connectivity) that every other module builds on.

use thiserror::Error;

pub type VertexId = usize;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("non-positive weight {weight} on edge ({u}, {v})")]
    NonPositiveWeight { u: VertexId, v: VertexId, weight: f64 },
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(VertexId, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph must have at least one vertex")]
    Empty,
}

/// Fixed-length membership-flag vector over the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    membership: Vec<bool>,
    size: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { membership: vec![false; n], size: 0 }
    }

    pub fn full(n: usize) -> Self {
        VertexSet { membership: vec![true; n], size: n }
    }

    pub fn from_members(n: usize, members: &[VertexId]) -> Self {
        let mut s = VertexSet::empty(n);
        for &v in members {
            s.insert(v);
        }
        s
    }

    /// Vertices 0..n set according to the low `n` bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut s = VertexSet::empty(n);
        for v in 0..n {
            if mask >> v & 1 == 1 {
                s.insert(v);
            }
        }
        s
    }

    pub fn insert(&mut self, v: VertexId) {
        if !self.membership[v] {
            self.membership[v] = true;
            self.size += 1;
        }
    }

    pub fn remove(&mut self, v: VertexId) {
        if self.membership[v] {
            self.membership[v] = false;
            self.size -= 1;
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.membership[v]
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Number of flags, i.e. the n of the graph this set belongs to.
    pub fn capacity(&self) -> usize {
        self.membership.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.membership
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(v, _)| v)
    }

    pub fn members(&self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

/// Immutable undirected graph with strictly positive edge weights.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId, f64)>,
    adjacency: Vec<Vec<(VertexId, f64)>>,
    total_weight: f64,
}

impl Graph {
    /// Builds and validates a graph. Rejects self-loops, duplicate edges,
    /// non-positive weights, out-of-range endpoints and disconnected inputs.
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId, f64)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        let mut total_weight = 0.0;
        for &(u, v, w) in &edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !(w > 0.0) {
                return Err(GraphError::NonPositiveWeight { u, v, weight: w });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adjacency[u].push((v, w));
            adjacency[v].push((u, w));
            total_weight += w;
        }
        let g = Graph { n, edges, adjacency, total_weight };
        if !g.is_connected_induced(&VertexSet::full(n)) {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Parses the text instance format: first non-comment line `n m`, then
    /// m lines `u v w`. Lines starting with `#` are comments.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match header {
                None => {
                    if fields.len() != 2 {
                        return Err(GraphError::Parse {
                            line: idx + 1,
                            msg: format!("expected header \"n m\", got {:?}", line),
                        });
                    }
                    let n = fields[0].parse().map_err(|e| GraphError::Parse {
                        line: idx + 1,
                        msg: format!("bad vertex count: {e}"),
                    })?;
                    let m = fields[1].parse().map_err(|e| GraphError::Parse {
                        line: idx + 1,
                        msg: format!("bad edge count: {e}"),
                    })?;
                    header = Some((n, m));
                }
                Some(_) => {
                    if fields.len() != 3 {
                        return Err(GraphError::Parse {
                            line: idx + 1,
                            msg: format!("expected \"u v w\", got {:?}", line),
                        });
                    }
                    let u = fields[0].parse().map_err(|e| GraphError::Parse {
                        line: idx + 1,
                        msg: format!("bad endpoint: {e}"),
                    })?;
                    let v = fields[1].parse().map_err(|e| GraphError::Parse {
                        line: idx + 1,
                        msg: format!("bad endpoint: {e}"),
                    })?;
                    let w = fields[2].parse().map_err(|e| GraphError::Parse {
                        line: idx + 1,
                        msg: format!("bad weight: {e}"),
                    })?;
                    edges.push((u, v, w));
                }
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse { line: 0, msg: "empty input".into() })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }

    /// Serializes back to the instance format (no comments).
    pub fn to_instance_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v, w) in &self.edges {
            // Integer weights round-trip without a trailing ".0".
            if w.fract() == 0.0 && w.abs() < 1e15 {
                out.push_str(&format!("{} {} {}\n", u, v, w as i64));
            } else {
                out.push_str(&format!("{} {} {}\n", u, v, w));
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId, f64)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, f64)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn total_weight(&self) -> f64 {
        self.total_weight
    }

    /// True iff every vertex is in `s` or adjacent to a member of `s`.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        debug_assert_eq!(s.capacity(), self.n);
        (0..self.n).all(|v| {
            s.contains(v) || self.adjacency[v].iter().any(|&(u, _)| s.contains(u))
        })
    }

    /// True iff `s` is nonempty and the subgraph induced by `s` is connected.
    /// The empty set is not connected.
    pub fn is_connected_induced(&self, s: &VertexSet) -> bool {
        debug_assert_eq!(s.capacity(), self.n);
        let start = match s.iter().next() {
            Some(v) => v,
            None => return false,
        };
        let mut visited = vec![false; self.n];
        let mut stack = vec![start];
        visited[start] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &(u, _) in &self.adjacency[v] {
                if s.contains(u) && !visited[u] {
                    visited[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == s.len()
    }

    /// Dominating and connected-induced together.
    pub fn is_cds(&self, s: &VertexSet) -> bool {
        self.is_dominating(s) && self.is_connected_induced(s)
    }

    /// Cut vertices of the subgraph induced by `s` (Tarjan lowpoint DFS).
    /// Requires `is_connected_induced(s)`.
    pub fn articulation_vertices_of_induced(&self, s: &VertexSet) -> VertexSet {
        assert!(self.is_connected_induced(s), "induced subgraph must be connected");
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut result = VertexSet::empty(n);
        let root = s.iter().next().expect("nonempty");
        let mut timer = 0usize;

        // Iterative DFS: (vertex, parent, neighbor cursor).
        let mut stack: Vec<(VertexId, Option<VertexId>, usize)> = vec![(root, None, 0)];
        disc[root] = 0;
        low[root] = 0;
        timer += 1;
        let mut root_children = 0usize;
        while !stack.is_empty() {
            let top = stack.len() - 1;
            let (v, parent, cursor) = stack[top];
            if cursor < self.adjacency[v].len() {
                stack[top].2 += 1;
                let (u, _) = self.adjacency[v][cursor];
                if !s.contains(u) {
                    continue;
                }
                if disc[u] == usize::MAX {
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((u, Some(v), 0));
                } else if Some(u) != parent {
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        result.insert(p);
                    }
                }
            }
        }
        if root_children > 1 {
            result.insert(root);
        }
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> Graph {
        Graph::new(4, vec![(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0)]).unwrap()
    }

    fn k3() -> Graph {
        Graph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap()
    }

    fn star5() -> Graph {
        Graph::new(5, vec![(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (0, 4, 1.0)]).unwrap()
    }

    #[test]
    fn parse_triangle() {
        let g = Graph::parse("3 3\n0 1 1.0\n1 2 1.0\n0 2 1.0\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(g.total_weight(), 3.0);
    }

    #[test]
    fn parse_single_vertex() {
        let g = Graph::parse("1 0\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.total_weight(), 0.0);
    }

    #[test]
    fn parse_rejects_disconnected() {
        let err = Graph::parse("4 2\n0 1 1\n2 3 1\n").unwrap_err();
        assert!(matches!(err, GraphError::Disconnected));
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(matches!(
            Graph::parse("3 1\n0 1\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            Graph::parse("2 1\n0 0 1.0\n"),
            Err(GraphError::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::parse("2 2\n0 1 1.0\n1 0 2.0\n"),
            Err(GraphError::DuplicateEdge(1, 0))
        ));
        assert!(matches!(
            Graph::parse("2 1\n0 1 0\n"),
            Err(GraphError::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            Graph::parse("2 1\n0 5 1.0\n"),
            Err(GraphError::VertexOutOfRange(5, 2))
        ));
    }

    #[test]
    fn parse_skips_comments() {
        let g = Graph::parse("# triangle\n3 3\n0 1 1\n# middle\n1 2 1\n0 2 1\n").unwrap();
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn instance_text_round_trip() {
        let g = path4();
        let g2 = Graph::parse(&g.to_instance_text()).unwrap();
        assert_eq!(g2.n(), g.n());
        assert_eq!(g2.edges(), g.edges());
    }

    #[test]
    fn dominating_basic() {
        assert!(k3().is_dominating(&VertexSet::from_members(3, &[0])));
        let g = path4();
        assert!(g.is_dominating(&VertexSet::from_members(4, &[1, 2])));
        assert!(!g.is_dominating(&VertexSet::from_members(4, &[0])));
    }

    #[test]
    fn connected_induced_basic() {
        let g = path4();
        assert!(g.is_connected_induced(&VertexSet::from_members(4, &[2])));
        assert!(!g.is_connected_induced(&VertexSet::from_members(4, &[0, 3])));
        assert!(g.is_connected_induced(&VertexSet::from_members(4, &[1, 2])));
        assert!(!g.is_connected_induced(&VertexSet::empty(4)));
    }

    #[test]
    fn cds_basic() {
        assert!(star5().is_cds(&VertexSet::from_members(5, &[0])));
        assert!(!path4().is_cds(&VertexSet::from_members(4, &[0, 3])));
        assert!(k3().is_cds(&VertexSet::from_members(3, &[0, 1])));
    }

    #[test]
    fn full_set_always_connected() {
        for g in [path4(), k3(), star5()] {
            assert!(g.is_connected_induced(&VertexSet::full(g.n())));
        }
    }

    #[test]
    fn articulation_points_basic() {
        let g = path4();
        let art = g.articulation_vertices_of_induced(&VertexSet::from_members(4, &[1, 2, 3]));
        assert_eq!(art.members(), vec![2]);

        let art = k3().articulation_vertices_of_induced(&VertexSet::full(3));
        assert!(art.is_empty());

        let art = g.articulation_vertices_of_induced(&VertexSet::from_members(4, &[1]));
        assert!(art.is_empty());
    }

    #[test]
    fn articulation_star_center() {
        let g = star5();
        let art = g.articulation_vertices_of_induced(&VertexSet::full(5));
        assert_eq!(art.members(), vec![0]);
    }

    // Brute-force reference: v is an articulation vertex of the induced
    // subgraph iff removing it disconnects a connected set of size >= 2.
    fn articulation_brute(g: &Graph, s: &VertexSet) -> Vec<VertexId> {
        s.iter()
            .filter(|&v| {
                let mut t = s.clone();
                t.remove(v);
                t.len() >= 1 && !g.is_connected_induced(&t)
            })
            .collect()
    }

    #[test]
    fn articulation_matches_brute_force_exhaustively() {
        // All connected induced subsets of a few fixed graphs with n <= 8.
        let graphs = vec![
            path4(),
            k3(),
            star5(),
            Graph::new(
                6,
                vec![
                    (0, 1, 1.0),
                    (1, 2, 1.0),
                    (2, 3, 1.0),
                    (3, 0, 1.0),
                    (3, 4, 1.0),
                    (4, 5, 1.0),
                ],
            )
            .unwrap(),
            Graph::new(
                8,
                vec![
                    (0, 1, 1.0),
                    (1, 2, 1.0),
                    (2, 0, 1.0),
                    (2, 3, 1.0),
                    (3, 4, 1.0),
                    (4, 5, 1.0),
                    (5, 3, 1.0),
                    (5, 6, 1.0),
                    (6, 7, 1.0),
                ],
            )
            .unwrap(),
        ];
        for g in &graphs {
            for mask in 1u64..(1 << g.n()) {
                let s = VertexSet::from_mask(g.n(), mask);
                if !g.is_connected_induced(&s) {
                    continue;
                }
                assert_eq!(
                    g.articulation_vertices_of_induced(&s).members(),
                    articulation_brute(g, &s),
                    "graph n={} mask={:b}",
                    g.n(),
                    mask
                );
            }
        }
    }
}
