//! Exhaustive-enumeration exact solver for small instances; ground truth
//! for the metaheuristic and the objective evaluation.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::objective::{eval_scalarized, ObjectiveValue, ScalarWeights};

pub const DEFAULT_ENUM_CAP: usize = 20;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("instance too large for enumeration: n = {n} exceeds cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Objective(#[from] crate::objective::ObjectiveError),
}

/// Streams every connected dominating set of `g`, each exactly once.
pub fn enumerate_feasible(
    g: &Graph,
    cap: usize,
) -> Result<impl Iterator<Item = VertexSet> + '_, OracleError> {
    let n = g.n();
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    Ok((1u64..(1u64 << n))
        .map(move |mask| VertexSet::from_mask(n, mask))
        .filter(move |s| g.is_cds(s)))
}

/// Minimum-F connected dominating set. Ties resolved by the objective
/// comparison, then by the lexicographically smallest member list.
pub fn exact_optimum(
    g: &Graph,
    sw: &ScalarWeights,
    cap: usize,
) -> Result<(VertexSet, ObjectiveValue), OracleError> {
    let mut best: Option<(VertexSet, ObjectiveValue)> = None;
    for s in enumerate_feasible(g, cap)? {
        let obj = eval_scalarized(g, &s, sw)?;
        let better = match &best {
            None => true,
            Some((bs, bo)) => match obj.compare(bo) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => s.members() < bs.members(),
                std::cmp::Ordering::Greater => false,
            },
        };
        if better {
            best = Some((s, obj));
        }
    }
    Ok(best.expect("connected graph always has a CDS (the full vertex set)"))
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

    #[test]
    fn single_vertex_enumeration() {
        let g = Graph::new(1, vec![]).unwrap();
        let sets: Vec<_> = enumerate_feasible(&g, DEFAULT_ENUM_CAP).unwrap().collect();
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].members(), vec![0]);
    }

    #[test]
    fn path4_feasible_sets() {
        let g = path4();
        let sets: Vec<Vec<usize>> = enumerate_feasible(&g, DEFAULT_ENUM_CAP)
            .unwrap()
            .map(|s| s.members())
            .collect();
        assert!(sets.contains(&vec![1, 2]));
        assert!(sets.contains(&vec![0, 1, 2]));
        assert!(sets.contains(&vec![1, 2, 3]));
        assert!(sets.contains(&vec![0, 1, 2, 3]));
        assert!(!sets.contains(&vec![0, 3]));
        assert_eq!(sets.len(), 4);
    }

    #[test]
    fn k3_all_nonempty_subsets_feasible() {
        let g = k3();
        assert_eq!(enumerate_feasible(&g, DEFAULT_ENUM_CAP).unwrap().count(), 7);
    }

    #[test]
    fn cap_enforced() {
        let g = path4();
        assert!(matches!(
            enumerate_feasible(&g, 3).err(),
            Some(OracleError::TooLarge { n: 4, cap: 3 })
        ));
    }

    #[test]
    fn optimum_star() {
        let g =
            Graph::new(5, vec![(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (0, 4, 1.0)]).unwrap();
        let (s, obj) = exact_optimum(&g, &ScalarWeights::default(), DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(s.members(), vec![0]);
        assert_eq!(obj.f_c, 1);
    }

    #[test]
    fn optimum_path4() {
        let (s, obj) =
            exact_optimum(&path4(), &ScalarWeights::default(), DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(s.members(), vec![1, 2]);
        assert_eq!(obj.f, 0.75);
    }

    #[test]
    fn optimum_k3_tie_breaks_to_lowest_id() {
        let (s, obj) = exact_optimum(&k3(), &ScalarWeights::default(), DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(s.members(), vec![0]);
        assert_eq!(obj.f, 0.5);
    }

    #[test]
    fn enumeration_matches_predicate_over_power_set() {
        let g = Graph::new(
            5,
            vec![(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0), (4, 0, 1.0)],
        )
        .unwrap();
        let enumerated: std::collections::HashSet<Vec<usize>> =
            enumerate_feasible(&g, DEFAULT_ENUM_CAP)
                .unwrap()
                .map(|s| s.members())
                .collect();
        let mut direct = std::collections::HashSet::new();
        for mask in 0u64..(1 << g.n()) {
            let s = VertexSet::from_mask(g.n(), mask);
            if g.is_cds(&s) {
                direct.insert(s.members());
            }
        }
        assert_eq!(enumerated, direct);
    }

    #[test]
    fn optimum_not_worse_than_greedy() {
        let g = path4();
        let greedy = crate::construct::generate_greedy(&g);
        let sw = ScalarWeights::default();
        let greedy_obj = eval_scalarized(&g, &greedy, &sw).unwrap();
        let (_, opt) = exact_optimum(&g, &sw, DEFAULT_ENUM_CAP).unwrap();
        assert!(opt.f <= greedy_obj.f);
    }
}
