//! Exhaustive search for small sparse (l,h)-degree patterns of a given case.

use crate::classify::sparse::{recognize_sparse_lh, t_diamond_order, SparseCase};
use crate::graph::enumerate::graphs_up_to_iso;
use crate::graph::Graph;

/// First graph, by vertex count then enumeration order, with at most
/// `max_n` vertices satisfying `pred`.
pub fn first_graph(max_n: usize, mut pred: impl FnMut(&Graph) -> bool) -> Option<Graph> {
    (1..=max_n).find_map(|n| graphs_up_to_iso(n).into_iter().find(|g| pred(g)))
}

/// Sparse with low degree at least 2 and an edge inside the low class;
/// `case` picks whether the high class is independent (3) or not (4).
pub fn is_low_pair_pattern(g: &Graph, case: SparseCase) -> bool {
    matches!(case, SparseCase::Case3 | SparseCase::Case4)
        && recognize_sparse_lh(g).is_some_and(|s| s.low >= 2 && s.case() == case)
}

/// Sparse with low degree at least 2, the only class edge in the high
/// class, and not a t-diamond.
pub fn is_high_pair_pattern(g: &Graph) -> bool {
    recognize_sparse_lh(g).is_some_and(|s| s.low >= 2 && s.case() == SparseCase::Case2)
        && t_diamond_order(g).is_none()
}

pub fn low_pair_witness(max_n: usize, case: SparseCase) -> Option<Graph> {
    first_graph(max_n, |g| is_low_pair_pattern(g, case))
}

pub fn high_pair_witness(max_n: usize) -> Option<Graph> {
    first_graph(max_n, is_high_pair_pattern)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso::are_isomorphic;

    #[test]
    fn smallest_low_pair_witnesses() {
        let w3 = low_pair_witness(8, SparseCase::Case3).unwrap();
        assert_eq!(w3.vertex_count(), 6);
        // the house: a 4-cycle with a roof vertex on one side
        let w4 = low_pair_witness(8, SparseCase::Case4).unwrap();
        let house = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]).unwrap();
        assert!(are_isomorphic(&w4, &house));
    }

    #[test]
    fn smallest_high_pair_witness_has_eight_vertices() {
        assert_eq!(high_pair_witness(7), None);
        let w = high_pair_witness(8).unwrap();
        assert!(is_high_pair_pattern(&w));
        assert_eq!(w.vertex_count(), 8);
    }
}
