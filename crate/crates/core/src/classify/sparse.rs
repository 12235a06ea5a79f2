//! Sparse (ℓ, h)-degree graphs: exactly two degrees `low < high`, and each
//! degree class induces at most one edge.

use serde::{Deserialize, Serialize};

use crate::graph::iso::are_isomorphic;
use crate::graph::named::t_diamond;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseLH {
    pub low: usize,
    pub high: usize,
    pub low_vertices: Vec<usize>,
    pub high_vertices: Vec<usize>,
    /// the single edge inside the low class, if any
    pub low_edge: Option<(usize, usize)>,
    /// the single edge inside the high class, if any
    pub high_edge: Option<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SparseCase {
    /// both classes independent
    Case1,
    /// high class has its edge, low class independent
    Case2,
    /// high class independent, low class has its edge
    Case3,
    /// both classes have an edge
    Case4,
}

impl SparseLH {
    pub fn edges_in_low(&self) -> usize {
        usize::from(self.low_edge.is_some())
    }

    pub fn edges_in_high(&self) -> usize {
        usize::from(self.high_edge.is_some())
    }

    pub fn case(&self) -> SparseCase {
        sparse_case(self)
    }
}

fn single_edge_within(g: &Graph, vs: &[usize]) -> Result<Option<(usize, usize)>, ()> {
    let mut found = None;
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if g.has_edge(a, b) {
                if found.is_some() {
                    return Err(());
                }
                found = Some((a.min(b), a.max(b)));
            }
        }
    }
    Ok(found)
}

pub fn recognize_sparse_lh(g: &Graph) -> Option<SparseLH> {
    let profile = g.degree_profile();
    if profile.by_degree.len() != 2 {
        return None;
    }
    let (low, high) = (profile.min_degree, profile.max_degree);
    let low_vertices = profile.vertices_with_degree(low).to_vec();
    let high_vertices = profile.vertices_with_degree(high).to_vec();
    let low_edge = single_edge_within(g, &low_vertices).ok()?;
    let high_edge = single_edge_within(g, &high_vertices).ok()?;
    Some(SparseLH {
        low,
        high,
        low_vertices,
        high_vertices,
        low_edge,
        high_edge,
    })
}

pub fn sparse_case(s: &SparseLH) -> SparseCase {
    match (s.edges_in_high(), s.edges_in_low()) {
        (0, 0) => SparseCase::Case1,
        (1, 0) => SparseCase::Case2,
        (0, 1) => SparseCase::Case3,
        _ => SparseCase::Case4,
    }
}

/// `Some(t)` when `g` is isomorphic to `K_2 + tK_1`.
pub fn t_diamond_order(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() != 2 * (n - 2) + 1 {
        return None;
    }
    let t = n - 2;
    are_isomorphic(g, &t_diamond(t).ok()?).then_some(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn three_diamond() {
        let s = recognize_sparse_lh(&t_diamond(3).unwrap()).unwrap();
        assert_eq!(
            (s.low, s.high, s.edges_in_low(), s.edges_in_high()),
            (2, 4, 0, 1)
        );
        assert_eq!(s.case(), SparseCase::Case2);
    }

    #[test]
    fn regular_is_not_sparse_lh() {
        assert_eq!(recognize_sparse_lh(&complete(4).unwrap()), None);
        assert_eq!(recognize_sparse_lh(&cycle(5).unwrap()), None);
    }

    #[test]
    fn p4_buckets() {
        let s = recognize_sparse_lh(&path(4).unwrap()).unwrap();
        assert_eq!(
            (s.low, s.high, s.edges_in_low(), s.edges_in_high()),
            (1, 2, 0, 1)
        );
        assert_eq!(s.high_edge, Some((1, 2)));
        assert_eq!(s.case(), SparseCase::Case2);
    }

    #[test]
    fn k23_is_case1() {
        let s = recognize_sparse_lh(&complete_bipartite(2, 3).unwrap()).unwrap();
        assert_eq!((s.low, s.high), (2, 3));
        assert_eq!(s.case(), SparseCase::Case1);
    }

    #[test]
    fn three_degrees_or_dense_classes_rejected() {
        // P5 minus nothing: degrees 1,2 but the high class {1,2,3} spans two edges
        assert_eq!(recognize_sparse_lh(&path(5).unwrap()), None);
        // star plus pendant path has degrees 1, 2, 3
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(recognize_sparse_lh(&g), None);
    }

    #[test]
    fn t_diamond_detection() {
        assert_eq!(t_diamond_order(&diamond()), Some(2));
        assert_eq!(t_diamond_order(&t_diamond(5).unwrap()), Some(5));
        assert_eq!(t_diamond_order(&complete(3).unwrap()), Some(1));
        assert_eq!(t_diamond_order(&cycle(4).unwrap()), None);
    }
}
