//! Exhaustive small-graph generation.
//!
//! Isomorphism classes on `n` vertices are grown from the classes on
//! `n - 1` by adding a vertex with every possible neighbourhood, then
//! deduplicated: candidates are bucketed by a cheap invariant and compared
//! with [`are_isomorphic`] inside a bucket.

use std::collections::HashMap;

use super::iso::are_isomorphic;
use super::Graph;

/// All labeled graphs on `n` vertices (`2^(n choose 2)` of them).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 64, "too many labeled graphs on {n} vertices");
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .expect("pairs are valid")
    })
}

type Fingerprint = (usize, Vec<(usize, Vec<usize>, usize)>);

/// Isomorphism-invariant fingerprint: edge count plus the sorted list of
/// (degree, sorted neighbour degrees, triangles through the vertex).
fn invariant(g: &Graph) -> Fingerprint {
    let n = g.vertex_count();
    let mut per_vertex: Vec<_> = (0..n)
        .map(|v| {
            let nb: Vec<usize> = g.neighbors(v).collect();
            let mut nd: Vec<usize> = nb.iter().map(|&u| g.degree(u)).collect();
            nd.sort_unstable();
            let tri = nb
                .iter()
                .enumerate()
                .map(|(i, &a)| nb[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
                .sum();
            (nb.len(), nd, tri)
        })
        .collect();
    per_vertex.sort();
    (g.edge_count(), per_vertex)
}

#[derive(Default)]
struct ClassSet {
    buckets: HashMap<Fingerprint, Vec<usize>>,
    reps: Vec<Graph>,
}

impl ClassSet {
    fn insert(&mut self, g: Graph) {
        let bucket = self.buckets.entry(invariant(&g)).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&self.reps[i], &g)) {
            return;
        }
        bucket.push(self.reps.len());
        self.reps.push(g);
    }
}

/// One representative per isomorphism class on exactly `n` vertices,
/// ordered by edge count and then by generation order (deterministic).
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    classes_through(n).pop().unwrap_or_default()
}

/// Representatives for every vertex count `1..=max_n`, concatenated in
/// increasing vertex count.
pub fn all_graphs_up_to_iso(max_n: usize) -> Vec<Graph> {
    classes_through(max_n)
        .into_iter()
        .skip(1)
        .flatten()
        .collect()
}

/// `out[n]` holds the classes on `n` vertices, `0..=max_n`.
fn classes_through(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::new(0)]];
    for n in 1..=max_n {
        let mut set = ClassSet::default();
        for base in &levels[n - 1] {
            let grown = base.with_extra_vertices(1);
            for mask in 0u64..1 << (n - 1) {
                let mut g = grown.clone();
                for u in (0..n - 1).filter(|u| mask >> u & 1 == 1) {
                    g.set(u, n - 1, true);
                }
                set.insert(g);
            }
        }
        let mut reps = set.reps;
        reps.sort_by_key(Graph::edge_count);
        levels.push(reps);
    }
    levels
}
