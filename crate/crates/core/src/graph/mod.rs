//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex, which keeps the
//! induced-subgraph searches in [`iso`] cheap: candidate sets are computed
//! by intersecting rows.

pub mod enumerate;
pub mod io;
pub mod iso;
pub mod named;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub(crate) const WORD: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Iterates the set bits of a bitset in increasing order.
pub(crate) fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * WORD + b)
            }
        })
    })
}

pub(crate) fn full_set(n: usize) -> Vec<u64> {
    let mut bits = vec![!0u64; words_for(n)];
    if !n.is_multiple_of(WORD) {
        if let Some(last) = bits.last_mut() {
            *last = (1u64 << (n % WORD)) - 1;
        }
    }
    bits
}

pub(crate) fn set_from(n: usize, vs: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut bits = vec![0u64; words_for(n)];
    for v in vs {
        bits[v / WORD] |= 1 << (v % WORD);
    }
    bits
}

/// Simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// Vertices grouped by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub by_degree: BTreeMap<usize, Vec<usize>>,
}

impl DegreeProfile {
    pub fn vertices_with_degree(&self, d: usize) -> &[usize] {
        self.by_degree.get(&d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_regular(&self) -> bool {
        self.by_degree.len() <= 1
    }
}

impl Graph {
    /// The null graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.check_pair(u, v)?;
            g.set(u, v, true);
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let twice: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        twice as usize / 2
    }

    /// Number of unordered vertex pairs that are not edges.
    pub fn non_edge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.edge_count()
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (u * self.words + v / WORD, v % WORD);
        let (wv, bv) = (v * self.words + u / WORD, u % WORD);
        if on {
            self.rows[wu] |= 1 << bu;
            self.rows[wv] |= 1 << bv;
        } else {
            self.rows[wu] &= !(1 << bu);
            self.rows[wv] &= !(1 << bv);
        }
    }

    /// Adds `{u, v}`; returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        let fresh = !self.has_edge(u, v);
        self.set(u, v, true);
        Ok(fresh)
    }

    /// Removes `{u, v}`; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        let present = self.has_edge(u, v);
        self.set(u, v, false);
        Ok(present)
    }

    pub(crate) fn toggle(&mut self, u: usize, v: usize) {
        let on = !self.has_edge(u, v);
        self.set(u, v, on);
    }

    /// Appends `extra` isolated vertices.
    pub fn with_extra_vertices(&self, extra: usize) -> Graph {
        let mut g = Graph::new(self.n + extra);
        for (u, v) in self.edges() {
            g.set(u, v, true);
        }
        g
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        let full = full_set(self.n);
        for v in 0..self.n {
            let (src, dst) = (
                self.row(v),
                &mut g.rows[v * self.words..(v + 1) * self.words],
            );
            for w in 0..self.words {
                dst[w] = !src[w] & full[w];
            }
            dst[v / WORD] &= !(1 << (v % WORD));
        }
        g
    }

    /// Subgraph induced by `vs`; new vertex `i` is `vs[i]`, so `vs` doubles
    /// as the relabeling map back into `self`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        for &v in vs {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        let mut g = Graph::new(vs.len());
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph on the vertices for which `keep` holds, with the
    /// relabeling map.
    pub fn induced_by(&self, keep: impl Fn(usize) -> bool) -> (Graph, Vec<usize>) {
        let vs: Vec<usize> = (0..self.n).filter(|&v| keep(v)).collect();
        let g = self
            .induced_subgraph(&vs)
            .expect("filtered vertices are valid");
        (g, vs)
    }

    /// Number of edges with both ends in `vs`.
    pub fn edges_within(&self, vs: &[usize]) -> usize {
        let set = set_from(self.n, vs.iter().copied());
        vs.iter()
            .map(|&v| {
                self.row(v)
                    .iter()
                    .zip(&set)
                    .map(|(a, b)| (a & b).count_ones() as usize)
                    .sum::<usize>()
            })
            .sum::<usize>()
            / 2
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.n {
            by_degree.entry(self.degree(v)).or_default().push(v);
        }
        DegreeProfile {
            min_degree: by_degree.keys().next().copied().unwrap_or(0),
            max_degree: by_degree.keys().next_back().copied().unwrap_or(0),
            by_degree,
        }
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        seq.sort_unstable();
        seq
    }

    pub fn is_regular(&self) -> bool {
        self.degree_profile().is_regular()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&io::to_graph6(self))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}
