//! Induced embeddings, isomorphism and pattern-copy enumeration.
//!
//! Everything here is a backtracking search. Pattern vertices are matched
//! in a connectivity-first order, and the candidate set for each one is
//! the intersection of host rows (mapped neighbours) minus the rows of
//! mapped non-neighbours. Only host vertices whose degree is at least the
//! pattern degree are considered.

use std::collections::HashSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::{full_set, ones, set_from, words_for, Graph, WORD};

/// Injective map from pattern vertices to host vertices: `map[p]` is the
/// image of pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Image vertex set, sorted.
    pub fn image(&self) -> Vec<usize> {
        let mut vs = self.map.clone();
        vs.sort_unstable();
        vs
    }
}

struct Search<'a> {
    host: &'a Graph,
    /// pattern vertices in matching order
    order: Vec<usize>,
    /// for position i: earlier positions adjacent / non-adjacent in the pattern
    adj_before: Vec<Vec<usize>>,
    non_before: Vec<Vec<usize>>,
    /// per position: allowed host vertices that pass the degree filter
    cand_base: Vec<Vec<u64>>,
    required: Vec<u64>,
    words: usize,
}

impl<'a> Search<'a> {
    fn new(pattern: &Graph, host: &'a Graph, allowed: &[u64], required: &[u64]) -> Self {
        let p = pattern.vertex_count();
        let words = words_for(host.vertex_count());

        // connectivity-first ordering, ties broken by degree then id
        let mut order = Vec::with_capacity(p);
        let mut placed = vec![false; p];
        for _ in 0..p {
            let next = (0..p)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let linked = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                    (linked, pattern.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }

        let mut adj_before = Vec::with_capacity(p);
        let mut non_before = Vec::with_capacity(p);
        for (i, &v) in order.iter().enumerate() {
            let (a, n): (Vec<usize>, Vec<usize>) =
                (0..i).partition(|&j| pattern.has_edge(order[j], v));
            adj_before.push(a);
            non_before.push(n);
        }

        let host_deg: Vec<usize> = (0..host.vertex_count()).map(|v| host.degree(v)).collect();
        let cand_base = order
            .iter()
            .map(|&v| {
                let need = pattern.degree(v);
                let ok = set_from(
                    host.vertex_count(),
                    (0..host.vertex_count()).filter(|&x| host_deg[x] >= need),
                );
                ok.iter().zip(allowed).map(|(a, b)| a & b).collect()
            })
            .collect();

        Search {
            host,
            order,
            adj_before,
            non_before,
            cand_base,
            required: required.to_vec(),
            words,
        }
    }

    fn run<F>(&self, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let p = self.order.len();
        let mut image = vec![usize::MAX; p];
        let mut used = vec![0u64; self.words];
        let req_left = self.required.iter().map(|w| w.count_ones() as usize).sum();
        if req_left > p {
            return ControlFlow::Continue(());
        }
        let mut map = vec![usize::MAX; p];
        self.extend(0, &mut image, &mut used, req_left, &mut map, f)
    }

    fn extend<F>(
        &self,
        pos: usize,
        image: &mut [usize],
        used: &mut [u64],
        req_left: usize,
        map: &mut [usize],
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let p = self.order.len();
        if pos == p {
            for (i, &v) in self.order.iter().enumerate() {
                map[v] = image[i];
            }
            return f(map);
        }
        let mut cand: Vec<u64> = self.cand_base[pos]
            .iter()
            .zip(used.iter())
            .map(|(c, u)| c & !u)
            .collect();
        for &j in &self.adj_before[pos] {
            for (c, r) in cand.iter_mut().zip(self.host.row(image[j])) {
                *c &= r;
            }
        }
        for &j in &self.non_before[pos] {
            for (c, r) in cand.iter_mut().zip(self.host.row(image[j])) {
                *c &= !r;
            }
        }
        if req_left == p - pos {
            for (c, r) in cand.iter_mut().zip(&self.required) {
                *c &= r;
            }
        }
        for x in ones(&cand).collect::<Vec<_>>() {
            let is_req = self.required[x / WORD] >> (x % WORD) & 1 == 1;
            image[pos] = x;
            used[x / WORD] |= 1 << (x % WORD);
            let r = self.extend(pos + 1, image, used, req_left - usize::from(is_req), map, f);
            used[x / WORD] &= !(1 << (x % WORD));
            r?;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `f` with every induced embedding of `pattern` into `host`.
/// Return `ControlFlow::Break` from `f` to stop early.
pub fn for_each_induced_embedding<F>(pattern: &Graph, host: &Graph, mut f: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if pattern.vertex_count() > host.vertex_count() {
        return;
    }
    let all = full_set(host.vertex_count());
    let none = vec![0; all.len()];
    let _ = Search::new(pattern, host, &all, &none).run(&mut f);
}

fn exists_restricted(pattern: &Graph, host: &Graph, allowed: &[u64], required: &[u64]) -> bool {
    let mut found = false;
    let _ = Search::new(pattern, host, allowed, required).run(&mut |_| {
        found = true;
        ControlFlow::Break(())
    });
    found
}

pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<Embedding> {
    let mut out = None;
    for_each_induced_embedding(pattern, host, |m| {
        out = Some(Embedding { map: m.to_vec() });
        ControlFlow::Break(())
    });
    out
}

/// True iff no vertex subset of `g` induces a graph isomorphic to `h`.
pub fn is_induced_copy_free(g: &Graph, h: &Graph) -> bool {
    find_induced_embedding(h, g).is_none()
}

/// Every vertex subset of `g` inducing a copy of `h`, sorted, each subset sorted.
pub fn enumerate_induced_copies(g: &Graph, h: &Graph) -> Vec<Vec<usize>> {
    let mut seen = HashSet::new();
    for_each_induced_embedding(h, g, |m| {
        let mut vs = m.to_vec();
        vs.sort_unstable();
        seen.insert(vs);
        ControlFlow::Continue(())
    });
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// The lexicographically least vertex set (as a sorted sequence) inducing
/// a copy of `h` in `g`. Built greedily one vertex at a time, each choice
/// confirmed by an existence query restricted to larger vertices.
pub fn lex_least_induced_copy(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let (n, p) = (g.vertex_count(), h.vertex_count());
    if p > n || is_induced_copy_free(g, h) {
        return None;
    }
    let mut prefix: Vec<usize> = Vec::with_capacity(p);
    while prefix.len() < p {
        let start = prefix.last().map_or(0, |&v| v + 1);
        let next = (start..n)
            .find(|&c| {
                let required = set_from(n, prefix.iter().copied().chain([c]));
                let allowed = set_from(n, prefix.iter().copied().chain(c..n));
                exists_restricted(h, g, &allowed, &required)
            })
            .expect("a copy extending the current prefix exists");
        prefix.push(next);
    }
    Some(prefix)
}

/// An isomorphism `a -> b` as a vertex map, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return None;
    }
    find_induced_embedding(a, b).map(|e| e.map)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

/// `|Aut(g)|` by exhaustive self-embedding.
pub fn automorphism_count(g: &Graph) -> usize {
    let mut count = 0;
    for_each_induced_embedding(g, g, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// One copy of a pattern in the complete graph on the host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternCopy {
    /// sorted host vertices
    pub vertices: Vec<usize>,
    /// sorted host pairs `(u, v)`, `u < v`
    pub edges: Vec<(usize, usize)>,
    /// lexicographically least map realising exactly this edge set
    pub embedding: Embedding,
}

/// All copies of `pattern` as a (not necessarily induced) subgraph of
/// `K_n`, identified by (vertex set, edge set). Copies are ordered by
/// vertex set, then by canonical embedding.
pub fn enumerate_pattern_copies(host_vertex_count: usize, pattern: &Graph) -> Vec<PatternCopy> {
    let p = pattern.vertex_count();
    let n = host_vertex_count;
    let mut out = Vec::new();
    if p > n {
        return out;
    }
    let pattern_edges: Vec<(usize, usize)> = pattern.edges().collect();
    let mut subset: Vec<usize> = (0..p).collect();
    loop {
        // permutations of the subset in lexicographic order; the first map
        // hitting a new edge set is that copy's least embedding
        let mut perm = subset.clone();
        let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
        loop {
            let mut edges: Vec<(usize, usize)> = pattern_edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a], perm[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort_unstable();
            if seen.insert(edges.clone()) {
                out.push(PatternCopy {
                    vertices: subset.clone(),
                    edges,
                    embedding: Embedding { map: perm.clone() },
                });
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        if !next_combination(&mut subset, n) {
            break;
        }
    }
    out
}

pub(crate) fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len())
        .rev()
        .find(|&j| xs[j] > xs[i - 1])
        .expect("pivot has a successor");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Advances a sorted `k`-subset of `0..n` to the next one in lexicographic order.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}
