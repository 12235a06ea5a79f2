//! Branch constructions.
//!
//! [`construct_nonadj`] takes `(G', k, H, V')`. For every copy `C` of
//! `H[V']` in the complete graph on `V(G')` (a *base*), it adds `k + 1`
//! *branches*. Each branch is a fresh set of `|V(H) \ V'|` vertices plus
//! the edges that complete `C` to a copy of `H`. Only `G'`'s own edges and
//! branch edges end up in the output; the edges of `C` itself are recorded
//! in the [`BranchRecord`] but never added.
//!
//! Branch vertices are numbered after the host's, grouped by (copy,
//! branch), with copies in [`enumerate_pattern_copies`] order.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::iso::enumerate_pattern_copies;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchRecord {
    /// index of the base copy this branch belongs to
    pub copy: usize,
    pub base_vertices: Vec<usize>,
    /// edges of the base copy in the complete graph; may be absent from G
    pub base_edges: Vec<(usize, usize)>,
    pub branch_vertices: Vec<usize>,
    pub branch_edges: Vec<(usize, usize)>,
    /// image of every vertex of H; restricted to V' it is the copy's
    /// canonical embedding
    pub embedding: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueRecord {
    pub for_edge: (usize, usize),
    pub clique_vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    pub branches: Vec<BranchRecord>,
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Sorted, duplicate-free copy of `v_prime`, validated against `h`.
pub(crate) fn normalize_subset(h: &Graph, v_prime: &[usize]) -> Result<Vec<usize>> {
    let mut vs = v_prime.to_vec();
    vs.sort_unstable();
    if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateVertex(w[0]));
    }
    if let Some(&v) = vs.iter().find(|&&v| v >= h.vertex_count()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: h.vertex_count(),
        });
    }
    Ok(vs)
}

pub fn construct_nonadj(
    g_prime: &Graph,
    k: usize,
    h: &Graph,
    v_prime: &[usize],
) -> Result<Construction> {
    if k == 0 {
        return Err(Error::precondition(
            "constructions need a positive budget k",
        ));
    }
    let core = normalize_subset(h, v_prime)?;
    let mut in_core = vec![false; h.vertex_count()];
    for &v in &core {
        in_core[v] = true;
    }
    let rest: Vec<usize> = (0..h.vertex_count()).filter(|&v| !in_core[v]).collect();
    let pattern = h.induced_subgraph(&core)?;
    let copies = enumerate_pattern_copies(g_prime.vertex_count(), &pattern);

    let n0 = g_prime.vertex_count();
    let mut g = g_prime.with_extra_vertices(copies.len() * (k + 1) * rest.len());
    let outer_edges: Vec<(usize, usize)> = h
        .edges()
        .filter(|&(a, b)| !(in_core[a] && in_core[b]))
        .collect();
    let mut branches = Vec::with_capacity(copies.len() * (k + 1));
    let mut next = n0;
    for (ci, copy) in copies.iter().enumerate() {
        for _ in 0..=k {
            let mut embedding = vec![usize::MAX; h.vertex_count()];
            for (i, &v) in core.iter().enumerate() {
                embedding[v] = copy.embedding.map[i];
            }
            let branch_vertices: Vec<usize> = (next..next + rest.len()).collect();
            for (&v, &x) in rest.iter().zip(&branch_vertices) {
                embedding[v] = x;
            }
            next += rest.len();
            let mut branch_edges: Vec<(usize, usize)> = outer_edges
                .iter()
                .map(|&(a, b)| ordered(embedding[a], embedding[b]))
                .collect();
            branch_edges.sort_unstable();
            for &(u, v) in &branch_edges {
                g.add_edge(u, v)?;
            }
            branches.push(BranchRecord {
                copy: ci,
                base_vertices: copy.vertices.clone(),
                base_edges: copy.edges.clone(),
                branch_vertices,
                branch_edges,
                embedding,
            });
        }
    }
    Ok(Construction { graph: g, branches })
}

/// [`construct_nonadj`] plus an edge between every two branch vertices
/// that lie in different branches, across all bases.
pub fn construct_adj(
    g_prime: &Graph,
    k: usize,
    h: &Graph,
    v_prime: &[usize],
) -> Result<Construction> {
    let mut c = construct_nonadj(g_prime, k, h, v_prime)?;
    for (i, a) in c.branches.iter().enumerate() {
        for b in &c.branches[i + 1..] {
            for &x in &a.branch_vertices {
                for &y in &b.branch_vertices {
                    c.graph.add_edge(x, y)?;
                }
            }
        }
    }
    Ok(c)
}

/// For every edge `{u, v}` of `G'`, a fresh `(k + 1)`-clique joined to both `u` and `v`.
pub fn construct_tdiamond(g_prime: &Graph, k: usize) -> Result<(Graph, Vec<CliqueRecord>)> {
    if k == 0 {
        return Err(Error::precondition(
            "constructions need a positive budget k",
        ));
    }
    let edges: Vec<(usize, usize)> = g_prime.edges().collect();
    let mut g = g_prime.with_extra_vertices(edges.len() * (k + 1));
    let mut next = g_prime.vertex_count();
    let mut cliques = Vec::with_capacity(edges.len());
    for (u, v) in edges {
        let clique: Vec<usize> = (next..next + k + 1).collect();
        next += k + 1;
        for (i, &x) in clique.iter().enumerate() {
            g.add_edge(x, u)?;
            g.add_edge(x, v)?;
            for &y in &clique[i + 1..] {
                g.add_edge(x, y)?;
            }
        }
        cliques.push(CliqueRecord {
            for_edge: (u, v),
            clique_vertices: clique,
        });
    }
    Ok((g, cliques))
}

/// Checks one branch against `h`: the embedding is injective, covers
/// exactly base and branch vertices, agrees with the base copy on `V'`, and
/// maps `h`'s edges onto `base_edges ∪ branch_edges` exactly.
pub fn audit_branch(
    record: &BranchRecord,
    h: &Graph,
    g: &Graph,
) -> std::result::Result<(), String> {
    let emb = &record.embedding;
    if emb.len() != h.vertex_count() {
        return Err("embedding does not cover H".into());
    }
    let image: HashSet<usize> = emb.iter().copied().collect();
    if image.len() != emb.len() {
        return Err("embedding is not injective".into());
    }
    let expected: HashSet<usize> = record
        .base_vertices
        .iter()
        .chain(&record.branch_vertices)
        .copied()
        .collect();
    if image != expected {
        return Err("embedding image differs from base ∪ branch vertices".into());
    }
    let union: HashSet<(usize, usize)> = record
        .base_edges
        .iter()
        .chain(&record.branch_edges)
        .copied()
        .collect();
    for a in 0..h.vertex_count() {
        for b in a + 1..h.vertex_count() {
            if h.has_edge(a, b) != union.contains(&ordered(emb[a], emb[b])) {
                return Err(format!("pair ({a},{b}) of H is not preserved"));
            }
        }
    }
    let branch: HashSet<usize> = record.branch_vertices.iter().copied().collect();
    for &(u, v) in &record.branch_edges {
        if !branch.contains(&u) && !branch.contains(&v) {
            return Err(format!("branch edge ({u},{v}) has no branch endpoint"));
        }
        if !g.has_edge(u, v) {
            return Err(format!(
                "branch edge ({u},{v}) missing from the constructed graph"
            ));
        }
    }
    Ok(())
}
