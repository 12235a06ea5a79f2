//! Standard graph families, plus a small parser for names such as `P5`,
//! `C7`, `K4`, `K2,3`, `3K1`, `diamond`, `tdiamond3`, `sunlet6`.

use super::Graph;
use crate::error::{Error, Result};

fn at_least(family: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        return Err(Error::SizeBelowMinimum { family, min, got });
    }
    Ok(())
}

/// `P_t`, the path on `t` vertices.
pub fn path(t: usize) -> Result<Graph> {
    at_least("path", 1, t)?;
    Graph::from_edges(t, (1..t).map(|i| (i - 1, i)))
}

/// `C_l`.
pub fn cycle(l: usize) -> Result<Graph> {
    at_least("cycle", 3, l)?;
    Graph::from_edges(l, (0..l).map(|i| (i, (i + 1) % l)))
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete graph", 1, n)?;
    Ok(Graph::new(n).complement())
}

/// `tK_1`, the edgeless graph on `t` vertices.
pub fn null(t: usize) -> Result<Graph> {
    at_least("null graph", 1, t)?;
    Ok(Graph::new(t))
}

/// `K_{1,s}` with the centre at vertex 0.
pub fn star(s: usize) -> Result<Graph> {
    at_least("star", 1, s)?;
    Graph::from_edges(s + 1, (1..=s).map(|i| (0, i)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    at_least("complete bipartite side", 1, a.min(b))?;
    Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

/// The join `K_2 + tK_1`: vertices 0 and 1 are the adjacent hubs.
pub fn t_diamond(t: usize) -> Result<Graph> {
    at_least("t-diamond", 1, t)?;
    Ok(join(&complete(2)?, &null(t)?))
}

pub fn diamond() -> Graph {
    t_diamond(2).expect("2 is a valid t")
}

/// `C_n` (vertices `0..n`) with a pendant vertex `n + i` on each cycle vertex `i`.
pub fn sunlet(n: usize) -> Result<Graph> {
    at_least("sunlet", 3, n)?;
    let mut g = cycle(n)?.with_extra_vertices(n);
    for i in 0..n {
        g.add_edge(i, n + i)?;
    }
    Ok(g)
}

/// Disjoint union; `b`'s vertices are shifted past `a`'s.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.vertex_count();
    let mut g = a.with_extra_vertices(b.vertex_count());
    for (u, v) in b.edges() {
        g.set(u + shift, v + shift, true);
    }
    g
}

/// Disjoint union plus every edge between the two sides.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let mut g = disjoint_union(a, b);
    let shift = a.vertex_count();
    for u in 0..shift {
        for v in 0..b.vertex_count() {
            g.set(u, v + shift, true);
        }
    }
    g
}

/// Parses a family name. Case-insensitive for the word forms.
pub fn parse_named(name: &str) -> Result<Graph> {
    let s = name.trim();
    let unknown = || Error::UnknownName(name.to_string());
    let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
    let lower = s.to_ascii_lowercase();

    if lower == "diamond" {
        return Ok(diamond());
    }
    for (prefix, build) in [
        ("tdiamond", t_diamond as fn(usize) -> Result<Graph>),
        ("sunlet", sunlet),
        ("star", star),
        ("null", null),
    ] {
        if let Some(rest) = lower.strip_prefix(prefix) {
            return build(num(rest)?);
        }
    }
    // tK1 and 2K2-style disjoint copies
    if let Some((count, rest)) = s.split_once('K') {
        if !count.is_empty() {
            let copies = num(count)?;
            at_least("copies", 1, copies)?;
            let one = parse_named(&format!("K{rest}"))?;
            let mut g = one.clone();
            for _ in 1..copies {
                g = disjoint_union(&g, &one);
            }
            return Ok(g);
        }
    }
    let (head, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
    match head {
        "P" => path(num(rest)?),
        "C" => cycle(num(rest)?),
        "K" => match rest.split_once(',') {
            Some((a, b)) => complete_bipartite(num(a)?, num(b)?),
            None => complete(num(rest)?),
        },
        _ => Err(unknown()),
    }
}
