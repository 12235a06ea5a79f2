//! Naive reference implementations used as oracles by the integration
//! tests. Nothing here calls the library's search code.

#![allow(dead_code)]

use hfree::{Graph, ModificationKind};

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn subsets_of_size(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Pattern adjacency plus its vertex permutations, reused across hosts.
pub struct Pattern {
    pub n: usize,
    adj: Vec<Vec<bool>>,
    perms: Vec<Vec<usize>>,
}

impl Pattern {
    pub fn new(h: &Graph) -> Self {
        Pattern {
            n: h.vertex_count(),
            adj: adjacency(h),
            perms: permutations(h.vertex_count()),
        }
    }

    /// Does `sub` (host vertices) induce this pattern under some ordering?
    pub fn matches(&self, host: &[Vec<bool>], sub: &[usize]) -> bool {
        self.perms.iter().any(|p| {
            (0..self.n)
                .all(|i| (i + 1..self.n).all(|j| host[sub[p[i]]][sub[p[j]]] == self.adj[i][j]))
        })
    }

    pub fn occurs_in(&self, host: &[Vec<bool>]) -> bool {
        self.n <= host.len()
            && subsets_of_size(host.len(), self.n)
                .iter()
                .any(|s| self.matches(host, s))
    }
}

pub fn naive_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && Pattern::new(a).matches(&adjacency(b), &(0..b.vertex_count()).collect::<Vec<_>>())
}

pub fn naive_automorphisms(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.vertex_count();
    permutations(n)
        .iter()
        .filter(|p| (0..n).all(|i| (0..n).all(|j| adj[i][j] == adj[p[i]][p[j]])))
        .count()
}

/// Every edit set of size at most `k` over the allowed pairs, tested directly.
pub fn naive_solve(g: &Graph, k: usize, h: &Graph, kind: ModificationKind) -> bool {
    let pat = Pattern::new(h);
    let mut adj = adjacency(g);
    let n = g.vertex_count();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| match kind {
            ModificationKind::Deletion => adj[u][v],
            ModificationKind::Completion => !adj[u][v],
            ModificationKind::Editing => true,
        })
        .collect();
    for r in 0..=k.min(pairs.len()) {
        for pick in subsets_of_size(pairs.len(), r) {
            for &i in &pick {
                let (u, v) = pairs[i];
                adj[u][v] = !adj[u][v];
                adj[v][u] = !adj[v][u];
            }
            let free = !pat.occurs_in(&adj);
            for &i in &pick {
                let (u, v) = pairs[i];
                adj[u][v] = !adj[u][v];
                adj[v][u] = !adj[v][u];
            }
            if free {
                return true;
            }
        }
    }
    false
}

pub fn degrees(g: &Graph) -> Vec<usize> {
    adjacency(g)
        .iter()
        .map(|row| row.iter().filter(|&&b| b).count())
        .collect()
}

pub fn naive_regular(g: &Graph) -> bool {
    let d = degrees(g);
    d.windows(2).all(|w| w[0] == w[1])
}

pub fn component_count(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count()
}

pub fn naive_forest(g: &Graph) -> bool {
    g.edge_count() + component_count(g) == g.vertex_count()
}

/// Exactly two degrees and each degree class spans at most one edge.
pub fn naive_sparse_two_degree(g: &Graph) -> bool {
    let d = degrees(g);
    let mut values: Vec<usize> = d.clone();
    values.sort_unstable();
    values.dedup();
    if values.len() != 2 {
        return false;
    }
    values.iter().all(|&x| {
        let class: Vec<usize> = (0..d.len()).filter(|&v| d[v] == x).collect();
        let inside = class
            .iter()
            .enumerate()
            .map(|(i, &a)| class[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
            .sum::<usize>();
        inside <= 1
    })
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

pub fn p(n: usize) -> Graph {
    graph(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

pub fn k(n: usize) -> Graph {
    graph(
        n,
        &(0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect::<Vec<_>>(),
    )
}

pub fn c(n: usize) -> Graph {
    graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn diamond() -> Graph {
    graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}
