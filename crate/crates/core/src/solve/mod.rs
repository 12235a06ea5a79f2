//! Exact solvers for H-free edge modification.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::classify::ModificationKind;
use crate::error::{Error, Result};
use crate::graph::iso::{is_induced_copy_free, lex_least_induced_copy, next_combination};
use crate::graph::Graph;

/// Default bound on the number of edit sets the brute-force solver will try.
pub const DEFAULT_BRUTE_CAP: u128 = 20_000_000;

/// Environment variable overriding [`DEFAULT_BRUTE_CAP`].
pub const BRUTE_CAP_ENV: &str = "HFREE_BRUTE_CAP";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EditSet {
    pub deletions: BTreeSet<(usize, usize)>,
    pub completions: BTreeSet<(usize, usize)>,
}

impl EditSet {
    pub fn len(&self) -> usize {
        self.deletions.len() + self.completions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Splits toggled pairs of `g` into deletions and completions.
    pub fn from_pairs(g: &Graph, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut set = EditSet::default();
        for (a, b) in pairs {
            let p = (a.min(b), a.max(b));
            if g.has_edge(p.0, p.1) {
                set.deletions.insert(p);
            } else {
                set.completions.insert(p);
            }
        }
        set
    }

    /// `g` with every pair of the set toggled, after checking that deletions
    /// are edges and completions non-edges of `g`.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        let mut out = g.clone();
        for &(u, v) in &self.deletions {
            if !out.remove_edge(u, v)? {
                return Err(Error::precondition(format!(
                    "deletion ({u},{v}) is not an edge"
                )));
            }
        }
        for &(u, v) in &self.completions {
            if self.deletions.contains(&(u, v)) {
                return Err(Error::precondition(format!(
                    "pair ({u},{v}) both deleted and completed"
                )));
            }
            if !out.add_edge(u, v)? {
                return Err(Error::precondition(format!(
                    "completion ({u},{v}) is already an edge"
                )));
            }
        }
        Ok(out)
    }

    pub fn fits(&self, kind: ModificationKind) -> bool {
        match kind {
            ModificationKind::Deletion => self.completions.is_empty(),
            ModificationKind::Completion => self.deletions.is_empty(),
            ModificationKind::Editing => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    /// search nodes (branching) or edit sets tried (brute force)
    pub nodes: u64,
    /// induced copies located during the search
    pub copies_found: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub answer: Answer,
    pub witness: Option<EditSet>,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }

    /// For a yes answer: the witness fits `kind`, has size at most `k`, and
    /// leaves `g` without an induced `h`.
    pub fn check(&self, g: &Graph, k: usize, h: &Graph, kind: ModificationKind) -> bool {
        match (&self.answer, &self.witness) {
            (Answer::No, None) => true,
            (Answer::Yes, Some(w)) => {
                w.len() <= k
                    && w.fits(kind)
                    && w.apply(g).is_ok_and(|out| is_induced_copy_free(&out, h))
            }
            _ => false,
        }
    }
}

fn allowed(g: &Graph, u: usize, v: usize, kind: ModificationKind) -> bool {
    match kind {
        ModificationKind::Deletion => g.has_edge(u, v),
        ModificationKind::Completion => !g.has_edge(u, v),
        ModificationKind::Editing => true,
    }
}

struct Branching<'a> {
    h: &'a Graph,
    kind: ModificationKind,
    locked: Vec<bool>,
    n: usize,
    path: Vec<(usize, usize)>,
    stats: SolveStats,
}

impl Branching<'_> {
    fn run(&mut self, g: &mut Graph, budget: usize) -> bool {
        self.stats.nodes += 1;
        let Some(copy) = lex_least_induced_copy(g, self.h) else {
            return true;
        };
        self.stats.copies_found += 1;
        if budget == 0 {
            return false;
        }
        for (i, &u) in copy.iter().enumerate() {
            for &v in &copy[i + 1..] {
                let slot = u * self.n + v;
                if self.locked[slot] || !allowed(g, u, v, self.kind) {
                    continue;
                }
                g.toggle(u, v);
                self.locked[slot] = true;
                self.path.push((u, v));
                if self.run(g, budget - 1) {
                    return true;
                }
                self.path.pop();
                self.locked[slot] = false;
                g.toggle(u, v);
            }
        }
        false
    }
}

/// Bounded search tree: find an induced copy of `h`, branch on every
/// allowed edit inside it. Pairs edited on the current path are never
/// edited again.
pub fn solve_branching(g: &Graph, k: usize, h: &Graph, kind: ModificationKind) -> SolveResult {
    let n = g.vertex_count();
    let mut work = g.clone();
    let mut search = Branching {
        h,
        kind,
        locked: vec![false; n * n],
        n,
        path: Vec::new(),
        stats: SolveStats::default(),
    };
    let found = search.run(&mut work, k);
    SolveResult {
        answer: if found { Answer::Yes } else { Answer::No },
        witness: found.then(|| EditSet::from_pairs(g, search.path.iter().copied())),
        stats: search.stats,
    }
}

fn binomial(n: u128, r: u128) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Number of edit sets of size at most `k` drawn from `pairs` candidates.
pub fn search_space(pairs: usize, k: usize) -> u128 {
    (0..=k.min(pairs)).fold(0u128, |acc, r| {
        acc.saturating_add(binomial(pairs as u128, r as u128))
    })
}

/// The cap in effect: [`BRUTE_CAP_ENV`] if set and numeric, else the default.
pub fn brute_cap_from_env() -> u128 {
    std::env::var(BRUTE_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BRUTE_CAP)
}

/// Tries every allowed edit set of size at most `k`, smallest first.
/// Refuses with [`Error::CapExceeded`] when there are more than `cap` sets.
pub fn solve_bruteforce_capped(
    g: &Graph,
    k: usize,
    h: &Graph,
    kind: ModificationKind,
    cap: u128,
) -> Result<SolveResult> {
    let pairs: Vec<(usize, usize)> = match kind {
        ModificationKind::Deletion => g.edges().collect(),
        ModificationKind::Completion => g.non_edges().collect(),
        ModificationKind::Editing => g.edges().chain(g.non_edges()).collect(),
    };
    let size = search_space(pairs.len(), k);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let mut stats = SolveStats::default();
    let mut work = g.clone();
    for r in 0..=k.min(pairs.len()) {
        let mut pick: Vec<usize> = (0..r).collect();
        loop {
            stats.nodes += 1;
            for &i in &pick {
                work.toggle(pairs[i].0, pairs[i].1);
            }
            let free = is_induced_copy_free(&work, h);
            for &i in &pick {
                work.toggle(pairs[i].0, pairs[i].1);
            }
            if free {
                return Ok(SolveResult {
                    answer: Answer::Yes,
                    witness: Some(EditSet::from_pairs(g, pick.iter().map(|&i| pairs[i]))),
                    stats,
                });
            }
            stats.copies_found += 1;
            if !next_combination(&mut pick, pairs.len()) {
                break;
            }
        }
    }
    Ok(SolveResult {
        answer: Answer::No,
        witness: None,
        stats,
    })
}

/// [`solve_bruteforce_capped`] with the cap from [`brute_cap_from_env`].
pub fn solve_bruteforce(
    g: &Graph,
    k: usize,
    h: &Graph,
    kind: ModificationKind,
) -> Result<SolveResult> {
    solve_bruteforce_capped(g, k, h, kind, brute_cap_from_env())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use ModificationKind::*;

    #[test]
    fn branching_examples() {
        let p3 = path(3).unwrap();
        let r = solve_branching(&p3, 1, &p3, Deletion);
        assert!(r.is_yes());
        assert_eq!(r.witness.as_ref().unwrap().deletions.len(), 1);
        assert!(r.check(&p3, 1, &p3, Deletion));

        let r = solve_branching(&complete(3).unwrap(), 0, &p3, Deletion);
        assert!(r.is_yes());
        assert!(r.witness.unwrap().is_empty());

        let r = solve_branching(&cycle(5).unwrap(), 1, &p3, Deletion);
        assert_eq!(r.answer, Answer::No);
        assert!(r.witness.is_none());
    }

    #[test]
    fn brute_examples() {
        let r =
            solve_bruteforce(&complete(4).unwrap(), 1, &complete(3).unwrap(), Deletion).unwrap();
        assert_eq!(r.answer, Answer::No);
        let r = solve_bruteforce(&cycle(5).unwrap(), 1, &path(3).unwrap(), Deletion).unwrap();
        assert_eq!(r.answer, Answer::No);
        let p3 = path(3).unwrap();
        let r = solve_bruteforce(&p3, 1, &p3, Completion).unwrap();
        assert!(r.check(&p3, 1, &p3, Completion));
        assert_eq!(r.witness.unwrap().completions, BTreeSet::from([(0, 2)]));
    }

    #[test]
    fn cap_is_a_refusal() {
        let g = complete(8).unwrap();
        let err = solve_bruteforce_capped(&g, 3, &path(3).unwrap(), Editing, 100).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 100, .. }));
    }

    #[test]
    fn search_space_counts() {
        assert_eq!(search_space(10, 0), 1);
        assert_eq!(search_space(10, 2), 1 + 10 + 45);
        assert_eq!(search_space(3, 5), 8);
    }

    #[test]
    fn edit_set_apply_checks_pairs() {
        let g = path(3).unwrap();
        let bad = EditSet {
            deletions: BTreeSet::from([(0, 2)]),
            completions: BTreeSet::new(),
        };
        assert!(bad.apply(&g).is_err());
        let ok = EditSet::from_pairs(&g, [(1, 0), (2, 0)]);
        assert_eq!(ok.deletions, BTreeSet::from([(0, 1)]));
        assert_eq!(ok.completions, BTreeSet::from([(0, 2)]));
        assert_eq!(ok.apply(&g).unwrap().edge_count(), 2);
    }

    #[test]
    fn editing_uses_both_directions() {
        // P4 with one edit: P3-free needs a cluster graph
        let p4 = path(4).unwrap();
        let r = solve_branching(&p4, 1, &path(3).unwrap(), Editing);
        assert!(r.is_yes());
        assert!(r.check(&p4, 1, &path(3).unwrap(), Editing));
    }
}
