//! The two churn procedures: repeatedly strip minimum- or maximum-degree
//! vertices (and, for editing, take complements) until the graph lands in a
//! family whose hardness is already known.

use serde::{Deserialize, Serialize};

use super::sparse::{recognize_sparse_lh, SparseLH};
use crate::error::{Error, Result};
use crate::graph::iso::are_isomorphic;
use crate::graph::named::{diamond, path};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", content = "degree")]
pub enum ChurnStepKind {
    ComplementToggle,
    /// removed every vertex of this (minimum) degree
    DeleteMinDegree(usize),
    /// removed every vertex of this (maximum) degree
    DeleteMaxDegree(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChurnStep {
    pub kind: ChurnStepKind,
    pub before: Graph,
    pub after: Graph,
}

impl ChurnStep {
    /// Recomputes `after` from `before`.
    pub fn replay(&self) -> Graph {
        match self.kind {
            ChurnStepKind::ComplementToggle => self.before.complement(),
            ChurnStepKind::DeleteMinDegree(d) => {
                self.before.induced_by(|v| self.before.degree(v) > d).0
            }
            ChurnStepKind::DeleteMaxDegree(d) => {
                self.before.induced_by(|v| self.before.degree(v) < d).0
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChurnTrace {
    pub terminal: Graph,
    pub steps: Vec<ChurnStep>,
}

impl ChurnTrace {
    /// Re-applies every step from `start` and checks each recorded graph.
    pub fn replays_from(&self, start: &Graph) -> bool {
        let mut cur = start.clone();
        for step in &self.steps {
            if step.before != cur || step.replay() != step.after {
                return false;
            }
            cur = step.after.clone();
        }
        cur == self.terminal
    }
}

/// Terminals of the editing procedure: regular, or a P3, P4 or diamond (up
/// to isomorphism).
pub fn is_editing_terminal(g: &Graph) -> bool {
    g.is_regular()
        || [path(3), path(4)]
            .iter()
            .flatten()
            .any(|t| are_isomorphic(g, t))
        || are_isomorphic(g, &diamond())
}

pub fn editing_churn(h: &Graph) -> Result<ChurnTrace> {
    if h.vertex_count() < 3 {
        return Err(Error::precondition(format!(
            "editing churn needs at least 3 vertices, got {}",
            h.vertex_count()
        )));
    }
    let mut cur = h.clone();
    let mut steps: Vec<ChurnStep> = Vec::new();
    loop {
        if is_editing_terminal(&cur) {
            return Ok(ChurnTrace {
                terminal: cur,
                steps,
            });
        }
        let profile = cur.degree_profile();
        let above: Vec<usize> = (0..cur.vertex_count())
            .filter(|&v| cur.degree(v) > profile.min_degree)
            .collect();
        if above.len() <= 2 {
            if matches!(steps.last(), Some(s) if s.kind == ChurnStepKind::ComplementToggle) {
                return Err(Error::consistency(format!(
                    "complement step applies to both {cur} and its complement, which is not a terminal"
                )));
            }
            let after = cur.complement();
            steps.push(ChurnStep {
                kind: ChurnStepKind::ComplementToggle,
                before: cur,
                after: after.clone(),
            });
            cur = after;
            continue;
        }
        let after = cur.induced_subgraph(&above)?;
        if after.vertex_count() < 3 {
            return Err(Error::consistency(format!(
                "editing churn dropped below 3 vertices at {cur}"
            )));
        }
        steps.push(ChurnStep {
            kind: ChurnStepKind::DeleteMinDegree(profile.min_degree),
            before: cur,
            after: after.clone(),
        });
        cur = after;
    }
}

/// Shape of a deletion-churn terminal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeletionTerminal {
    Regular,
    Forest,
    Sparse(SparseLH),
}

/// Classifies a graph whose degree classes are already sparse; checked in
/// the order regular, forest, sparse (ℓ, h).
pub fn deletion_terminal_kind(g: &Graph) -> Option<DeletionTerminal> {
    if g.is_regular() {
        Some(DeletionTerminal::Regular)
    } else if g.is_forest() {
        Some(DeletionTerminal::Forest)
    } else {
        recognize_sparse_lh(g).map(DeletionTerminal::Sparse)
    }
}

pub fn deletion_churn(h: &Graph) -> Result<ChurnTrace> {
    if h.edge_count() < 2 {
        return Err(Error::precondition(format!(
            "deletion churn needs at least 2 edges, got {}",
            h.edge_count()
        )));
    }
    let mut cur = h.clone();
    let mut steps = Vec::new();
    loop {
        let profile = cur.degree_profile();
        let (above, _) = cur.induced_by(|v| cur.degree(v) > profile.min_degree);
        let (below, _) = cur.induced_by(|v| cur.degree(v) < profile.max_degree);
        let (kind, after) = if above.edge_count() >= 2 {
            (ChurnStepKind::DeleteMinDegree(profile.min_degree), above)
        } else if below.edge_count() >= 2 {
            (ChurnStepKind::DeleteMaxDegree(profile.max_degree), below)
        } else {
            if deletion_terminal_kind(&cur).is_none() {
                return Err(Error::consistency(format!(
                    "deletion churn stopped at {cur}, which is neither regular, a forest nor sparse (l,h)-degree"
                )));
            }
            return Ok(ChurnTrace {
                terminal: cur,
                steps,
            });
        };
        steps.push(ChurnStep {
            kind,
            before: cur,
            after: after.clone(),
        });
        cur = after;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn editing_p5_to_p3() {
        let p5 = path(5).unwrap();
        let trace = editing_churn(&p5).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].kind, ChurnStepKind::DeleteMinDegree(1));
        assert!(are_isomorphic(&trace.terminal, &path(3).unwrap()));
        assert!(trace.replays_from(&p5));
    }

    #[test]
    fn editing_regular_returns_immediately() {
        let k4 = complete(4).unwrap();
        let trace = editing_churn(&k4).unwrap();
        assert!(trace.steps.is_empty());
        assert_eq!(trace.terminal, k4);
    }

    #[test]
    fn editing_star_goes_through_complement() {
        // K1,3: only the centre has degree > 1, so complement to K3 + K1,
        // then strip the isolated vertex, leaving K3
        let trace = editing_churn(&star(3).unwrap()).unwrap();
        let kinds: Vec<_> = trace.steps.iter().map(|s| s.kind).collect();
        assert_eq!(
            kinds,
            vec![
                ChurnStepKind::ComplementToggle,
                ChurnStepKind::DeleteMinDegree(0)
            ]
        );
        assert_eq!(trace.terminal, complete(3).unwrap());
        assert!(is_editing_terminal(&trace.terminal));
    }

    #[test]
    fn editing_rejects_small_graphs() {
        assert!(matches!(
            editing_churn(&complete(2).unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn deletion_sunlet_to_cycle() {
        let trace = deletion_churn(&sunlet(5).unwrap()).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].kind, ChurnStepKind::DeleteMinDegree(1));
        assert_eq!(trace.terminal, cycle(5).unwrap());
        assert!(trace.terminal.is_regular());
    }

    #[test]
    fn deletion_fixed_points() {
        for g in [complete(3).unwrap(), diamond()] {
            let trace = deletion_churn(&g).unwrap();
            assert!(trace.steps.is_empty());
            assert_eq!(trace.terminal, g);
        }
        // the diamond stops because its hubs span one edge and its rims none
        let d = diamond();
        assert_eq!(d.edges_within(&[0, 1]), 1);
        assert_eq!(d.edges_within(&[2, 3]), 0);
    }

    #[test]
    fn deletion_max_side() {
        // K1,3 plus an edge between two leaves: a paw. Degrees 3,2,2,1.
        // above-min = {0,1,2} spans a triangle, so the min side fires first.
        let paw = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let trace = deletion_churn(&paw).unwrap();
        assert_eq!(trace.steps[0].kind, ChurnStepKind::DeleteMinDegree(1));
        // bowtie: vertex 0 shared by triangles 0-1-2 and 0-3-4. Only the
        // centre lies above the minimum, so the min side spans no edge
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]).unwrap();
        let trace = deletion_churn(&g).unwrap();
        assert_eq!(trace.steps[0].kind, ChurnStepKind::DeleteMaxDegree(4));
        assert!(trace.replays_from(&g));
    }

    #[test]
    fn deletion_rejects_single_edge() {
        assert!(matches!(
            deletion_churn(&complete(2).unwrap()),
            Err(Error::Precondition(_))
        ));
    }
}
