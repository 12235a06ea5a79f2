//! Complexity classification of H-free edge modification problems, with
//! the reduction chain that certifies each NP-complete verdict.

pub mod churn;
pub mod sparse;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::iso::are_isomorphic;
use crate::graph::named::{diamond, path, t_diamond};
use crate::graph::Graph;
use crate::reduce::{case1_triple, vh_core, DegreeSide, ReductionOp};

pub use churn::{
    deletion_churn, deletion_terminal_kind, editing_churn, is_editing_terminal, ChurnStep,
    ChurnStepKind, ChurnTrace, DeletionTerminal,
};
pub use sparse::{recognize_sparse_lh, sparse_case, t_diamond_order, SparseCase, SparseLH};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModificationKind {
    Deletion,
    Completion,
    Editing,
}

impl ModificationKind {
    pub const ALL: [ModificationKind; 3] = [
        ModificationKind::Deletion,
        ModificationKind::Completion,
        ModificationKind::Editing,
    ];

    /// The kind of the complementary problem.
    pub fn complement(self) -> Self {
        match self {
            ModificationKind::Deletion => ModificationKind::Completion,
            ModificationKind::Completion => ModificationKind::Deletion,
            ModificationKind::Editing => ModificationKind::Editing,
        }
    }
}

impl std::str::FromStr for ModificationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "deletion" => Ok(ModificationKind::Deletion),
            "completion" => Ok(ModificationKind::Completion),
            "editing" => Ok(ModificationKind::Editing),
            _ => Err(Error::precondition(format!(
                "unknown modification kind {s:?}"
            ))),
        }
    }
}

/// Problems whose hardness is imported rather than reduced to here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseProblem {
    #[serde(rename = "P3-Editing")]
    P3Editing,
    #[serde(rename = "P4-Editing")]
    P4Editing,
    #[serde(rename = "Diamond-Editing")]
    DiamondEditing,
    /// any regular pattern with at least two edges
    #[serde(rename = "Regular-Editing")]
    RegularEditing,
    #[serde(rename = "P3-Deletion")]
    P3Deletion,
    #[serde(rename = "Diamond-Deletion")]
    DiamondDeletion,
    /// patterns with at least two edges whose largest component is regular or a tree
    #[serde(rename = "TreeOrRegularLargestComponent-Deletion")]
    TreeOrRegularLargestComponentDeletion,
}

impl BaseProblem {
    pub fn kind(self) -> ModificationKind {
        use BaseProblem::*;
        match self {
            P3Editing | P4Editing | DiamondEditing | RegularEditing => ModificationKind::Editing,
            P3Deletion | DiamondDeletion | TreeOrRegularLargestComponentDeletion => {
                ModificationKind::Deletion
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Base {
    pub problem: BaseProblem,
    pub graph: Graph,
}

impl Base {
    /// Builds the base after checking that `graph` meets the problem's premise.
    pub fn new(problem: BaseProblem, graph: Graph) -> Result<Self> {
        let base = Base { problem, graph };
        base.check_premise()?;
        Ok(base)
    }

    pub fn check_premise(&self) -> Result<()> {
        use BaseProblem::*;
        let g = &self.graph;
        let ok = match self.problem {
            P3Editing | P3Deletion => are_isomorphic(g, &path(3)?),
            P4Editing => are_isomorphic(g, &path(4)?),
            DiamondEditing | DiamondDeletion => are_isomorphic(g, &diamond()),
            RegularEditing => g.is_regular() && g.edge_count() >= 2,
            TreeOrRegularLargestComponentDeletion => {
                g.edge_count() >= 2 && largest_component_is_tree_or_regular(g)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::precondition(format!(
                "{g} does not meet the premise of {:?}",
                self.problem
            )))
        }
    }
}

fn largest_component_is_tree_or_regular(g: &Graph) -> bool {
    let comps = g.components();
    let Some(largest) = comps.iter().map(Vec::len).max() else {
        return false;
    };
    comps.iter().filter(|c| c.len() == largest).any(|c| {
        let part = g
            .induced_subgraph(c)
            .expect("component vertices are in range");
        part.is_regular() || part.is_forest()
    })
}

/// One reduction in a chain, seen from the pattern side: `op` reduces from
/// the problem on (`graph_after`, `kind_after`) to the problem before it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainLink {
    #[serde(flatten)]
    pub op: ReductionOp,
    pub graph_after: Graph,
    pub kind_after: ModificationKind,
}

/// NP-completeness witness for `(pattern, kind)`. `links[0]` is applied
/// to the pattern itself; the last link's graph is the base's graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub pattern: Graph,
    pub kind: ModificationKind,
    #[serde(rename = "chain")]
    pub links: Vec<ChainLink>,
    pub base: Base,
}

impl Chain {
    /// Problem that link `i` reduces into.
    pub fn before(&self, i: usize) -> (&Graph, ModificationKind) {
        if i == 0 {
            (&self.pattern, self.kind)
        } else {
            (&self.links[i - 1].graph_after, self.links[i - 1].kind_after)
        }
    }

    pub fn base_graph(&self) -> &Graph {
        &self.base.graph
    }

    pub fn base_kind(&self) -> ModificationKind {
        self.base.problem.kind()
    }

    /// Re-derives every link from its predecessor and checks the base premise.
    pub fn validate(&self) -> Result<()> {
        for (i, link) in self.links.iter().enumerate() {
            let (target, kind) = self.before(i);
            let (src, src_kind) = link.op.source(target, kind).map_err(|e| Error::Replay {
                index: i,
                source: Box::new(e),
            })?;
            if src != link.graph_after || src_kind != link.kind_after {
                return Err(Error::Replay {
                    index: i,
                    source: Box::new(Error::consistency(format!(
                        "link derives {src} ({src_kind:?}) but records {} ({:?})",
                        link.graph_after, link.kind_after
                    ))),
                });
            }
        }
        let (last, last_kind) = self.before(self.links.len());
        if last != &self.base.graph || last_kind != self.base_kind() {
            return Err(Error::consistency("chain does not end at its base"));
        }
        self.base.check_premise()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolyReason {
    AtMostOneEdge,
    AtMostOneNonEdge,
    AtMostTwoVertices,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    Polynomial { reason: PolyReason },
    NPComplete { chain: Vec<ChainLink>, base: Base },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub h: Graph,
    pub kind: ModificationKind,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl Classification {
    pub fn is_polynomial(&self) -> bool {
        matches!(self.verdict, Verdict::Polynomial { .. })
    }

    pub fn chain(&self) -> Option<Chain> {
        match &self.verdict {
            Verdict::Polynomial { .. } => None,
            Verdict::NPComplete { chain, base } => Some(Chain {
                pattern: self.h.clone(),
                kind: self.kind,
                links: chain.clone(),
                base: base.clone(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("classifications always serialize")
    }
}

/// `Some(reason)` when the problem is solvable in polynomial time.
pub fn polynomial_reason(h: &Graph, kind: ModificationKind) -> Option<PolyReason> {
    match kind {
        ModificationKind::Deletion => (h.edge_count() <= 1).then_some(PolyReason::AtMostOneEdge),
        ModificationKind::Completion => {
            (h.non_edge_count() <= 1).then_some(PolyReason::AtMostOneNonEdge)
        }
        ModificationKind::Editing => {
            (h.vertex_count() <= 2).then_some(PolyReason::AtMostTwoVertices)
        }
    }
}

pub fn classify(h: &Graph, kind: ModificationKind) -> Result<Classification> {
    if h.vertex_count() == 0 {
        return Err(Error::EmptyPattern);
    }
    let verdict = match polynomial_reason(h, kind) {
        Some(reason) => Verdict::Polynomial { reason },
        None => {
            let chain = build_chain(h, kind)?;
            Verdict::NPComplete {
                chain: chain.links,
                base: chain.base,
            }
        }
    };
    Ok(Classification {
        h: h.clone(),
        kind,
        verdict,
    })
}

pub fn build_chain(h: &Graph, kind: ModificationKind) -> Result<Chain> {
    if h.vertex_count() == 0 {
        return Err(Error::EmptyPattern);
    }
    if let Some(reason) = polynomial_reason(h, kind) {
        return Err(Error::precondition(format!(
            "{h} gives a polynomial {kind:?} problem ({reason:?}); there is no hardness chain"
        )));
    }
    let mut links = Vec::new();
    let base = match kind {
        ModificationKind::Editing => editing_links(h, &mut links)?,
        ModificationKind::Deletion => deletion_links(h, &mut links)?,
        ModificationKind::Completion => {
            let flipped = h.complement();
            links.push(ChainLink {
                op: ReductionOp::ComplementProblem,
                graph_after: flipped.clone(),
                kind_after: ModificationKind::Deletion,
            });
            deletion_links(&flipped, &mut links)?
        }
    };
    let chain = Chain {
        pattern: h.clone(),
        kind,
        links,
        base,
    };
    chain
        .validate()
        .map_err(|e| Error::consistency(format!("built an invalid chain: {e}")))?;
    Ok(chain)
}

fn churn_link(step: &ChurnStep, kind: ModificationKind) -> ChainLink {
    let op = match step.kind {
        ChurnStepKind::ComplementToggle => ReductionOp::ComplementProblem,
        ChurnStepKind::DeleteMinDegree(d) => ReductionOp::DegreeReduce {
            d,
            side: DegreeSide::Min,
        },
        ChurnStepKind::DeleteMaxDegree(d) => ReductionOp::DegreeReduce {
            d,
            side: DegreeSide::Max,
        },
    };
    ChainLink {
        op,
        graph_after: step.after.clone(),
        kind_after: kind,
    }
}

fn editing_links(h: &Graph, links: &mut Vec<ChainLink>) -> Result<Base> {
    let trace = editing_churn(h)?;
    links.extend(
        trace
            .steps
            .iter()
            .map(|s| churn_link(s, ModificationKind::Editing)),
    );
    let t = trace.terminal;
    if are_isomorphic(&t, &path(3)?) {
        Base::new(BaseProblem::P3Editing, t)
    } else if are_isomorphic(&t, &path(4)?) {
        Base::new(BaseProblem::P4Editing, t)
    } else if are_isomorphic(&t, &diamond()) {
        Base::new(BaseProblem::DiamondEditing, t)
    } else if t.edge_count() >= 2 {
        Base::new(BaseProblem::RegularEditing, t)
    } else {
        // edgeless terminal: hand over to its complement, a complete graph
        let full = t.complement();
        links.push(ChainLink {
            op: ReductionOp::ComplementProblem,
            graph_after: full.clone(),
            kind_after: ModificationKind::Editing,
        });
        Base::new(BaseProblem::RegularEditing, full)
    }
}

fn deletion_links(h: &Graph, links: &mut Vec<ChainLink>) -> Result<Base> {
    let del = ModificationKind::Deletion;
    let mut cur = h.clone();
    loop {
        let trace = deletion_churn(&cur)?;
        links.extend(trace.steps.iter().map(|s| churn_link(s, del)));
        cur = trace.terminal;
        if are_isomorphic(&cur, &path(3)?) {
            return Base::new(BaseProblem::P3Deletion, cur);
        }
        let s = match deletion_terminal_kind(&cur) {
            Some(DeletionTerminal::Regular) | Some(DeletionTerminal::Forest) => {
                return Base::new(BaseProblem::TreeOrRegularLargestComponentDeletion, cur);
            }
            Some(DeletionTerminal::Sparse(s)) => s,
            None => {
                return Err(Error::consistency(format!(
                    "deletion churn ended at unrecognised {cur}"
                )))
            }
        };
        if s.low < 2 {
            return Err(Error::consistency(format!(
                "{cur} is sparse with low degree {} but not a forest",
                s.low
            )));
        }
        match s.case() {
            SparseCase::Case3 | SparseCase::Case4 => {
                let pair = s.low_edge.expect("cases 3 and 4 have a low edge");
                let (after, _) = cur.induced_by(|v| v != pair.0 && v != pair.1);
                if after.edge_count() < 2 {
                    return Err(Error::consistency(format!(
                        "stripping {pair:?} from {cur} leaves fewer than two edges"
                    )));
                }
                links.push(ChainLink {
                    op: ReductionOp::SparseVlStrip { pair },
                    graph_after: after.clone(),
                    kind_after: del,
                });
                cur = after;
            }
            SparseCase::Case2 => {
                if let Some(t) = t_diamond_order(&cur) {
                    for step_t in (3..=t).rev() {
                        links.push(ChainLink {
                            op: ReductionOp::TDiamondInduction { t: step_t },
                            graph_after: t_diamond(step_t - 1)?,
                            kind_after: del,
                        });
                    }
                    let last = if t > 2 { t_diamond(2)? } else { cur };
                    return Base::new(BaseProblem::DiamondDeletion, last);
                }
                let (core, pair) = vh_core(&s, &cur)?;
                let after = cur.induced_subgraph(&core)?;
                if after.edge_count() < 2 || after.vertex_count() >= cur.vertex_count() {
                    return Err(Error::consistency(format!(
                        "high-pair routing on {cur} gives {after}, which is not smaller with two edges"
                    )));
                }
                links.push(ChainLink {
                    op: ReductionOp::SparseVhRoute { pair },
                    graph_after: after.clone(),
                    kind_after: del,
                });
                cur = after;
            }
            SparseCase::Case1 => {
                let triple = case1_triple(&s, &cur)?;
                let p3 = path(3)?;
                links.push(ChainLink {
                    op: ReductionOp::SparseCase1 { triple },
                    graph_after: p3.clone(),
                    kind_after: del,
                });
                return Base::new(BaseProblem::P3Deletion, p3);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn steps(c: &Chain) -> Vec<&ReductionOp> {
        c.links.iter().map(|l| &l.op).collect()
    }

    #[test]
    fn polynomial_cases() {
        let k2 = complete(2).unwrap();
        assert!(classify(&k2, ModificationKind::Editing)
            .unwrap()
            .is_polynomial());
        let one_edge = Graph::from_edges(4, [(0, 1)]).unwrap();
        assert!(classify(&one_edge, ModificationKind::Deletion)
            .unwrap()
            .is_polynomial());
        assert!(
            classify(&complete(4).unwrap(), ModificationKind::Completion)
                .unwrap()
                .is_polynomial()
        );
        assert!(matches!(
            classify(&Graph::new(0), ModificationKind::Editing),
            Err(Error::EmptyPattern)
        ));
    }

    #[test]
    fn p3_chains_are_bare_bases() {
        let p3 = path(3).unwrap();
        let c = build_chain(&p3, ModificationKind::Editing).unwrap();
        assert!(c.links.is_empty());
        assert_eq!(c.base.problem, BaseProblem::P3Editing);
        let c = build_chain(&p3, ModificationKind::Deletion).unwrap();
        assert!(c.links.is_empty());
        assert_eq!(c.base.problem, BaseProblem::P3Deletion);
    }

    #[test]
    fn four_diamond_deletion() {
        let c = build_chain(&t_diamond(4).unwrap(), ModificationKind::Deletion).unwrap();
        assert_eq!(
            steps(&c),
            vec![
                &ReductionOp::TDiamondInduction { t: 4 },
                &ReductionOp::TDiamondInduction { t: 3 }
            ]
        );
        assert_eq!(c.base.problem, BaseProblem::DiamondDeletion);
    }

    #[test]
    fn c4_editing_is_regular_base() {
        let c = build_chain(&cycle(4).unwrap(), ModificationKind::Editing).unwrap();
        assert!(c.links.is_empty());
        assert_eq!(c.base.problem, BaseProblem::RegularEditing);
    }

    #[test]
    fn null_editing_goes_to_complete() {
        let c = build_chain(&null(4).unwrap(), ModificationKind::Editing).unwrap();
        assert_eq!(steps(&c), vec![&ReductionOp::ComplementProblem]);
        assert_eq!(c.base.graph, complete(4).unwrap());
    }

    #[test]
    fn completion_starts_with_complement() {
        let c = build_chain(&cycle(7).unwrap(), ModificationKind::Completion).unwrap();
        assert_eq!(c.links[0].op, ReductionOp::ComplementProblem);
        assert_eq!(c.links[0].kind_after, ModificationKind::Deletion);
        assert_eq!(c.base_kind(), ModificationKind::Deletion);
    }

    #[test]
    fn k23_goes_through_case1() {
        let c = build_chain(
            &complete_bipartite(2, 3).unwrap(),
            ModificationKind::Deletion,
        )
        .unwrap();
        assert!(matches!(
            c.links.last().unwrap().op,
            ReductionOp::SparseCase1 { .. }
        ));
        assert_eq!(c.base.problem, BaseProblem::P3Deletion);
    }

    #[test]
    fn diamond_deletion_base() {
        let c = build_chain(&diamond(), ModificationKind::Deletion).unwrap();
        assert!(c.links.is_empty());
        assert_eq!(c.base.problem, BaseProblem::DiamondDeletion);
    }

    #[test]
    fn tampered_chain_fails_validation() {
        let mut c = build_chain(&path(5).unwrap(), ModificationKind::Editing).unwrap();
        c.links[0].graph_after = path(4).unwrap();
        assert!(c.validate().is_err());
    }

    #[test]
    fn classification_json_shape() {
        let c = classify(&complete(2).unwrap(), ModificationKind::Editing).unwrap();
        let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(v["verdict"], "Polynomial");
        let c = classify(&path(5).unwrap(), ModificationKind::Editing).unwrap();
        let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(v["verdict"], "NPComplete");
        assert_eq!(v["chain"][0]["step"], "DegreeReduce");
        assert_eq!(v["chain"][0]["params"]["d"], 1);
        assert_eq!(v["base"]["problem"], "P3-Editing");
        let back: Classification = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }
}
