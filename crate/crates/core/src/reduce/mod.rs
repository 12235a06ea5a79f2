//! Parameter-preserving reductions between H-free modification problems.
//!
//! A [`ReductionOp`] describes one reduction *into* a target pattern: given
//! an instance of the smaller (source) problem it builds an instance of the
//! target problem with the same budget `k`. [`ReductionOp::source`] derives
//! the source pattern from the target and checks the reduction's premises
//! without touching any instance; [`ReductionOp::apply`] runs it.

pub mod construct;

use serde::{Deserialize, Serialize};

use crate::classify::sparse::{recognize_sparse_lh, t_diamond_order, SparseCase, SparseLH};
use crate::classify::{Chain, ModificationKind};
use crate::error::{Error, Result};
use crate::graph::iso::are_isomorphic;
use crate::graph::named::{path, t_diamond};
use crate::graph::Graph;

pub use construct::{
    audit_branch, construct_adj, construct_nonadj, construct_tdiamond, BranchRecord, CliqueRecord,
    Construction,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    #[serde(rename = "graph")]
    pub g: Graph,
    pub k: usize,
    pub h: Graph,
    pub kind: ModificationKind,
}

impl Instance {
    pub fn new(g: Graph, k: usize, h: Graph, kind: ModificationKind) -> Result<Self> {
        if h.vertex_count() == 0 {
            return Err(Error::EmptyPattern);
        }
        Ok(Instance { g, k, h, kind })
    }

    pub fn summary(&self) -> InstanceSummary {
        InstanceSummary {
            vertices: self.g.vertex_count(),
            edges: self.g.edge_count(),
            k: self.k,
            h: self.h.clone(),
            kind: self.kind,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let inst: Instance = serde_json::from_str(text)?;
        Instance::new(inst.g, inst.k, inst.h, inst.kind)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instances always serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSummary {
    pub vertices: usize,
    pub edges: usize,
    pub k: usize,
    pub h: Graph,
    pub kind: ModificationKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeSide {
    /// drop vertices of degree `<= d`
    Min,
    /// drop vertices of degree `>= d`, via the complement
    Max,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", content = "params")]
pub enum ReductionOp {
    ComplementProblem,
    DegreeReduce {
        d: usize,
        side: DegreeSide,
    },
    ConstructNonadj {
        v_prime: Vec<usize>,
    },
    ConstructAdj {
        v_prime: Vec<usize>,
    },
    /// from the (t-1)-diamond problem to the t-diamond problem
    TDiamondInduction {
        t: usize,
    },
    /// strip the adjacent low-degree pair of a sparse (l,h) graph
    SparseVlStrip {
        pair: (usize, usize),
    },
    /// keep the low class plus the adjacent high pair, through the complement
    SparseVhRoute {
        pair: (usize, usize),
    },
    /// from P3 deletion; `triple` is (end, middle, end)
    SparseCase1 {
        triple: [usize; 3],
    },
}

/// One applied reduction with enough metadata to audit it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    #[serde(flatten)]
    pub op: ReductionOp,
    pub input: InstanceSummary,
    pub output: InstanceSummary,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub branches: Vec<BranchRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cliques: Vec<CliqueRecord>,
    /// sub-steps of a composite reduction, in application order
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<ReductionStep>,
}

impl ReductionStep {
    fn new(op: ReductionOp, input: &Instance, output: &Instance) -> Self {
        ReductionStep {
            op,
            input: input.summary(),
            output: output.summary(),
            branches: Vec::new(),
            cliques: Vec::new(),
            parts: Vec::new(),
        }
    }

    /// The budget is carried over unchanged, here and in every part.
    pub fn preserves_k(&self) -> bool {
        self.input.k == self.output.k && self.parts.iter().all(ReductionStep::preserves_k)
    }
}

fn expect_kind(inst: &Instance, want: ModificationKind, what: &str) -> Result<()> {
    if inst.kind != want {
        return Err(Error::precondition(format!(
            "{what} needs a {want:?} instance, got {:?}",
            inst.kind
        )));
    }
    Ok(())
}

fn expect_pattern(actual: &Graph, expected: &Graph) -> Result<()> {
    if !are_isomorphic(actual, expected) {
        return Err(Error::PatternMismatch {
            expected: expected.clone(),
            actual: actual.clone(),
        });
    }
    Ok(())
}

fn need_sparse(h: &Graph, what: &str) -> Result<SparseLH> {
    recognize_sparse_lh(h).ok_or_else(|| {
        Error::precondition(format!("{what}: {h} is not a sparse (l,h)-degree graph"))
    })
}

fn degree_core(h: &Graph, d: usize, side: DegreeSide) -> Result<Vec<usize>> {
    let keep: Vec<usize> = (0..h.vertex_count())
        .filter(|&v| match side {
            DegreeSide::Min => h.degree(v) > d,
            DegreeSide::Max => h.degree(v) < d,
        })
        .collect();
    if keep.len() == h.vertex_count() {
        return Err(Error::precondition(format!(
            "degree threshold {d} removes no vertex of {h}; the reduction would be degenerate"
        )));
    }
    if keep.is_empty() {
        return Err(Error::precondition(format!(
            "degree threshold {d} removes every vertex of {h}"
        )));
    }
    Ok(keep)
}

pub(crate) fn vh_core(s: &SparseLH, h: &Graph) -> Result<(Vec<usize>, (usize, usize))> {
    if s.case() != SparseCase::Case2 || s.low < 2 {
        return Err(Error::precondition(format!(
            "{h} must be sparse (l,h) with l >= 2, one edge in the high class and none in the low class"
        )));
    }
    if t_diamond_order(h).is_some() {
        return Err(Error::precondition(format!("{h} is a t-diamond")));
    }
    let pair = s.high_edge.expect("case 2 has a high edge");
    let mut core = s.low_vertices.clone();
    core.extend([pair.0, pair.1]);
    core.sort_unstable();
    Ok((core, pair))
}

/// A P3 `u - v - w` with `v` of high degree and `u`, `w` of low degree.
pub(crate) fn case1_triple(s: &SparseLH, h: &Graph) -> Result<[usize; 3]> {
    if s.case() != SparseCase::Case1 || s.low < 2 {
        return Err(Error::precondition(format!(
            "{h} must be sparse (l,h) with l >= 2 and both classes independent"
        )));
    }
    for &v in &s.high_vertices {
        let lows: Vec<usize> = h
            .neighbors(v)
            .filter(|u| s.low_vertices.contains(u))
            .collect();
        for (i, &u) in lows.iter().enumerate() {
            if let Some(&w) = lows[i + 1..].iter().find(|&&w| !h.has_edge(u, w)) {
                return Ok([u, v, w]);
            }
        }
    }
    Err(Error::consistency(format!(
        "no low-high-low induced P3 in {h}"
    )))
}

impl ReductionOp {
    /// Source pattern and kind for reducing into `(target, target_kind)`,
    /// after checking the reduction's premises on the target.
    pub fn source(
        &self,
        target: &Graph,
        target_kind: ModificationKind,
    ) -> Result<(Graph, ModificationKind)> {
        use ReductionOp::*;
        let deletion_only = |what: &str| {
            if target_kind != ModificationKind::Deletion {
                return Err(Error::precondition(format!(
                    "{what} applies to Deletion problems only"
                )));
            }
            Ok(())
        };
        match self {
            ComplementProblem => Ok((target.complement(), target_kind.complement())),
            DegreeReduce { d, side } => {
                let core = degree_core(target, *d, *side)?;
                Ok((target.induced_subgraph(&core)?, target_kind))
            }
            ConstructNonadj { v_prime } | ConstructAdj { v_prime } => {
                let core = construct::normalize_subset(target, v_prime)?;
                if core.is_empty() {
                    return Err(Error::precondition("V' must be non-empty"));
                }
                Ok((target.induced_subgraph(&core)?, target_kind))
            }
            TDiamondInduction { t } => {
                deletion_only("t-diamond induction")?;
                if *t < 3 || t_diamond_order(target) != Some(*t) {
                    return Err(Error::precondition(format!(
                        "{target} is not a t-diamond with t = {t} >= 3"
                    )));
                }
                Ok((t_diamond(t - 1)?, target_kind))
            }
            SparseVlStrip { pair } => {
                deletion_only("low-pair stripping")?;
                let s = need_sparse(target, "low-pair stripping")?;
                if s.low_edge != Some(*pair) {
                    return Err(Error::precondition(format!(
                        "{pair:?} is not the edge inside the low-degree class of {target}"
                    )));
                }
                let (src, _) = target.induced_by(|v| v != pair.0 && v != pair.1);
                Ok((src, target_kind))
            }
            SparseVhRoute { pair } => {
                deletion_only("high-pair routing")?;
                let s = need_sparse(target, "high-pair routing")?;
                let (core, want) = vh_core(&s, target)?;
                if want != *pair {
                    return Err(Error::precondition(format!(
                        "{pair:?} is not the high-class edge of {target}"
                    )));
                }
                Ok((target.induced_subgraph(&core)?, target_kind))
            }
            SparseCase1 { triple } => {
                deletion_only("case-1 reduction")?;
                let s = need_sparse(target, "case-1 reduction")?;
                case1_triple(&s, target)?;
                let [u, v, w] = *triple;
                let valid = s.high_vertices.contains(&v)
                    && s.low_vertices.contains(&u)
                    && s.low_vertices.contains(&w)
                    && target.has_edge(u, v)
                    && target.has_edge(v, w)
                    && !target.has_edge(u, w);
                if !valid {
                    return Err(Error::precondition(format!(
                        "{triple:?} is not a low-high-low P3 of {target}"
                    )));
                }
                Ok((path(3)?, target_kind))
            }
        }
    }

    /// Reduces `inst` (an instance of the source problem) to an instance of
    /// `(target, target_kind)`.
    pub fn apply(
        &self,
        target: &Graph,
        target_kind: ModificationKind,
        inst: &Instance,
    ) -> Result<(Instance, ReductionStep)> {
        use ReductionOp::*;
        let (src, src_kind) = self.source(target, target_kind)?;
        expect_kind(inst, src_kind, "this step")?;
        expect_pattern(&inst.h, &src)?;
        let (out, step) = match self {
            ComplementProblem => {
                let (mut out, mut step) = complement_reduce(inst);
                // keep the target's labeling so later steps see the chain's graph
                out.h = target.clone();
                step.output.h = target.clone();
                (out, step)
            }
            DegreeReduce {
                d,
                side: DegreeSide::Min,
            } => reduce_degree(inst, target, *d)?,
            DegreeReduce {
                d,
                side: DegreeSide::Max,
            } => reduce_degree_max(inst, target, *d)?,
            ConstructNonadj { v_prime } => reduce_by_construction(inst, target, v_prime, false)?,
            ConstructAdj { v_prime } => reduce_by_construction(inst, target, v_prime, true)?,
            TDiamondInduction { t } => {
                let (mut out, step) = reduce_tdiamond(inst, *t)?;
                out.h = target.clone();
                (out, step)
            }
            SparseVlStrip { .. } => reduce_sparse_vl(inst, target)?,
            SparseVhRoute { .. } => reduce_sparse_vh(inst, target)?,
            SparseCase1 { triple } => {
                expect_kind(inst, ModificationKind::Deletion, "case-1 reduction")?;
                reduce_sparse_case1_with(&inst.g, inst.k, target, *triple)?
            }
        };
        debug_assert!(step.preserves_k());
        Ok((out, step))
    }
}

/// Deletion ↔ Completion (Editing stays Editing): complement host and pattern.
pub fn complement_reduce(inst: &Instance) -> (Instance, ReductionStep) {
    let out = Instance {
        g: inst.g.complement(),
        k: inst.k,
        h: inst.h.complement(),
        kind: inst.kind.complement(),
    };
    let step = ReductionStep::new(ReductionOp::ComplementProblem, inst, &out);
    (out, step)
}

fn reduce_by_construction(
    inst: &Instance,
    h: &Graph,
    v_prime: &[usize],
    adjacent: bool,
) -> Result<(Instance, ReductionStep)> {
    let core = construct::normalize_subset(h, v_prime)?;
    expect_pattern(&inst.h, &h.induced_subgraph(&core)?)?;
    let c = if adjacent {
        construct_adj(&inst.g, inst.k, h, &core)?
    } else {
        construct_nonadj(&inst.g, inst.k, h, &core)?
    };
    let out = Instance::new(c.graph, inst.k, h.clone(), inst.kind)?;
    let op = if adjacent {
        ReductionOp::ConstructAdj { v_prime: core }
    } else {
        ReductionOp::ConstructNonadj { v_prime: core }
    };
    let mut step = ReductionStep::new(op, inst, &out);
    step.branches = c.branches;
    Ok((out, step))
}

/// From `H'`-free to `H`-free modification (any kind), where `H'` is `H`
/// restricted to the vertices of degree more than `d`.
pub fn reduce_degree(inst: &Instance, h: &Graph, d: usize) -> Result<(Instance, ReductionStep)> {
    let core = degree_core(h, d, DegreeSide::Min)?;
    let (out, mut step) = reduce_by_construction(inst, h, &core, false)?;
    step.op = ReductionOp::DegreeReduce {
        d,
        side: DegreeSide::Min,
    };
    Ok((out, step))
}

/// From `H'`-free to `H`-free modification where `H'` is `H` without its
/// vertices of degree `d` or more. Runs [`reduce_degree`] between the
/// complements of both problems.
pub fn reduce_degree_max(
    inst: &Instance,
    h: &Graph,
    d: usize,
) -> Result<(Instance, ReductionStep)> {
    let core = degree_core(h, d, DegreeSide::Max)?;
    expect_pattern(&inst.h, &h.induced_subgraph(&core)?)?;
    let hc = h.complement();
    // vertices of degree < d in H are those of degree > n-1-d in the complement
    let dc = h.vertex_count() - 1 - d;
    let (flipped, first) = complement_reduce(inst);
    let (built, mid) = reduce_degree(&flipped, &hc, dc)?;
    let (mut out, last) = complement_reduce(&built);
    out.h = h.clone();
    let mut step = ReductionStep::new(
        ReductionOp::DegreeReduce {
            d,
            side: DegreeSide::Max,
        },
        inst,
        &out,
    );
    step.parts = vec![first, mid, last];
    Ok((out, step))
}

/// (t-1)-diamond-free Deletion to t-diamond-free Deletion, `t >= 3`.
pub fn reduce_tdiamond(inst: &Instance, t: usize) -> Result<(Instance, ReductionStep)> {
    expect_kind(inst, ModificationKind::Deletion, "t-diamond induction")?;
    if t < 3 {
        return Err(Error::precondition(format!(
            "t-diamond induction needs t >= 3, got {t}"
        )));
    }
    expect_pattern(&inst.h, &t_diamond(t - 1)?)?;
    let (g, cliques) = construct_tdiamond(&inst.g, inst.k)?;
    let out = Instance::new(g, inst.k, t_diamond(t)?, ModificationKind::Deletion)?;
    let mut step = ReductionStep::new(ReductionOp::TDiamondInduction { t }, inst, &out);
    step.cliques = cliques;
    Ok((out, step))
}

/// `h` sparse (l,h) with an edge inside the low class: reduce from `h`
/// minus that edge's endpoints.
pub fn reduce_sparse_vl(inst: &Instance, h: &Graph) -> Result<(Instance, ReductionStep)> {
    expect_kind(inst, ModificationKind::Deletion, "low-pair stripping")?;
    let s = need_sparse(h, "low-pair stripping")?;
    let pair = s.low_edge.ok_or_else(|| {
        Error::precondition(format!("the low-degree class of {h} is independent"))
    })?;
    let core: Vec<usize> = (0..h.vertex_count())
        .filter(|&v| v != pair.0 && v != pair.1)
        .collect();
    let (out, mut step) = reduce_by_construction(inst, h, &core, false)?;
    step.op = ReductionOp::SparseVlStrip { pair };
    Ok((out, step))
}

/// `h` sparse (l,h), case 2, not a t-diamond: reduce from `h` restricted to
/// the low class plus the adjacent high pair. The construction runs between
/// the complement (Completion) problems.
pub fn reduce_sparse_vh(inst: &Instance, h: &Graph) -> Result<(Instance, ReductionStep)> {
    expect_kind(inst, ModificationKind::Deletion, "high-pair routing")?;
    let s = need_sparse(h, "high-pair routing")?;
    let (core, pair) = vh_core(&s, h)?;
    expect_pattern(&inst.h, &h.induced_subgraph(&core)?)?;
    let (flipped, first) = complement_reduce(inst);
    let (built, mid) = reduce_by_construction(&flipped, &h.complement(), &core, false)?;
    let (mut out, last) = complement_reduce(&built);
    out.h = h.clone();
    let mut step = ReductionStep::new(ReductionOp::SparseVhRoute { pair }, inst, &out);
    step.parts = vec![first, mid, last];
    Ok((out, step))
}

/// `h` sparse (l,h) with both classes independent and `l >= 2`: reduce
/// from P3-free Deletion on `(g_prime, k)` with the adjacent-branch construction.
pub fn reduce_sparse_case1(
    g_prime: &Graph,
    k: usize,
    h: &Graph,
) -> Result<(Instance, ReductionStep)> {
    let s = need_sparse(h, "case-1 reduction")?;
    let triple = case1_triple(&s, h)?;
    reduce_sparse_case1_with(g_prime, k, h, triple)
}

fn reduce_sparse_case1_with(
    g_prime: &Graph,
    k: usize,
    h: &Graph,
    triple: [usize; 3],
) -> Result<(Instance, ReductionStep)> {
    let inst = Instance::new(g_prime.clone(), k, path(3)?, ModificationKind::Deletion)?;
    let (out, mut step) = reduce_by_construction(&inst, h, &triple, true)?;
    step.op = ReductionOp::SparseCase1 { triple };
    Ok((out, step))
}

/// Result of replaying a chain from a base-problem instance.
#[derive(Clone, Debug)]
pub struct Replay {
    pub instance: Instance,
    /// applied steps, base side first
    pub steps: Vec<ReductionStep>,
}

/// Applies the chain's links from the base towards `chain.pattern`,
/// re-checking every precondition.
pub fn replay_chain(chain: &Chain, seed: &Instance) -> Result<Replay> {
    let wrap = |index: usize| {
        move |e: Error| Error::Replay {
            index,
            source: Box::new(e),
        }
    };
    let base = chain.base_graph();
    if seed.kind != chain.base_kind() {
        return Err(wrap(chain.links.len())(Error::precondition(format!(
            "seed is a {:?} instance but the chain ends in a {:?} problem",
            seed.kind,
            chain.base_kind()
        ))));
    }
    expect_pattern(&seed.h, base).map_err(wrap(chain.links.len()))?;
    let mut cur = seed.clone();
    let mut steps = Vec::with_capacity(chain.links.len());
    for i in (0..chain.links.len()).rev() {
        let (target, target_kind) = chain.before(i);
        let (next, step) = chain.links[i]
            .op
            .apply(target, target_kind, &cur)
            .map_err(wrap(i))?;
        if !step.preserves_k() {
            return Err(wrap(i)(Error::consistency("budget changed")));
        }
        cur = next;
        steps.push(step);
    }
    Ok(Replay {
        instance: cur,
        steps,
    })
}
