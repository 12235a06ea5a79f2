use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::witness::{high_pair_witness, low_pair_witness};
use super::{verify_equivalence, CampaignConfig, Counterexample, StepSpec, Suite, SuiteReport};
use crate::classify::sparse::{recognize_sparse_lh, t_diamond_order, SparseCase};
use crate::classify::{
    classify, deletion_churn, deletion_terminal_kind, editing_churn, is_editing_terminal,
    ChurnStepKind, DeletionTerminal, ModificationKind,
};
use crate::error::{Error, Result};
use crate::graph::enumerate::{all_graphs_up_to_iso, labeled_graphs};
use crate::graph::iso::{are_isomorphic, automorphism_count, is_induced_copy_free};
use crate::graph::named::{complete, complete_bipartite, cycle, diamond, path, t_diamond};
use crate::graph::Graph;
use crate::reduce::{
    audit_branch, case1_triple, construct_adj, construct_nonadj, construct_tdiamond, replay_chain,
    vh_core, Construction, DegreeSide, Instance, ReductionOp,
};
use crate::solve::{solve_branching, solve_bruteforce_capped};

const ALL_KINDS: [ModificationKind; 3] = ModificationKind::ALL;

fn kind_name(kind: ModificationKind) -> &'static str {
    match kind {
        ModificationKind::Deletion => "deletion",
        ModificationKind::Completion => "completion",
        ModificationKind::Editing => "editing",
    }
}

/// Reduction steps checked by an equivalence suite, with notes on anything
/// that makes the campaign weaker than it looks.
pub fn equivalence_specs(suite: Suite, host_cap: usize) -> Result<(Vec<StepSpec>, Vec<String>)> {
    let del = ModificationKind::Deletion;
    let mut notes = Vec::new();
    let specs = match suite {
        Suite::Degree => {
            let mut v = Vec::new();
            for (label, target, d) in [("diamond", diamond(), 2), ("P5", path(5)?, 1)] {
                for kind in ALL_KINDS {
                    v.push(StepSpec {
                        name: format!("degree {label} d={d} {}", kind_name(kind)),
                        op: ReductionOp::DegreeReduce {
                            d,
                            side: DegreeSide::Min,
                        },
                        target: target.clone(),
                        target_kind: kind,
                    });
                }
            }
            v
        }
        Suite::TDiamond => vec![StepSpec {
            name: "tdiamond t=3".into(),
            op: ReductionOp::TDiamondInduction { t: 3 },
            target: t_diamond(3)?,
            target_kind: del,
        }],
        Suite::Case1 => {
            let h = complete_bipartite(2, 3)?;
            let s =
                recognize_sparse_lh(&h).ok_or_else(|| Error::consistency("K2,3 is not sparse"))?;
            vec![StepSpec {
                name: "case1 K2,3".into(),
                op: ReductionOp::SparseCase1 {
                    triple: case1_triple(&s, &h)?,
                },
                target: h,
                target_kind: del,
            }]
        }
        Suite::LowPair => {
            let mut v = Vec::new();
            for case in [SparseCase::Case3, SparseCase::Case4] {
                let h = low_pair_witness(8, case).ok_or_else(|| {
                    Error::consistency(format!("no {case:?} low-pair pattern on up to 8 vertices"))
                })?;
                let s = recognize_sparse_lh(&h).expect("witness is sparse");
                let pair = s.low_edge.expect("witness has a low edge");
                v.push(StepSpec {
                    name: format!("low-pair {case:?} {h}"),
                    op: ReductionOp::SparseVlStrip { pair },
                    target: h,
                    target_kind: del,
                });
            }
            v
        }
        Suite::HighPair => {
            let h = high_pair_witness(8)
                .ok_or_else(|| Error::consistency("no high-pair pattern on up to 8 vertices"))?;
            let s = recognize_sparse_lh(&h).expect("witness is sparse");
            let (core, pair) = vh_core(&s, &h)?;
            if core.len() > host_cap {
                notes.push(format!(
                    "source pattern has {} vertices, more than the host cap {host_cap}: every instance is yes on both sides",
                    core.len()
                ));
            }
            vec![StepSpec {
                name: format!("high-pair {h}"),
                op: ReductionOp::SparseVhRoute { pair },
                target: h,
                target_kind: del,
            }]
        }
        Suite::Complement => {
            let mut v = Vec::new();
            for (label, h) in [("P3", path(3)?), ("K3", complete(3)?)] {
                for kind in ALL_KINDS {
                    // target is the complementary problem, so the source is (h, kind)
                    v.push(StepSpec {
                        name: format!("complement {label} {}", kind_name(kind)),
                        op: ReductionOp::ComplementProblem,
                        target: h.complement(),
                        target_kind: kind.complement(),
                    });
                }
            }
            v
        }
        other => {
            return Err(Error::precondition(format!(
                "{} is not an equivalence suite",
                other.name()
            )))
        }
    };
    Ok((specs, notes))
}

/// `(host_cap, k_min, k_cap)` defaults per equivalence suite.
fn equivalence_defaults(suite: Suite) -> (usize, usize, usize) {
    match suite {
        Suite::Degree => (5, 1, 2),
        Suite::TDiamond => (6, 1, 2),
        Suite::LowPair => (5, 1, 2),
        Suite::Complement => (5, 0, 2),
        _ => (4, 1, 1),
    }
}

pub fn equivalence_suite(suite: Suite, cfg: &CampaignConfig) -> Result<SuiteReport> {
    let (host_default, k_min, k_default) = equivalence_defaults(suite);
    let host_cap = cfg.host_cap.unwrap_or(host_default);
    let k_cap = cfg.k_cap.unwrap_or(k_default);
    let (specs, notes) = equivalence_specs(suite, host_cap)?;
    let steps = specs
        .iter()
        .map(|spec| verify_equivalence(spec, host_cap, k_min.min(k_cap), k_cap))
        .collect::<Result<_>>()?;
    Ok(SuiteReport::Equivalence {
        name: suite.name().to_string(),
        steps,
        notes,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverReport {
    pub instances: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub witness_failures: usize,
    pub refusals: usize,
    pub zero_budget_checks: usize,
    pub zero_budget_mismatches: usize,
    pub monotonicity_checks: usize,
    pub monotonicity_violations: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl SolverReport {
    pub fn failures(&self) -> usize {
        self.disagreements
            + self.witness_failures
            + self.refusals
            + self.zero_budget_mismatches
            + self.monotonicity_violations
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Branching solver against brute force on every labeled host with at most
/// `host_cap` vertices (default 5), `k <= k_cap` (default 2), patterns
/// P3, K3, diamond, P4 and all three kinds.
pub fn solver_suite(cfg: &CampaignConfig) -> Result<SolverReport> {
    let host_cap = cfg.host_cap.unwrap_or(5);
    let k_cap = cfg.k_cap.unwrap_or(2);
    let patterns = [path(3)?, complete(3)?, diamond(), path(4)?];
    let hosts: Vec<Graph> = (1..=host_cap).flat_map(labeled_graphs).collect();
    let mut jobs = Vec::new();
    for g in &hosts {
        for h in &patterns {
            for kind in ALL_KINDS {
                for k in 0..=k_cap {
                    jobs.push((g, h, kind, k));
                }
            }
        }
    }
    let outcomes: Vec<(bool, bool, bool, Option<Counterexample>)> = jobs
        .par_iter()
        .map(|&(g, h, kind, k)| {
            let a = solve_branching(g, k, h, kind);
            let witness_ok = a.check(g, k, h, kind);
            let (agree, refused) = match solve_bruteforce_capped(g, k, h, kind, u128::MAX) {
                Ok(b) => (b.answer == a.answer && b.check(g, k, h, kind), false),
                Err(_) => (false, true),
            };
            let cx = (!agree || !witness_ok).then(|| Counterexample {
                source: Instance::new(g.clone(), k, h.clone(), kind).expect("pattern is non-empty"),
                target: None,
                source_answer: Some(a.answer),
                target_answer: None,
                note: "branching vs brute force".into(),
            });
            (agree, witness_ok, refused, cx)
        })
        .collect();
    let mut r = SolverReport::default();
    for (agree, witness_ok, refused, cx) in outcomes {
        r.instances += 1;
        if refused {
            r.refusals += 1;
        } else if agree {
            r.agreements += 1;
        } else {
            r.disagreements += 1;
        }
        r.witness_failures += usize::from(!witness_ok);
        if let Some(cx) = cx {
            if r.counterexamples.len() < 10 {
                r.counterexamples.push(cx);
            }
        }
    }

    // k = 0 answers exactly the freeness question
    let small_hosts = all_graphs_up_to_iso(host_cap.max(6));
    let small_patterns = all_graphs_up_to_iso(4);
    let zero: Vec<bool> = small_hosts
        .par_iter()
        .flat_map_iter(|g| {
            small_patterns.iter().flat_map(move |h| {
                ALL_KINDS.into_iter().map(move |kind| {
                    solve_branching(g, 0, h, kind).is_yes() == is_induced_copy_free(g, h)
                })
            })
        })
        .collect();
    r.zero_budget_checks = zero.len();
    r.zero_budget_mismatches = zero.iter().filter(|ok| !**ok).count();

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        let n = rng.gen_range(3..=7);
        let g = random_graph(&mut rng, n, 0.5);
        let h = &patterns[rng.gen_range(0..patterns.len())];
        let kind = ALL_KINDS[rng.gen_range(0..3)];
        let k = rng.gen_range(0..=2);
        r.monotonicity_checks += 1;
        if solve_branching(&g, k, h, kind).is_yes() && !solve_branching(&g, k + 1, h, kind).is_yes()
        {
            r.monotonicity_violations += 1;
        }
    }
    Ok(r)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChurnReport {
    pub editing_checked: usize,
    pub deletion_checked: usize,
    pub sparse_terminals: usize,
    pub violations: Vec<String>,
}

impl ChurnReport {
    pub fn failures(&self) -> usize {
        self.violations.len()
    }
}

fn check_editing(g: &Graph) -> Vec<String> {
    let mut bad = Vec::new();
    match editing_churn(g) {
        Err(e) => bad.push(format!("editing churn on {g}: {e}")),
        Ok(t) => {
            if !is_editing_terminal(&t.terminal) || t.terminal.vertex_count() < 3 {
                bad.push(format!("editing churn on {g} ended at {}", t.terminal));
            }
            if t.steps.iter().any(|s| s.after.vertex_count() < 3) {
                bad.push(format!("editing churn on {g} dropped below 3 vertices"));
            }
            if !t.replays_from(g) {
                bad.push(format!("editing churn on {g} does not replay"));
            }
        }
    }
    bad
}

/// Deletion churn checks; the bool is whether the terminal was sparse.
fn check_deletion(g: &Graph) -> (Vec<String>, bool) {
    let mut bad = Vec::new();
    let t = match deletion_churn(g) {
        Ok(t) => t,
        Err(e) => return (vec![format!("deletion churn on {g}: {e}")], false),
    };
    let term = &t.terminal;
    if term.edge_count() < 2 || t.steps.iter().any(|s| s.after.edge_count() < 2) {
        bad.push(format!("deletion churn on {g} dropped below 2 edges"));
    }
    if !t.replays_from(g) {
        bad.push(format!("deletion churn on {g} does not replay"));
    }
    for s in &t.steps {
        if let ChurnStepKind::DeleteMaxDegree(_) = s.kind {
            let min = s.before.degree_profile().min_degree;
            if s.before
                .induced_by(|v| s.before.degree(v) > min)
                .0
                .edge_count()
                >= 2
            {
                bad.push(format!(
                    "deletion churn on {g} took the max side while the min side applied"
                ));
            }
        }
    }
    let mut sparse = false;
    match deletion_terminal_kind(term) {
        None => bad.push(format!(
            "deletion churn on {g} ended at unclassified {term}"
        )),
        Some(DeletionTerminal::Regular) | Some(DeletionTerminal::Forest) => {}
        Some(DeletionTerminal::Sparse(s)) => {
            sparse = true;
            if s.low < 2 || s.low_vertices.len() < 2 {
                bad.push(format!(
                    "sparse terminal {term} has low degree {} on {} vertices",
                    s.low,
                    s.low_vertices.len()
                ));
            } else if s.low_vertices.len() == 2 && !are_isomorphic(term, &diamond()) {
                bad.push(format!(
                    "sparse terminal {term} has two low vertices but is not the diamond"
                ));
            }
            match s.case() {
                SparseCase::Case3 | SparseCase::Case4 => {
                    let (a, b) = s.low_edge.expect("low edge");
                    if term.induced_by(|v| v != a && v != b).0.edge_count() < 2 {
                        bad.push(format!(
                            "stripping the low pair of {term} leaves fewer than 2 edges"
                        ));
                    }
                }
                SparseCase::Case2 if t_diamond_order(term).is_none() && s.low >= 2 => {
                    match vh_core(&s, term) {
                        Ok((core, _)) => {
                            let sub = term.induced_subgraph(&core).expect("core in range");
                            if sub.edge_count() < 2 || sub.vertex_count() >= term.vertex_count() {
                                bad.push(format!("high-pair core of {term} is {sub}"));
                            }
                        }
                        Err(e) => bad.push(format!("high-pair core of {term}: {e}")),
                    }
                }
                _ => {}
            }
        }
    }
    (bad, sparse)
}

/// Both churn procedures on every graph with at most `n_cap` vertices
/// (default 6).
pub fn churn_suite(cfg: &CampaignConfig) -> ChurnReport {
    let n_cap = cfg.n_cap.unwrap_or(6);
    let graphs = all_graphs_up_to_iso(n_cap);
    let per_graph: Vec<(bool, bool, bool, Vec<String>)> = graphs
        .par_iter()
        .map(|g| {
            let mut bad = Vec::new();
            let ed = g.vertex_count() >= 3;
            if ed {
                bad.extend(check_editing(g));
            }
            let del = g.edge_count() >= 2;
            let mut sparse = false;
            if del {
                let (b, s) = check_deletion(g);
                bad.extend(b);
                sparse = s;
            }
            (ed, del, sparse, bad)
        })
        .collect();
    let mut r = ChurnReport::default();
    for (ed, del, sparse, bad) in per_graph {
        r.editing_checked += usize::from(ed);
        r.deletion_checked += usize::from(del);
        r.sparse_terminals += usize::from(sparse);
        r.violations.extend(bad);
    }
    r
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub patterns: usize,
    pub polynomial: usize,
    pub np_complete: usize,
    pub table_mismatches: usize,
    pub complement_mismatches: usize,
    pub chains_replayed: usize,
    pub chain_failures: usize,
    pub messages: Vec<String>,
}

impl ClassifyReport {
    pub fn failures(&self) -> usize {
        self.table_mismatches + self.complement_mismatches + self.chain_failures
    }
}

fn expected_polynomial(h: &Graph, kind: ModificationKind) -> bool {
    let n = h.vertex_count();
    let edges = h.edge_count();
    match kind {
        ModificationKind::Deletion => edges <= 1,
        ModificationKind::Completion => n * n.saturating_sub(1) / 2 - edges <= 1,
        ModificationKind::Editing => n <= 2,
    }
}

fn check_classification(
    h: &Graph,
    kind: ModificationKind,
) -> (Option<bool>, bool, bool, Vec<String>) {
    let mut msgs = Vec::new();
    let c = match classify(h, kind) {
        Ok(c) => c,
        Err(e) => {
            return (
                None,
                true,
                false,
                vec![format!("classify({h}, {kind:?}): {e}")],
            )
        }
    };
    let poly = c.is_polynomial();
    if poly != expected_polynomial(h, kind) {
        msgs.push(format!("classify({h}, {kind:?}) gave polynomial = {poly}"));
    }
    let mut chain_bad = false;
    let mut replayed = false;
    if let Some(chain) = c.chain() {
        let seed = Instance::new(
            complete(2).expect("K2"),
            1,
            chain.base_graph().clone(),
            chain.base_kind(),
        );
        let result = chain
            .validate()
            .and_then(|_| replay_chain(&chain, &seed.expect("non-empty base")));
        match result {
            Ok(r) => {
                replayed = true;
                if r.instance.k != 1 || r.instance.kind != kind || !are_isomorphic(&r.instance.h, h)
                {
                    chain_bad = true;
                    msgs.push(format!(
                        "chain for ({h}, {kind:?}) replays to the wrong problem"
                    ));
                }
            }
            Err(e) => {
                chain_bad = true;
                msgs.push(format!("chain for ({h}, {kind:?}): {e}"));
            }
        }
    }
    (Some(poly), chain_bad, replayed, msgs)
}

/// Dichotomy table, complement agreement and chain replay over every
/// pattern with at most `n_cap` vertices (default 6).
pub fn classify_suite(cfg: &CampaignConfig) -> ClassifyReport {
    let n_cap = cfg.n_cap.unwrap_or(6);
    let graphs = all_graphs_up_to_iso(n_cap);
    let rows: Vec<ClassifyReport> = graphs
        .par_iter()
        .map(|h| {
            let mut r = ClassifyReport {
                patterns: 1,
                ..Default::default()
            };
            let mut verdicts = Vec::new();
            for kind in ALL_KINDS {
                let (poly, chain_bad, replayed, msgs) = check_classification(h, kind);
                match poly {
                    Some(true) => r.polynomial += 1,
                    Some(false) => r.np_complete += 1,
                    None => {}
                }
                if poly.is_none() || poly != Some(expected_polynomial(h, kind)) {
                    r.table_mismatches += 1;
                }
                r.chain_failures += usize::from(chain_bad);
                r.chains_replayed += usize::from(replayed);
                r.messages.extend(msgs);
                verdicts.push(poly);
            }
            let hc = h.complement();
            let flipped = |kind| classify(&hc, kind).ok().map(|c| c.is_polynomial());
            if verdicts[0] != flipped(ModificationKind::Completion)
                || verdicts[2] != flipped(ModificationKind::Editing)
            {
                r.complement_mismatches += 1;
                r.messages
                    .push(format!("verdicts for {h} and its complement disagree"));
            }
            r
        })
        .collect();
    let mut total = ClassifyReport::default();
    for r in rows {
        total.patterns += r.patterns;
        total.polynomial += r.polynomial;
        total.np_complete += r.np_complete;
        total.table_mismatches += r.table_mismatches;
        total.complement_mismatches += r.complement_mismatches;
        total.chains_replayed += r.chains_replayed;
        total.chain_failures += r.chain_failures;
        total.messages.extend(r.messages);
    }
    total
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub nonadj_checked: usize,
    pub adj_checked: usize,
    pub tdiamond_checked: usize,
    pub failures: Vec<String>,
}

impl AuditReport {
    pub fn failures(&self) -> usize {
        self.failures.len()
    }
}

fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Structural checks on one branch construction; `adjacent` selects the
/// joined-branches variant.
pub fn audit_construction(
    c: &Construction,
    g_prime: &Graph,
    k: usize,
    h: &Graph,
    v_prime: &[usize],
    adjacent: bool,
) -> Vec<String> {
    let mut bad = Vec::new();
    let n0 = g_prime.vertex_count();
    let sub = h.induced_subgraph(v_prime).expect("subset in range");
    let p = v_prime.len();
    let copies = binomial(n0, p) * (1..=p).product::<usize>() / automorphism_count(&sub);
    let rest = h.vertex_count() - p;
    if c.graph.vertex_count() != n0 + copies * (k + 1) * rest {
        bad.push(format!(
            "vertex count {} breaks the formula",
            c.graph.vertex_count()
        ));
    }
    if c.branches.len() != copies * (k + 1) {
        bad.push(format!("{} branches for {copies} copies", c.branches.len()));
    }
    let original: Vec<usize> = (0..n0).collect();
    if c.graph.induced_subgraph(&original).ok().as_ref() != Some(g_prime) {
        bad.push("host adjacency changed".into());
    }
    let outside_max = (0..h.vertex_count())
        .filter(|v| !v_prime.contains(v))
        .map(|v| h.degree(v))
        .max()
        .unwrap_or(0);
    let mut owner = vec![usize::MAX; c.graph.vertex_count()];
    for (i, b) in c.branches.iter().enumerate() {
        for &x in &b.branch_vertices {
            owner[x] = i;
        }
    }
    let mut expected_edges = g_prime.edge_count();
    let mut branch_vertices = 0;
    for (i, b) in c.branches.iter().enumerate() {
        if let Err(e) = audit_branch(b, h, &c.graph) {
            bad.push(format!("branch {i}: {e}"));
        }
        expected_edges += b.branch_edges.len();
        branch_vertices += b.branch_vertices.len();
        let base: HashSet<usize> = b.base_vertices.iter().copied().collect();
        for &x in &b.branch_vertices {
            let mut own = 0;
            for y in c.graph.neighbors(x) {
                let fine = if owner[y] == i || base.contains(&y) {
                    own += 1;
                    true
                } else {
                    adjacent && owner[y] != usize::MAX
                };
                if !fine {
                    bad.push(format!("branch vertex {x} sees {y}"));
                }
            }
            if own > outside_max {
                bad.push(format!(
                    "branch vertex {x} has {own} neighbours inside its copy"
                ));
            }
        }
    }
    if adjacent {
        let sizes: Vec<usize> = c.branches.iter().map(|b| b.branch_vertices.len()).collect();
        let same: usize = sizes.iter().map(|s| s * s).sum();
        expected_edges += (branch_vertices * branch_vertices - same) / 2;
        for (i, a) in c.branches.iter().enumerate() {
            for b in &c.branches[i + 1..] {
                for &x in &a.branch_vertices {
                    if b.branch_vertices.iter().any(|&y| !c.graph.has_edge(x, y)) {
                        bad.push(format!("branch vertex {x} misses another branch"));
                    }
                }
            }
        }
    }
    if c.graph.edge_count() != expected_edges {
        bad.push(format!(
            "edge count {} instead of {expected_edges}",
            c.graph.edge_count()
        ));
    }
    bad
}

fn audit_tdiamond(g_prime: &Graph, k: usize) -> Vec<String> {
    let mut bad = Vec::new();
    let (g, cliques) = match construct_tdiamond(g_prime, k) {
        Ok(x) => x,
        Err(e) => return vec![e.to_string()],
    };
    let (n0, m) = (g_prime.vertex_count(), g_prime.edge_count());
    if g.vertex_count() != n0 + m * (k + 1) || cliques.len() != m {
        bad.push("tdiamond vertex count breaks the formula".into());
    }
    if g.edge_count() != m + m * (binomial(k + 1, 2) + 2 * (k + 1)) {
        bad.push("tdiamond edge count breaks the formula".into());
    }
    let original: Vec<usize> = (0..n0).collect();
    if g.induced_subgraph(&original).ok().as_ref() != Some(g_prime) {
        bad.push("tdiamond changed the host".into());
    }
    for c in &cliques {
        let (u, v) = c.for_edge;
        if c.clique_vertices.len() != k + 1 || !g_prime.has_edge(u, v) {
            bad.push(format!("bad clique record for {u}-{v}"));
        }
        for (i, &x) in c.clique_vertices.iter().enumerate() {
            if !g.has_edge(x, u) || !g.has_edge(x, v) || g.degree(x) != k + 2 {
                bad.push(format!(
                    "clique vertex {x} is not attached to exactly {u}, {v} and its clique"
                ));
            }
            if c.clique_vertices[i + 1..]
                .iter()
                .any(|&y| !g.has_edge(x, y))
            {
                bad.push(format!("clique for {u}-{v} is not complete"));
            }
        }
    }
    bad
}

/// Randomized structural audits of the three constructions.
pub fn audit_suite(cfg: &CampaignConfig) -> AuditReport {
    let host_cap = cfg.host_cap.unwrap_or(5).max(1);
    let k_cap = cfg.k_cap.unwrap_or(2).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut r = AuditReport::default();
    for _ in 0..cfg.samples {
        let n0 = rng.gen_range(1..=host_cap);
        let g_prime = random_graph(&mut rng, n0, 0.5);
        let k = rng.gen_range(1..=k_cap);
        let hn = rng.gen_range(2..=5);
        let h = random_graph(&mut rng, hn, 0.5);
        let size = rng.gen_range(1..hn);
        let mut pool: Vec<usize> = (0..hn).collect();
        let mut v_prime = Vec::new();
        for _ in 0..size {
            v_prime.push(pool.swap_remove(rng.gen_range(0..pool.len())));
        }
        v_prime.sort_unstable();
        for adjacent in [false, true] {
            let built = if adjacent {
                construct_adj(&g_prime, k, &h, &v_prime)
            } else {
                construct_nonadj(&g_prime, k, &h, &v_prime)
            };
            let tag = format!("({g_prime}, k={k}, {h}, {v_prime:?}, adjacent={adjacent})");
            match built {
                Ok(c) => r.failures.extend(
                    audit_construction(&c, &g_prime, k, &h, &v_prime, adjacent)
                        .into_iter()
                        .map(|e| format!("{tag}: {e}")),
                ),
                Err(e) => r.failures.push(format!("{tag}: {e}")),
            }
            if adjacent {
                r.adj_checked += 1;
            } else {
                r.nonadj_checked += 1;
            }
        }
        let tn = rng.gen_range(1..=host_cap + 1);
        let tg = random_graph(&mut rng, tn, 0.5);
        r.failures.extend(
            audit_tdiamond(&tg, k)
                .into_iter()
                .map(|e| format!("({tg}, k={k}): {e}")),
        );
        r.tdiamond_checked += 1;
    }
    // one fixed regression input besides the random ones
    if let Ok(c) = construct_nonadj(&cycle(4).expect("C4"), 1, &diamond(), &[0, 1]) {
        r.failures.extend(audit_construction(
            &c,
            &cycle(4).expect("C4"),
            1,
            &diamond(),
            &[0, 1],
            false,
        ));
        r.nonadj_checked += 1;
    }
    r
}

pub fn run_suite(suite: Suite, cfg: &CampaignConfig) -> Result<SuiteReport> {
    Ok(match suite {
        Suite::Solver => SuiteReport::Solver(solver_suite(cfg)?),
        Suite::Churn => SuiteReport::Churn(churn_suite(cfg)),
        Suite::Classify => SuiteReport::Classify(classify_suite(cfg)),
        Suite::Audits => SuiteReport::Audits(audit_suite(cfg)),
        eq => equivalence_suite(eq, cfg)?,
    })
}
