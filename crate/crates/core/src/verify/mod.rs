//! Verification campaigns: reduction equivalence checked with the exact
//! solvers, plus exhaustive property sweeps over small graphs.

mod suites;
pub mod witness;

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::ModificationKind;
use crate::error::{Error, Result};
use crate::graph::enumerate::all_graphs_up_to_iso;
use crate::graph::Graph;
use crate::reduce::{audit_branch, Instance, ReductionOp, ReductionStep};
use crate::solve::{search_space, solve_branching, solve_bruteforce_capped, Answer};

pub use suites::{
    audit_construction, audit_suite, churn_suite, classify_suite, equivalence_specs,
    equivalence_suite, run_suite, solver_suite, AuditReport, ChurnReport, ClassifyReport,
    SolverReport,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest search space on which a campaign asks the brute-force oracle
/// for a second opinion.
pub const ORACLE_CAP: u128 = 200_000;

const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// degree-threshold reductions on the diamond and P5
    Degree,
    /// t-diamond induction at t = 3
    TDiamond,
    /// adjacent-branch reduction from P3 into K2,3
    Case1,
    /// low-pair stripping on a discovered pattern
    LowPair,
    /// high-pair routing on a discovered pattern
    HighPair,
    /// deletion/completion complementation
    Complement,
    Solver,
    Churn,
    Classify,
    Audits,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Degree,
        Suite::TDiamond,
        Suite::Case1,
        Suite::LowPair,
        Suite::HighPair,
        Suite::Complement,
        Suite::Solver,
        Suite::Churn,
        Suite::Classify,
        Suite::Audits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Degree => "degree",
            Suite::TDiamond => "tdiamond",
            Suite::Case1 => "case1",
            Suite::LowPair => "low-pair",
            Suite::HighPair => "high-pair",
            Suite::Complement => "complement",
            Suite::Solver => "solver",
            Suite::Churn => "churn",
            Suite::Classify => "classify",
            Suite::Audits => "audits",
        }
    }

    /// Accepts the suite names plus the lemma-style aliases of the CLI.
    pub fn parse(s: &str) -> Option<Suite> {
        let s = s.to_ascii_lowercase();
        let alias = match s.as_str() {
            "lemma2" => Some(Suite::Degree),
            "lemma6" => Some(Suite::TDiamond),
            "lemma8" => Some(Suite::Case1),
            "lemma10" => Some(Suite::LowPair),
            "lemma12" => Some(Suite::HighPair),
            "prop1" => Some(Suite::Complement),
            _ => None,
        };
        alias.or_else(|| Suite::ALL.into_iter().find(|x| x.name() == s))
    }
}

/// Campaign knobs; `None` picks the suite's default.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub host_cap: Option<usize>,
    pub k_cap: Option<usize>,
    /// pattern size for the exhaustive churn and classify sweeps
    pub n_cap: Option<usize>,
    pub seed: u64,
    /// randomized inputs for the audit suite and solver spot checks
    pub samples: usize,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            host_cap: None,
            k_cap: None,
            n_cap: None,
            seed: 0,
            samples: 100,
        }
    }
}

/// A reduction into `(target, target_kind)` to be checked for equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepSpec {
    pub name: String,
    pub op: ReductionOp,
    pub target: Graph,
    pub target_kind: ModificationKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub source: Instance,
    pub target: Option<Instance>,
    pub source_answer: Option<Answer>,
    pub target_answer: Option<Answer>,
    pub note: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub name: String,
    pub instances: usize,
    pub yes_yes: usize,
    pub no_no: usize,
    pub disagreements: usize,
    /// steps whose output budget differs from the input budget
    pub k_violations: usize,
    pub audit_failures: usize,
    /// yes answers whose witness does not check out
    pub witness_failures: usize,
    pub oracle_checks: usize,
    pub oracle_disagreements: usize,
    pub errors: usize,
    pub max_target_vertices: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl EquivalenceReport {
    pub fn failures(&self) -> usize {
        self.disagreements
            + self.k_violations
            + self.audit_failures
            + self.witness_failures
            + self.oracle_disagreements
            + self.errors
    }

    fn absorb(&mut self, o: Outcome) {
        self.instances += 1;
        self.max_target_vertices = self.max_target_vertices.max(o.target_vertices);
        self.k_violations += usize::from(!o.k_ok);
        self.audit_failures += o.audit_failures;
        self.witness_failures += o.witness_failures;
        self.oracle_checks += o.oracle_checks;
        self.oracle_disagreements += o.oracle_disagreements;
        let bad = match (o.source_answer, o.target_answer) {
            (Some(Answer::Yes), Some(Answer::Yes)) => {
                self.yes_yes += 1;
                false
            }
            (Some(Answer::No), Some(Answer::No)) => {
                self.no_no += 1;
                false
            }
            (Some(_), Some(_)) => {
                self.disagreements += 1;
                true
            }
            _ => {
                self.errors += 1;
                true
            }
        };
        let flagged =
            bad || !o.k_ok || o.audit_failures + o.witness_failures + o.oracle_disagreements > 0;
        if flagged && self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample {
                source: o.source,
                target: o.target,
                source_answer: o.source_answer,
                target_answer: o.target_answer,
                note: o.note,
            });
        }
    }
}

struct Outcome {
    source: Instance,
    target: Option<Instance>,
    source_answer: Option<Answer>,
    target_answer: Option<Answer>,
    k_ok: bool,
    audit_failures: usize,
    witness_failures: usize,
    oracle_checks: usize,
    oracle_disagreements: usize,
    target_vertices: usize,
    note: String,
}

fn allowed_pairs(g: &Graph, kind: ModificationKind) -> usize {
    match kind {
        ModificationKind::Deletion => g.edge_count(),
        ModificationKind::Completion => g.non_edge_count(),
        ModificationKind::Editing => g.edge_count() + g.non_edge_count(),
    }
}

/// Solves with the branching solver, re-checks the witness, and asks the
/// brute-force oracle when the instance is small enough.
fn solve_checked(inst: &Instance, o: &mut Outcome) -> Answer {
    let r = solve_branching(&inst.g, inst.k, &inst.h, inst.kind);
    if !r.check(&inst.g, inst.k, &inst.h, inst.kind) {
        o.witness_failures += 1;
        o.note.push_str("invalid witness; ");
    }
    if search_space(allowed_pairs(&inst.g, inst.kind), inst.k) <= ORACLE_CAP {
        if let Ok(b) = solve_bruteforce_capped(&inst.g, inst.k, &inst.h, inst.kind, ORACLE_CAP) {
            o.oracle_checks += 1;
            if b.answer != r.answer {
                o.oracle_disagreements += 1;
                o.note.push_str("branching and brute force disagree; ");
            }
        }
    }
    r.answer
}

fn audit_step(step: &ReductionStep, target: &Instance) -> usize {
    if !step.parts.is_empty() {
        return 0;
    }
    step.branches
        .iter()
        .filter(|b| audit_branch(b, &target.h, &target.g).is_err())
        .count()
}

fn evaluate(spec: &StepSpec, source: Instance) -> Outcome {
    let mut o = Outcome {
        source,
        target: None,
        source_answer: None,
        target_answer: None,
        k_ok: true,
        audit_failures: 0,
        witness_failures: 0,
        oracle_checks: 0,
        oracle_disagreements: 0,
        target_vertices: 0,
        note: String::new(),
    };
    let (target, step) = match spec.op.apply(&spec.target, spec.target_kind, &o.source) {
        Ok(x) => x,
        Err(e) => {
            o.note = e.to_string();
            return o;
        }
    };
    o.k_ok = step.preserves_k() && target.k == o.source.k;
    o.audit_failures = audit_step(&step, &target);
    o.target_vertices = target.g.vertex_count();
    let src = o.source.clone();
    o.source_answer = Some(solve_checked(&src, &mut o));
    o.target_answer = Some(solve_checked(&target, &mut o));
    o.target = Some(target);
    o
}

/// Checks that `spec` maps yes-instances to yes-instances and no to no on
/// every source host in `hosts` and every budget in `ks`. Instances run in
/// parallel; the report does not depend on scheduling.
pub fn verify_equivalence_on(
    spec: &StepSpec,
    hosts: &[Graph],
    ks: RangeInclusive<usize>,
) -> Result<EquivalenceReport> {
    let (src_h, src_kind) = spec.op.source(&spec.target, spec.target_kind)?;
    let jobs: Vec<Instance> = hosts
        .iter()
        .flat_map(|g| ks.clone().map(move |k| (g, k)))
        .map(|(g, k)| Instance::new(g.clone(), k, src_h.clone(), src_kind))
        .collect::<Result<_>>()?;
    let outcomes: Vec<Outcome> = jobs
        .into_par_iter()
        .map(|inst| evaluate(spec, inst))
        .collect();
    let mut report = EquivalenceReport {
        name: spec.name.clone(),
        ..Default::default()
    };
    for o in outcomes {
        report.absorb(o);
    }
    Ok(report)
}

/// [`verify_equivalence_on`] over all hosts with `1..=host_cap` vertices
/// (up to isomorphism) and budgets `k_min..=k_cap`.
pub fn verify_equivalence(
    spec: &StepSpec,
    host_cap: usize,
    k_min: usize,
    k_cap: usize,
) -> Result<EquivalenceReport> {
    if k_min > k_cap {
        return Err(Error::precondition(format!(
            "empty budget range {k_min}..={k_cap}"
        )));
    }
    verify_equivalence_on(spec, &all_graphs_up_to_iso(host_cap), k_min..=k_cap)
}

/// Runs `f` on a pool with `workers` threads, or on the global pool.
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(f()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::precondition(format!("cannot start {w} workers: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "suite", rename_all = "kebab-case")]
pub enum SuiteReport {
    Equivalence {
        name: String,
        steps: Vec<EquivalenceReport>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        notes: Vec<String>,
    },
    Solver(SolverReport),
    Churn(ChurnReport),
    Classify(ClassifyReport),
    Audits(AuditReport),
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        match self {
            SuiteReport::Equivalence { steps, .. } => {
                steps.iter().map(EquivalenceReport::failures).sum()
            }
            SuiteReport::Solver(r) => r.failures(),
            SuiteReport::Churn(r) => r.failures(),
            SuiteReport::Classify(r) => r.failures(),
            SuiteReport::Audits(r) => r.failures(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub version: String,
    pub config: CampaignConfig,
    pub suites: Vec<SuiteReport>,
    pub failures: usize,
}

impl VerifyReport {
    pub fn new(config: CampaignConfig, suites: Vec<SuiteReport>) -> Self {
        let failures = suites.iter().map(SuiteReport::failures).sum();
        VerifyReport {
            version: VERSION.to_string(),
            config,
            suites,
            failures,
        }
    }
}
