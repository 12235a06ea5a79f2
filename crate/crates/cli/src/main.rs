use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hfree::classify::churn::{deletion_churn, editing_churn, ChurnTrace};
use hfree::classify::{recognize_sparse_lh, t_diamond_order};
use hfree::graph::io::parse_graph;
use hfree::graph::iso::are_isomorphic;
use hfree::graph::named::{diamond, parse_named, path};
use hfree::reduce::{
    complement_reduce, reduce_degree, reduce_degree_max, reduce_sparse_case1, reduce_sparse_vh,
    reduce_sparse_vl, reduce_tdiamond,
};
use hfree::solve::solve_bruteforce;
use hfree::verify::{
    run_suite, with_workers, CampaignConfig, Suite, SuiteReport, VerifyReport, VERSION,
};
use hfree::{classify, solve_branching, Graph, Instance, ModificationKind, ReductionOp};

#[derive(Parser)]
#[command(
    name = "hfree",
    version,
    about = "H-free edge modification: classify, reduce, solve, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Polynomial or NP-complete, with the reduction chain as witness
    Classify {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree-peeling trace down to a terminal graph
    Churn {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply one reduction step to an instance file
    Reduce(ReduceArgs),
    /// Decide an instance; exit 0 for yes, 1 for no, 2 on error
    Solve {
        /// instance JSON file, `-` for stdin
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "branch")]
        engine: EngineArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites; exit 0 iff nothing failed
    Verify(VerifyArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PatternArgs {
    /// graph file in graph6 or JSON, `-` for stdin
    #[arg(long)]
    input: Option<PathBuf>,
    /// inline graph: a family name such as P5, C7, K2,3, diamond, or graph6
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Args)]
struct ReduceArgs {
    /// instance JSON file, or the output of an earlier reduce; `-` for stdin
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    step: StepArg,
    /// pattern of the produced instance (family name or graph6)
    #[arg(long)]
    target: Option<String>,
    /// degree threshold; defaults to the target's min (or max) degree
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_enum, default_value = "min")]
    side: SideArg,
    /// comma-separated target vertices kept as the source pattern
    #[arg(long, value_delimiter = ',')]
    v_prime: Vec<usize>,
    /// t of the produced t-diamond; defaults to one more than the input's
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// suite name, a lemma-style alias, or `all`
    suite: String,
    #[arg(long)]
    host_cap: Option<usize>,
    #[arg(long)]
    k_cap: Option<usize>,
    #[arg(long)]
    n_cap: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// randomized inputs for the audit and solver spot checks
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Deletion,
    Completion,
    Editing,
}

impl From<KindArg> for ModificationKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Deletion => ModificationKind::Deletion,
            KindArg::Completion => ModificationKind::Completion,
            KindArg::Editing => ModificationKind::Editing,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Editing,
    Deletion,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Branch,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Min,
    Max,
}

#[derive(Clone, Copy, ValueEnum)]
enum StepArg {
    Complement,
    Degree,
    Nonadj,
    Adj,
    Tdiamond,
    LowPair,
    HighPair,
    Case1,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Classify { pattern, kind, out } => {
            let h = pattern.load()?;
            let c = classify(&h, kind.into())?;
            emit(&with_version(serde_json::to_value(&c)?), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Churn { pattern, mode, out } => {
            let h = pattern.load()?;
            let (name, trace) = match mode {
                ModeArg::Editing => ("editing", editing_churn(&h)?),
                ModeArg::Deletion => ("deletion", deletion_churn(&h)?),
            };
            let report = json!({
                "version": VERSION,
                "mode": name,
                "h": h,
                "steps": trace.steps,
                "terminal": trace.terminal,
                "terminal_shape": terminal_shape(mode, &trace),
            });
            emit(&report, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce(args) => {
            let inst = read_instance(&args.input)?;
            let (out_inst, step) =
                reduce(&args, &inst).with_context(|| format!("{} step", step_name(args.step)))?;
            let report = json!({ "version": VERSION, "instance": out_inst, "step": step });
            emit(&report, args.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { input, engine, out } => {
            let inst = read_instance(&input)?;
            let (name, result) = match engine {
                EngineArg::Branch => (
                    "branch",
                    solve_branching(&inst.g, inst.k, &inst.h, inst.kind),
                ),
                EngineArg::Brute => (
                    "brute",
                    solve_bruteforce(&inst.g, inst.k, &inst.h, inst.kind)?,
                ),
            };
            let report = json!({
                "version": VERSION,
                "engine": name,
                "instance": inst.summary(),
                "result": result,
            });
            emit(&report, out.as_deref())?;
            Ok(if result.is_yes() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Verify(args) => verify(args),
    }
}

impl PatternArgs {
    fn load(&self) -> Result<Graph> {
        match (&self.input, &self.graph) {
            (Some(p), _) => {
                let text = read_text(p)?;
                parse_graph(&text).with_context(|| format!("parsing {}", p.display()))
            }
            (None, Some(spec)) => graph_spec(spec),
            (None, None) => bail!("give --input or --graph"),
        }
    }
}

/// A family name if it parses as one, otherwise graph6 or JSON text.
fn graph_spec(spec: &str) -> Result<Graph> {
    parse_named(spec)
        .or_else(|_| parse_graph(spec))
        .map_err(|e| anyhow!("cannot read graph {spec:?}: {e}"))
}

fn read_text(p: &Path) -> Result<String> {
    if p == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
    }
}

/// Accepts a bare instance or a reduce report wrapping one.
fn read_instance(p: &Path) -> Result<Instance> {
    let text = read_text(p)?;
    let mut v: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", p.display()))?;
    if let Some(inner) = v.get_mut("instance") {
        v = inner.take();
    }
    let inst: Instance =
        serde_json::from_value(v).with_context(|| format!("reading instance {}", p.display()))?;
    Ok(Instance::new(inst.g, inst.k, inst.h, inst.kind)?)
}

fn with_version(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("version".into(), json!(VERSION));
    }
    v
}

fn emit(v: &Value, out: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(io::stdout().write_all(text.as_bytes())?),
    }
}

fn terminal_shape(mode: ModeArg, trace: &ChurnTrace) -> &'static str {
    let t = &trace.terminal;
    match mode {
        ModeArg::Editing if t.is_regular() => "regular",
        ModeArg::Editing if are_isomorphic(t, &diamond()) => "diamond",
        ModeArg::Editing if t.vertex_count() == 3 => "P3",
        ModeArg::Editing => "P4",
        ModeArg::Deletion if t.is_regular() => "regular",
        ModeArg::Deletion if t.is_forest() => "forest",
        ModeArg::Deletion if recognize_sparse_lh(t).is_some() => "sparse",
        ModeArg::Deletion => "other",
    }
}

fn step_name(s: StepArg) -> &'static str {
    match s {
        StepArg::Complement => "complement",
        StepArg::Degree => "degree",
        StepArg::Nonadj => "nonadj",
        StepArg::Adj => "adj",
        StepArg::Tdiamond => "tdiamond",
        StepArg::LowPair => "low-pair",
        StepArg::HighPair => "high-pair",
        StepArg::Case1 => "case1",
    }
}

fn reduce(args: &ReduceArgs, inst: &Instance) -> Result<(Instance, hfree::ReductionStep)> {
    let target = || -> Result<Graph> {
        let spec = args.target.as_deref().context("this step needs --target")?;
        graph_spec(spec)
    };
    Ok(match args.step {
        StepArg::Complement => complement_reduce(inst),
        StepArg::Degree => {
            let h = target()?;
            let profile = h.degree_profile();
            match args.side {
                SideArg::Min => reduce_degree(inst, &h, args.d.unwrap_or(profile.min_degree))?,
                SideArg::Max => reduce_degree_max(inst, &h, args.d.unwrap_or(profile.max_degree))?,
            }
        }
        StepArg::Nonadj | StepArg::Adj => {
            if args.v_prime.is_empty() {
                bail!("this step needs --v-prime");
            }
            let v_prime = args.v_prime.clone();
            let op = match args.step {
                StepArg::Adj => ReductionOp::ConstructAdj { v_prime },
                _ => ReductionOp::ConstructNonadj { v_prime },
            };
            op.apply(&target()?, inst.kind, inst)?
        }
        StepArg::Tdiamond => {
            let t = match args.t {
                Some(t) => t,
                None => {
                    t_diamond_order(&inst.h).context("the instance pattern is not a t-diamond")? + 1
                }
            };
            reduce_tdiamond(inst, t)?
        }
        StepArg::LowPair => reduce_sparse_vl(inst, &target()?)?,
        StepArg::HighPair => reduce_sparse_vh(inst, &target()?)?,
        StepArg::Case1 => {
            if inst.kind != ModificationKind::Deletion || !are_isomorphic(&inst.h, &path(3)?) {
                bail!("the input must be a P3 deletion instance");
            }
            reduce_sparse_case1(&inst.g, inst.k, &target()?)?
        }
    })
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let suites: Vec<Suite> = if args.suite.eq_ignore_ascii_case("all") {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::parse(&args.suite).with_context(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            format!(
                "unknown suite {:?}; known: all, {}",
                args.suite,
                names.join(", ")
            )
        })?]
    };
    for (name, cap) in [
        ("--host-cap", args.host_cap),
        ("--k-cap", args.k_cap),
        ("--n-cap", args.n_cap),
    ] {
        if cap == Some(0) {
            bail!("{name} must be positive");
        }
    }
    let cfg = CampaignConfig {
        host_cap: args.host_cap,
        k_cap: args.k_cap,
        n_cap: args.n_cap,
        seed: args.seed,
        samples: args.samples,
    };
    let reports = with_workers(args.workers, || {
        suites
            .iter()
            .map(|&s| run_suite(s, &cfg))
            .collect::<hfree::Result<Vec<_>>>()
    })??;
    for r in &reports {
        eprintln!("{}: {} failures", suite_label(r), r.failures());
    }
    let report = VerifyReport::new(cfg, reports);
    let failures = report.failures;
    let mut v = serde_json::to_value(&report)?;
    if let Value::Object(map) = &mut v {
        map.insert("workers".into(), json!(args.workers));
    }
    emit(&v, args.out.as_deref())?;
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn suite_label(r: &SuiteReport) -> String {
    match r {
        SuiteReport::Equivalence { name, .. } => name.clone(),
        SuiteReport::Solver(_) => "solver".into(),
        SuiteReport::Churn(_) => "churn".into(),
        SuiteReport::Classify(_) => "classify".into(),
        SuiteReport::Audits(_) => "audits".into(),
    }
}
