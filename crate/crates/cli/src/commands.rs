use std::fmt::Write as _;
use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use lcplab_core::classes::{classify_full, names, ClassReport, DerivedFlag, DetectorRegistry};
use lcplab_core::lp::game_value;
use lcplab_core::numerics::{format_rational, IndexSet};
use lcplab_core::ppt::{ppt_rhs, ppt_transform};
use lcplab_core::solvers::{
    EnumerationSolver, IpmParams, IpmSolver, IpmTrace, LcpInstance, LcpSolver, LemkeSolver, SolveReport,
};
use lcplab_core::Error;

use crate::document::{DocumentError, MatrixDocument};
use crate::generate::{generate_random, random_structured, GenerateError, DEFAULT_BUDGET};
use crate::reproduce::{checks, run_checks};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Internal = 1,
    NoSolution = 2,
    InputError = 3,
    Stalled = 4,
}

#[derive(Parser, Debug)]
#[command(
    name = "lcplab",
    version,
    about = "Matrix classes and linear complementarity problems in exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every class detector and print verdicts with witnesses.
    Classify {
        #[arg(short, long)]
        input: PathBuf,
        /// Also write the full report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Solve LCP(q, A).
    Solve(SolveArgs),
    /// Principal pivot transform on a set of 1-based indices.
    Ppt {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        alpha: String,
    },
    /// Value and optimal strategies of the matrix game.
    Game {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Generate a matrix document.
    Gen(GenArgs),
    /// Run the built-in regression table of known verdicts and solver results.
    ReproducePaper {
        /// Print check names without running them.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Lemke,
    Ipm,
    Enumerate,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "lemke")]
    pub method: Method,
    #[arg(long, default_value_t = 0.5)]
    pub beta: f64,
    #[arg(long, default_value_t = 0.2)]
    pub sigma: f64,
    #[arg(long, default_value_t = 1e-5)]
    pub eps: f64,
    #[arg(long, default_value_t = 0.1)]
    pub kappa_slack: f64,
    #[arg(long, default_value_t = 10_000)]
    pub max_iter: usize,
    /// Comma-separated starting point; found by LP when omitted.
    #[arg(long, value_delimiter = ',')]
    pub z0: Option<Vec<f64>>,
    /// Write the iteration trace as CSV.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("kind").required(true).args(["structured", "random"])))]
pub struct GenArgs {
    /// Bordered matrix with a random P0 block.
    #[arg(long)]
    pub structured: bool,
    /// Rejection sampling of integer matrices.
    #[arg(long)]
    pub random: bool,
    /// Class filter for --random (any detector name); none keeps the first draw.
    #[arg(long)]
    pub class: Option<String>,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Maps an error to an exit status: malformed input is 3, anything else 1.
pub fn status_of(err: &anyhow::Error) -> Status {
    for cause in err.chain() {
        if cause.downcast_ref::<DocumentError>().is_some() {
            return Status::InputError;
        }
        if let Some(e) = cause.downcast_ref::<Error>() {
            return core_status(e);
        }
        if let Some(e) = cause.downcast_ref::<GenerateError>() {
            return match e {
                GenerateError::BudgetExhausted { .. } => Status::NoSolution,
                GenerateError::Core(e) => core_status(e),
            };
        }
    }
    Status::Internal
}

fn core_status(e: &Error) -> Status {
    match e {
        Error::InternalInconsistency(_) | Error::NumericalBreakdown { .. } => Status::Internal,
        Error::NotStrictlyFeasible(_) => Status::NoSolution,
        _ => Status::InputError,
    }
}

/// Runs one command, writing human-readable output to `out`.
pub fn run(cli: Cli, out: &mut String) -> anyhow::Result<Status> {
    match cli.command {
        Command::Classify { input, json } => classify(&MatrixDocument::read(&input)?, json, out),
        Command::Solve(args) => solve(args, out),
        Command::Ppt { input, alpha } => ppt(&MatrixDocument::read(&input)?, &alpha, out),
        Command::Game { input } => game(&MatrixDocument::read(&input)?, out),
        Command::Gen(args) => generate(args, out),
        Command::ReproducePaper { list } => reproduce(list, out),
    }
}

fn flag_line(out: &mut String, name: &str, flag: &DerivedFlag) {
    let partial = if flag.partial { " (partial)" } else { "" };
    match flag.established_by() {
        Some(route) => writeln!(out, "{name:<16} true{partial}  via {}", route.name),
        None => writeln!(out, "{name:<16} not established{partial}"),
    }
    .expect("writing to a String");
}

pub fn render_report(report: &ClassReport, out: &mut String) {
    let w = |out: &mut String, s: String| out.push_str(&s);
    w(out, format!("{:<16} {:<6} witness\n", "class", "member"));
    for v in &report.verdicts {
        let detail = v.verdict.violation.as_ref().map(|x| x.describe()).unwrap_or_default();
        w(out, format!("{:<16} {:<6} {detail}\n", v.class, v.verdict.member));
    }
    w(out, format!("{:<16} {}\n", "minors", report.minor_class.name()));
    w(
        out,
        format!("{:<16} {}\n", "game value", format_rational(&report.game.value)),
    );
    flag_line(out, "Q", &report.q);
    flag_line(out, "Qb", &report.q_b);
    flag_line(out, "Q0", &report.q0);
    for c in &report.l2_certificates {
        let d1: Vec<String> = c.d1.iter().map(format_rational).collect();
        w(
            out,
            format!("{:<16} x = {}, D1 = diag({})\n", "L2 certificate", c.x, d1.join(", ")),
        );
    }
}

fn classify(doc: &MatrixDocument, json: Option<PathBuf>, out: &mut String) -> anyhow::Result<Status> {
    let report = classify_full(&doc.a);
    render_report(&report, out);
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&report)?;
        std::fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    let broken = report.lattice_violations();
    if !broken.is_empty() {
        bail!(Error::InternalInconsistency(broken.join("; ")));
    }
    Ok(Status::Success)
}

fn write_trace(path: &PathBuf, trace: &IpmTrace) -> anyhow::Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    trace.write_csv(BufWriter::new(file))?;
    Ok(())
}

fn solve(args: SolveArgs, out: &mut String) -> anyhow::Result<Status> {
    let doc = MatrixDocument::read(&args.input)?;
    let Some(q) = doc.q.clone() else {
        bail!(DocumentError::Content("solve needs q in the input document".into()));
    };
    let inst = LcpInstance::new(doc.a, q)?;
    let solver: Box<dyn LcpSolver> = match args.method {
        Method::Lemke => Box::new(LemkeSolver::default()),
        Method::Enumerate => Box::new(EnumerationSolver),
        Method::Ipm => Box::new(IpmSolver {
            params: IpmParams {
                beta: args.beta,
                sigma: args.sigma,
                eps: args.eps,
                kappa_slack: args.kappa_slack,
                max_iter: args.max_iter,
                z0: args.z0.clone(),
                ..IpmParams::default()
            },
        }),
    };
    let w = |out: &mut String, s: String| out.push_str(&s);
    match solver.solve(&inst)? {
        SolveReport::Exact(solutions) => {
            for s in &solutions {
                w(
                    out,
                    format!(
                        "z = {}\nw = {}\n",
                        s.z_vector(),
                        lcplab_core::RationalVector(s.w.clone())
                    ),
                );
            }
            if solutions.len() > 1 {
                w(out, format!("{} solutions\n", solutions.len()));
            }
            Ok(Status::Success)
        }
        SolveReport::Approximate { solution, trace } => {
            let fmt = |v: &[f64]| v.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>().join(", ");
            w(out, format!("z = ({})\nw = ({})\n", fmt(&solution.z), fmt(&solution.w)));
            w(
                out,
                format!(
                    "zTw = {:.3e} after {} iterations\n",
                    trace.final_ztw(),
                    trace.iterations.len()
                ),
            );
            if let Some(path) = &args.trace {
                write_trace(path, &trace)?;
            }
            Ok(Status::Success)
        }
        SolveReport::NoSolution => {
            w(out, "no solution\n".into());
            Ok(Status::NoSolution)
        }
        SolveReport::Ray(ray) => {
            w(
                out,
                format!("secondary ray from z = {}, z0 = {}\n", ray.z, format_rational(&ray.z0)),
            );
            w(
                out,
                format!("direction dz = {}, dz0 = {}\n", ray.dz, format_rational(&ray.dz0)),
            );
            Ok(Status::NoSolution)
        }
        SolveReport::Stalled { reason, trace } => {
            w(out, format!("stalled: {reason:?}; zTw = {:.3e}\n", trace.final_ztw()));
            if let Some(path) = &args.trace {
                write_trace(path, &trace)?;
            }
            Ok(Status::Stalled)
        }
    }
}

fn ppt(doc: &MatrixDocument, alpha: &str, out: &mut String) -> anyhow::Result<Status> {
    let alpha = IndexSet::parse(alpha, doc.n())?;
    let result = ppt_transform(&doc.a, &alpha)?;
    writeln!(out, "{}", result.m)?;
    if let Some(q) = &doc.q {
        writeln!(out, "q' = {}", ppt_rhs(q, &doc.a, &alpha)?)?;
    }
    Ok(Status::Success)
}

fn game(doc: &MatrixDocument, out: &mut String) -> anyhow::Result<Status> {
    let g = game_value(&doc.a);
    writeln!(out, "value = {}", format_rational(&g.value))?;
    writeln!(out, "column player x = {}", g.col_strategy)?;
    writeln!(out, "row player y = {}", g.row_strategy)?;
    Ok(Status::Success)
}

fn generate(args: GenArgs, out: &mut String) -> anyhow::Result<Status> {
    let registry = DetectorRegistry::standard();
    let a = if args.structured {
        if args.class.as_deref().is_some_and(|c| c != names::E0S_TILDE) {
            bail!(Error::InvalidParameter(
                "structured matrices are always E0s-tilde".into()
            ));
        }
        random_structured(&registry, args.n, args.seed)?
    } else {
        generate_random(&registry, args.class.as_deref(), args.n, args.seed, args.budget)?
    };
    let doc = MatrixDocument::new(a, None);
    match &args.output {
        Some(path) => doc.write(path)?,
        None => out.push_str(&doc.to_json()),
    }
    Ok(Status::Success)
}

fn reproduce(list: bool, out: &mut String) -> anyhow::Result<Status> {
    if list {
        for c in checks() {
            writeln!(out, "{}", c.name)?;
        }
        return Ok(Status::Success);
    }
    let results = run_checks(&DetectorRegistry::standard());
    for r in &results {
        writeln!(out, "{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name)?;
        for line in r.detail.lines() {
            writeln!(out, "     {line}")?;
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    writeln!(out, "{} checks, {failed} failed", results.len())?;
    Ok(if failed == 0 { Status::Success } else { Status::Internal })
}
