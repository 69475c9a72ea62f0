//! LCP solvers behind a common trait, selectable by name.

mod enumerate;
mod instance;
mod ipm;
mod lemke;

pub use enumerate::{solve_enumerate, Enumeration, MAX_ENUMERATION_DIM};
pub use instance::{check_approx, check_exact, ExactSolution, FloatSolution, LcpInstance, LcpSolution, Residuals};
pub use ipm::{
    ipm_direction, kappa_for, merit_gradients, merit_psi, solve_ipm, strict_feasible_point, Direction, IpmIteration,
    IpmOutcome, IpmParams, IpmTrace, StallReason,
};
pub use lemke::{solve_lemke, solve_lemke_with, LemkeOutcome, LemkeRay, LemkeRun};

use crate::error::Error;
use crate::numerics::RationalVector;

/// What a solver reports for one instance.
#[derive(Clone, Debug, PartialEq)]
pub enum SolveReport {
    /// All solutions found; at least one.
    Exact(Vec<ExactSolution>),
    Approximate {
        solution: FloatSolution,
        trace: IpmTrace,
    },
    /// The instance has no solution (exhaustive search).
    NoSolution,
    /// Lemke stopped on a secondary ray.
    Ray(LemkeRay),
    Stalled {
        reason: StallReason,
        trace: IpmTrace,
    },
}

pub trait LcpSolver: Send + Sync {
    fn name(&self) -> &str;
    fn solve(&self, inst: &LcpInstance) -> Result<SolveReport, Error>;
}

pub struct EnumerationSolver;

impl LcpSolver for EnumerationSolver {
    fn name(&self) -> &str {
        "enumerate"
    }

    fn solve(&self, inst: &LcpInstance) -> Result<SolveReport, Error> {
        let e = solve_enumerate(inst)?;
        Ok(if e.solvable {
            SolveReport::Exact(e.solutions)
        } else {
            SolveReport::NoSolution
        })
    }
}

#[derive(Default)]
pub struct LemkeSolver {
    /// Defaults to all ones.
    pub covering: Option<RationalVector>,
}

impl LcpSolver for LemkeSolver {
    fn name(&self) -> &str {
        "lemke"
    }

    fn solve(&self, inst: &LcpInstance) -> Result<SolveReport, Error> {
        let run = match &self.covering {
            Some(d) => solve_lemke_with(inst, d)?,
            None => solve_lemke(inst)?,
        };
        Ok(match run.outcome {
            LemkeOutcome::Solution(s) => SolveReport::Exact(vec![s]),
            LemkeOutcome::Ray(r) => SolveReport::Ray(r),
        })
    }
}

#[derive(Default)]
pub struct IpmSolver {
    pub params: IpmParams,
}

impl LcpSolver for IpmSolver {
    fn name(&self) -> &str {
        "ipm"
    }

    fn solve(&self, inst: &LcpInstance) -> Result<SolveReport, Error> {
        Ok(match solve_ipm(inst, &self.params)? {
            IpmOutcome::Converged { solution, trace } => SolveReport::Approximate { solution, trace },
            IpmOutcome::Stalled { reason, trace } => SolveReport::Stalled { reason, trace },
        })
    }
}

#[derive(Default)]
pub struct SolverRegistry {
    entries: Vec<Box<dyn LcpSolver>>,
}

impl SolverRegistry {
    /// `enumerate`, `lemke` and `ipm` with default settings.
    pub fn standard() -> Self {
        let mut r = Self::default();
        r.register(EnumerationSolver);
        r.register(LemkeSolver::default());
        r.register(IpmSolver::default());
        r
    }

    /// Adds a solver, replacing any existing one with the same name.
    pub fn register(&mut self, solver: impl LcpSolver + 'static) -> &mut Self {
        let boxed: Box<dyn LcpSolver> = Box::new(solver);
        match self.entries.iter().position(|s| s.name() == boxed.name()) {
            Some(i) => self.entries[i] = boxed,
            None => self.entries.push(boxed),
        }
        self
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|s| s.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn LcpSolver, Error> {
        self.entries
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::UnknownName {
                kind: "solver",
                name: name.to_string(),
            })
    }
}
