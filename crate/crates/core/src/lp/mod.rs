//! Exact linear programming and matrix game values.
//!
//! Every matrix-class detector reduces to small feasibility or optimization
//! problems solved here in rational arithmetic, so verdicts are certificates
//! rather than tolerance-dependent approximations.

mod game;
mod simplex;

use num_traits::{Signed, Zero};

use crate::numerics::{Rational, RationalVector};

pub use game::{game_value, GameValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

/// A linear program over `num_vars` variables. Variables are nonnegative by
/// default; [`LpProblem::free`] and [`LpProblem::lower_bound`] change that.
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub objective: Vec<Rational>,
    pub sense: Sense,
    pub constraints: Vec<Constraint>,
    pub lower_bounds: Vec<Option<Rational>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        point: RationalVector,
    },
    Infeasible,
    /// `point` is feasible and `point + t * ray` stays feasible for all
    /// `t >= 0` while strictly improving the objective.
    Unbounded {
        point: RationalVector,
        ray: RationalVector,
    },
}

impl LpOutcome {
    pub fn point(&self) -> Option<&RationalVector> {
        match self {
            LpOutcome::Optimal { point, .. } | LpOutcome::Unbounded { point, .. } => Some(point),
            LpOutcome::Infeasible => None,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

impl LpProblem {
    pub fn new(num_vars: usize) -> Self {
        LpProblem {
            objective: vec![Rational::zero(); num_vars],
            sense: Sense::Minimize,
            constraints: Vec::new(),
            lower_bounds: vec![Some(Rational::zero()); num_vars],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn minimize(mut self, c: Vec<Rational>) -> Self {
        assert_eq!(c.len(), self.num_vars(), "objective width");
        self.objective = c;
        self.sense = Sense::Minimize;
        self
    }

    pub fn maximize(mut self, c: Vec<Rational>) -> Self {
        assert_eq!(c.len(), self.num_vars(), "objective width");
        self.objective = c;
        self.sense = Sense::Maximize;
        self
    }

    pub fn free(mut self, j: usize) -> Self {
        self.lower_bounds[j] = None;
        self
    }

    pub fn lower_bound(mut self, j: usize, v: Rational) -> Self {
        self.lower_bounds[j] = Some(v);
        self
    }

    pub fn constraint(mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        assert_eq!(coeffs.len(), self.num_vars(), "constraint width");
        self.constraints.push(Constraint { coeffs, relation, rhs });
        self
    }

    pub fn le(self, coeffs: Vec<Rational>, rhs: Rational) -> Self {
        self.constraint(coeffs, Relation::Le, rhs)
    }

    pub fn ge(self, coeffs: Vec<Rational>, rhs: Rational) -> Self {
        self.constraint(coeffs, Relation::Ge, rhs)
    }

    pub fn eq(self, coeffs: Vec<Rational>, rhs: Rational) -> Self {
        self.constraint(coeffs, Relation::Eq, rhs)
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    /// Checks bounds and every constraint exactly.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars()
            && self
                .lower_bounds
                .iter()
                .zip(x)
                .all(|(lb, v)| lb.as_ref().is_none_or(|l| v >= l))
            && self.constraints.iter().all(|c| c.is_satisfied_by(x))
    }

    /// True when `ray` is a recession direction of the feasible set that
    /// strictly improves the objective.
    pub fn is_improving_ray(&self, ray: &[Rational]) -> bool {
        let bounds_ok = self
            .lower_bounds
            .iter()
            .zip(ray)
            .all(|(lb, d)| lb.is_none() || !d.is_negative());
        let rows_ok = self.constraints.iter().all(|c| {
            let lhs: Rational = c.coeffs.iter().zip(ray).map(|(a, b)| a * b).sum();
            match c.relation {
                Relation::Le => !lhs.is_positive(),
                Relation::Eq => lhs.is_zero(),
                Relation::Ge => !lhs.is_negative(),
            }
        });
        let slope = self.objective_value(ray);
        let improving = match self.sense {
            Sense::Minimize => slope.is_negative(),
            Sense::Maximize => slope.is_positive(),
        };
        bounds_ok && rows_ok && improving
    }
}

pub fn lp_solve(problem: &LpProblem) -> LpOutcome {
    simplex::solve(problem)
}

/// Feasibility only: returns a feasible point or `None`.
pub fn lp_feasible(problem: &LpProblem) -> Option<RationalVector> {
    let mut p = problem.clone();
    p.objective = vec![Rational::zero(); p.num_vars()];
    p.sense = Sense::Minimize;
    match simplex::solve(&p) {
        LpOutcome::Optimal { point, .. } => Some(point),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded { .. } => unreachable!("zero objective cannot be unbounded"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{rat, ratio};

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn bounded_maximum() {
        let p = LpProblem::new(1).maximize(r(&[1])).le(r(&[1]), rat(3));
        match lp_solve(&p) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, rat(3));
                assert!(p.is_feasible(&point));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unbounded_maximum_reports_ray() {
        let p = LpProblem::new(1).maximize(r(&[1]));
        match lp_solve(&p) {
            LpOutcome::Unbounded { point, ray } => {
                assert!(p.is_feasible(&point));
                assert!(p.is_improving_ray(&ray));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn semimonotone_system_infeasible() {
        // x >= (1,1), [[0,-5],[2,0]] x <= (-1,-1)
        let p = LpProblem::new(2)
            .lower_bound(0, rat(1))
            .lower_bound(1, rat(1))
            .le(r(&[0, -5]), rat(-1))
            .le(r(&[2, 0]), rat(-1));
        assert!(lp_feasible(&p).is_none());
    }

    #[test]
    fn simple_feasibility() {
        let p = LpProblem::new(1).ge(r(&[1]), rat(1)).le(r(&[1]), rat(0));
        assert!(lp_feasible(&p).is_none());
        let p = LpProblem::new(1).ge(r(&[1]), rat(1)).le(r(&[2]), rat(4));
        let x = lp_feasible(&p).unwrap();
        assert!(x[0] >= rat(1) && x[0] <= rat(2));
    }

    #[test]
    fn star_cone_of_single_support() {
        // A = [[0,1,1],[2,0,2],[-4,-5,0]], support {3}: x3 = 1, a33 x3 = 0, column 3 rows 1,2 >= 0.
        let p = LpProblem::new(1)
            .eq(r(&[1]), rat(1))
            .eq(r(&[0]), rat(0))
            .ge(r(&[1]), rat(0))
            .ge(r(&[2]), rat(0));
        assert_eq!(lp_feasible(&p).unwrap()[0], rat(1));
    }

    #[test]
    fn free_variables_and_equalities() {
        // min x + y, x - y = 1, x + y >= -3, x,y free
        let p = LpProblem::new(2)
            .minimize(r(&[1, 1]))
            .free(0)
            .free(1)
            .eq(r(&[1, -1]), rat(1))
            .ge(r(&[1, 1]), rat(-3));
        match lp_solve(&p) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, rat(-3));
                assert!(p.is_feasible(&point));
                assert_eq!(point[0], ratio(-1, 1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn redundant_equalities() {
        let p = LpProblem::new(2)
            .maximize(r(&[1, 2]))
            .eq(r(&[1, 1]), rat(2))
            .eq(r(&[2, 2]), rat(4));
        assert_eq!(lp_solve(&p).value(), Some(&rat(4)));
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's classic cycling LP; Bland's rule must terminate at -1/20.
        let p = LpProblem::new(4)
            .minimize(vec![ratio(-3, 4), rat(150), ratio(-1, 50), rat(6)])
            .le(vec![ratio(1, 4), rat(-60), ratio(-1, 25), rat(9)], rat(0))
            .le(vec![ratio(1, 2), rat(-90), ratio(-1, 50), rat(3)], rat(0))
            .le(r(&[0, 0, 1, 0]), rat(1));
        assert_eq!(lp_solve(&p).value(), Some(&ratio(-1, 20)));
    }
}
