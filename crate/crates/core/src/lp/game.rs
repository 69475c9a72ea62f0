use num_traits::{One, Signed};
use serde::Serialize;

use crate::numerics::{format_rational, rat, Rational, RationalMatrix, RationalVector};

use super::{lp_solve, LpOutcome, LpProblem};

/// Value of the zero-sum game with payoff `A`, in the convention where the
/// maximizing player mixes over columns:
/// `v(A) = max_x min_i (Ax)_i = min_y max_j (Aᵀy)_j` over probability vectors.
/// With this convention `v(A) > 0` exactly when some `0 != x >= 0` has `Ax > 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GameValue {
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    /// Minimizer's mixed strategy `y` (weights on rows).
    pub row_strategy: RationalVector,
    /// Maximizer's mixed strategy `x` (weights on columns).
    pub col_strategy: RationalVector,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

impl GameValue {
    /// `(min_i (Ax)_i, max_j (Aᵀy)_j)`: the payoffs each strategy guarantees.
    /// Optimality of both strategies is equivalent to these being equal.
    pub fn guarantees(&self, a: &RationalMatrix) -> (Rational, Rational) {
        let lower = a.mul_vec(&self.col_strategy).iter().min().cloned().expect("n >= 1");
        let upper = a
            .transpose_mul_vec(&self.row_strategy)
            .iter()
            .max()
            .cloned()
            .expect("n >= 1");
        (lower, upper)
    }

    pub fn is_positive(&self) -> bool {
        self.value.is_positive()
    }
}

/// Shift constant making every payoff at least 1.
fn shift_constant(a: &RationalMatrix) -> Rational {
    let min = a.entries().iter().min().cloned().expect("n >= 1");
    std::cmp::max(Rational::one(), Rational::one() - min)
}

/// Solves the game by the shift-to-positive reduction and one LP per player.
pub fn game_value(a: &RationalMatrix) -> GameValue {
    let n = a.dim();
    let shift = shift_constant(a);
    let b = a.add(&RationalMatrix::from_rows(vec![vec![shift.clone(); n]; n]).expect("square"));
    let ones = vec![rat(1); n];

    // Maximizer: min 1ᵀu s.t. Bu >= 1, u >= 0; x = u / 1ᵀu, v(B) = 1 / 1ᵀu.
    let mut primal = LpProblem::new(n).minimize(ones.clone());
    for row in b.rows() {
        primal = primal.ge(row.to_vec(), rat(1));
    }
    let (u_sum, u) = match lp_solve(&primal) {
        LpOutcome::Optimal { value, point } => (value, point),
        other => unreachable!("positive game LP is always solvable: {other:?}"),
    };

    // Minimizer: max 1ᵀp s.t. Bᵀp <= 1, p >= 0; y = p / 1ᵀp.
    let bt = b.transpose();
    let mut dual = LpProblem::new(n).maximize(ones);
    for row in bt.rows() {
        dual = dual.le(row.to_vec(), rat(1));
    }
    let (p_sum, p) = match lp_solve(&dual) {
        LpOutcome::Optimal { value, point } => (value, point),
        other => unreachable!("positive game LP is always solvable: {other:?}"),
    };
    debug_assert_eq!(u_sum, p_sum);

    let col_strategy: RationalVector = u.iter().map(|v| v / &u_sum).collect::<Vec<_>>().into();
    let row_strategy: RationalVector = p.iter().map(|v| v / &p_sum).collect::<Vec<_>>().into();
    GameValue {
        value: u_sum.recip() - shift,
        row_strategy,
        col_strategy,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ratio;

    #[test]
    fn skew_symmetric_has_value_zero() {
        let g = game_value(&RationalMatrix::from_i64(&[[0, 1], [-1, 0]]));
        assert_eq!(g.value, rat(0));
    }

    #[test]
    fn identity_two_by_two() {
        let a = RationalMatrix::identity(2);
        let g = game_value(&a);
        assert_eq!(g.value, ratio(1, 2));
        assert_eq!(g.col_strategy, RationalVector(vec![ratio(1, 2), ratio(1, 2)]));
        assert_eq!(g.row_strategy, RationalVector(vec![ratio(1, 2), ratio(1, 2)]));
        assert_eq!(g.guarantees(&a), (ratio(1, 2), ratio(1, 2)));
    }

    #[test]
    fn positive_value_with_witness() {
        let a = RationalMatrix::from_i64(&[[0, 2, 1], [1, 0, 1], [-2, -2, 1]]);
        // x = (1,1,5) gives Ax = (7,6,1) > 0.
        assert_eq!(
            a.mul_vec(&RationalVector::from_i64(&[1, 1, 5])),
            RationalVector::from_i64(&[7, 6, 1])
        );
        let g = game_value(&a);
        assert!(g.is_positive());
        let (lo, hi) = g.guarantees(&a);
        assert_eq!(lo, hi);
        assert_eq!(lo, g.value);
    }
}
