//! Sufficiency via principal pivot transforms of order at most two.
//!
//! `B` is column sufficient when `x_i (Bx)_i <= 0` for all `i` forces every
//! product to vanish; row sufficient when `Bᵀ` is column sufficient. A matrix
//! is sufficient iff it and every legitimate PPT are sufficient of order two.
//! Row sufficiency of the PPTs of `A` is checked as column sufficiency of the
//! PPTs of `Aᵀ`, which agree with the transposed PPTs up to a sign scaling.
//!
//! A violation found in a transform is pulled back through [`exchange`],
//! which preserves every product `z_i w_i`, so the reported witness refers to
//! `A` (or `Aᵀ`) directly.

use num_traits::{Signed, Zero};

use crate::numerics::{rat, Rational, RationalMatrix, RationalVector};
use crate::ppt::{enumerate_legitimate, exchange, ppt_transform};

use super::{ClassVerdict, Violation};

/// A nonzero-product violation of column sufficiency for `[[a, b], [c, d]]`.
///
/// With `a, d >= 0` any violation has `x_1 != 0`, and the products are even
/// in `x`, so `x = (1, t)`. Then `f(t) = a + bt` and `g(t) = t(c + dt)` keep
/// constant signs between consecutive real roots, and sampling each root, each
/// gap and both unbounded ends decides the question exactly.
pub fn column_violation_2x2(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Option<[Rational; 2]> {
    if a.is_negative() {
        return Some([rat(1), rat(0)]);
    }
    if d.is_negative() {
        return Some([rat(0), rat(1)]);
    }
    let mut roots = vec![rat(0)];
    if !b.is_zero() {
        roots.push(-a / b);
    }
    if !d.is_zero() {
        roots.push(-c / d);
    }
    roots.sort();
    roots.dedup();
    let mut samples = roots.clone();
    samples.push(&roots[0] - rat(1));
    samples.push(roots.last().unwrap() + rat(1));
    for w in roots.windows(2) {
        samples.push((&w[0] + &w[1]) / rat(2));
    }
    samples.into_iter().find_map(|t| {
        let f = a + b * &t;
        let g = &t * (c + d * &t);
        let violates = !f.is_positive() && !g.is_positive() && !(f.is_zero() && g.is_zero());
        violates.then(|| [rat(1), t])
    })
}

/// A column-sufficiency violation supported on one or two indices of `m`.
fn order_two_violation(m: &RationalMatrix) -> Option<RationalVector> {
    let n = m.dim();
    for i in 0..n {
        if m[(i, i)].is_negative() {
            return Some(RationalVector::unit(n, i));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if let Some([xi, xj]) = column_violation_2x2(&m[(i, i)], &m[(i, j)], &m[(j, i)], &m[(j, j)]) {
                let mut x = RationalVector::zeros(n);
                x[i] = xi;
                x[j] = xj;
                return Some(x);
            }
        }
    }
    None
}

pub fn is_sufficient(a: &RationalMatrix) -> ClassVerdict {
    for transposed in [false, true] {
        let b = if transposed { a.transpose() } else { a.clone() };
        for alpha in enumerate_legitimate(&b) {
            let m = ppt_transform(&b, &alpha).expect("legitimate").m;
            if let Some(y) = order_two_violation(&m) {
                let my = m.mul_vec(&y);
                let (x, _) = exchange(&y, &my, &alpha);
                return ClassVerdict::violated(Violation::NotColumnSufficient { x, transposed });
            }
        }
    }
    ClassVerdict::member()
}
