//! Two-phase dense tableau simplex over exact rationals.
//!
//! Pivoting follows Bland's rule (smallest eligible entering column, ties in
//! the ratio test broken by smallest basic column), so every run terminates.

use num_traits::{One, Signed, Zero};

use crate::numerics::{Rational, RationalVector};

use super::{LpOutcome, LpProblem, Relation, Sense};

/// How an original variable maps onto nonnegative tableau columns.
#[derive(Clone, Debug)]
enum VarMap {
    /// `x = offset + col`
    Shifted { col: usize, offset: Rational },
    /// `x = pos - neg`
    Free { pos: usize, neg: usize },
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    /// Reduced costs; the last entry holds minus the objective value.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
}

enum PhaseResult {
    Optimal,
    Unbounded { entering: usize },
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for v in self.rows[r].iter_mut() {
                *v /= &p;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Installs `c` (length `width`) as the objective and prices out the basis.
    fn set_cost(&mut self, c: &[Rational]) {
        let mut cost: Vec<Rational> = c.to_vec();
        cost.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            let f = cost[b].clone();
            for (v, rv) in cost.iter_mut().zip(&self.rows[i]) {
                *v -= &f * rv;
            }
        }
        self.cost = cost;
    }

    /// Minimizes the installed cost using columns where `allowed` is true.
    fn run(&mut self, allowed: &[bool]) -> PhaseResult {
        loop {
            let entering = (0..self.width).find(|&j| allowed[j] && self.cost[j].is_negative());
            let Some(c) = entering else {
                return PhaseResult::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return PhaseResult::Unbounded { entering: c },
            }
        }
    }

    fn column_values(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.width];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs(i).clone();
        }
        x
    }
}

pub(super) fn solve(problem: &LpProblem) -> LpOutcome {
    let nvars = problem.num_vars();

    // Columns for the original variables.
    let mut maps = Vec::with_capacity(nvars);
    let mut ncols = 0;
    for lb in &problem.lower_bounds {
        match lb {
            Some(offset) => {
                maps.push(VarMap::Shifted {
                    col: ncols,
                    offset: offset.clone(),
                });
                ncols += 1;
            }
            None => {
                maps.push(VarMap::Free {
                    pos: ncols,
                    neg: ncols + 1,
                });
                ncols += 2;
            }
        }
    }
    let structural = ncols;

    // Rows in terms of structural columns, with nonnegative right-hand sides.
    struct Row {
        coeffs: Vec<Rational>,
        rel: Relation,
        rhs: Rational,
    }
    let mut rows: Vec<Row> = problem
        .constraints
        .iter()
        .map(|con| {
            let mut coeffs = vec![Rational::zero(); structural];
            let mut rhs = con.rhs.clone();
            for (j, a) in con.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                match &maps[j] {
                    VarMap::Shifted { col, offset } => {
                        coeffs[*col] += a;
                        rhs -= a * offset;
                    }
                    VarMap::Free { pos, neg } => {
                        coeffs[*pos] += a;
                        coeffs[*neg] -= a;
                    }
                }
            }
            let mut rel = con.relation;
            if rhs.is_negative() {
                coeffs.iter_mut().for_each(|v| *v = -v.clone());
                rhs = -rhs;
                rel = match rel {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
            }
            Row { coeffs, rel, rhs }
        })
        .collect();

    // Slack / surplus columns, then artificials.
    let m = rows.len();
    let nslack = rows.iter().filter(|r| r.rel != Relation::Eq).count();
    let nart = rows.iter().filter(|r| r.rel != Relation::Le).count();
    let width = structural + nslack + nart;
    let mut basis = vec![0; m];
    let mut tab_rows = Vec::with_capacity(m);
    let (mut s, mut a) = (structural, structural + nslack);
    for (i, row) in rows.iter_mut().enumerate() {
        let mut t = std::mem::take(&mut row.coeffs);
        t.resize(width + 1, Rational::zero());
        t[width] = row.rhs.clone();
        match row.rel {
            Relation::Le => {
                t[s] = Rational::one();
                basis[i] = s;
                s += 1;
            }
            Relation::Ge => {
                t[s] = -Rational::one();
                s += 1;
                t[a] = Rational::one();
                basis[i] = a;
                a += 1;
            }
            Relation::Eq => {
                t[a] = Rational::one();
                basis[i] = a;
                a += 1;
            }
        }
        tab_rows.push(t);
    }
    let is_art = |j: usize| j >= structural + nslack;
    let mut tab = Tableau {
        rows: tab_rows,
        cost: Vec::new(),
        basis,
        width,
    };

    // Phase one.
    if nart > 0 {
        let c: Vec<Rational> = (0..width)
            .map(|j| if is_art(j) { Rational::one() } else { Rational::zero() })
            .collect();
        tab.set_cost(&c);
        let all = vec![true; width];
        tab.run(&all);
        if !tab.cost[width].is_zero() {
            return LpOutcome::Infeasible;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < tab.rows.len() {
            if is_art(tab.basis[i]) {
                match (0..width).find(|&j| !is_art(j) && !tab.rows[i][j].is_zero()) {
                    Some(j) => tab.pivot(i, j),
                    None => {
                        tab.rows.remove(i);
                        tab.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    // Phase two on the true objective (always minimized internally).
    let flip = matches!(problem.sense, Sense::Maximize);
    let mut c = vec![Rational::zero(); width];
    for (j, cj) in problem.objective.iter().enumerate() {
        let cj = if flip { -cj.clone() } else { cj.clone() };
        match &maps[j] {
            VarMap::Shifted { col, .. } => c[*col] += &cj,
            VarMap::Free { pos, neg } => {
                c[*pos] += &cj;
                c[*neg] -= &cj;
            }
        }
    }
    tab.set_cost(&c);
    let allowed: Vec<bool> = (0..width).map(|j| !is_art(j)).collect();
    let result = tab.run(&allowed);

    let cols = tab.column_values();
    let point = map_back(&maps, &cols, true);
    match result {
        PhaseResult::Optimal => {
            let value = problem.objective_value(&point);
            LpOutcome::Optimal { value, point }
        }
        PhaseResult::Unbounded { entering } => {
            let mut dir = vec![Rational::zero(); width];
            dir[entering] = Rational::one();
            for (i, &b) in tab.basis.iter().enumerate() {
                dir[b] = -tab.rows[i][entering].clone();
            }
            let ray = map_back(&maps, &dir, false);
            LpOutcome::Unbounded { point, ray }
        }
    }
}

fn map_back(maps: &[VarMap], cols: &[Rational], with_offset: bool) -> RationalVector {
    maps.iter()
        .map(|m| match m {
            VarMap::Shifted { col, offset } => {
                if with_offset {
                    &cols[*col] + offset
                } else {
                    cols[*col].clone()
                }
            }
            VarMap::Free { pos, neg } => &cols[*pos] - &cols[*neg],
        })
        .collect::<Vec<_>>()
        .into()
}
