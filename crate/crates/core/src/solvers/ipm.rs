//! Potential-reduction interior point method.
//!
//! Each iteration minimizes the merit function
//!
//! ```text
//!   ψ(z, w) = κ log(zᵀw) - Σ log(z_i w_i)
//! ```
//!
//! along the direction obtained from the trust-region subproblem with scaling
//! `H = Z⁻² + AᵀW⁻²A`, then backtracks by halving until the Armijo condition
//! holds. Iterates stay strictly positive: any trial point with a nonpositive
//! component has `ψ = +∞` and is rejected.

use std::io::{self, Write};

use crate::error::Error;
use crate::lp::{lp_solve, LpOutcome, LpProblem};
use twofloat::TwoFloat;

use crate::numerics::{dot, dot2, norm2, rat, FloatMatrix, Rational, RationalVector};

use super::instance::{FloatSolution, LcpInstance, LcpSolution};

#[derive(Clone, Debug, PartialEq)]
pub struct IpmParams {
    pub beta: f64,
    pub sigma: f64,
    pub eps: f64,
    pub kappa_slack: f64,
    pub max_iter: usize,
    pub max_halvings: u32,
    /// Starting point; `None` finds one by LP.
    pub z0: Option<Vec<f64>>,
}

impl Default for IpmParams {
    fn default() -> Self {
        IpmParams {
            beta: 0.5,
            sigma: 0.2,
            eps: 1e-5,
            kappa_slack: 0.1,
            max_iter: 10_000,
            max_halvings: 60,
            z0: None,
        }
    }
}

impl IpmParams {
    pub fn validate(&self) -> Result<(), Error> {
        let bad = |m: &str| Err(Error::InvalidParameter(m.to_string()));
        if !(self.beta > 0.0 && self.beta < 1.0) {
            return bad("beta must lie in (0, 1)");
        }
        if !(self.sigma > 0.0 && self.sigma < 0.5) {
            return bad("sigma must lie in (0, 1/2)");
        }
        if !(self.eps > 0.0) {
            return bad("eps must be positive");
        }
        if !(self.kappa_slack >= 0.0) || !self.kappa_slack.is_finite() {
            return bad("kappa_slack must be nonnegative");
        }
        if let Some(z0) = &self.z0 {
            if z0.iter().any(|v| !(*v > 0.0) || !v.is_finite()) {
                return bad("z0 must be strictly positive");
            }
        }
        Ok(())
    }
}

/// `κ log(zᵀw) - Σ log(z_i w_i)`, or `+∞` when a component is not positive.
pub fn merit_psi(z: &[f64], w: &[f64], kappa: f64) -> f64 {
    if z.iter().chain(w).any(|v| !(*v > 0.0)) {
        return f64::INFINITY;
    }
    kappa * dot(z, w).ln() - z.iter().zip(w).map(|(a, b)| (a * b).ln()).sum::<f64>()
}

/// `(∇_z ψ, ∇_w ψ)` with `(∇_z ψ)_i = w_i [κ/zᵀw - 1/(z_i w_i)]` and the
/// symmetric expression for `w`.
pub fn merit_gradients(z: &[f64], w: &[f64], kappa: f64) -> (Vec<f64>, Vec<f64>) {
    let ztw = dot(z, w);
    let common: Vec<f64> = z.iter().zip(w).map(|(a, b)| kappa / ztw - 1.0 / (a * b)).collect();
    let gz = w.iter().zip(&common).map(|(b, c)| b * c).collect();
    let gw = z.iter().zip(&common).map(|(a, c)| a * c).collect();
    (gz, gw)
}

/// `κ = (1 + slack) max(n, zᵀw / min_i z_i w_i)`, together with that minimum.
pub fn kappa_for(z: &[f64], w: &[f64], slack: f64) -> (f64, f64) {
    let rho = z.iter().zip(w).map(|(a, b)| a * b).fold(f64::INFINITY, f64::min);
    let n = z.len() as f64;
    ((1.0 + slack) * n.max(dot(z, w) / rho), rho)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Direction {
    pub dz: Vec<f64>,
    pub dw: Vec<f64>,
    pub tau: f64,
    pub r: Vec<f64>,
    pub grad_z: Vec<f64>,
    pub grad_w: Vec<f64>,
}

impl Direction {
    /// `(∇_z ψ)ᵀd_z + (∇_w ψ)ᵀd_w`, equal to `-τβ²` in exact arithmetic.
    pub fn directional_derivative(&self) -> f64 {
        dot2(
            &[self.grad_z.as_slice(), self.grad_w.as_slice()].concat(),
            &[self.dz.as_slice(), self.dw.as_slice()].concat(),
        )
    }

    /// `‖Z⁻¹d_z‖² + ‖W⁻¹d_w‖²`, equal to `β²` in exact arithmetic.
    pub fn scaled_norm_sq(&self, z: &[f64], w: &[f64]) -> f64 {
        let s = |d: &[f64], x: &[f64]| d.iter().zip(x).map(|(a, b)| (a / b) * (a / b)).sum::<f64>();
        s(&self.dz, z) + s(&self.dw, w)
    }
}

/// `a / b` to double-double accuracy. `TwoFloat` division alone is accurate
/// only to about one `f64` ulp; one correction step with the exact residual
/// `a - qb` restores the full precision.
fn dd_div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let q = a / b;
    q + (a - q * b) / b
}

/// `y = H⁻¹r` and `Ay` for `H = Z⁻² + AᵀW⁻²A`, by Cholesky factorization in
/// double-double arithmetic. Near the boundary `H` can have condition number
/// beyond 1e19, so only the final results are rounded to `f64`.
fn newton_system(
    z: &[f64],
    w: &[f64],
    a: &FloatMatrix,
    r: &[TwoFloat],
) -> Result<(Vec<TwoFloat>, Vec<TwoFloat>), Error> {
    let n = z.len();
    let dd = TwoFloat::from;
    let inv_w_sq: Vec<TwoFloat> = w.iter().map(|v| dd_div(dd(1.0), dd(*v) * dd(*v))).collect();
    let mut l = vec![TwoFloat::from(0.0); n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut h = (0..n).fold(dd(0.0), |acc, k| acc + dd(a.get(k, i)) * dd(a.get(k, j)) * inv_w_sq[k]);
            if i == j {
                h += dd_div(dd(1.0), dd(z[i]) * dd(z[i]));
            }
            for k in 0..j {
                h -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if !(h > 0.0) || !h.is_valid() {
                    return Err(Error::NumericalBreakdown { pivot: j + 1 });
                }
                l[i * n + i] = h.sqrt();
            } else {
                l[i * n + j] = dd_div(h, l[j * n + j]);
            }
        }
    }
    let mut v = vec![dd(0.0); n];
    for i in 0..n {
        let s = (0..i).fold(r[i], |acc, k| acc - l[i * n + k] * v[k]);
        v[i] = dd_div(s, l[i * n + i]);
    }
    let mut y = vec![dd(0.0); n];
    for i in (0..n).rev() {
        let s = (i + 1..n).fold(v[i], |acc, k| acc - l[k * n + i] * y[k]);
        y[i] = dd_div(s, l[i * n + i]);
    }
    let ay = (0..n)
        .map(|i| (0..n).fold(dd(0.0), |acc, j| acc + dd(a.get(i, j)) * y[j]))
        .collect();
    Ok((y, ay))
}

/// Search direction: `r = ∇_z ψ + Aᵀ∇_w ψ`, `τ = √(rᵀH⁻¹r)/β`,
/// `d_z = -H⁻¹r/τ`, `d_w = A d_z`.
pub fn ipm_direction(z: &[f64], w: &[f64], a: &FloatMatrix, kappa: f64, beta: f64) -> Result<Direction, Error> {
    let n = z.len();
    if z.iter().chain(w).any(|v| !(*v > 0.0)) {
        return Err(Error::Precondition("z and w must be strictly positive".into()));
    }
    let (bound, _) = kappa_for(z, w, 0.0);
    if !(kappa >= bound) {
        return Err(Error::Precondition(format!(
            "kappa {kappa} is below max(n, zTw/rho) = {bound}"
        )));
    }
    let (grad_z, grad_w) = merit_gradients(z, w, kappa);
    let dd = TwoFloat::from;
    let r_dd: Vec<TwoFloat> = (0..n)
        .map(|j| (0..n).fold(dd(grad_z[j]), |acc, i| acc + dd(a.get(i, j)) * dd(grad_w[i])))
        .collect();
    let r: Vec<f64> = r_dd.iter().map(|v| f64::from(*v)).collect();
    if r.iter().all(|v| *v == 0.0) {
        return Err(Error::InternalInconsistency(
            "merit gradient vanished at an interior point".into(),
        ));
    }
    let (y, ay) = newton_system(z, w, a, &r_dd)?;
    let ry = f64::from(r_dd.iter().zip(&y).fold(dd(0.0), |acc, (ri, yi)| acc + *yi * *ri));
    if !(ry > 0.0) || !ry.is_finite() {
        return Err(Error::NumericalBreakdown { pivot: n });
    }
    let tau = ry.sqrt() / beta;
    let dz: Vec<f64> = y.iter().map(|v| -f64::from(*v) / tau).collect();
    let dw: Vec<f64> = ay.iter().map(|v| -f64::from(*v) / tau).collect();
    Ok(Direction {
        dz,
        dw,
        tau,
        r,
        grad_z,
        grad_w,
    })
}

/// One accepted iteration.
#[derive(Clone, Debug, PartialEq)]
pub struct IpmIteration {
    pub k: usize,
    pub z: Vec<f64>,
    pub w: Vec<f64>,
    pub dz: Vec<f64>,
    pub dw: Vec<f64>,
    pub kappa: f64,
    pub rho: f64,
    pub r_norm: f64,
    pub tau: f64,
    pub m: u32,
    /// `ψ(z^k, w^k)` with this iteration's `κ`.
    pub psi: f64,
    /// `ψ(z^{k+1}, w^{k+1})` with the same `κ`.
    pub psi_next: f64,
    pub directional_derivative: f64,
    pub ztw: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IpmTrace {
    pub iterations: Vec<IpmIteration>,
    pub final_z: Vec<f64>,
    pub final_w: Vec<f64>,
    pub final_kappa: f64,
}

impl IpmTrace {
    pub fn final_ztw(&self) -> f64 {
        dot(&self.final_z, &self.final_w)
    }

    /// CSV with header `k,z1..zn,w1..wn,kappa,tau,m,psi,ztw`; one row per
    /// iteration and a last row for the final point with `tau` and `m` empty.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        let n = self.final_z.len();
        let mut header = vec!["k".to_string()];
        header.extend((1..=n).map(|i| format!("z{i}")));
        header.extend((1..=n).map(|i| format!("w{i}")));
        header.extend(["kappa", "tau", "m", "psi", "ztw"].map(String::from));
        writeln!(out, "{}", header.join(","))?;
        let join = |v: &[f64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        for it in &self.iterations {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                it.k,
                join(&it.z),
                join(&it.w),
                it.kappa,
                it.tau,
                it.m,
                it.psi,
                it.ztw
            )?;
        }
        let psi = merit_psi(&self.final_z, &self.final_w, self.final_kappa);
        writeln!(
            out,
            "{},{},{},{},,,{},{}",
            self.iterations.len(),
            join(&self.final_z),
            join(&self.final_w),
            self.final_kappa,
            psi,
            self.final_ztw()
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum StallReason {
    IterationLimit,
    LineSearch { k: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub enum IpmOutcome {
    Converged { solution: FloatSolution, trace: IpmTrace },
    Stalled { reason: StallReason, trace: IpmTrace },
}

impl IpmOutcome {
    pub fn trace(&self) -> &IpmTrace {
        match self {
            IpmOutcome::Converged { trace, .. } | IpmOutcome::Stalled { trace, .. } => trace,
        }
    }
}

/// Largest `t <= 1` with `z >= t e` and `q + Az >= t e`, returned when `t > 0`.
pub fn strict_feasible_point(inst: &LcpInstance) -> Option<RationalVector> {
    let n = inst.dim();
    let mut objective = vec![rat(0); n + 1];
    objective[n] = rat(1);
    let mut p = LpProblem::new(n + 1).free(n).maximize(objective);
    let mut cap = vec![rat(0); n + 1];
    cap[n] = rat(1);
    p = p.le(cap, rat(1));
    for i in 0..n {
        let mut lower = vec![rat(0); n + 1];
        lower[i] = rat(1);
        lower[n] = rat(-1);
        p = p.ge(lower, rat(0));
        let mut row: Vec<Rational> = inst.a.row(i).to_vec();
        row.push(rat(-1));
        p = p.ge(row, -inst.q[i].clone());
    }
    match lp_solve(&p) {
        LpOutcome::Optimal { value, point } if value > rat(0) => Some(RationalVector(point[..n].to_vec())),
        _ => None,
    }
}

pub fn solve_ipm(inst: &LcpInstance, params: &IpmParams) -> Result<IpmOutcome, Error> {
    params.validate()?;
    let n = inst.dim();
    let mut z = match &params.z0 {
        Some(z0) if z0.len() != n => {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: z0.len(),
            })
        }
        Some(z0) => z0.clone(),
        None => strict_feasible_point(inst)
            .ok_or_else(|| Error::NotStrictlyFeasible("no z > 0 with q + Az > 0 exists".into()))?
            .to_f64(),
    };
    let mut w = inst.w_of_f64(&z);
    if w.iter().any(|v| !(*v > 0.0)) {
        return Err(Error::NotStrictlyFeasible(format!(
            "q + A z0 = {w:?} is not strictly positive"
        )));
    }
    let a = inst.a.to_float();
    let mut iterations = Vec::new();
    let finish = |iterations: Vec<IpmIteration>, z: Vec<f64>, w: Vec<f64>| {
        let final_kappa = kappa_for(&z, &w, params.kappa_slack).0;
        IpmTrace {
            iterations,
            final_z: z,
            final_w: w,
            final_kappa,
        }
    };

    for k in 0.. {
        let ztw = dot(&z, &w);
        if ztw <= params.eps {
            let solution = LcpSolution::approximate(inst, z.clone());
            return Ok(IpmOutcome::Converged {
                solution,
                trace: finish(iterations, z, w),
            });
        }
        if k >= params.max_iter {
            return Ok(IpmOutcome::Stalled {
                reason: StallReason::IterationLimit,
                trace: finish(iterations, z, w),
            });
        }
        let (kappa, rho) = kappa_for(&z, &w, params.kappa_slack);
        let d = ipm_direction(&z, &w, &a, kappa, params.beta)?;
        let psi = merit_psi(&z, &w, kappa);
        let slope = d.directional_derivative();

        let mut accepted = None;
        for m in 0..=params.max_halvings {
            let t = 0.5f64.powi(m as i32);
            let zn: Vec<f64> = z.iter().zip(&d.dz).map(|(x, dx)| x + t * dx).collect();
            let wn: Vec<f64> = w.iter().zip(&d.dw).map(|(x, dx)| x + t * dx).collect();
            let psi_next = merit_psi(&zn, &wn, kappa);
            if psi_next - psi <= params.sigma * t * slope {
                accepted = Some((m, zn, wn, psi_next));
                break;
            }
        }
        let Some((m, zn, wn, psi_next)) = accepted else {
            return Ok(IpmOutcome::Stalled {
                reason: StallReason::LineSearch { k },
                trace: finish(iterations, z, w),
            });
        };
        iterations.push(IpmIteration {
            k,
            z: std::mem::replace(&mut z, zn),
            w: std::mem::replace(&mut w, wn),
            r_norm: norm2(&d.r),
            directional_derivative: slope,
            dz: d.dz,
            dw: d.dw,
            kappa,
            rho,
            tau: d.tau,
            m,
            psi,
            psi_next,
            ztw,
        });
    }
    unreachable!("the iteration loop returns")
}
