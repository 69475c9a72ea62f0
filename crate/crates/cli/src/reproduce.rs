//! Regression table of known class verdicts and solver results.
//!
//! Class checks go through a [`DetectorRegistry`], so a faulty detector
//! registered under a standard name shows up as named failures here.

use lcplab_core::classes::{
    classify_with, l2_certificate, names, principal_minor_class, DetectorRegistry, MinorClass, Violation,
};
use lcplab_core::lp::game_value;
use lcplab_core::numerics::{rat, ratio, IndexSet};
use lcplab_core::ppt::ppt_transform;
use lcplab_core::solvers::{ipm_direction, kappa_for, solve_ipm, IpmOutcome, IpmParams, LcpInstance};
use lcplab_core::{RationalMatrix, RationalVector};

type Outcome = Result<(), String>;

pub struct Check {
    pub name: &'static str,
    run: fn(&DetectorRegistry) -> Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn member(reg: &DetectorRegistry, class: &str, a: &RationalMatrix, want: bool) -> Outcome {
    let v = reg.detect(class, a).map_err(|e| e.to_string())?;
    ensure(v.member == want, || format!("{class} = {} on\n{a}", v.member))?;
    ensure(v.verify(a), || format!("{class} witness does not verify on\n{a}"))
}

fn m(rows: &[[i64; 3]; 3]) -> RationalMatrix {
    RationalMatrix::from_i64(rows)
}

pub fn anti_diagonal() -> RationalMatrix {
    RationalMatrix::from_i64(&[[0, -5], [2, 0]])
}

pub fn three_by_three_member() -> RationalMatrix {
    m(&[[0, 1, 1], [2, 0, 1], [-1, -1, 0]])
}

pub fn its_inverse() -> RationalMatrix {
    m(&[[-1, 1, -1], [1, -1, -2], [2, 1, 2]]).scale(&ratio(1, 3))
}

pub fn cone_example() -> RationalMatrix {
    m(&[[0, 1, 1], [2, 0, 2], [-4, -5, 0]])
}

pub fn hereditary_counterexample() -> RationalMatrix {
    m(&[[0, 1, 1], [2, 0, 1], [-4, -5, 0]])
}

pub fn transposed_counterexample() -> RationalMatrix {
    m(&[[0, 2, -1], [1, 0, -1], [1, 1, 0]])
}

pub fn tilde_not_copositive_star() -> RationalMatrix {
    m(&[[0, 1, 1], [2, 0, 2], [-2, -4, 0]])
}

pub fn p0_not_tilde() -> RationalMatrix {
    m(&[[1, -1, -2], [-1, 1, 0], [0, 0, 1]])
}

pub fn positive_value_r0() -> RationalMatrix {
    m(&[[0, 2, 1], [1, 0, 1], [-2, -2, 1]])
}

pub fn worked_matrix() -> RationalMatrix {
    m(&[[0, 1, 1], [2, 0, 2], [-2, -5, 0]])
}

pub fn worked_instance() -> LcpInstance {
    LcpInstance::new(worked_matrix(), RationalVector::from_i64(&[-4, -7, 10])).expect("3x3")
}

pub fn worked_solution() -> [f64; 3] {
    [15.0 / 14.0, 11.0 / 7.0, 17.0 / 7.0]
}

pub fn worked_params() -> IpmParams {
    IpmParams {
        beta: 0.5,
        sigma: 0.2,
        eps: 1e-5,
        z0: Some(vec![1.0, 1.0, 5.0]),
        ..IpmParams::default()
    }
}

fn block_extraction(_: &DetectorRegistry) -> Outcome {
    let sub = hereditary_counterexample()
        .principal_submatrix(&IndexSet::new(vec![0, 1], 3).unwrap())
        .unwrap();
    ensure(sub == RationalMatrix::from_i64(&[[0, 1], [2, 0]]), || {
        format!("got\n{sub}")
    })
}

fn cone_on_last_coordinate(reg: &DetectorRegistry) -> Outcome {
    let a = cone_example();
    let e3 = RationalVector::unit(3, 2);
    let ax = a.mul_vec(&e3);
    ensure(ax.is_nonnegative() && e3.dot(&ax) == rat(0), || {
        format!("e3 is not in SOL(0,A): Ae3 = {ax}")
    })?;
    member(reg, names::STAR, &a, true)
}

fn cone_matrix_and_permutation(reg: &DetectorRegistry) -> Outcome {
    let a = cone_example();
    let p = RationalMatrix::permutation(&[2, 0, 1]);
    let pap = p.mul(&a).mul(&p.transpose());
    ensure(pap == m(&[[0, -4, -5], [1, 0, 1], [2, 2, 0]]), || {
        format!("PAP^T =\n{pap}")
    })?;
    member(reg, names::E0S, &a, true)?;
    member(reg, names::E0S, &pap, true)
}

fn positive_game_value(_: &DetectorRegistry) -> Outcome {
    let a = positive_value_r0();
    let g = game_value(&a);
    let (lo, hi) = g.guarantees(&a);
    ensure(g.value > rat(0) && lo == hi, || format!("v(A) = {}", g.value))?;
    let ax = a.mul_vec(&RationalVector::from_i64(&[1, 1, 5]));
    ensure(ax == RationalVector::from_i64(&[7, 6, 1]), || format!("Ax = {ax}"))
}

fn full_pivot_inverse(_: &DetectorRegistry) -> Outcome {
    let got = ppt_transform(&three_by_three_member(), &IndexSet::full(3))
        .map_err(|e| e.to_string())?
        .m;
    ensure(got == its_inverse(), || format!("got\n{got}"))
}

fn anti_diagonal_e0(reg: &DetectorRegistry) -> Outcome {
    member(reg, names::E0, &anti_diagonal(), true)
}

fn anti_diagonal_e0s(reg: &DetectorRegistry) -> Outcome {
    member(reg, names::E0S, &anti_diagonal(), true)
}

fn anti_diagonal_not_copositive(reg: &DetectorRegistry) -> Outcome {
    let a = anti_diagonal();
    member(reg, names::C0, &a, false)?;
    let x = reg
        .detect(names::C0, &a)
        .unwrap()
        .witness()
        .cloned()
        .unwrap_or_default();
    let value = x.dot(&a.mul_vec(&x));
    ensure(
        x == RationalVector(vec![ratio(1, 2), ratio(1, 2)]) && value == ratio(-3, 4),
        || format!("x = {x}, xAx = {value}"),
    )
}

fn negative_corner_e0s(reg: &DetectorRegistry) -> Outcome {
    member(reg, names::E0S, &RationalMatrix::from_i64(&[[0, 3], [-1, 0]]), true)
}

fn inverse_not_e0(reg: &DetectorRegistry) -> Outcome {
    let a = its_inverse();
    member(reg, names::E0, &a, false)?;
    let support = reg.detect(names::E0, &a).unwrap().support();
    ensure(support == Some(IndexSet::singleton(0)), || {
        format!("witness support {support:?}")
    })
}

fn inverse_fails_downstream(reg: &DetectorRegistry) -> Outcome {
    let a = its_inverse();
    for class in [
        names::E0S,
        names::E0S_TILDE,
        names::COMPLETELY_E0S,
        names::C0,
        names::C0_STAR,
    ] {
        member(reg, class, &a, false)?;
    }
    Ok(())
}

fn not_closed_under_pivoting(reg: &DetectorRegistry) -> Outcome {
    member(reg, names::E0S, &three_by_three_member(), true)?;
    member(reg, names::E0S, &its_inverse(), false)
}

fn three_by_three_e0s(reg: &DetectorRegistry) -> Outcome {
    member(reg, names::E0S, &three_by_three_member(), true)
}

fn symmetrization_not_e0s(reg: &DetectorRegistry) -> Outcome {
    let a = three_by_three_member();
    let s = a.add(&a.transpose());
    ensure(s == m(&[[0, 3, 0], [3, 0, 0], [0, 0, 0]]), || format!("A + A^T =\n{s}"))?;
    member(reg, names::E0S, &s, false)
}

fn two_by_two_block_not_e0s(reg: &DetectorRegistry) -> Outcome {
    let a = RationalMatrix::from_i64(&[[0, 1], [2, 0]]);
    member(reg, names::E0S, &a, false)?;
    let v = reg.detect(names::E0S, &a).unwrap();
    ensure(v.support() == Some(IndexSet::singleton(0)), || {
        format!("witness {:?}", v.witness())
    })
}

fn transposed_not_e0s(reg: &DetectorRegistry) -> Outcome {
    member(reg, names::E0S, &transposed_counterexample(), false)?;
    member(reg, names::E0S, &transposed_counterexample().transpose(), true)
}

fn hereditary_fails(reg: &DetectorRegistry) -> Outcome {
    let a = hereditary_counterexample();
    member(reg, names::E0S, &a, true)?;
    member(reg, names::COMPLETELY_E0S, &a, false)?;
    match reg.detect(names::COMPLETELY_E0S, &a).unwrap().violation {
        Some(Violation::Submatrix { rows, .. }) => ensure(rows == IndexSet::new(vec![0, 1], 3).unwrap(), || {
            format!("failing block {rows}")
        }),
        other => Err(format!("unexpected violation {other:?}")),
    }
}

fn tilde_member(reg: &DetectorRegistry) -> Outcome {
    member(reg, names::E0S_TILDE, &tilde_not_copositive_star(), true)
}

fn tilde_not_c0_star(reg: &DetectorRegistry) -> Outcome {
    member(reg, names::C0_STAR, &tilde_not_copositive_star(), false)
}

fn p0_fails_tilde(reg: &DetectorRegistry) -> Outcome {
    let a = p0_not_tilde();
    member(reg, names::E0S, &a, true)?;
    member(reg, names::E0S_TILDE, &a, false)?;
    let v = reg.detect(names::E0S_TILDE, &a).unwrap();
    match &v.violation {
        Some(Violation::TildeViolated { x, index: 2 }) => {
            let (atx, ax) = (a.transpose_mul_vec(x), a.mul_vec(x));
            ensure(atx[2] == rat(-2) * &x[0] && ax[2] == rat(0), || format!("x = {x}"))
        }
        other => Err(format!("unexpected violation {other:?}")),
    }
}

fn p0_member(_: &DetectorRegistry) -> Outcome {
    let class = principal_minor_class(&p0_not_tilde()).class;
    ensure(class == MinorClass::P0, || format!("class {}", class.name()))
}

fn worked_matrix_tilde(reg: &DetectorRegistry) -> Outcome {
    member(reg, names::E0S_TILDE, &worked_matrix(), true)
}

fn r0_member(reg: &DetectorRegistry) -> Outcome {
    member(reg, names::R0, &positive_value_r0(), true)
}

fn bounded_solvability(reg: &DetectorRegistry) -> Outcome {
    let a = positive_value_r0();
    let report = classify_with(reg, &a).map_err(|e| e.to_string())?;
    ensure(report.is(names::E0S_TILDE) && report.is(names::R0), || {
        "not E0s-tilde and R0".into()
    })?;
    ensure(report.game.is_positive(), || format!("v(A) = {}", report.game.value))?;
    ensure(report.q.holds && report.q_b.holds, || "Q or Qb not derived".into())
}

fn r0_fails(reg: &DetectorRegistry) -> Outcome {
    let a = cone_example();
    member(reg, names::R0, &a, false)?;
    let w = reg.detect(names::R0, &a).unwrap().witness().cloned();
    ensure(
        w.as_ref().map(RationalVector::support) == Some(IndexSet::singleton(2)),
        || format!("witness {w:?}"),
    )
}

fn positive_diagonal_sufficient(reg: &DetectorRegistry) -> Outcome {
    member(
        reg,
        names::SUFFICIENT,
        &RationalMatrix::from_i64(&[[1, 2], [0, 1]]),
        true,
    )
}

fn l2_on_tilde_member(_: &DetectorRegistry) -> Outcome {
    let a = tilde_not_copositive_star();
    let x = RationalVector::unit(3, 2);
    ensure(a.mul_vec(&x) == RationalVector::from_i64(&[1, 2, 0]), || "Ax".into())?;
    ensure(
        a.transpose_mul_vec(&x) == RationalVector::from_i64(&[-2, -4, 0]),
        || "A^T x".into(),
    )?;
    let cert = l2_certificate(&a, &x).map_err(|e| e.to_string())?;
    ensure(cert.d1 == vec![rat(2), rat(2), rat(0)] && cert.verify(&a), || {
        format!("D1 = {:?}", cert.d1)
    })
}

fn initial_descent(_: &DetectorRegistry) -> Outcome {
    let inst = worked_instance();
    let z = vec![1.0, 1.0, 5.0];
    let w = inst.w_of_f64(&z);
    let kappa = kappa_for(&z, &w, 0.1).0;
    let d = ipm_direction(&z, &w, &inst.a.to_float(), kappa, 0.5).map_err(|e| e.to_string())?;
    let expected = -d.tau * 0.25;
    let got = d.directional_derivative();
    ensure(got < 0.0 && (got - expected).abs() <= 1e-8 * expected.abs(), || {
        format!("{got} vs {expected}")
    })
}

fn worked_start(_: &DetectorRegistry) -> Outcome {
    let inst = worked_instance();
    let w0 = inst.w_of(&RationalVector::from_i64(&[1, 1, 5]));
    ensure(w0 == RationalVector::from_i64(&[2, 5, 3]), || format!("w0 = {w0}"))
}

fn worked_convergence(_: &DetectorRegistry) -> Outcome {
    match solve_ipm(&worked_instance(), &worked_params()).map_err(|e| e.to_string())? {
        IpmOutcome::Converged { solution, trace } => {
            let err = solution
                .z
                .iter()
                .zip(worked_solution())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            ensure(err <= 1e-3 && trace.final_ztw() <= 1e-5, || {
                format!("z = {:?}", solution.z)
            })
        }
        IpmOutcome::Stalled { reason, .. } => Err(format!("stalled: {reason:?}")),
    }
}

/// Every check, in a fixed order.
pub fn checks() -> Vec<Check> {
    macro_rules! table {
        ($($name:literal => $f:ident),* $(,)?) => { vec![$(Check { name: $name, run: $f }),*] };
    }
    table![
        "submatrix/leading-pair-of-hereditary-counterexample" => block_extraction,
        "cone/zero-solutions-on-last-coordinate" => cone_on_last_coordinate,
        "e0s/cone-example-and-its-permutation" => cone_matrix_and_permutation,
        "game/positive-value-with-strictly-positive-image" => positive_game_value,
        "ppt/full-pivot-equals-inverse" => full_pivot_inverse,
        "e0/anti-diagonal-member" => anti_diagonal_e0,
        "e0s/anti-diagonal-member" => anti_diagonal_e0s,
        "c0/anti-diagonal-quadratic-witness" => anti_diagonal_not_copositive,
        "e0s/negative-corner-member" => negative_corner_e0s,
        "e0/inverse-with-negative-diagonal-fails" => inverse_not_e0,
        "e0/inverse-fails-every-downstream-class" => inverse_fails_downstream,
        "e0s/not-closed-under-full-pivot" => not_closed_under_pivoting,
        "e0s/three-by-three-member" => three_by_three_e0s,
        "e0s/symmetrization-not-member" => symmetrization_not_e0s,
        "e0s/two-by-two-block-not-member" => two_by_two_block_not_e0s,
        "e0s/transposed-matrix-not-member" => transposed_not_e0s,
        "completely-e0s/fails-on-leading-block" => hereditary_fails,
        "e0s-tilde/member" => tilde_member,
        "c0-star/tilde-member-not-copositive-star" => tilde_not_c0_star,
        "e0s-tilde/p0-member-fails-on-third-index" => p0_fails_tilde,
        "p0/tilde-counterexample-is-p0" => p0_member,
        "e0s-tilde/worked-matrix-member" => worked_matrix_tilde,
        "r0/positive-value-matrix-member" => r0_member,
        "derived/bounded-solution-sets" => bounded_solvability,
        "r0/cone-example-fails-on-last-coordinate" => r0_fails,
        "sufficient/positive-diagonal-p0" => positive_diagonal_sufficient,
        "certificate/l2-on-last-coordinate" => l2_on_tilde_member,
        "ipm/initial-direction-is-descent" => initial_descent,
        "ipm/worked-start-is-strictly-feasible" => worked_start,
        "ipm/worked-instance-converges" => worked_convergence,
    ]
}

pub fn run_checks(registry: &DetectorRegistry) -> Vec<CheckResult> {
    checks()
        .into_iter()
        .map(|c| match (c.run)(registry) {
            Ok(()) => CheckResult {
                name: c.name,
                passed: true,
                detail: String::new(),
            },
            Err(detail) => CheckResult {
                name: c.name,
                passed: false,
                detail,
            },
        })
        .collect()
}
