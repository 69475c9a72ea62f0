mod common;

use common::*;
use lcplab_core::numerics::IndexSet;
use lcplab_core::ppt::{enumerate_legitimate, exchange, ppt_rhs, ppt_transform};
use lcplab_core::solvers::{solve_enumerate, LcpInstance};
use lcplab_core::{Error, RationalMatrix};
use rand::Rng;

#[test]
fn pivoting_twice_on_the_same_block_is_the_identity() {
    let mut r = rng(21);
    let mut done = 0;
    while done < 1000 {
        let n = r.gen_range(1..=4);
        let a = int_matrix(&mut r, n, -3, 3);
        let legit = enumerate_legitimate(&a);
        let alpha = &legit[r.gen_range(0..legit.len())];
        let m = ppt_transform(&a, alpha).unwrap().m;
        assert_eq!(ppt_transform(&m, alpha).unwrap().m, a, "{a:?} on {alpha}");
        done += 1;
    }
}

#[test]
fn full_pivot_is_the_inverse() {
    let mut r = rng(22);
    let mut done = 0;
    while done < 1000 {
        let n = r.gen_range(1..=4);
        let a = int_matrix(&mut r, n, -3, 3);
        match a.inverse() {
            Some(inv) => {
                assert_eq!(ppt_transform(&a, &IndexSet::full(n)).unwrap().m, inv);
                done += 1;
            }
            None => assert!(matches!(
                ppt_transform(&a, &IndexSet::full(n)),
                Err(Error::IllegitimatePivot { .. })
            )),
        }
    }
}

#[test]
fn full_pivot_of_reference_matrix() {
    let a = RationalMatrix::from_i64(&[[0, 1, 1], [2, 0, 1], [-1, -1, 0]]);
    let expected =
        RationalMatrix::from_i64(&[[-1, 1, -1], [1, -1, -2], [2, 1, 2]]).scale(&lcplab_core::numerics::ratio(1, 3));
    assert_eq!(ppt_transform(&a, &IndexSet::full(3)).unwrap().m, expected);
}

#[test]
fn pivoted_problems_have_the_same_solutions() {
    let mut r = rng(23);
    for _ in 0..150 {
        let a = int_matrix(&mut r, 3, -3, 3);
        let q = int_vector(&mut r, 3, -4, 4);
        let original = solve_enumerate(&LcpInstance::new(a.clone(), q.clone()).unwrap()).unwrap();
        let mut want: Vec<_> = original.solutions.iter().map(|s| s.z.clone()).collect();
        want.sort();
        for alpha in enumerate_legitimate(&a) {
            let m = ppt_transform(&a, &alpha).unwrap().m;
            let qp = ppt_rhs(&q, &a, &alpha).unwrap();
            let inst = LcpInstance::new(m, qp).unwrap();
            let pivoted = solve_enumerate(&inst).unwrap();
            assert_eq!(pivoted.solvable, original.solvable);
            let mut got = Vec::new();
            for s in &pivoted.solutions {
                let (z, w) = exchange(&s.z_vector(), &s.w.clone().into(), &alpha);
                let back = LcpInstance::new(a.clone(), q.clone()).unwrap();
                assert_eq!(back.w_of(&z), w);
                assert!(lcplab_core::solvers::check_exact(&back, &z).0, "{a:?} {q:?} {alpha}");
                got.push(z.into_inner());
            }
            got.sort();
            assert_eq!(got, want, "{a:?} {q:?} {alpha}");
        }
    }
}
