mod common;

use common::*;
use optquad_core::linalg::solve;
use optquad_core::norm::quadratic_form;
use optquad_core::oracle::{assemble_full_system, check_against_formula, solve_full_system};
use optquad_core::solver::optimal_formula;
use optquad_core::{Error, Real};

#[test]
fn sard_m2_weights() {
    let o = solve_full_system(&single(2, 2, "0"), &prec()).unwrap();
    for (c, w) in o.coefficients.iter().zip(["0.1875", "0.625", "0.1875"]) {
        assert!(close(c, &real(w), &pow10(-60)));
    }
    let o = solve_full_system(&single(2, 3, "0"), &prec()).unwrap();
    for (c, k) in o.coefficients.iter().zip([4, 11, 11, 4]) {
        assert!(close(c, &Real::from_rational(&rat(k, 30), BITS), &pow10(-60)));
    }
    assert_eq!(o.lambdas.len(), 2);
}

#[test]
fn row_permutation_does_not_change_solution() {
    let spec = single(3, 8, "0.205");
    let sys = assemble_full_system(&spec, BITS).unwrap();
    let base = solve(&sys).unwrap();
    let n = sys.order;
    let perm: Vec<usize> = (0..n).map(|i| (i * 5 + 3) % n).collect();
    let other = solve(&sys.permute_rows(&perm)).unwrap();
    let tol = &base.residual.max(&other.residual).max(&Real::pow2(-230, BITS))
        * &Real::from_i64(10, BITS);
    for (a, b) in base.x.iter().zip(&other.x) {
        assert!(close(a, b, &tol));
    }
}

#[test]
fn oracle_weights_integrate_low_powers() {
    for m in 2..=4 {
        let spec = single(m, 7, "0.205");
        let o = solve_full_system(&spec, &prec()).unwrap();
        let x = spec.nodes(BITS);
        for alpha in 0..m as u64 {
            let s = o
                .coefficients
                .iter()
                .zip(&x)
                .fold(Real::zero(BITS), |a, (c, x)| &a + &(c * &x.powu(alpha)));
            let want = Real::from_rational(&rat(1, alpha as i64 + 1), BITS);
            assert!(close(&s, &want, &pow10(-60)));
        }
    }
}

#[test]
fn oracle_norm_agrees_on_sard_grid() {
    for m in 2..=4 {
        for n in [5, 10] {
            let spec = single(m, n, "0");
            let o = solve_full_system(&spec, &prec()).unwrap();
            let f = optimal_formula(&spec, &prec()).unwrap();
            let a = quadratic_form(m, &f.nodes, &o.coefficients);
            let b = quadratic_form(m, &f.nodes, &f.coefficients);
            assert!(close(&a, &b, &(&b.abs() * &pow10(-18))), "m={m} N={n}");
        }
    }
}

#[test]
fn oracle_is_optimal_against_closed_form_weights() {
    // The oracle minimizes the quadratic form, so no other admissible weight
    // vector on the same nodes can do better.
    for m in 2..=4 {
        for n in [5, 10] {
            let spec = single(m, n, "0.205");
            let o = solve_full_system(&spec, &prec()).unwrap();
            let f = optimal_formula(&spec, &prec()).unwrap();
            let a = quadratic_form(m, &f.nodes, &o.coefficients);
            let b = quadratic_form(m, &f.nodes, &f.coefficients);
            let slack = &b.abs() * &pow10(-40);
            assert!(a <= &b + &slack, "m={m} N={n}");
        }
    }
}

#[test]
fn check_detects_perturbation_and_identity() {
    let spec = single(2, 5, "0");
    let o = solve_full_system(&spec, &prec()).unwrap();
    let mut f = optimal_formula(&spec, &prec()).unwrap();
    assert!(check_against_formula(&o, &f).unwrap() <= pow10(-25));
    f.coefficients = o.coefficients.clone();
    assert!(check_against_formula(&o, &f).unwrap().is_zero());
    f.coefficients[2] = &f.coefficients[2] + &pow10(-6);
    assert!(check_against_formula(&o, &f).unwrap() >= pow10(-6));
}

#[test]
fn mismatched_problems_are_rejected() {
    let o = solve_full_system(&single(2, 5, "0"), &prec()).unwrap();
    let f = optimal_formula(&single(2, 6, "0"), &prec()).unwrap();
    assert_eq!(check_against_formula(&o, &f), Err(Error::SpecMismatch));
}

#[test]
fn guard_rejects_huge_systems() {
    assert!(matches!(
        solve_full_system(&single(2, 5000, "0"), &prec()),
        Err(Error::OracleTooLarge { .. })
    ));
}
