//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero when any
//! criterion fails.

use std::process::ExitCode;

use num_traits::Signed;
use optquad::golden::{find, Rounding};
use optquad::round_at;
use optquad_core::exact::{
    binomial, bernoulli, euler_frobenius, factorial, fwd_diff_zero, geometric_power_sum, ipow,
    Rational,
};
use optquad_core::norm::{norm_squared_closed, norm_squared_direct};
use optquad_core::oracle::{check_against_formula, solve_full_system};
use optquad_core::real::parse_decimal;
use optquad_core::solver::optimal_formula;
use optquad_core::{OptimalFormula, PrecisionConfig, QuadratureSpec, Real};

const BITS: usize = 256;
const SARD_COEFF_TOL: &str = "1e-30";
const SHIFTED_COEFF_TOL: &str = "1e-18";
const ORACLE_TOL: &str = "1e-25";
const NORM_REL_TOL: &str = "1e-20";
const MOMENT_TOL: &str = "1e-30";
const ASYMPTOTIC_REL_TOL: &str = "0.05";

fn r(s: &str) -> Real {
    Real::from_rational(&parse_decimal(s).unwrap(), BITS)
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn prec() -> PrecisionConfig {
    PrecisionConfig::new(BITS).unwrap()
}

fn solve(m: usize, n: usize, eta: &str) -> OptimalFormula {
    let spec = QuadratureSpec::single_offset(m, n, parse_decimal(eta).unwrap()).unwrap();
    optimal_formula(&spec, &prec()).unwrap()
}

struct Run {
    failures: usize,
    /// Largest moment residual across instances solved for criteria 1-6.
    moments: Real,
    moment_count: usize,
}

impl Run {
    fn report(&mut self, id: usize, name: &str, pass: bool, detail: String) {
        if !pass {
            self.failures += 1;
        }
        println!(
            "criterion {id:>2} {:<4} {name}: {detail}",
            if pass { "PASS" } else { "FAIL" }
        );
    }

    fn track(&mut self, f: &OptimalFormula) {
        self.moments = self.moments.max(&f.moment_residual);
        self.moment_count += 1;
    }
}

fn sci(v: &Real) -> String {
    v.to_decimal(3)
}

fn sard_exactness(run: &mut Run) {
    let cases: [(usize, &[i64], i64); 4] = [
        (2, &[3, 10, 3], 16),
        (3, &[4, 11, 11, 4], 30),
        (4, &[11, 32, 26, 32, 11], 112),
        (5, &[15, 43, 37, 37, 43, 15], 190),
    ];
    let mut worst = Real::zero(BITS);
    for (n, num, den) in cases {
        let f = solve(2, n, "0");
        run.track(&f);
        for (c, k) in f.coefficients.iter().zip(num) {
            let want = Real::from_rational(&rat(*k, den), BITS);
            worst = worst.max(&(c - &want).abs());
        }
    }
    let pass = worst <= r(SARD_COEFF_TOL);
    run.report(1, "Sard coefficients, m=2, N=2..5", pass, format!(
        "max |dC| = {} (tol {SARD_COEFF_TOL})", sci(&worst)
    ));
}

fn norm_matches(value: &Real, printed: &str, rounding: Rounding) -> bool {
    let places = printed.split('.').nth(1).map_or(0, str::len);
    round_at(&value.to_rational(), places, rounding) == parse_decimal(printed).unwrap()
}

fn sard_norms(run: &mut Run) {
    let mut pass = true;
    let mut parts = Vec::new();
    for n in 2..=5 {
        let t = find(&format!("sard_n{n}")).unwrap();
        let (printed, rounding) = t.norm.unwrap();
        let v = solve(2, n, "0").norm().unwrap();
        let ok = norm_matches(&v, printed, rounding);
        pass &= ok;
        parts.push(format!("N={n} {} vs {printed}", v.to_decimal(6)));
    }
    run.report(2, "Sard norm constants (upper bounds at printed digits)", pass, parts.join(", "));
}

fn shifted_formulas(run: &mut Run) {
    let tol = r(SHIFTED_COEFF_TOL);
    let mut worst = Real::zero(BITS);
    let mut norms_ok = true;
    let mut parts = Vec::new();
    for n in 2..=5 {
        let t = find(&format!("shifted_n{n}")).unwrap();
        let f = solve(2, n, "0.205");
        run.track(&f);
        for e in t.entries {
            worst = worst.max(&(&f.coefficients[e.index] - &r(e.value)).abs());
        }
        let (printed, rounding) = t.norm.unwrap();
        let v = f.norm().unwrap();
        norms_ok &= norm_matches(&v, printed, rounding);
        parts.push(format!("{} vs {printed}", v.to_decimal(8)));
    }
    let pass = worst <= tol && norms_ok;
    run.report(3, "shifted formulas, m=2, eta0=0.205, N=2..5", pass, format!(
        "max |dC| = {} (tol {SHIFTED_COEFF_TOL}); norms {}", sci(&worst), parts.join(", ")
    ));
}

fn tables(run: &mut Run, solved: &mut Vec<OptimalFormula>) {
    let mut pass = true;
    let mut worst = Real::zero(BITS);
    let mut bad = Vec::new();
    let mut count = 0;
    for t in 1..=14 {
        let g = find(&format!("table{t}")).unwrap();
        let f = solve(g.m, g.n, g.eta0);
        run.track(&f);
        for e in g.entries {
            let tol = r(e.tolerance.unwrap_or(g.tolerance));
            let dev = (&f.coefficients[e.index] - &r(e.value)).abs();
            worst = worst.max(&dev);
            count += 1;
            if dev > tol {
                pass = false;
                bad.push(format!("table{t} C{}", e.index));
            }
        }
        solved.push(f);
    }
    let detail = if bad.is_empty() {
        format!("{count} entries, max |dC| = {} (tol 5e-19; 5e-18 flagged entry)", sci(&worst))
    } else {
        format!("mismatches: {}", bad.join(", "))
    };
    run.report(4, "Tables 1-14, N=300, eta0=0.205", pass, detail);
}

fn positivity(run: &mut Run, solved: &[OptimalFormula]) {
    let mut pass = true;
    let mut detail = Vec::new();
    for f in solved.iter().filter(|f| f.spec.m() <= 14) {
        if f.coefficients.iter().any(|c| !c.is_positive()) {
            pass = false;
            detail.push(format!("m={} has non-positive C", f.spec.m()));
        }
    }
    let f15 = solved.iter().find(|f| f.spec.m() == 15).unwrap();
    let g = find("table14").unwrap();
    let expected_neg: Vec<usize> = g
        .entries
        .iter()
        .filter(|e| e.value.starts_with('-'))
        .map(|e| e.index)
        .collect();
    let n = f15.spec.n();
    let computed_neg: Vec<usize> = (0..=n / 2)
        .filter(|&b| f15.coefficients[b].is_negative())
        .collect();
    let tol = r("5e-19");
    let values_ok = expected_neg.iter().all(|&b| {
        let e = g.entries.iter().find(|e| e.index == b).unwrap();
        (&f15.coefficients[b] - &r(e.value)).abs() <= tol
    });
    let mirrored = computed_neg.iter().all(|&b| f15.coefficients[n - b].is_negative());
    pass &= expected_neg == vec![9, 11, 13, 15, 17, 19, 21, 23]
        && computed_neg == expected_neg
        && values_ok
        && mirrored;
    detail.push(format!("m=15 negative indices {computed_neg:?}"));
    run.report(5, "positivity m=2..14, sign pattern at m=15", pass, detail.join("; "));
}

fn oracle_equivalence(run: &mut Run) {
    let tol = r(ORACLE_TOL);
    let mut worst = Real::zero(BITS);
    let mut bad = Vec::new();
    for m in [2, 3, 4] {
        for n in [5, 10] {
            for eta in ["0", "0.205"] {
                let spec = QuadratureSpec::single_offset(m, n, parse_decimal(eta).unwrap()).unwrap();
                let f = optimal_formula(&spec, &prec()).unwrap();
                run.track(&f);
                let o = solve_full_system(&spec, &prec()).unwrap();
                let dev = check_against_formula(&o, &f).unwrap();
                if dev > tol {
                    bad.push(format!("m={m} N={n} eta0={eta}: {}", sci(&dev)));
                }
                worst = worst.max(&dev);
            }
        }
    }
    let spec = QuadratureSpec::boundary(4, 20, vec![rat(3, 10), rat(6, 5)]).unwrap();
    match optimal_formula(&spec, &prec()) {
        Ok(f) => {
            run.track(&f);
            let o = solve_full_system(&spec, &prec()).unwrap();
            let dev = check_against_formula(&o, &f).unwrap();
            if dev > tol {
                bad.push(format!("m=4 t=2 etas=(0.3,1.2) N=20: {}", sci(&dev)));
            }
            worst = worst.max(&dev);
        }
        Err(e) => bad.push(format!("m=4 t=2 etas=(0.3,1.2) N=20: {e}")),
    }
    let pass = bad.is_empty();
    let detail = if pass {
        format!("max deviation {} (tol {ORACLE_TOL})", sci(&worst))
    } else {
        format!("tol {ORACLE_TOL}; failing: {}", bad.join("; "))
    };
    run.report(6, "closed form vs full-system oracle", pass, detail);
}

fn norm_consistency(run: &mut Run) {
    let tol = r(NORM_REL_TOL);
    let mut worst = Real::zero(BITS);
    let mut bad = 0;
    let mut total = 0;
    for m in 2..=8 {
        for n in [10, 50] {
            for eta in ["0", "0.205"] {
                let f = solve(m, n, eta);
                let closed = norm_squared_closed(&f);
                let direct = norm_squared_direct(&f);
                let rel = &(&closed - &direct).abs() / &direct.abs();
                total += 1;
                if rel > tol {
                    bad += 1;
                }
                worst = worst.max(&rel);
            }
        }
    }
    run.report(7, "closed vs direct squared norm", bad == 0, format!(
        "{bad}/{total} instances above relative {NORM_REL_TOL}; worst {}", sci(&worst)
    ));
}

fn moments(run: &mut Run) {
    let pass = run.moments <= r(MOMENT_TOL);
    let detail = format!(
        "{} solved instances, max residual {} (tol {MOMENT_TOL})",
        run.moment_count,
        sci(&run.moments)
    );
    run.report(8, "moment conditions", pass, detail);
}

fn comparison(run: &mut Run) {
    let mut pass = true;
    let mut parts = Vec::new();
    for n in 2..=5 {
        let shifted = solve(2, n, "0.205").norm().unwrap();
        let sard = solve(2, n, "0").norm().unwrap();
        pass &= shifted < sard;
        parts.push(format!("N={n} {} < {}", shifted.to_decimal(6), sard.to_decimal(6)));
    }
    run.report(9, "shifted beats Sard, m=2", pass, parts.join(", "));
}

fn combinatorics(run: &mut Run) {
    let mut pass = true;
    for m in 1..=12u64 {
        for n in 0..m {
            let mut s = num_bigint::BigInt::from(0);
            for l in (n + 1)..m {
                let t = binomial(m, l) * binomial(l, n);
                if (m - 1 - l) % 2 == 0 { s += t } else { s -= t }
            }
            let c = binomial(m, n);
            if (m - n - 1) % 2 == 0 { s += &c } else { s -= &c }
            pass &= s == c;
        }
    }
    for k in 1..=10u32 {
        for y in -5i64..=5 {
            let mut acc = Rational::from_integer(0.into());
            for i in 1..=k {
                let ff = (0..i as i64).fold(num_bigint::BigInt::from(1), |a, j| a * (y - j));
                acc += Rational::new(ff * fwd_diff_zero(i, k), factorial(i as u64));
            }
            pass &= acc == Rational::from_integer(ipow(y, k));
        }
    }
    for k in 0..=30 {
        pass &= euler_frobenius(k).is_palindromic();
    }
    let qs = [rat(-3, 1), rat(-1, 2), rat(1, 3), rat(2, 1), rat(7, 5), rat(-11, 13)];
    for q in &qs {
        for n in 0..=20u64 {
            for k in 0..=6u32 {
                let mut direct = Rational::from_integer(0.into());
                let mut qp = Rational::from_integer(1.into());
                for g in 0..n {
                    direct += &qp * Rational::from_integer(ipow(g as i64, k));
                    qp *= q;
                }
                pass &= geometric_power_sum(q, n, k).unwrap() == direct;
            }
        }
    }
    run.report(10, "exact combinatorics identities", pass, "binomial, falling-factorial, palindromic k<=30, geometric sums".into());
}

fn asymptotic(run: &mut Run) {
    let f = solve(2, 300, "0.205");
    let scaled = &f.norm_squared.clone().unwrap() * &Real::from_i64(300, BITS).powu(4);
    let target = Real::from_rational(&(bernoulli(4) / Rational::from_integer(factorial(4))).abs(), BITS);
    let rel = (&(&scaled - &target) / &target).abs();
    let pass = rel <= r(ASYMPTOTIC_REL_TOL);
    run.report(11, "N^4 scaling at N=300, m=2", pass, format!(
        "norm^2 * N^4 = {} vs 1/720, relative gap {}", scaled.to_decimal(8), sci(&rel)
    ));
}

fn main() -> ExitCode {
    let mut run = Run {
        failures: 0,
        moments: Real::zero(BITS),
        moment_count: 0,
    };
    let mut solved = Vec::new();
    sard_exactness(&mut run);
    sard_norms(&mut run);
    shifted_formulas(&mut run);
    tables(&mut run, &mut solved);
    positivity(&mut run, &solved);
    oracle_equivalence(&mut run);
    norm_consistency(&mut run);
    moments(&mut run);
    comparison(&mut run);
    combinatorics(&mut run);
    asymptotic(&mut run);
    println!("{} of 11 criteria failed", run.failures);
    if run.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
