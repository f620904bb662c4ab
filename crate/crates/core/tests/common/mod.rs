#![allow(dead_code)]

use optquad_core::exact::Rational;
use optquad_core::real::parse_decimal;
use optquad_core::{PrecisionConfig, QuadratureSpec, Real};

pub const BITS: usize = 256;

pub fn prec() -> PrecisionConfig {
    PrecisionConfig::new(BITS).unwrap()
}

pub fn dec(s: &str) -> Rational {
    parse_decimal(s).unwrap()
}

pub fn real(s: &str) -> Real {
    Real::from_rational(&dec(s), BITS)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn pow10(e: i32) -> Real {
    Real::from_rational(&dec(&format!("1e{e}")), BITS)
}

pub fn single(m: usize, n: usize, eta: &str) -> QuadratureSpec {
    QuadratureSpec::single_offset(m, n, dec(eta)).unwrap()
}

pub fn close(a: &Real, b: &Real, tol: &Real) -> bool {
    (a - b).abs() <= *tol
}
