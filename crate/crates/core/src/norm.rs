//! Squared norm of the error functional, in closed form and by direct
//! evaluation of the quadratic form.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::{bernoulli, factorial, fwd_diff_at, fwd_diff_zero, Rational};
use crate::problem::NodeLayout;
use crate::real::Real;
use crate::solver::OptimalFormula;

fn sign(m: usize) -> i32 {
    if m % 2 == 0 {
        1
    } else {
        -1
    }
}

fn leading_terms(m: usize, h: &Real, bits: usize) -> (Real, Real) {
    let f2m = Real::from_bigint(&factorial(2 * m as u64), bits);
    let b2m = Real::from_rational(&bernoulli(2 * m as u32), bits);
    let first = &(&h.powu(2 * m as u64) * &b2m) / &f2m;
    let scale = &(&Real::from_i64(2, bits) * &h.powu(2 * m as u64 + 1)) / &f2m;
    (first, scale)
}

/// Closed form for the single-offset family.
pub fn norm_squared_single_offset(f: &OptimalFormula) -> Real {
    let m = f.spec.m();
    let n = f.spec.n() as u64;
    let bits = f.precision_bits;
    let one = Real::one(bits);
    let h = f.h();
    let eta = Real::from_rational(&f.spec.etas()[0], bits);
    let eta2m = eta.powu(2 * m as u64);
    let (first, scale) = leading_terms(m, &h, bits);
    let mut inner = &eta2m * &Real::pow2(-1, bits);
    for (dk, q) in f.d.iter().zip(&f.roots.roots) {
        let omq = &one - q;
        let qn = q.powu(n);
        let mut s = Real::zero(bits);
        let mut qni = qn.clone();
        let mut den = omq.clone();
        for i in 1..=(2 * m as u32) {
            qni = &qni * q;
            den = &den * &omq;
            let alt = if i % 2 == 0 { q.clone() } else { -q };
            let num = &alt - &qni;
            let w = Real::from_bigint(&fwd_diff_zero(i, 2 * m as u32), bits);
            s = &s + &(&(&num / &den) * &w);
        }
        let geo = &(q - &qn) / &(q - &one);
        s = &s + &(&geo * &eta2m);
        inner = &inner + &(dk * &s);
    }
    let total = &first + &(&scale * &inner);
    if sign(m + 1) < 0 {
        -total
    } else {
        total
    }
}

/// Closed form for `t` shifted nodes per end. With `t = 1` it agrees with
/// [`norm_squared_single_offset`].
pub fn norm_squared_boundary(f: &OptimalFormula) -> Real {
    let m = f.spec.m();
    let t = f.spec.t();
    let n = f.spec.n() as u64;
    let bits = f.precision_bits;
    let one = Real::one(bits);
    let h = f.h();
    let inv_h = Real::from_i64(f.spec.n() as i64, bits);
    let k2m = 2 * m as u32;
    let (first, scale) = leading_terms(m, &h, bits);
    let mut inner = Real::zero(bits);
    for (beta, eta) in f.spec.etas().iter().enumerate() {
        let e = Real::from_rational(eta, bits).powu(k2m as u64);
        let own = &(&f.coefficients[beta] * &inv_h) * &e;
        let grid = Real::from_i64(beta as i64, bits).powu(k2m as u64);
        inner = &inner + &(&own - &grid);
    }
    let t_rat = Rational::from_integer(BigInt::from(t));
    let weights: Vec<Real> = (0..=k2m)
        .map(|i| Real::from_rational(&fwd_diff_at(i, &t_rat, k2m), bits))
        .collect();
    for (dk, q) in f.d.iter().zip(&f.roots.roots) {
        let qm1 = q - &one;
        let q_nt1 = q.powu(n - t as u64 + 1);
        let mut qti = q.powu(t as u64);
        let mut den = qm1.clone();
        let mut s = Real::zero(bits);
        for (i, w) in weights.iter().enumerate() {
            let alt = if i % 2 == 0 { qti.clone() } else { -&qti };
            let num = &alt - &q_nt1;
            s = &s + &(&(&num / &den) * w);
            qti = &qti * q;
            den = &den * &qm1;
        }
        inner = &inner - &(dk * &s);
    }
    let total = &first + &(&scale * &inner);
    if sign(m + 1) < 0 {
        -total
    } else {
        total
    }
}

/// Closed-form squared norm, dispatched on the node layout.
pub fn norm_squared_closed(f: &OptimalFormula) -> Real {
    match f.spec.layout() {
        NodeLayout::SingleOffset => norm_squared_single_offset(f),
        NodeLayout::Boundary => norm_squared_boundary(f),
    }
}

/// The error-functional quadratic form for arbitrary nodes and weights:
/// `(-1)^m [ΣΣ C C |x-x|^{2m-1}/(2(2m-1)!) - Σ C (x^{2m}+(1-x)^{2m})/(2m)! + 1/(2m+1)!]`.
pub fn quadratic_form(m: usize, nodes: &[Real], coefficients: &[Real]) -> Real {
    let bits = coefficients.first().map_or(64, Real::bits);
    let one = Real::one(bits);
    let k = 2 * m as u64;
    let kernel_den = &Real::from_i64(2, bits) * &Real::from_bigint(&factorial(k - 1), bits);
    let mut pair = Real::zero(bits);
    for (i, (ci, xi)) in coefficients.iter().zip(nodes).enumerate() {
        let mut row = Real::zero(bits);
        for (cj, xj) in coefficients.iter().zip(nodes).skip(i + 1) {
            row = &row + &(cj * &(xi - xj).abs().powu(k - 1));
        }
        pair = &pair + &(ci * &row);
    }
    // off-diagonal pairs appear twice; the diagonal vanishes
    let pair = &(&pair * &Real::from_i64(2, bits)) / &kernel_den;
    let mut lin = Real::zero(bits);
    for (c, x) in coefficients.iter().zip(nodes) {
        let v = &x.powu(k) + &(&one - x).powu(k);
        lin = &lin + &(c * &v);
    }
    let lin = &lin / &Real::from_bigint(&factorial(k), bits);
    let last = Real::from_rational(
        &Rational::new(BigInt::one(), factorial(k + 1)),
        bits,
    );
    let total = &(&pair - &lin) + &last;
    if sign(m) < 0 {
        -total
    } else {
        total
    }
}

pub fn norm_squared_direct(f: &OptimalFormula) -> Real {
    quadratic_form(f.spec.m(), &f.nodes, &f.coefficients)
}

/// `‖φ‖ · ‖ℓ‖`, an upper bound on the quadrature error for a function whose
/// `L2^(m)` seminorm is at most `phi_norm`.
pub fn error_bound(f: &OptimalFormula, phi_norm: &Real) -> Real {
    let sq = f
        .norm_squared
        .clone()
        .unwrap_or_else(|| norm_squared_closed(f));
    phi_norm * &sq.abs().sqrt()
}

#[derive(Debug, Clone)]
pub struct NormReport {
    pub closed: Real,
    pub direct: Real,
    /// `sqrt` of the closed form.
    pub norm: Real,
    /// `|closed - direct|`.
    pub discrepancy: Real,
}

impl NormReport {
    pub fn relative_discrepancy(&self) -> Real {
        if self.direct.is_zero() {
            return self.discrepancy.clone();
        }
        &self.discrepancy / &self.direct.abs()
    }
}

pub fn norm_report(f: &OptimalFormula) -> NormReport {
    let closed = f
        .norm_squared
        .clone()
        .unwrap_or_else(|| norm_squared_closed(f));
    let direct = norm_squared_direct(f);
    let discrepancy = (&closed - &direct).abs();
    NormReport {
        norm: closed.abs().sqrt(),
        closed,
        direct,
        discrepancy,
    }
}
