//! Certified isolation of the Euler–Frobenius roots in `(-1, 0)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{euler_frobenius, EFPolynomial};
use crate::precision::PrecisionConfig;
use crate::real::Real;

/// Dyadic subdivision depth limit during isolation.
const MAX_ISOLATION_DEPTH: usize = 256;

/// The `m - 1` roots of `E_{2m-2}` inside the unit disk, ascending.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub m: usize,
    pub polynomial: EFPolynomial,
    pub roots: Vec<Real>,
    /// Each true root lies within this distance of the reported value.
    pub certified_width: Real,
    pub precision_bits: usize,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Evaluates `E_{2m-2}` at working precision.
    pub fn eval(&self, x: &Real) -> Real {
        horner(&lift(&self.polynomial, self.precision_bits), x)
    }

    /// Ceiling on `|E(q_k)|` implied by the certified enclosure: the width
    /// times a bound on `|E'|` over `[-1, 0]`, plus rounding slack.
    pub fn residual_bound(&self) -> Real {
        let bits = self.precision_bits;
        let mut deriv = BigInt::zero();
        let mut total = BigInt::zero();
        for (i, c) in self.polynomial.coefficients().iter().enumerate() {
            deriv += c * i;
            total += c;
        }
        let slope = Real::from_bigint(&deriv, bits);
        let size = Real::from_bigint(&total, bits);
        let slack = &size * &Real::pow2(-(bits as i32) + 8, bits);
        &(&slope * &self.certified_width) + &slack
    }
}

fn lift(p: &EFPolynomial, bits: usize) -> Vec<Real> {
    p.coefficients()
        .iter()
        .map(|c| Real::from_bigint(c, bits))
        .collect()
}

fn horner(c: &[Real], x: &Real) -> Real {
    let mut acc = Real::zero(x.bits());
    for a in c.iter().rev() {
        acc = &(&acc * x) + a;
    }
    acc
}

fn horner_with_derivative(c: &[Real], x: &Real) -> (Real, Real) {
    let mut p = Real::zero(x.bits());
    let mut dp = Real::zero(x.bits());
    for a in c.iter().rev() {
        dp = &(&dp * x) + &p;
        p = &(&p * x) + a;
    }
    (p, dp)
}

/// Isolating intervals `(a, b)` with exact dyadic endpoints, one root each.
fn isolate(p: &EFPolynomial, expected: usize) -> Result<Vec<(BigRational, BigRational)>> {
    let degree = p.degree();
    let lo = -BigRational::one();
    let hi = BigRational::zero();
    let mismatch = |found| Error::RootCountMismatch {
        degree,
        expected,
        found,
    };
    if p.sign_at(&lo) == 0 {
        return Err(mismatch(usize::MAX));
    }
    let total = p.count_roots_in(&lo, &hi);
    if total != expected {
        return Err(mismatch(total));
    }
    let mut out = Vec::with_capacity(expected);
    let mut stack = vec![(lo, hi, 0usize)];
    while let Some((a, b, depth)) = stack.pop() {
        let n = p.count_roots_in(&a, &b);
        match n {
            0 => {}
            1 if p.sign_at(&a) * p.sign_at(&b) < 0 => out.push((a, b)),
            _ => {
                if depth >= MAX_ISOLATION_DEPTH {
                    return Err(mismatch(out.len()));
                }
                let two = BigRational::from_integer(2.into());
                let mid = (&a + &b) / two;
                if p.sign_at(&mid) == 0 {
                    // Only integers can be rational roots of a monic integer
                    // polynomial, so a dyadic midpoint root means a bad input.
                    return Err(mismatch(out.len()));
                }
                stack.push((mid.clone(), b, depth + 1));
                stack.push((a, mid, depth + 1));
            }
        }
    }
    if out.len() != expected {
        return Err(mismatch(out.len()));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Refines a sign-change bracket to half-width `tol` with bisection-guarded
/// Newton steps. Returns the enclosure midpoint.
fn refine(c: &[Real], mut lo: Real, mut hi: Real, tol: &Real) -> Result<Real> {
    let bits = tol.bits();
    let half = Real::pow2(-1, bits);
    let quarter = Real::pow2(-2, bits);
    let s_lo = horner(c, &lo).signum();
    let s_hi = horner(c, &hi).signum();
    if s_lo == 0 || s_lo == s_hi {
        return Err(Error::PrecisionExhausted(format!(
            "bracket lost its sign change at {bits} bits"
        )));
    }
    let mut x = &(&lo + &hi) * &half;
    for _ in 0..(8 * bits) {
        let width = &hi - &lo;
        if &width * &half <= *tol {
            return Ok(&(&lo + &hi) * &half);
        }
        let (fx, dfx) = horner_with_derivative(c, &x);
        let mut next = None;
        if !dfx.is_zero() {
            let step = &fx / &dfx;
            let cand = &x - &step;
            if cand > lo && cand < hi && step.abs() < &width * &quarter {
                next = Some((cand, step.abs()));
            }
        }
        let (cand, step) = match next {
            Some(v) => v,
            None => {
                let mid = &(&lo + &hi) * &half;
                let w = &width * &half;
                (mid, w)
            }
        };
        if step <= *tol {
            // Try to certify a tight enclosure around the Newton iterate.
            let t2 = tol * &half;
            let a = &cand - &t2;
            let b = &cand + &t2;
            if a > lo && b < hi && horner(c, &a).signum() == s_lo && horner(c, &b).signum() == s_hi
            {
                return Ok(cand);
            }
        }
        let s = horner(c, &cand).signum();
        if s == 0 {
            let t2 = tol * &half;
            let a = &cand - &t2;
            let b = &cand + &t2;
            if horner(c, &a).signum() == s_lo && horner(c, &b).signum() == s_hi {
                return Ok(cand);
            }
            return Err(Error::PrecisionExhausted(format!(
                "root evaluation vanished without a certifiable enclosure at {bits} bits"
            )));
        }
        let before = (lo.clone(), hi.clone());
        if s == s_lo {
            lo = cand.clone();
        } else {
            hi = cand.clone();
        }
        if before.0 == lo && before.1 == hi {
            return Err(Error::PrecisionExhausted(format!(
                "root refinement stagnated at {bits} bits"
            )));
        }
        x = cand;
    }
    Err(Error::PrecisionExhausted(format!(
        "root refinement did not converge at {bits} bits"
    )))
}

/// Roots of `E_{2m-2}` in `(-1, 0)` sorted ascending, each within the
/// configured tolerance.
pub fn unit_disk_roots(m: usize, prec: &PrecisionConfig) -> Result<RootSet> {
    if m < 2 {
        return Err(Error::InvalidSpec(format!("m must be at least 2, got {m}")));
    }
    let bits = prec.working_bits;
    if bits < PrecisionConfig::MIN_BITS {
        return Err(Error::InvalidPrecision(format!(
            "working precision must be at least {} bits, got {bits}",
            PrecisionConfig::MIN_BITS
        )));
    }
    let tol = prec.refine_tolerance.clone().with_bits(bits);
    if !tol.is_positive() {
        return Err(Error::InvalidPrecision(
            "refinement tolerance must be positive".into(),
        ));
    }
    if tol < Real::pow2(-(bits as i32), bits) {
        return Err(Error::PrecisionExhausted(format!(
            "tolerance {tol:.6} is finer than 2^-{bits}"
        )));
    }
    let poly = euler_frobenius(2 * m as u32 - 2);
    let coeffs = lift(&poly, bits);
    let brackets = isolate(&poly, m - 1)?;
    let mut roots = Vec::with_capacity(m - 1);
    for (a, b) in &brackets {
        let lo = Real::from_rational(a, bits);
        let hi = Real::from_rational(b, bits);
        roots.push(refine(&coeffs, lo, hi, &tol)?);
    }
    Ok(RootSet {
        m,
        polynomial: poly,
        roots,
        certified_width: tol,
        precision_bits: bits,
    })
}
