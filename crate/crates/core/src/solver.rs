//! Closed-form optimal coefficients: the `d_k` systems, boundary solve and
//! coefficient assembly.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{bernoulli, fwd_diff_at, fwd_diff_zero, Rational};
use crate::linalg::{solve, LinearSystem};
use crate::norm::norm_squared_closed;
use crate::precision::PrecisionConfig;
use crate::problem::{NodeLayout, QuadratureSpec};
use crate::real::{max_abs, Real};
use crate::roots::{unit_disk_roots, RootSet};

#[derive(Debug, Clone)]
pub struct OptimalFormula {
    pub spec: QuadratureSpec,
    pub nodes: Vec<Real>,
    /// `C_0..=C_N`.
    pub coefficients: Vec<Real>,
    /// Multipliers `d_1..d_{m-1}` paired with the roots in ascending order.
    pub d: Vec<Real>,
    pub roots: RootSet,
    /// `max |A x - b|` of the solved coefficient system.
    pub residual: Real,
    /// `max_α |Σ C_β x_β^α - 1/(α+1)|` for `α < m`.
    pub moment_residual: Real,
    pub precision_bits: usize,
    /// Squared error-functional norm; `None` until evaluated.
    pub norm_squared: Option<Real>,
}

impl OptimalFormula {
    pub fn h(&self) -> Real {
        Real::from_rational(&self.spec.h(), self.precision_bits)
    }

    /// The solved boundary coefficients `C_0..C_{t-1}`.
    pub fn boundary(&self) -> &[Real] {
        &self.coefficients[..self.spec.t()]
    }

    pub fn norm(&self) -> Option<Real> {
        self.norm_squared.as_ref().map(Real::sqrt)
    }

    /// `Σ C_β f_β` over sample values at the nodes.
    pub fn apply(&self, samples: &[Real]) -> Result<Real> {
        if samples.len() != self.coefficients.len() {
            return Err(Error::Precondition(format!(
                "expected {} samples, got {}",
                self.coefficients.len(),
                samples.len()
            )));
        }
        let mut acc = Real::zero(self.precision_bits);
        for (c, f) in self.coefficients.iter().zip(samples) {
            acc = &acc + &(c * f);
        }
        Ok(acc)
    }
}

fn real(r: &Rational, bits: usize) -> Real {
    Real::from_rational(r, bits)
}

fn int(v: &BigInt, bits: usize) -> Real {
    Real::from_bigint(v, bits)
}

/// `d_k` system for the single-offset family: rows `j = 1..m-1`, one column
/// per root. Requires `0 <= η_0 < 1`.
pub fn build_d_system_t1(spec: &QuadratureSpec, roots: &RootSet) -> Result<LinearSystem> {
    if spec.layout() != NodeLayout::SingleOffset {
        return Err(Error::Precondition(
            "single-offset system needs exactly one boundary offset".into(),
        ));
    }
    let m = spec.m();
    let n = spec.n() as u64;
    let bits = roots.precision_bits;
    let one = Real::one(bits);
    let eta = real(&spec.etas()[0], bits);
    let tail = &one - &eta;
    let size = m - 1;
    let mut sys = LinearSystem::zeros(size, bits);
    for (col, q) in roots.roots.iter().enumerate() {
        let qm1 = q - &one;
        let q2 = q.powu(2);
        let qn = q.powu(n);
        let qn1 = q.powu(n - 1);
        let geo = &(q - &qn) / &qm1;
        for j in 1..m {
            let mut acc = Real::zero(bits);
            let mut qi = one.clone();
            let mut den = qm1.clone();
            for i in 1..=j {
                qi = &qi * q;
                den = &den * &qm1;
                let mut num = &qn1 * &qi;
                if i % 2 == 1 {
                    num = -num;
                }
                let num = &num - &q2;
                let w = int(&fwd_diff_zero(i as u32, j as u32), bits);
                acc = &acc + &(&(&num / &den) * &w);
            }
            acc = &acc + &(&geo * &tail.powu(j as u64));
            sys.set(j - 1, col, acc);
        }
    }
    for j in 1..m {
        let b = (Rational::one() - bernoulli(j as u32 + 1))
            / Rational::from_integer(BigInt::from(j + 1));
        let half = Real::pow2(-1, bits);
        sys.rhs[j - 1] = &real(&b, bits) - &(&tail.powu(j as u64) * &half);
    }
    Ok(sys)
}

/// Even moment orders used for the boundary rows.
fn boundary_alphas(t: usize) -> Vec<u32> {
    (0..t as u32).map(|r| 2 * r).collect()
}

/// Joint system for `(d_1..d_{m-1}, C_0..C_{t-1})` with `t` shifted nodes
/// per end.
pub fn build_general_system(spec: &QuadratureSpec, roots: &RootSet) -> Result<LinearSystem> {
    let m = spec.m();
    let t = spec.t();
    let n = spec.n() as u64;
    let bits = roots.precision_bits;
    let one = Real::one(bits);
    let h = real(&spec.h(), bits);
    let inv_h = Real::from_i64(spec.n() as i64, bits);
    let tt = t as u64;
    let t_rat = Rational::from_integer(BigInt::from(t));
    let etas: Vec<Real> = spec.etas().iter().map(|e| real(e, bits)).collect();
    let size = m - 1 + t;
    let mut sys = LinearSystem::zeros(size, bits);

    for (col, q) in roots.roots.iter().enumerate() {
        let qm1 = q - &one;
        let q_t1 = q.powu(tt + 1);
        let q_nt = q.powu(n - tt);
        let q_nt1 = &q_nt * q;
        let q_t = q.powu(tt);
        for j in 1..m {
            let mut acc = Real::zero(bits);
            let mut qi = one.clone();
            let mut den = qm1.clone();
            for i in 1..=j {
                qi = &qi * q;
                den = &den * &qm1;
                let mut num = &q_nt * &qi;
                if i % 2 == 1 {
                    num = -num;
                }
                let num = &num - &q_t1;
                let w = int(&fwd_diff_zero(i as u32, j as u32), bits);
                acc = &acc + &(&(&num / &den) * &w);
            }
            sys.set(j - 1, col, acc);
        }
        for (r, &alpha) in boundary_alphas(t).iter().enumerate() {
            let mut acc = Real::zero(bits);
            let mut qti = q_t.clone();
            let mut den = qm1.clone();
            for i in 0..=alpha {
                let mut num = qti.clone();
                if i % 2 == 1 {
                    num = -num;
                }
                let num = &num - &q_nt1;
                let w = real(&fwd_diff_at(i, &t_rat, alpha), bits);
                acc = &acc + &(&(&num / &den) * &w);
                qti = &qti * q;
                den = &den * &qm1;
            }
            sys.set(m - 1 + r, col, -(&h * &acc));
        }
    }

    for j in 1..m {
        for (beta, eta) in etas.iter().enumerate() {
            let base = &Real::from_i64(t as i64, bits) - eta;
            sys.set(j - 1, m - 1 + beta, &inv_h * &base.powu(j as u64));
        }
        let num = num_traits::pow(t_rat.clone(), j + 1) - bernoulli(j as u32 + 1);
        let b = num / Rational::from_integer(BigInt::from(j + 1));
        sys.rhs[j - 1] = real(&b, bits);
    }
    for (r, &alpha) in boundary_alphas(t).iter().enumerate() {
        for (beta, eta) in etas.iter().enumerate() {
            // 0^0 = 1
            let v = if alpha == 0 {
                one.clone()
            } else {
                eta.powu(alpha as u64)
            };
            sys.set(m - 1 + r, m - 1 + beta, v);
        }
        let mut s = Rational::zero();
        for beta in 1..t {
            s += num_traits::pow(Rational::from_integer(BigInt::from(beta)), alpha as usize);
        }
        if alpha == 0 {
            s += Rational::new(BigInt::one(), BigInt::from(2));
        }
        sys.rhs[m - 1 + r] = real(&(s * spec.h()), bits);
    }
    Ok(sys)
}

/// Builds `C_0..=C_N` from the `d_k` and the boundary coefficients. With an
/// empty `boundary` in the single-offset family, `C_0 = C_N` comes from its
/// closed form.
pub fn assemble_coefficients(
    spec: &QuadratureSpec,
    roots: &RootSet,
    d: &[Real],
    boundary: &[Real],
) -> Result<Vec<Real>> {
    let m = spec.m();
    if d.len() != m - 1 || roots.len() != m - 1 {
        return Err(Error::Precondition(format!(
            "expected {} multipliers and roots, got {} and {}",
            m - 1,
            d.len(),
            roots.len()
        )));
    }
    let t = spec.t();
    if !boundary.is_empty() && boundary.len() != t {
        return Err(Error::Precondition(format!(
            "expected {t} boundary coefficients, got {}",
            boundary.len()
        )));
    }
    if boundary.is_empty() && spec.layout() != NodeLayout::SingleOffset {
        return Err(Error::Precondition(
            "boundary coefficients are required when t > 1".into(),
        ));
    }
    let n = spec.n();
    let bits = roots.precision_bits;
    let one = Real::one(bits);
    let h = real(&spec.h(), bits);
    let mut c = Vec::with_capacity(n + 1);
    for beta in 0..=n {
        let mut acc = one.clone();
        for (dk, q) in d.iter().zip(&roots.roots) {
            let s = &q.powu(beta as u64) + &q.powu((n - beta) as u64);
            acc = &acc + &(dk * &s);
        }
        c.push(&h * &acc);
    }
    if boundary.is_empty() {
        let mut acc = Real::pow2(-1, bits);
        for (dk, q) in d.iter().zip(&roots.roots) {
            let g = &(q - &q.powu(n as u64)) / &(q - &one);
            acc = &acc + &(dk * &g);
        }
        let c0 = &h * &acc;
        c[0] = c0.clone();
        c[n] = c0;
    } else {
        for (beta, cb) in boundary.iter().enumerate() {
            c[beta] = cb.clone();
            c[n - beta] = cb.clone();
        }
    }
    Ok(c)
}

/// `max_α |Σ C_β x_β^α - 1/(α+1)|` over `α < m`.
pub fn moment_residual(m: usize, nodes: &[Real], coefficients: &[Real]) -> Real {
    let bits = coefficients.first().map_or(64, Real::bits);
    let mut worst = Real::zero(bits);
    for alpha in 0..m as u64 {
        let mut acc = -Real::from_rational(
            &Rational::new(BigInt::one(), BigInt::from(alpha + 1)),
            bits,
        );
        for (c, x) in coefficients.iter().zip(nodes) {
            acc = &acc + &(c * &x.powu(alpha));
        }
        worst = worst.max(&acc.abs());
    }
    worst
}

fn attempt(spec: &QuadratureSpec, prec: &PrecisionConfig) -> Result<OptimalFormula> {
    let bits = prec.working_bits;
    let roots = unit_disk_roots(spec.m(), prec)?;
    let m = spec.m();
    let (d, boundary, residual) = match spec.layout() {
        NodeLayout::SingleOffset => {
            let sys = build_d_system_t1(spec, &roots)?;
            let sol = solve(&sys)?;
            (sol.x, Vec::new(), sol.residual)
        }
        NodeLayout::Boundary => {
            let sys = build_general_system(spec, &roots)?;
            let sol = solve(&sys)?;
            let mut x = sol.x;
            let b = x.split_off(m - 1);
            (x, b, sol.residual)
        }
    };
    let coefficients = assemble_coefficients(spec, &roots, &d, &boundary)?;
    let nodes = spec.nodes(bits);
    let moment = moment_residual(m, &nodes, &coefficients);
    if !max_abs(&coefficients, bits).is_finite() {
        return Err(Error::PrecisionExhausted(format!(
            "non-finite coefficients at {bits} bits"
        )));
    }
    Ok(OptimalFormula {
        spec: spec.clone(),
        nodes,
        coefficients,
        d,
        roots,
        residual,
        moment_residual: moment,
        precision_bits: bits,
        norm_squared: None,
    })
}

/// Computes the optimal formula, doubling the working precision whenever
/// the solved system or the moment conditions miss `2^-(bits/2)`, up to
/// `prec.max_bits`.
pub fn optimal_formula(spec: &QuadratureSpec, prec: &PrecisionConfig) -> Result<OptimalFormula> {
    let mut prec = prec.clone();
    loop {
        let bound = prec.residual_bound();
        let outcome = attempt(spec, &prec).and_then(|f| {
            if f.residual <= bound && f.moment_residual <= bound {
                Ok(f)
            } else {
                Err(Error::PrecisionExhausted(format!(
                    "residuals {:.3} / {:.3} exceed {:.3} at {} bits",
                    f.residual, f.moment_residual, bound, prec.working_bits
                )))
            }
        });
        match outcome {
            Ok(mut f) => {
                f.norm_squared = Some(norm_squared_closed(&f));
                return Ok(f);
            }
            Err(e @ (Error::PrecisionExhausted(_) | Error::SingularSystem { .. })) => {
                if prec.working_bits * 2 > prec.max_bits {
                    return Err(e);
                }
                prec = prec.doubled();
            }
            Err(e) => return Err(e),
        }
    }
}
