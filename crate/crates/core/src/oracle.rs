//! Brute-force optimal weights from the full `(N+1+m)` optimality system.
//! Independent of the closed-form pipeline; used for cross-checks.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{factorial, Rational};
use crate::linalg::{solve, LinearSystem};
use crate::precision::PrecisionConfig;
use crate::problem::QuadratureSpec;
use crate::real::Real;
use crate::solver::OptimalFormula;

/// Largest system order the dense oracle accepts.
pub const ORACLE_LIMIT: usize = 2000;

#[derive(Debug, Clone)]
pub struct OracleSolution {
    pub spec: QuadratureSpec,
    pub coefficients: Vec<Real>,
    /// Multipliers of the moment constraints.
    pub lambdas: Vec<Real>,
    pub residual: Real,
    pub precision_bits: usize,
}

/// Weights and multipliers: rows `β` impose
/// `Σ_γ C_γ G(x_β - x_γ) + Σ_α λ_α x_β^α = F(x_β)`, the remaining `m` rows the
/// exact moments `Σ_γ C_γ x_γ^α = 1/(α+1)`.
pub fn assemble_full_system(spec: &QuadratureSpec, bits: usize) -> Result<LinearSystem> {
    let m = spec.m();
    let np = spec.n() + 1;
    let order = np + m;
    if order > ORACLE_LIMIT {
        return Err(Error::OracleTooLarge {
            order,
            limit: ORACLE_LIMIT,
        });
    }
    let x = spec.nodes(bits);
    let one = Real::one(bits);
    let k = 2 * m as u64;
    let kden = &Real::from_i64(2, bits) * &Real::from_bigint(&factorial(k - 1), bits);
    let fden = &Real::from_i64(2, bits) * &Real::from_bigint(&factorial(k), bits);
    let mut sys = LinearSystem::zeros(order, bits);
    for b in 0..np {
        for g in 0..np {
            let v = &(&x[b] - &x[g]).abs().powu(k - 1) / &kden;
            sys.set(b, g, v);
        }
        for a in 0..m {
            sys.set(b, np + a, x[b].powu(a as u64));
        }
        let rhs = &(&x[b].powu(k) + &(&one - &x[b]).powu(k)) / &fden;
        sys.rhs[b] = rhs;
    }
    for a in 0..m {
        for g in 0..np {
            sys.set(np + a, g, x[g].powu(a as u64));
        }
        sys.rhs[np + a] = Real::from_rational(
            &Rational::new(BigInt::one(), BigInt::from(a + 1)),
            bits,
        );
    }
    Ok(sys)
}

pub fn solve_full_system(spec: &QuadratureSpec, prec: &PrecisionConfig) -> Result<OracleSolution> {
    let bits = prec.working_bits;
    let sys = assemble_full_system(spec, bits)?;
    let sol = solve(&sys)?;
    let mut coefficients = sol.x;
    let lambdas = coefficients.split_off(spec.n() + 1);
    Ok(OracleSolution {
        spec: spec.clone(),
        coefficients,
        lambdas,
        residual: sol.residual,
        precision_bits: bits,
    })
}

/// `max_β |C_β^oracle - C_β^formula|`.
pub fn check_against_formula(oracle: &OracleSolution, formula: &OptimalFormula) -> Result<Real> {
    if oracle.spec != formula.spec {
        return Err(Error::SpecMismatch);
    }
    if oracle.coefficients.len() != formula.coefficients.len() {
        return Err(Error::Precondition(format!(
            "coefficient counts differ: {} vs {}",
            oracle.coefficients.len(),
            formula.coefficients.len()
        )));
    }
    let bits = oracle.precision_bits.min(formula.precision_bits);
    let mut worst = Real::zero(bits);
    for (a, b) in oracle.coefficients.iter().zip(&formula.coefficients) {
        worst = worst.max(&(a - b).abs());
    }
    Ok(worst)
}
