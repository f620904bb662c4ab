use alloc::format;

use crate::error::{Error, Result};
use crate::real::Real;

/// Working precision and root-refinement target.
#[derive(Debug, Clone)]
pub struct PrecisionConfig {
    /// Mantissa bits for all working-precision arithmetic.
    pub working_bits: usize,
    /// Half-width target for certified root enclosures.
    pub refine_tolerance: Real,
    /// Upper bound on the bit count reached by automatic retries.
    pub max_bits: usize,
}

impl PrecisionConfig {
    pub const MIN_BITS: usize = 64;

    /// `bits` of working precision with a root tolerance of `2^-(bits-56)`.
    pub fn new(bits: usize) -> Result<Self> {
        if bits < Self::MIN_BITS {
            return Err(Error::InvalidPrecision(format!(
                "working precision must be at least {} bits, got {bits}",
                Self::MIN_BITS
            )));
        }
        Ok(PrecisionConfig {
            working_bits: bits,
            refine_tolerance: Real::pow2(-(bits as i32 - 56), bits),
            max_bits: (bits * 8).max(4096),
        })
    }

    pub fn with_tolerance(mut self, tol: Real) -> Result<Self> {
        if !tol.is_positive() {
            return Err(Error::InvalidPrecision(format!(
                "refinement tolerance must be positive, got {tol}"
            )));
        }
        self.refine_tolerance = tol.with_bits(self.working_bits);
        Ok(self)
    }

    pub fn with_max_bits(mut self, max_bits: usize) -> Self {
        self.max_bits = max_bits.max(self.working_bits);
        self
    }

    /// Residual ceiling accepted for solved systems: `2^-(bits/2)`.
    pub fn residual_bound(&self) -> Real {
        Real::pow2(-(self.working_bits as i32 / 2), self.working_bits)
    }

    /// Same configuration at twice the width, tolerance scaled to match.
    pub fn doubled(&self) -> Self {
        let bits = self.working_bits * 2;
        let tol_exp = self.refine_tolerance.exponent().unwrap_or(0) - 1;
        PrecisionConfig {
            working_bits: bits,
            refine_tolerance: Real::pow2(tol_exp - self.working_bits as i32, bits),
            max_bits: self.max_bits,
        }
    }

    pub fn real(&self, v: i64) -> Real {
        Real::from_i64(v, self.working_bits)
    }
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig::new(256).expect("256 bits is valid")
    }
}
