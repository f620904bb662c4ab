//! Dense Gaussian elimination with partial pivoting at working precision.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::real::{max_abs, Real};

/// Square system `A x = b`, `A` stored row-major.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub order: usize,
    pub matrix: Vec<Real>,
    pub rhs: Vec<Real>,
}

impl LinearSystem {
    pub fn zeros(order: usize, bits: usize) -> Self {
        LinearSystem {
            order,
            matrix: (0..order * order).map(|_| Real::zero(bits)).collect(),
            rhs: (0..order).map(|_| Real::zero(bits)).collect(),
        }
    }

    pub fn at(&self, row: usize, col: usize) -> &Real {
        &self.matrix[row * self.order + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Real) {
        self.matrix[row * self.order + col] = v;
    }

    /// `max_i |(A x - b)_i|`.
    pub fn residual(&self, x: &[Real]) -> Real {
        let bits = self.rhs.first().map_or(64, Real::bits);
        let mut worst = Real::zero(bits);
        for i in 0..self.order {
            let mut acc = -&self.rhs[i];
            for (j, xj) in x.iter().enumerate() {
                acc = &acc + &(self.at(i, j) * xj);
            }
            worst = worst.max(&acc.abs());
        }
        worst
    }

    /// Reorders rows; `perm[i]` is the source row placed at position `i`.
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        let n = self.order;
        let mut out = self.clone();
        for (i, &src) in perm.iter().enumerate() {
            for j in 0..n {
                out.matrix[i * n + j] = self.matrix[src * n + j].clone();
            }
            out.rhs[i] = self.rhs[src].clone();
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub x: Vec<Real>,
    pub residual: Real,
}

/// Solves the system, reporting singularity when a pivot falls below
/// `‖A‖_max · 2^-(bits-8)`.
pub fn solve(sys: &LinearSystem) -> Result<Solution> {
    let n = sys.order;
    let bits = sys.rhs.first().map_or(64, Real::bits);
    let scale = max_abs(&sys.matrix, bits);
    let floor = &scale * &Real::pow2(-(bits as i32 - 8), bits);
    let mut a = sys.matrix.clone();
    let mut b = sys.rhs.clone();
    for col in 0..n {
        let mut piv = col;
        for row in (col + 1)..n {
            if a[row * n + col].abs() > a[piv * n + col].abs() {
                piv = row;
            }
        }
        if a[piv * n + col].abs() <= floor || scale.is_zero() {
            return Err(Error::SingularSystem { column: col, bits });
        }
        if piv != col {
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
            }
            b.swap(piv, col);
        }
        let p = a[col * n + col].clone();
        for row in (col + 1)..n {
            let f = &a[row * n + col] / &p;
            if f.is_zero() {
                continue;
            }
            for j in col..n {
                let v = &a[row * n + j] - &(&f * &a[col * n + j]);
                a[row * n + j] = v;
            }
            let v = &b[row] - &(&f * &b[col]);
            b[row] = v;
        }
    }
    let mut x: Vec<Real> = (0..n).map(|_| Real::zero(bits)).collect();
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for j in (i + 1)..n {
            acc = &acc - &(&a[i * n + j] * &x[j]);
        }
        x[i] = &acc / &a[i * n + i];
    }
    let residual = sys.residual(&x);
    Ok(Solution { x, residual })
}
