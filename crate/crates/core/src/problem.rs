//! Problem description: smoothness order, grid size and boundary offsets.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::real::Real;

/// Which node family the offsets describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeLayout {
    /// One shifted node at each end (`x_0 = η_0 h`), any `m`.
    SingleOffset,
    /// `t` shifted nodes at each end, `t = m/2` for even `m` and
    /// `⌊m/2⌋ + 1` for odd `m`.
    Boundary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadratureSpec {
    m: usize,
    n: usize,
    etas: Vec<Rational>,
}

/// Number of shifted nodes per end in the general layout.
pub fn boundary_count(m: usize) -> usize {
    if m % 2 == 0 {
        m / 2
    } else {
        m / 2 + 1
    }
}

impl QuadratureSpec {
    /// Chooses the layout from the number of offsets: one offset gives the
    /// single-offset family, `boundary_count(m)` offsets the general one.
    pub fn new(m: usize, n: usize, etas: Vec<Rational>) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidSpec(format!("m must be at least 2, got {m}")));
        }
        let t = boundary_count(m);
        if etas.len() != 1 && etas.len() != t {
            return Err(Error::InvalidSpec(format!(
                "m = {m} takes 1 or {t} boundary offsets, got {}",
                etas.len()
            )));
        }
        let spec = QuadratureSpec { m, n, etas };
        spec.validate()?;
        Ok(spec)
    }

    pub fn single_offset(m: usize, n: usize, eta0: Rational) -> Result<Self> {
        QuadratureSpec::new(m, n, alloc::vec![eta0])
    }

    pub fn boundary(m: usize, n: usize, etas: Vec<Rational>) -> Result<Self> {
        if m >= 2 && etas.len() != boundary_count(m) {
            return Err(Error::InvalidSpec(format!(
                "m = {m} takes {} boundary offsets, got {}",
                boundary_count(m),
                etas.len()
            )));
        }
        QuadratureSpec::new(m, n, etas)
    }

    /// The classical Sard grid: equally spaced nodes including the endpoints.
    pub fn sard(m: usize, n: usize) -> Result<Self> {
        QuadratureSpec::single_offset(m, n, Rational::zero())
    }

    fn validate(&self) -> Result<()> {
        let t = self.t();
        if self.n < 2 * t || self.n < 2 {
            return Err(Error::InvalidSpec(format!(
                "N = {} is too small for {t} shifted nodes per end",
                self.n
            )));
        }
        if self.etas[0].is_negative() {
            return Err(Error::InvalidSpec(format!(
                "offsets must be non-negative, got {}",
                self.etas[0]
            )));
        }
        for w in self.etas.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidSpec(format!(
                    "offsets must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        let last = &self.etas[t - 1];
        if *last >= Rational::from_integer(BigInt::from(t)) {
            return Err(Error::InvalidSpec(format!(
                "offset {last} must stay below {t} so boundary nodes precede the interior grid"
            )));
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn etas(&self) -> &[Rational] {
        &self.etas
    }

    /// Shifted nodes per end.
    pub fn t(&self) -> usize {
        self.etas.len()
    }

    pub fn layout(&self) -> NodeLayout {
        if self.etas.len() == 1 {
            NodeLayout::SingleOffset
        } else {
            NodeLayout::Boundary
        }
    }

    pub fn h(&self) -> Rational {
        Rational::new(BigInt::one(), BigInt::from(self.n))
    }

    /// `x_0..=x_N` exactly.
    pub fn nodes_exact(&self) -> Vec<Rational> {
        let h = self.h();
        let one = Rational::one();
        let t = self.t();
        (0..=self.n)
            .map(|beta| {
                if beta < t {
                    &self.etas[beta] * &h
                } else if beta > self.n - t {
                    &one - &self.etas[self.n - beta] * &h
                } else {
                    Rational::from_integer(BigInt::from(beta)) * &h
                }
            })
            .collect()
    }

    pub fn nodes(&self, bits: usize) -> Vec<Real> {
        self.nodes_exact()
            .iter()
            .map(|x| Real::from_rational(x, bits))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn boundary_counts() {
        assert_eq!(boundary_count(2), 1);
        assert_eq!(boundary_count(3), 2);
        assert_eq!(boundary_count(4), 2);
        assert_eq!(boundary_count(5), 3);
    }

    #[test]
    fn nodes_are_shifted_symmetrically() {
        let s = QuadratureSpec::single_offset(2, 4, rat(1, 5)).unwrap();
        let x = s.nodes_exact();
        assert_eq!(x, vec![rat(1, 20), rat(1, 4), rat(1, 2), rat(3, 4), rat(19, 20)]);
        let g = QuadratureSpec::boundary(4, 6, vec![rat(0, 1), rat(3, 2)]).unwrap();
        let x = g.nodes_exact();
        assert_eq!(x[1], rat(1, 4));
        assert_eq!(x[5], rat(3, 4));
        assert_eq!(x[3], rat(1, 2));
    }

    #[test]
    fn rejects_bad_problems() {
        assert!(QuadratureSpec::single_offset(1, 4, rat(0, 1)).is_err());
        assert!(QuadratureSpec::single_offset(2, 1, rat(0, 1)).is_err());
        assert!(QuadratureSpec::single_offset(2, 4, rat(-1, 5)).is_err());
        assert!(QuadratureSpec::single_offset(2, 4, rat(1, 1)).is_err());
        assert!(QuadratureSpec::boundary(4, 6, vec![rat(1, 1), rat(1, 2)]).is_err());
        assert!(QuadratureSpec::boundary(4, 6, vec![rat(0, 1)]).is_err());
        assert!(QuadratureSpec::boundary(4, 3, vec![rat(0, 1), rat(1, 1)]).is_err());
        assert!(QuadratureSpec::new(5, 10, vec![rat(0, 1), rat(1, 2)]).is_err());
    }

    #[test]
    fn layout_follows_offset_count() {
        assert_eq!(
            QuadratureSpec::sard(4, 10).unwrap().layout(),
            NodeLayout::SingleOffset
        );
        assert_eq!(
            QuadratureSpec::boundary(3, 10, vec![rat(0, 1), rat(1, 1)]).unwrap().layout(),
            NodeLayout::Boundary
        );
    }
}
