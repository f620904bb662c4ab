//! Exact combinatorics: Bernoulli numbers, finite differences of powers,
//! Euler–Frobenius polynomials and closed forms for power sums.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Integer power with the convention `0^0 = 1`.
pub fn ipow(base: i64, k: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), k as usize)
}

/// `Δ^i 0^k = Σ_{l=0}^{i} (-1)^{i-l} C(i,l) l^k`, the i-th forward difference
/// of `x^k` at zero. Equals `i! S(k,i)`.
pub fn fwd_diff_zero(i: u32, k: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for l in 0..=i {
        let term = binomial(i as u64, l as u64) * ipow(l as i64, k);
        if (i - l) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `Δ^i x^k` evaluated at `x = base`, expanded through the differences at
/// zero: `Σ_{p} C(k,p) Δ^i 0^p base^{k-p}`.
pub fn fwd_diff_at(i: u32, base: &Rational, k: u32) -> Rational {
    let mut acc = Rational::zero();
    let mut bpow = Rational::one();
    // p runs downward from k so base^(k-p) builds up incrementally.
    for p in (0..=k).rev() {
        if p >= i {
            let c = binomial(k as u64, p as u64) * fwd_diff_zero(i, p);
            acc += Rational::from_integer(c) * &bpow;
        }
        bpow *= base;
    }
    acc
}

/// Bernoulli numbers `B_0..=B_n` with `B_1 = -1/2`, from
/// `B_n = Σ_k (-1)^k Δ^k 0^n / (k+1)`.
pub fn bernoulli_numbers(n: u32) -> Vec<Rational> {
    (0..=n).map(bernoulli).collect()
}

pub fn bernoulli(n: u32) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=n {
        let t = Rational::new(fwd_diff_zero(k, n), BigInt::from(k + 1));
        if k % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// `Σ_{γ=0}^{upper-1} γ^k` (with `0^0 = 1`) through the Bernoulli closed
/// form.
pub fn power_sum(upper: u64, k: u32) -> Rational {
    let b = bernoulli_numbers(k);
    let kf = factorial(k as u64);
    let beta = Rational::from_integer(BigInt::from(upper));
    let mut acc = Rational::zero();
    let mut bpow = Rational::one();
    for j in 1..=(k as u64 + 1) {
        bpow *= &beta;
        let den = factorial(j) * factorial(k as u64 + 1 - j);
        acc += &b[(k as u64 + 1 - j) as usize] * Rational::new(kf.clone(), den) * &bpow;
    }
    acc
}

/// `Σ_{γ=0}^{n-1} q^γ γ^k` in closed form. Requires `q ∉ {0, 1}`.
pub fn geometric_power_sum(q: &Rational, n: u64, k: u32) -> Result<Rational> {
    if q.is_zero() || q.is_one() {
        return Err(Error::Precondition(format!(
            "geometric power sum needs q not in {{0, 1}}, got {q}"
        )));
    }
    let one = Rational::one();
    let inv = &one / (&one - q);
    let ratio = q * &inv;
    let nn = Rational::from_integer(BigInt::from(n));
    let mut head = Rational::zero();
    let mut tail = Rational::zero();
    let mut rpow = Rational::one();
    for i in 0..=k {
        head += &rpow * Rational::from_integer(fwd_diff_zero(i, k));
        tail += &rpow * fwd_diff_at(i, &nn, k);
        rpow *= &ratio;
    }
    let qn = num_traits::pow(q.clone(), n as usize);
    Ok(&inv * head - &qn * &inv * tail)
}

/// Euler–Frobenius polynomial `E_k` with integer coefficients, lowest degree
/// first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EFPolynomial {
    k: u32,
    coeffs: Vec<BigInt>,
}

impl EFPolynomial {
    /// `E_k(x) = Σ_{i=0}^{k+1} Δ^i 0^{k+1} (x-1)^{k+1-i}`.
    pub fn new(k: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); k as usize + 2];
        for i in 0..=(k + 1) {
            let d = fwd_diff_zero(i, k + 1);
            if d.is_zero() {
                continue;
            }
            let e = k + 1 - i;
            // (x - 1)^e expanded
            for p in 0..=e {
                let c = binomial(e as u64, p as u64);
                let term = &d * c;
                if (e - p) % 2 == 0 {
                    coeffs[p as usize] += term;
                } else {
                    coeffs[p as usize] -= term;
                }
            }
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        EFPolynomial { k, coeffs }
    }

    pub fn index(&self) -> u32 {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, constant term first.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `E_k(x)` for exact `x`.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        }
    }

    /// Number of roots in the open interval `(a, b)` counted with
    /// multiplicity, given that every root of `E_k` is real. Uses Descartes'
    /// rule on the Möbius image `(x+1)^n p((a x + b)/(x + 1))`, which is exact
    /// when all roots are real.
    pub fn count_roots_in(&self, a: &Rational, b: &Rational) -> usize {
        let den = a.denom().lcm(b.denom());
        let an = a.numer() * (&den / a.denom());
        let bn = b.numer() * (&den / b.denom());
        let n = self.degree();
        // Σ c_i (an x + bn)^i (den (x + 1))^(n-i)
        let mut out = vec![BigInt::zero(); n + 1];
        let lin_ab = [bn.clone(), an.clone()];
        let lin_d = [den.clone(), den.clone()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = vec![c.clone()];
            for _ in 0..i {
                term = poly_mul(&term, &lin_ab);
            }
            for _ in 0..(n - i) {
                term = poly_mul(&term, &lin_d);
            }
            for (o, t) in out.iter_mut().zip(term) {
                *o += t;
            }
        }
        sign_variations(&out)
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn sign_variations(c: &[BigInt]) -> usize {
    let mut last = 0i32;
    let mut count = 0;
    for v in c {
        let s = if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

pub fn euler_frobenius(k: u32) -> EFPolynomial {
    EFPolynomial::new(k)
}
