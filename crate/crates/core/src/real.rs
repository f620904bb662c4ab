//! Working-precision binary floating point.
//!
//! [`Real`] wraps an `astro_float::BigFloat`. Every value carries its own
//! mantissa width; binary operations round to the wider of the two operands
//! with round-half-to-even, so results are bit-reproducible for identical
//! inputs. Conversions to and from exact rationals go through the raw
//! mantissa words, which keeps decimal output independent of the float
//! library's own formatter.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, RoundingMode, Sign as FloatSign};
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

/// Bit width of one mantissa word in the float backend.
const WORD_BITS: usize = 64;

#[derive(Clone)]
pub struct Real(BigFloat, usize);

impl Real {
    pub fn zero(bits: usize) -> Self {
        Real(BigFloat::from_u64(0, bits), bits)
    }

    pub fn one(bits: usize) -> Self {
        Real(BigFloat::from_u64(1, bits), bits)
    }

    pub fn from_i64(v: i64, bits: usize) -> Self {
        Real(BigFloat::from_i64(v, bits), bits)
    }

    pub fn from_bigint(v: &BigInt, bits: usize) -> Self {
        if v.is_zero() {
            return Real::zero(bits);
        }
        let (sign, digits) = v.to_u64_digits();
        let sign = if sign == Sign::Minus {
            FloatSign::Neg
        } else {
            FloatSign::Pos
        };
        let exp = (digits.len() * WORD_BITS) as i32;
        let mut f = BigFloat::from_words(&digits, sign, exp);
        // Mantissa is widened or rounded to the requested width.
        f.set_precision(bits, RM).expect("valid precision");
        Real(f, bits)
    }

    pub fn from_rational(v: &BigRational, bits: usize) -> Self {
        let num = Real::from_bigint(v.numer(), bits + WORD_BITS);
        if v.denom().is_one() {
            return num.with_bits(bits);
        }
        let den = Real::from_bigint(v.denom(), bits + WORD_BITS);
        Real(num.0.div(&den.0, bits, RM), bits)
    }

    /// `2^exp` at the given width.
    pub fn pow2(exp: i32, bits: usize) -> Self {
        let mut f = BigFloat::from_u64(1, bits);
        f.set_exponent(exp + 1);
        Real(f, bits)
    }

    /// Exact value of this float as a rational.
    pub fn to_rational(&self) -> BigRational {
        let Some((words, _, sign, exp, _)) = self.0.as_raw_parts() else {
            return BigRational::zero();
        };
        if words.iter().all(|w| *w == 0) {
            return BigRational::zero();
        }
        let mut halves = Vec::with_capacity(words.len() * 2);
        for w in words {
            halves.push(*w as u32);
            halves.push((*w >> 32) as u32);
        }
        let mant = BigInt::from_biguint(
            if sign == FloatSign::Neg {
                Sign::Minus
            } else {
                Sign::Plus
            },
            BigUint::new(halves),
        );
        // value = 0.mantissa * 2^exp
        let shift = exp as i64 - (words.len() * WORD_BITS) as i64;
        if shift >= 0 {
            BigRational::from_integer(mant << (shift as usize))
        } else {
            BigRational::new(mant, BigInt::one() << ((-shift) as usize))
        }
    }

    pub fn bits(&self) -> usize {
        self.1
    }

    /// Rounds (or widens) to the given mantissa width.
    pub fn with_bits(mut self, bits: usize) -> Self {
        self.0.set_precision(bits, RM).expect("valid precision");
        self.1 = bits;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.is_positive()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.0.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Real(self.0.abs(), self.1)
    }

    /// Binary exponent `e` with `2^(e-1) <= |self| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            self.0.exponent()
        }
    }

    /// `self^e` by square-and-multiply.
    pub fn powu(&self, mut e: u64) -> Self {
        let bits = self.bits();
        let mut base = self.clone();
        let mut acc = Real::one(bits);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.sqrt(self.1, RM), self.1)
    }

    pub fn max(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        // Rounded through the exact rational so huge exponents saturate.
        let r = self.to_rational();
        r.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        format_decimal(&self.to_rational(), digits)
    }

    /// Parses a decimal literal exactly, then rounds to `bits`.
    pub fn parse_decimal(s: &str, bits: usize) -> Result<Self> {
        Ok(Real::from_rational(&parse_decimal(s)?, bits))
    }
}

fn wider(a: &Real, b: &Real) -> usize {
    a.bits().max(b.bits())
}

impl<'a> Add<&'a Real> for &'a Real {
    type Output = Real;
    fn add(self, rhs: &'a Real) -> Real {
        let bits = wider(self, rhs);
        Real(self.0.add(&rhs.0, bits, RM), bits)
    }
}

impl<'a> Sub<&'a Real> for &'a Real {
    type Output = Real;
    fn sub(self, rhs: &'a Real) -> Real {
        let bits = wider(self, rhs);
        Real(self.0.sub(&rhs.0, bits, RM), bits)
    }
}

impl<'a> Mul<&'a Real> for &'a Real {
    type Output = Real;
    fn mul(self, rhs: &'a Real) -> Real {
        let bits = wider(self, rhs);
        Real(self.0.mul(&rhs.0, bits, RM), bits)
    }
}

impl<'a> Div<&'a Real> for &'a Real {
    type Output = Real;
    fn div(self, rhs: &'a Real) -> Real {
        let bits = wider(self, rhs);
        Real(self.0.div(&rhs.0, bits, RM), bits)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Real> for Real {
            type Output = Real;
            fn $f(self, rhs: Real) -> Real { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a Real> for Real {
            type Output = Real;
            fn $f(self, rhs: &'a Real) -> Real { (&self).$f(rhs) }
        }
        impl<'a> $tr<Real> for &'a Real {
            type Output = Real;
            fn $f(self, rhs: Real) -> Real { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(self.0.clone().neg(), self.1)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(self.0.neg(), self.1)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|c| c.cmp(&0))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({})", self.to_decimal(24))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(f.precision().unwrap_or(20)))
    }
}

/// Parses `[-+]digits[.digits][e[-+]digits]` into an exact rational.
pub fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || Error::Precondition(alloc::format!("not a decimal number: {s:?}"));
    let s = s.trim();
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (neg, mant) = match mant.as_bytes().first() {
        Some(b'-') => (true, &mant[1..]),
        Some(b'+') => (false, &mant[1..]),
        _ => (false, mant),
    };
    let (int_part, frac_part) = match mant.find('.') {
        Some(pos) => (&mant[..pos], &mant[pos + 1..]),
        None => (mant, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let mut digits = String::with_capacity(int_part.len() + frac_part.len());
    digits.push_str(int_part);
    digits.push_str(frac_part);
    let mut value: BigInt = digits.parse().map_err(|_| bad())?;
    if neg {
        value = -value;
    }
    let scale = exp - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    let r = if scale >= 0 {
        BigRational::from_integer(value * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(value, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(r)
}

/// Renders an exact rational with `digits` significant decimal digits,
/// rounding half to even. Positional notation is used for moderate
/// magnitudes, scientific notation otherwise.
pub fn format_decimal(value: &BigRational, digits: usize) -> String {
    let digits = digits.max(1);
    if value.is_zero() {
        return String::from("0");
    }
    let neg = value.is_negative();
    let a = value.abs();
    let ten = BigInt::from(10u32);

    // Decimal exponent e10 with 10^e10 <= a < 10^(e10+1).
    let approx = (a.numer().bits() as f64 - a.denom().bits() as f64) * core::f64::consts::LOG10_2;
    let mut e10 = approx as i64 - 1;
    let pow10 = |e: i64| -> BigRational {
        if e >= 0 {
            BigRational::from_integer(num_traits::pow(ten.clone(), e as usize))
        } else {
            BigRational::new(BigInt::one(), num_traits::pow(ten.clone(), (-e) as usize))
        }
    };
    while pow10(e10) > a {
        e10 -= 1;
    }
    while pow10(e10 + 1) <= a {
        e10 += 1;
    }

    let scaled = &a * pow10(digits as i64 - 1 - e10);
    let mut m = round_half_even(&scaled);
    if m == num_traits::pow(ten.clone(), digits) {
        m /= &ten;
        e10 += 1;
    }
    let ds = m.to_string();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if (-8..21).contains(&e10) {
        if e10 < 0 {
            out.push_str("0.");
            for _ in 0..(-e10 - 1) {
                out.push('0');
            }
            out.push_str(&ds);
        } else {
            let int_len = e10 as usize + 1;
            if int_len >= ds.len() {
                out.push_str(&ds);
                for _ in ds.len()..int_len {
                    out.push('0');
                }
            } else {
                out.push_str(&ds[..int_len]);
                out.push('.');
                out.push_str(&ds[int_len..]);
            }
        }
    } else {
        out.push_str(&ds[..1]);
        if ds.len() > 1 {
            out.push('.');
            out.push_str(&ds[1..]);
        }
        out.push_str(&alloc::format!("e{e10}"));
    }
    out
}

fn round_half_even(r: &BigRational) -> BigInt {
    let (q, rem) = r.numer().div_rem(r.denom());
    let twice = rem * 2u32;
    match twice.cmp(r.denom()) {
        Ordering::Less => q,
        Ordering::Greater => q + 1u32,
        Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1u32
            }
        }
    }
}

/// Largest absolute value in a slice; zero for an empty slice.
pub fn max_abs<'a>(values: impl IntoIterator<Item = &'a Real>, bits: usize) -> Real {
    values
        .into_iter()
        .fold(Real::zero(bits), |acc, v| acc.max(&v.abs()))
}
