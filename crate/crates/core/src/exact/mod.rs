//! Exact scalars, polynomials in the split parameter `a`, and the
//! combinatorial primitives every formula in the crate is built from.

mod combinatorics;
mod laurent;
mod poly;

pub use combinatorics::{binomial_general, factorial, pochhammer, pochhammer_half};
pub use laurent::LaurentPoly;
pub use poly::Poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"` (optionally signed) into a canonical rational.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let err = || Error::Parse {
        input: input.to_string(),
        expected: "a rational of the form p/q",
    };
    let s = input.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"p/q"` form, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nearest `f64`; huge numerators and denominators are scaled down together
/// so the quotient does not overflow.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(900);
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Commutative ring operations shared by rationals and (Laurent) polynomials
/// over them, enough to run Horner's scheme for series evaluation.
pub trait ExactRing: Clone + PartialEq {
    fn ring_zero() -> Self;
    fn from_rational(c: &Rational) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;

    fn ring_one() -> Self {
        Self::from_rational(&Rational::one())
    }

    fn power(&self, exp: usize) -> Self {
        let mut acc = Self::ring_one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl ExactRing for Rational {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn from_rational(c: &Rational) -> Self {
        c.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
}

/// Evaluates `sum_k coeffs[k] x^k` in any exact ring.
pub fn horner<T: ExactRing>(coeffs: &[Rational], x: &T) -> T {
    coeffs.iter().rev().fold(T::ring_zero(), |acc, c| {
        acc.times(x).plus(&T::from_rational(c))
    })
}

/// Serde adapter writing a [`Rational`] as its canonical string.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        assert_eq!(format_rational(&rat(-3, 2)), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(parse_rational(" 12 ").unwrap(), int(12));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn to_f64_survives_large_operands() {
        let big = Rational::new(
            BigInt::from(3) * BigInt::from(10).pow(400),
            BigInt::from(4) * BigInt::from(10).pow(400),
        );
        assert!((rational_to_f64(&big) - 0.75).abs() < 1e-15);
        let lopsided = Rational::new(BigInt::from(10).pow(330) + 1u32, BigInt::from(10).pow(329));
        assert!((rational_to_f64(&lopsided) - 10.0).abs() < 1e-12);
    }

    #[test]
    fn horner_on_rationals() {
        // 1 + 2x + 3x^2 at x = 1/2
        let c = [int(1), int(2), int(3)];
        assert_eq!(horner(&c, &rat(1, 2)), rat(11, 4));
        assert_eq!(horner::<Rational>(&[], &int(5)), int(0));
    }

    #[test]
    fn power_by_squaring() {
        assert_eq!(rat(2, 3).power(5), rat(32, 243));
        assert_eq!(int(9).power(0), int(1));
    }
}
