use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{ExactRing, Poly, Rational};
use crate::{Error, Result};

/// Polynomial in `a` and `a^{-1}`: `coeffs[i]` multiplies `a^{min_degree + i}`.
///
/// Canonical form has nonzero first and last coefficients; zero is stored as
/// `min_degree = 0` with no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_degree: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn new(min_degree: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return LaurentPoly::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly {
            min_degree: min_degree + lead as i64,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        LaurentPoly {
            min_degree: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn monomial(c: Rational, exponent: i64) -> Self {
        LaurentPoly::new(exponent, vec![c])
    }

    /// `a^{-1}`.
    pub fn inverse_var() -> Self {
        LaurentPoly::monomial(Rational::one(), -1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: i64) -> Rational {
        usize::try_from(exponent - self.min_degree)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_else(Rational::zero)
    }

    /// Multiplies by `a^k` (any sign).
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_degree: self.min_degree + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentPoly::new(self.min_degree, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Lossless conversion when no negative power survives.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let offset = usize::try_from(self.min_degree).ok()?;
        let mut coeffs = vec![Rational::zero(); offset];
        coeffs.extend(self.coeffs.iter().cloned());
        Some(Poly::from_coeffs(coeffs))
    }

    pub fn eval(&self, a: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if a.is_zero() && self.min_degree < 0 {
            return Err(Error::Domain(
                "Laurent polynomial with negative powers evaluated at 0".into(),
            ));
        }
        let body = super::horner(&self.coeffs, a);
        let scale = if self.min_degree >= 0 {
            a.power(self.min_degree as usize)
        } else {
            a.recip().power(self.min_degree.unsigned_abs() as usize)
        };
        Ok(body * scale)
    }
}

impl From<&Poly> for LaurentPoly {
    fn from(p: &Poly) -> Self {
        p.to_laurent()
    }
}

impl ExactRing for LaurentPoly {
    fn ring_zero() -> Self {
        LaurentPoly::zero()
    }
    fn from_rational(c: &Rational) -> Self {
        LaurentPoly::monomial(c.clone(), 0)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_degree.min(rhs.min_degree);
        let hi = self.max_degree().max(rhs.max_degree());
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for p in [self, rhs] {
            let off = (p.min_degree - lo) as usize;
            for (i, c) in p.coeffs.iter().enumerate() {
                coeffs[off + i] += c;
            }
        }
        LaurentPoly::new(lo, coeffs)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        LaurentPoly::new(self.min_degree + rhs.min_degree, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_degree: self.min_degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Add<LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let mag = super::format_rational(&c.abs());
            match self.min_degree + i as i64 {
                0 => write!(f, "{sep}{mag}")?,
                e => write!(f, "{sep}{mag}*a^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn canonical_strips_both_ends() {
        let p = LaurentPoly::new(-3, vec![int(0), int(0), int(2), int(0), int(1), int(0)]);
        assert_eq!(p.min_degree(), -1);
        assert_eq!(p.max_degree(), 1);
        assert_eq!(LaurentPoly::new(5, vec![int(0)]), LaurentPoly::zero());
    }

    #[test]
    fn mul_shift_example() {
        // (a^{-1} + 1) * a = 1 + a
        let p = LaurentPoly::new(-1, vec![int(1), int(1)]);
        let a = LaurentPoly::monomial(int(1), 1);
        assert_eq!((&p * &a).to_poly(), Some(Poly::from_ints(&[1, 1])));
        assert_eq!(p.shift(1), &p * &a);
    }

    #[test]
    fn to_poly_rejects_negative_powers() {
        assert!(LaurentPoly::inverse_var().to_poly().is_none());
        assert_eq!(LaurentPoly::zero().to_poly(), Some(Poly::zero()));
        assert_eq!(
            LaurentPoly::monomial(int(3), 2).to_poly(),
            Some(Poly::monomial(int(3), 2))
        );
    }

    #[test]
    fn eval_with_negative_powers() {
        let p = LaurentPoly::new(-2, vec![int(1), int(-3), int(3)]);
        // a^{-2} - 3 a^{-1} + 3 at a = 1/2 -> 4 - 6 + 3
        assert_eq!(p.eval(&rat(1, 2)).unwrap(), int(1));
        assert!(p.eval(&int(0)).is_err());
        assert_eq!(
            LaurentPoly::monomial(int(2), 3).eval(&int(0)).unwrap(),
            int(0)
        );
    }

    #[test]
    fn cancellation_to_zero() {
        let p = LaurentPoly::new(-1, vec![int(1), int(2)]);
        assert!((&p - &p).is_zero());
    }
}
