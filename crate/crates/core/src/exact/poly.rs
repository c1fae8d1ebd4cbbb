use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_rational, horner, parse_rational, ExactRing, LaurentPoly, Rational};

/// Dense univariate polynomial in `a` with rational coefficients.
///
/// `coeffs[k]` is the coefficient of `a^k`. Trailing zeros are stripped on
/// every construction, so the zero polynomial is the empty vector and `==`
/// is exact mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The variable `a`.
    pub fn var() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    /// `1 - a`.
    pub fn one_minus_var() -> Self {
        Poly::from_coeffs(vec![Rational::one(), -Rational::one()])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, a: &Rational) -> Rational {
        horner(&self.coeffs, a)
    }

    pub fn eval_f64(&self, a: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * a + super::rational_to_f64(c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `a^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, exp: usize) -> Self {
        self.power(exp)
    }

    /// `p(scale * a + shift)`.
    pub fn compose_affine(&self, scale: &Rational, shift: &Rational) -> Self {
        let inner = Poly::from_coeffs(vec![shift.clone(), scale.clone()]);
        horner(&self.coeffs, &inner)
    }

    /// `p(1 - a)`, the reflection behind the `(n, m) <-> (m, n)` symmetry.
    pub fn reflect(&self) -> Self {
        self.compose_affine(&-Rational::one(), &Rational::one())
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::new(0, self.coeffs.clone())
    }
}

impl ExactRing for Poly {
    fn ring_zero() -> Self {
        Poly::zero()
    }
    fn from_rational(c: &Rational) -> Self {
        Poly::constant(c.clone())
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

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Poly {
    /// Ascending powers, e.g. `1 - 3*a + 3*a^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
            }
            match k {
                0 => {}
                1 if show_coeff => write!(f, "*a")?,
                1 => write!(f, "a")?,
                _ if show_coeff => write!(f, "*a^{k}")?,
                _ => write!(f, "a^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    var: String,
    coeffs: Vec<String>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyWire {
            var: "a".to_string(),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = PolyWire::deserialize(d)?;
        if wire.var != "a" {
            return Err(serde::de::Error::custom(format!(
                "expected variable \"a\", found {:?}",
                wire.var
            )));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn canonical_trailing_zeros() {
        let p = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::from_ints(&[0, 0]), Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn compose_symmetric_beta() {
        // 1 - 3a + 3a^2 is invariant under a -> 1 - a.
        let p = Poly::from_ints(&[1, -3, 3]);
        assert_eq!(p.compose_affine(&int(-1), &int(1)), p);
        assert_eq!(p.compose_affine(&int(1), &int(0)), p);
        assert_eq!(p.reflect(), p);
    }

    #[test]
    fn compose_general() {
        // (1 + a)^2 at 2a + 1 is (2 + 2a)^2
        let p = Poly::from_ints(&[1, 2, 1]);
        assert_eq!(
            p.compose_affine(&int(2), &int(1)),
            Poly::from_ints(&[4, 8, 4])
        );
    }

    #[test]
    fn product_degree_adds() {
        let p = Poly::from_ints(&[1, 1]);
        let q = Poly::from_ints(&[-2, 0, 5]);
        assert_eq!((&p * &q).degree(), Some(3));
        assert_eq!(&p * &Poly::zero(), Poly::zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Poly::from_ints(&[1, -3, 3]).to_string(), "1 - 3*a + 3*a^2");
        assert_eq!(
            Poly::from_ints(&[0, 0, 0, 0, 0, 0, 0, 1]).to_string(),
            "a^7"
        );
        assert_eq!(Poly::from_ints(&[0, -1]).to_string(), "-a");
        assert_eq!(Poly::constant(rat(-5, 2)).to_string(), "-5/2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn json_wire_format() {
        let p = Poly::from_coeffs(vec![int(1), int(1), rat(1, 3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"var":"a","coeffs":["1","1","1/3"]}"#);
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Poly>(r#"{"var":"u","coeffs":[]}"#).is_err());
        assert!(serde_json::from_str::<Poly>(r#"{"var":"a","coeffs":["x"]}"#).is_err());
    }

    #[test]
    fn eval_exact_and_float() {
        let p = Poly::from_ints(&[1, -3, 3]);
        assert_eq!(p.eval(&rat(1, 2)), rat(1, 4));
        assert!((p.eval_f64(0.5) - 0.25).abs() < 1e-15);
    }
}
