//! Coefficients of the Bessel polynomials in their three normalizations.
//!
//! - `q_n(u) = sum_k (-n)_k 2^k / ((-2n)_k k!) u^k`, normalized by `q_n(0) = 1`,
//! - `theta_n = (2n)! / (n! 2^n) q_n` (reverse Bessel polynomials),
//! - `y_n(u) = u^n theta_n(1/u) = sum_k (n+k)! / (2^k k! (n-k)!) u^k`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::exact::{factorial, horner, int, pochhammer, Poly, Rational};
use crate::{check_degree, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BesselKind {
    Q,
    Y,
    Theta,
}

impl FromStr for BesselKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" => Ok(BesselKind::Q),
            "y" => Ok(BesselKind::Y),
            "theta" => Ok(BesselKind::Theta),
            _ => Err(Error::Parse {
                input: s.to_string(),
                expected: "one of q, y, theta",
            }),
        }
    }
}

impl fmt::Display for BesselKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BesselKind::Q => "q",
            BesselKind::Y => "y",
            BesselKind::Theta => "theta",
        })
    }
}

/// Coefficients of a degree-`n` Bessel polynomial in `u`; `coeffs[k]`
/// multiplies `u^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BesselCoeffVector {
    pub kind: BesselKind,
    pub n: usize,
    pub coeffs: Vec<Rational>,
}

impl BesselCoeffVector {
    pub fn eval(&self, u: &Rational) -> Rational {
        horner(&self.coeffs, u)
    }

    /// Same coefficients as a [`Poly`] (the variable is printed as `a`).
    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }
}

pub fn coeffs(kind: BesselKind, n: usize) -> Result<BesselCoeffVector> {
    match kind {
        BesselKind::Q => q_coeffs(n),
        BesselKind::Y => y_coeffs(n),
        BesselKind::Theta => theta_coeffs(n),
    }
}

pub fn q_coeffs(n: usize) -> Result<BesselCoeffVector> {
    check_degree(n)?;
    Ok(BesselCoeffVector {
        kind: BesselKind::Q,
        n,
        coeffs: q_coefficients(n),
    })
}

pub fn y_coeffs(n: usize) -> Result<BesselCoeffVector> {
    check_degree(n)?;
    let coeffs = (0..=n)
        .map(|k| {
            let den = BigInt::from(2).pow(k as u32) * factorial(k) * factorial(n - k);
            Rational::new(factorial(n + k), den)
        })
        .collect();
    Ok(BesselCoeffVector {
        kind: BesselKind::Y,
        n,
        coeffs,
    })
}

/// `theta_n(u) = u^n y_n(1/u)`: the `y_n` coefficients reversed.
pub fn theta_coeffs(n: usize) -> Result<BesselCoeffVector> {
    let mut y = y_coeffs(n)?;
    y.coeffs.reverse();
    y.kind = BesselKind::Theta;
    Ok(y)
}

/// The leading factor `(2n)! / (n! 2^n)` between `theta_n` and `q_n`.
pub fn theta_scale(n: usize) -> Rational {
    Rational::new(
        factorial(2 * n),
        factorial(n) * BigInt::from(2).pow(n as u32),
    )
}

pub fn q_eval(n: usize, u: &Rational) -> Result<Rational> {
    Ok(q_coeffs(n)?.eval(u))
}

/// `q_n(scale(a) * u)` as a polynomial in `a`, with `u` held fixed.
pub fn q_eval_scaled(n: usize, scale: &Poly, u: &Rational) -> Result<Poly> {
    let arg = scale.scale(u);
    Ok(horner(&q_coeffs(n)?.coeffs, &arg))
}

pub(crate) fn q_coefficients(n: usize) -> Vec<Rational> {
    let minus_n = int(-(n as i64));
    let minus_2n = int(-2 * n as i64);
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let num = pochhammer(&minus_n, k) * int(2).pow(k as i32);
        let den = pochhammer(&minus_2n, k) * Rational::from_integer(factorial(k));
        debug_assert!(!den.is_zero());
        out.push(num / den);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use num_traits::One;

    #[test]
    fn first_q_polynomials() {
        assert_eq!(q_coeffs(0).unwrap().coeffs, vec![int(1)]);
        assert_eq!(q_coeffs(1).unwrap().coeffs, vec![int(1), int(1)]);
        assert_eq!(q_coeffs(2).unwrap().coeffs, vec![int(1), int(1), rat(1, 3)]);
    }

    #[test]
    fn y_and_theta_small() {
        assert_eq!(y_coeffs(1).unwrap().coeffs, vec![int(1), int(1)]);
        assert_eq!(y_coeffs(2).unwrap().coeffs, vec![int(1), int(3), int(3)]);
        assert_eq!(
            theta_coeffs(2).unwrap().coeffs,
            vec![int(3), int(3), int(1)]
        );
    }

    #[test]
    fn normalization_and_scaling_up_to_40() {
        for n in 0..=40 {
            let q = q_coeffs(n).unwrap();
            assert_eq!(q.coeffs.len(), n + 1);
            assert_eq!(q.eval(&int(0)), Rational::one());
            let scaled: Vec<_> = q.coeffs.iter().map(|c| c * theta_scale(n)).collect();
            assert_eq!(theta_coeffs(n).unwrap().coeffs, scaled, "n={n}");
            for c in &y_coeffs(n).unwrap().coeffs {
                assert!(c.is_integer() && *c > int(0), "n={n} coeff {c}");
            }
        }
    }

    #[test]
    fn evaluation() {
        assert_eq!(q_eval(2, &int(0)).unwrap(), int(1));
        assert_eq!(q_eval(1, &int(3)).unwrap(), int(4));
        assert_eq!(
            q_eval_scaled(1, &Poly::var(), &int(1)).unwrap(),
            Poly::from_ints(&[1, 1])
        );
        // q_2((1 - a) * 3) = 1 + 3(1-a) + 3(1-a)^2
        assert_eq!(
            q_eval_scaled(2, &Poly::one_minus_var(), &int(3)).unwrap(),
            Poly::from_ints(&[7, -9, 3])
        );
    }

    #[test]
    fn degree_cap() {
        assert!(matches!(
            q_coeffs(65),
            Err(Error::DegreeCap { degree: 65, .. })
        ));
        assert!(q_coeffs(64).is_ok());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("theta".parse::<BesselKind>().unwrap(), BesselKind::Theta);
        assert!("z".parse::<BesselKind>().is_err());
    }
}
