//! Terminating Gauss hypergeometric series over exact scalars and
//! polynomials, and exact checks of the transformations used to relate the
//! different closed forms of the linearization coefficients.

use std::fmt;

use num_traits::{One, Signed};

use crate::exact::{format_rational, horner, int, rat, ExactRing, Rational};
use crate::{Error, Result};

/// Parameters of a terminating `2F1(a, b; c; x)`.
///
/// The series is cut at `termination`, the first index after which either
/// `(a)_k` or `(b)_k` vanishes identically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F21Params {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    termination: usize,
}

/// `Some(-z)` when `z` is a nonpositive integer.
fn nonpositive_integer(z: &Rational) -> Option<usize> {
    if z.is_integer() && !z.is_positive() {
        usize::try_from(-z.to_integer()).ok()
    } else {
        None
    }
}

impl F21Params {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let termination = match (nonpositive_integer(&a), nonpositive_integer(&b)) {
            (Some(x), Some(y)) => x.min(y),
            (Some(x), None) | (None, Some(x)) => x,
            (None, None) => {
                return Err(Error::InvalidParameters(format!(
                    "2F1({}, {}; {}) does not terminate",
                    format_rational(&a),
                    format_rational(&b),
                    format_rational(&c)
                )))
            }
        };
        // (c)_k for k <= T involves c, c+1, ..., c+T-1
        if let Some(j) = nonpositive_integer(&c) {
            if j < termination {
                return Err(Error::InvalidParameters(format!(
                    "(c)_k vanishes at k = {} before termination at {termination} (c = {})",
                    j + 1,
                    format_rational(&c)
                )));
            }
        }
        Ok(F21Params {
            a,
            b,
            c,
            termination,
        })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        F21Params::new(int(a), int(b), int(c))
    }

    pub fn termination(&self) -> usize {
        self.termination
    }

    /// `(a)_k (b)_k / ((c)_k k!)` for `k = 0..=termination`.
    pub fn coefficients(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.termination + 1);
        let mut term = Rational::one();
        out.push(term.clone());
        for k in 0..self.termination {
            let kk = int(k as i64);
            term = term * (&self.a + &kk) * (&self.b + &kk) / ((&self.c + &kk) * (&kk + int(1)));
            out.push(term.clone());
        }
        out
    }

    /// Evaluates the series at `x` in any exact ring (rationals, polynomials,
    /// Laurent polynomials).
    pub fn eval<T: ExactRing>(&self, x: &T) -> T {
        horner(&self.coefficients(), x)
    }
}

/// Shorthand for [`F21Params::new`] followed by [`F21Params::eval`].
pub fn f21_terminating<T: ExactRing>(a: Rational, b: Rational, c: Rational, x: &T) -> Result<T> {
    Ok(F21Params::new(a, b, c)?.eval(x))
}

/// Both sides of an identity, kept so failures can be reported verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> Comparison<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for Comparison<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.holds() { "==" } else { "!=" };
        write!(
            f,
            "{} {rel} {}",
            format_rational(&self.lhs),
            format_rational(&self.rhs)
        )
    }
}

/// Pfaff: `2F1(A, B; C; x) = (1-x)^{-A} 2F1(A, C-B; C; x/(x-1))`, with the
/// series terminating through `A`.
pub fn pfaff_check(p: &F21Params, x: &Rational) -> Result<Comparison<Rational>> {
    let Some(order) = nonpositive_integer(&p.a) else {
        return Err(Error::InvalidParameters(format!(
            "Pfaff check needs A a nonpositive integer, got {}",
            format_rational(&p.a)
        )));
    };
    if x.is_one() {
        return Err(Error::Domain(
            "Pfaff transformation undefined at x = 1".into(),
        ));
    }
    let lhs = p.eval(x);
    let y = x / (x - int(1));
    let transformed = F21Params::new(p.a.clone(), &p.c - &p.b, p.c.clone())?;
    let rhs = (int(1) - x).power(order) * transformed.eval(&y);
    Ok(Comparison { lhs, rhs })
}

/// Gauss: `C F(A,B;C;z) = (C-A) z F(A,B+1;C+1;z) + C (1-z) F(A,B+1;C;z)`.
pub fn gauss_contiguous_check(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    z: &Rational,
) -> Result<Comparison<Rational>> {
    let one = int(1);
    let f0 = F21Params::new(a.clone(), b.clone(), c.clone())?;
    let f1 = F21Params::new(a.clone(), b + &one, c + &one)?;
    let f2 = F21Params::new(a.clone(), b + &one, c.clone())?;
    let lhs = c * f0.eval(z);
    let rhs = (c - a) * z * f1.eval(z) + c * (&one - z) * f2.eval(z);
    Ok(Comparison { lhs, rhs })
}

/// `B (1-z) F(A,B+1;C+1;z) = (B-C) F(A,B;C+1;z) + C F(A-1,B;C;z)`.
pub fn contiguous2_check(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    z: &Rational,
) -> Result<Comparison<Rational>> {
    contiguous2_with(a, b, c, z, &int(1))
}

/// The same relation with the middle term multiplied by `z`. This variant is
/// false in general (its constant terms read `B = C`) and is kept only to
/// document the discrepancy.
pub fn contiguous2_printed_check(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    z: &Rational,
) -> Result<Comparison<Rational>> {
    contiguous2_with(a, b, c, z, z)
}

fn contiguous2_with(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    z: &Rational,
    middle: &Rational,
) -> Result<Comparison<Rational>> {
    let one = int(1);
    let f0 = F21Params::new(a.clone(), b + &one, c + &one)?;
    let f1 = F21Params::new(a.clone(), b.clone(), c + &one)?;
    let f2 = F21Params::new(a - &one, b.clone(), c.clone())?;
    let lhs = b * (&one - z) * f0.eval(z);
    let rhs = (b - c) * middle * f1.eval(z) + c * f2.eval(z);
    Ok(Comparison { lhs, rhs })
}

/// Quadratic transformation
/// `F(a, b; 2a; x) = (1 - x/2)^{-b} F(b/2, (b+1)/2; a+1/2; (x/(2-x))^2)`
/// for `b` a nonpositive integer.
pub fn quadratic_transform_check(
    a: &Rational,
    b: &Rational,
    x: &Rational,
) -> Result<Comparison<Rational>> {
    let Some(order) = nonpositive_integer(b) else {
        return Err(Error::InvalidParameters(format!(
            "quadratic transformation needs b a nonpositive integer, got {}",
            format_rational(b)
        )));
    };
    let two = int(2);
    if *x == two {
        return Err(Error::Domain(
            "quadratic transformation undefined at x = 2".into(),
        ));
    }
    let half = rat(1, 2);
    let lhs = F21Params::new(a.clone(), b.clone(), &two * a)?.eval(x);
    let inner = F21Params::new(b * &half, (b + int(1)) * &half, a + &half)?;
    let y = x / (&two - x);
    let rhs = (int(1) - x * &half).power(order) * inner.eval(&(&y * &y));
    Ok(Comparison { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{LaurentPoly, Poly};

    #[test]
    fn two_term_series() {
        let (b, c) = (rat(3, 7), rat(5, 2));
        let p = F21Params::new(int(-1), b.clone(), c.clone()).unwrap();
        let expected = Poly::from_coeffs(vec![int(1), -(b / c)]);
        assert_eq!(p.eval(&Poly::var()), expected);
    }

    #[test]
    fn binomial_theorem_case() {
        let p = F21Params::from_ints(-2, 1, 1).unwrap();
        assert_eq!(p.eval(&Poly::var()), Poly::one_minus_var().pow(2));
    }

    #[test]
    fn equal_degree_inner_series() {
        let p = F21Params::new(int(-1), rat(-3, 2), rat(1, 2)).unwrap();
        assert_eq!(p.eval(&Poly::var()), Poly::from_ints(&[1, 3]));
    }

    #[test]
    fn termination_index() {
        assert_eq!(F21Params::from_ints(-5, -2, 1).unwrap().termination(), 2);
        assert_eq!(F21Params::from_ints(0, 3, 1).unwrap().termination(), 0);
        assert!(F21Params::new(rat(1, 2), int(1), int(1)).is_err());
        // (c)_3 = (-2)(-1)(0) is needed before termination at 4
        assert!(F21Params::from_ints(-4, 1, -2).is_err());
        // c = -3 only bites at k = 4, after termination at 3
        assert!(F21Params::from_ints(-3, 1, -3).is_ok());
    }

    #[test]
    fn pfaff_examples() {
        let p = F21Params::from_ints(-2, 1, 3).unwrap();
        assert!(pfaff_check(&p, &rat(1, 2)).unwrap().holds());
        let p = F21Params::from_ints(0, 7, 3).unwrap();
        assert!(pfaff_check(&p, &rat(9, 4)).unwrap().holds());
        let p = F21Params::new(int(-4), rat(-1, 2), int(2)).unwrap();
        assert!(pfaff_check(&p, &rat(-3, 7)).unwrap().holds());
        assert!(matches!(pfaff_check(&p, &int(1)), Err(Error::Domain(_))));
        let via_b = F21Params::new(rat(1, 3), int(-2), int(2)).unwrap();
        assert!(pfaff_check(&via_b, &rat(1, 3)).is_err());
    }

    #[test]
    fn contiguous_examples() {
        assert!(
            gauss_contiguous_check(&int(-3), &rat(1, 2), &int(2), &rat(2, 5))
                .unwrap()
                .holds()
        );
        assert!(contiguous2_check(&int(-1), &int(-2), &int(1), &rat(1, 3))
            .unwrap()
            .holds());
        let z = int(0);
        assert!(gauss_contiguous_check(&int(-3), &rat(1, 2), &int(2), &z)
            .unwrap()
            .holds());
        assert!(contiguous2_check(&int(-2), &rat(5, 3), &rat(7, 2), &z)
            .unwrap()
            .holds());
        let printed = contiguous2_printed_check(&int(-1), &int(-2), &int(1), &rat(1, 3)).unwrap();
        assert_eq!((printed.lhs, printed.rhs), (rat(-14, 9), rat(10, 9)));
    }

    #[test]
    fn quadratic_examples() {
        assert!(quadratic_transform_check(&rat(3, 2), &int(-2), &rat(1, 2))
            .unwrap()
            .holds());
        assert!(quadratic_transform_check(&rat(3, 2), &int(0), &rat(1, 2))
            .unwrap()
            .holds());
        assert!(quadratic_transform_check(&rat(5, 2), &int(-4), &int(-1))
            .unwrap()
            .holds());
        assert!(quadratic_transform_check(&rat(5, 2), &int(-4), &int(2)).is_err());
        assert!(quadratic_transform_check(&rat(5, 2), &rat(1, 2), &int(1)).is_err());
    }

    #[test]
    fn broken_identity_is_reported() {
        // Perturb one side and confirm the comparison notices.
        let c = gauss_contiguous_check(&int(-3), &rat(1, 2), &int(2), &rat(2, 5)).unwrap();
        let off = Comparison {
            lhs: c.lhs.clone() + int(1),
            rhs: c.rhs,
        };
        assert!(!off.holds());
        assert!(off.to_string().contains("!="));
    }

    #[test]
    fn laurent_argument_commutes_with_evaluation() {
        let p = F21Params::new(int(-6), rat(-2, 3), rat(5, 4)).unwrap();
        let symbolic = p.eval(&LaurentPoly::inverse_var());
        for r in [rat(1, 3), rat(-7, 2), rat(11, 5)] {
            assert_eq!(symbolic.eval(&r).unwrap(), p.eval(&r.recip()));
        }
    }
}
