//! Student-t densities with an odd number of degrees of freedom and the
//! generalized Boros–Moll integral
//!
//! ```text
//! n! m! 2^{n+m} int_R dy / ((1+y^2)^{n+1} (1+(x-y)^2)^{m+1})
//!     = (pi/2) sum_{k=min(n,m)}^{n+m} gamma_k / (1 + x^2/4)^{k+1}
//! ```
//!
//! The right-hand side is exact: `pi` is carried symbolically in
//! [`PiRational`] and only converted to `f64` for the comparison with
//! quadrature.

use std::f64::consts::PI;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::basis::q_coefficients;
use crate::exact::{
    binomial_general, factorial, format_rational, int, pochhammer_half, rat, rational_to_f64,
    ExactRing, Rational,
};
use crate::linearize::beta_single_sum;
use crate::quadrature::{integrate, QuadratureResult, DEFAULT_MAX_EVALUATIONS};
use crate::{check_degree, Error, Result};

/// `coeff * pi^pi_power`. Every value produced here has `pi_power` in
/// `{-1, 0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiRational {
    pub coeff: Rational,
    pub pi_power: i32,
}

impl PiRational {
    pub fn new(coeff: Rational, pi_power: i32) -> Self {
        PiRational { coeff, pi_power }
    }

    pub fn rational(coeff: Rational) -> Self {
        PiRational::new(coeff, 0)
    }

    pub fn checked_add(&self, other: &PiRational) -> Result<PiRational> {
        if self.coeff.is_zero() {
            return Ok(other.clone());
        }
        if other.coeff.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_power != other.pi_power {
            return Err(Error::PiPowerMismatch(self.pi_power, other.pi_power));
        }
        Ok(PiRational::new(&self.coeff + &other.coeff, self.pi_power))
    }

    pub fn recip(&self) -> PiRational {
        PiRational::new(self.coeff.recip(), -self.pi_power)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.coeff) * PI.powi(self.pi_power)
    }
}

impl Mul for &PiRational {
    type Output = PiRational;
    fn mul(self, rhs: &PiRational) -> PiRational {
        PiRational::new(&self.coeff * &rhs.coeff, self.pi_power + rhs.pi_power)
    }
}

impl Mul for PiRational {
    type Output = PiRational;
    fn mul(self, rhs: PiRational) -> PiRational {
        &self * &rhs
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = format_rational(&self.coeff);
        match self.pi_power {
            0 => write!(f, "{c}"),
            1 => write!(f, "{c}·π"),
            p => write!(f, "{c}·π^{p}"),
        }
    }
}

impl Serialize for PiRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PiRational", 2)?;
        st.serialize_field("coeff", &format_rational(&self.coeff))?;
        st.serialize_field("pi_power", &self.pi_power)?;
        st.end()
    }
}

/// Normalizing constant `A_nu = Gamma(nu + 1/2) / (Gamma(1/2) Gamma(nu))`
/// for `nu = nu_twice / 2` a half-integer: `A_{k+1/2} = k! / ((1/2)_k pi)`.
pub fn a_const(nu_twice: u32) -> Result<PiRational> {
    if nu_twice.is_multiple_of(2) {
        return Err(Error::UnsupportedOrder(nu_twice));
    }
    let k = (nu_twice / 2) as usize;
    let coeff = Rational::from_integer(factorial(k)) / pochhammer_half(k);
    Ok(PiRational::new(coeff, -1))
}

/// `A_{n+1/2} (1 + x^2)^{-(n+1)}`.
pub fn density(n: usize, x: f64) -> f64 {
    let a = a_const(2 * n as u32 + 1).expect("odd order").to_f64();
    a * (1.0 + x * x).powi(-(n as i32) - 1)
}

/// Fourier transform of the density with `2n+1` degrees of freedom,
/// `e^{-u} q_n(u)`; extended evenly to `u < 0`.
pub fn fourier_factor(n: usize, u: f64) -> f64 {
    let u = u.abs();
    let q = q_coefficients(n)
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * u + rational_to_f64(c));
    (-u).exp() * q
}

/// Weights of the Boros–Moll expansion, `gamma_k` for `k = first..=n+m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaCoeffs {
    pub n: usize,
    pub m: usize,
    pub first: usize,
    pub values: Vec<Rational>,
}

impl GammaCoeffs {
    pub fn get(&self, k: usize) -> Rational {
        k.checked_sub(self.first)
            .and_then(|i| self.values.get(i).cloned())
            .unwrap_or_else(Rational::zero)
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        (self.first..).zip(self.values.iter())
    }
}

fn check_positive(n: usize, m: usize) -> Result<()> {
    for (name, v) in [("n", n), ("m", m)] {
        if v == 0 {
            return Err(Error::out_of_range(name, 0, ">= 1"));
        }
    }
    check_degree(n + m)
}

/// `sum_{j=0}^{2(n+m-k)} (-2)^j C(n+m+1, 2(n+m-k)-j) C(k-m+j, j)`.
fn weighted_sum(n: usize, m: usize, k: usize) -> Rational {
    let total = n + m;
    let span = 2 * (total - k);
    (0..=span)
        .map(|j| {
            int(-2).power(j)
                * binomial_general(total as i64 + 1, span - j)
                * binomial_general(k as i64 - m as i64 + j as i64, j)
        })
        .sum()
}

fn gamma_with(n: usize, m: usize, weight: impl Fn(usize) -> Rational) -> Result<GammaCoeffs> {
    check_positive(n, m)?;
    let first = n.min(m);
    let values = (first..=n + m)
        .map(|k| weight(k) * weighted_sum(n, m, k))
        .collect();
    Ok(GammaCoeffs {
        n,
        m,
        first,
        values,
    })
}

/// `gamma_k = k! (1/2)_{n+m-k} sum_j (-2)^j C(n+m+1, 2(n+m-k)-j) C(k-m+j, j)`.
pub fn gamma_coeffs(n: usize, m: usize) -> Result<GammaCoeffs> {
    gamma_with(n, m, |k| {
        Rational::from_integer(factorial(k)) * pochhammer_half(n + m - k)
    })
}

/// The bare sum without the `k! (1/2)_{n+m-k}` weight. It does not match the
/// integral (for `n = m = 1` it sums to 2 instead of 5/2) and is kept only for
/// comparison.
pub fn gamma_coeffs_printed(n: usize, m: usize) -> Result<GammaCoeffs> {
    gamma_with(n, m, |_| Rational::one())
}

/// `gamma_k` from the density convolution at `a = 1/2`:
/// `(2/pi) n! m! 2^{n+m} (1/2) beta_k(1/2) A_{k+1/2} / (A_{n+1/2} A_{m+1/2})`.
pub fn gamma_from_beta(n: usize, m: usize) -> Result<GammaCoeffs> {
    check_positive(n, m)?;
    let half = rat(1, 2);
    let scale =
        Rational::from_integer(factorial(n) * factorial(m) * BigInt::from(2).pow((n + m) as u32))
            * &half;
    let two_over_pi = PiRational::new(int(2), -1);
    let a_n = a_const(2 * n as u32 + 1)?;
    let a_m = a_const(2 * m as u32 + 1)?;
    let first = n.min(m);
    let mut values = Vec::with_capacity(n + m + 1 - first);
    for k in first..=n + m {
        let beta = beta_single_sum(n, m, k)?.eval(&half);
        let a_k = a_const(2 * k as u32 + 1)?;
        let g = &(&(&two_over_pi * &PiRational::rational(&scale * beta)) * &a_k)
            * &(&a_n * &a_m).recip();
        debug_assert_eq!(g.pi_power, 0);
        values.push(g.coeff);
    }
    Ok(GammaCoeffs {
        n,
        m,
        first,
        values,
    })
}

/// `(pi/2) sum_k gamma_k / (1 + x^2/4)^{k+1}`, exact.
pub fn boros_moll_rhs(n: usize, m: usize, x: &Rational) -> Result<PiRational> {
    let gamma = gamma_coeffs(n, m)?;
    let base = (int(1) + x * x / int(4)).recip();
    let sum: Rational = gamma.iter().map(|(k, g)| g * base.power(k + 1)).sum();
    Ok(PiRational::new(sum * rat(1, 2), 1))
}

/// `n! m! 2^{n+m} int_R dy / ((1+y^2)^{n+1} (1+(x-y)^2)^{m+1})` by adaptive
/// quadrature after `y = tan(t)`, which turns the integrand into the smooth
/// `cos^{2n}(t) / (1 + (x - tan t)^2)^{m+1}` on `(-pi/2, pi/2)`.
pub fn boros_moll_lhs_quadrature(n: usize, m: usize, x: f64, tol: f64) -> Result<QuadratureResult> {
    boros_moll_lhs_with_budget(n, m, x, tol, DEFAULT_MAX_EVALUATIONS)
}

pub fn boros_moll_lhs_with_budget(
    n: usize,
    m: usize,
    x: f64,
    tol: f64,
    max_evaluations: usize,
) -> Result<QuadratureResult> {
    check_positive(n, m)?;
    let scale = rational_to_f64(&Rational::from_integer(
        factorial(n) * factorial(m) * BigInt::from(2).pow((n + m) as u32),
    ));
    let (pn, pm) = (2 * n as i32, -(m as i32) - 1);
    let f = |t: f64| {
        let d = x - t.tan();
        t.cos().powi(pn) * (1.0 + d * d).powi(pm)
    };
    let mut r = integrate(f, -PI / 2.0, PI / 2.0, tol, max_evaluations)?;
    r.value *= scale;
    r.abs_error_estimate *= scale;
    Ok(r)
}

/// Density of `a X + (1-a) Y` at `x` for independent `X`, `Y` with `2n+1`
/// and `2m+1` degrees of freedom, by quadrature (`t = a tan s`).
pub fn convolution_quadrature(
    n: usize,
    m: usize,
    a: f64,
    x: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::Domain(format!(
            "split parameter must lie in (0, 1), got {a}"
        )));
    }
    let a_n = a_const(2 * n as u32 + 1)?.to_f64();
    let b = 1.0 - a;
    let f = |s: f64| {
        let t = a * s.tan();
        a_n * s.cos().powi(2 * n as i32) * density(m, (x - t) / b) / b
    };
    integrate(f, -PI / 2.0, PI / 2.0, tol, DEFAULT_MAX_EVALUATIONS)
}

/// `sum_k beta_k(a) f_{k+1/2}(x)` for a precomputed coefficient row.
pub fn convolution_expansion(row: &[crate::Poly], a: &Rational, x: f64) -> f64 {
    row.iter()
        .enumerate()
        .map(|(k, beta)| rational_to_f64(&beta.eval(a)) * density(k, x))
        .sum()
}
