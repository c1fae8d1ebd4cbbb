//! Ground truth for the linearization coefficients.
//!
//! The product `q_n(a u) q_m((1-a) u)` is expanded as a polynomial in `u`
//! whose coefficients are polynomials in `a`, and each monomial `u^k` is then
//! rewritten in the `q`-basis with Carlitz's connection coefficients
//! `u^k = sum_i delta_i^{(k)} q_i(u)`. Nothing else from the theory is used,
//! which is what makes this the arbiter for the other three methods.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::basis::q_coefficients;
use crate::exact::{factorial, Poly, Rational};
use crate::linearize::BetaRow;
use crate::{check_degree, Result};

/// `u^k` in the `q`-basis: `delta[i]` multiplies `q_i`, `i = 0..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionRow {
    pub k: usize,
    pub delta: Vec<Rational>,
}

pub fn carlitz_delta(k: usize) -> ConnectionRow {
    let lead = Rational::new(factorial(k + 1), BigInt::from(2).pow(k as u32));
    let delta = (0..=k)
        .map(|i| {
            // Zero below (k - 1) / 2.
            if 2 * i + 1 < k {
                return Rational::zero();
            }
            let sign = if (k - i).is_multiple_of(2) { 1 } else { -1 };
            let num = factorial(2 * i) * sign;
            let den = factorial(k - i) * factorial(i) * factorial(2 * i + 1 - k);
            &lead * Rational::new(num, den)
        })
        .collect();
    ConnectionRow { k, delta }
}

/// `beta_k^{(n,m)}(a)` for `k = 0..=n+m` by monomial expansion and Carlitz
/// inversion.
pub fn beta_oracle(n: usize, m: usize) -> Result<BetaRow> {
    check_degree(n + m)?;
    let total = n + m;
    let alpha_n = q_coefficients(n);
    let alpha_m = q_coefficients(m);

    let a_pows = powers(&Poly::var(), n);
    let b_pows = powers(&Poly::one_minus_var(), m);

    // coefficient of u^k in the product, as a polynomial in a
    let mut product: Vec<Poly> = vec![Poly::zero(); total + 1];
    for (j, aj) in alpha_n.iter().enumerate() {
        let left = a_pows[j].scale(aj);
        for (l, bl) in alpha_m.iter().enumerate() {
            let term = (&left * &b_pows[l]).scale(bl);
            product[j + l] = &product[j + l] + &term;
        }
    }

    let mut beta = vec![Poly::zero(); total + 1];
    for (k, pk) in product.iter().enumerate() {
        let row = carlitz_delta(k);
        for (i, d) in row.delta.iter().enumerate() {
            if !d.is_zero() {
                beta[i] = &beta[i] + &pk.scale(d);
            }
        }
    }
    Ok(beta)
}

fn powers(base: &Poly, max: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(Poly::one());
    for e in 1..=max {
        let next = &out[e - 1] * base;
        out.push(next);
    }
    out
}
