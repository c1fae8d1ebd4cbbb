use num_bigint::BigInt;
use num_traits::One;

use super::{rat, Rational};

/// Rising factorial `(z)_n = z (z+1) ... (z+n-1)`; empty product for `n = 0`.
pub fn pochhammer(z: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = z.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// `(1/2)_n`, which shows up in nearly every prefactor.
pub fn pochhammer_half(n: usize) -> Rational {
    pochhammer(&rat(1, 2), n)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, t| acc * t)
}

/// `top (top-1) ... (top-k+1) / k!` for any integer `top`.
///
/// The falling-factorial definition gives zero for `0 <= top < k` and the
/// signed values `(-1)^k C(k-top-1, k)` for negative `top`.
pub fn binomial_general(top: i64, k: usize) -> Rational {
    let mut num = BigInt::one();
    let mut t = BigInt::from(top);
    for _ in 0..k {
        num *= &t;
        t -= 1;
    }
    Rational::new(num, factorial(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&int(-3), 5), int(0));
        assert_eq!(pochhammer(&int(-3), 3), int(-6));
        assert_eq!(pochhammer(&int(1), 5), int(120));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_general(5, 2), int(10));
        assert_eq!(binomial_general(2, 5), int(0));
        assert_eq!(binomial_general(-2, 3), int(-4));
        assert_eq!(binomial_general(-1, 4), int(1));
        assert_eq!(binomial_general(0, 0), int(1));
        assert_eq!(binomial_general(-7, 0), int(1));
    }

    #[test]
    fn binomial_matches_pochhammer_grid() {
        for top in -20i64..=20 {
            for k in 0usize..=20 {
                let expected =
                    pochhammer(&int(top - k as i64 + 1), k) / Rational::from_integer(factorial(k));
                assert_eq!(binomial_general(top, k), expected, "top={top} k={k}");
            }
        }
    }

    #[test]
    fn half_pochhammer() {
        assert_eq!(pochhammer_half(0), int(1));
        assert_eq!(pochhammer_half(2), rat(3, 4));
    }
}
