//! Exact verification of the consequences of the single-sum formula: the
//! double-sum identity, positivity of the coefficients, the equal-degree
//! `2F1` representation, and randomized trials of the `2F1` transformations.

use std::fmt;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::exact::{
    binomial_general, factorial, format_rational, int, pochhammer, pochhammer_half, rat, ExactRing,
    Poly, Rational,
};
use crate::hypergeom::{
    contiguous2_check, gauss_contiguous_check, pfaff_check, quadratic_transform_check, Comparison,
    F21Params,
};
use crate::linearize::{beta_single_sum, RecurrenceTable};
use crate::{Error, Result};

/// Ordered `name = value` pairs identifying one checked case.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(pub Vec<(&'static str, String)>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: &'static str, value: impl fmt::Display) -> Self {
        self.0.push((name, value.to_string()));
        self
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// Outcome of one identity check; `holds` is exactly `lhs == rhs` for
/// equalities (for positivity it records whether the sign condition held).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: Params,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

impl IdentityReport {
    fn equality<T: PartialEq + fmt::Display>(
        identity: &str,
        params: Params,
        lhs: T,
        rhs: T,
    ) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            params,
            holds: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn from_comparison(identity: &str, params: Params, c: Comparison<Rational>) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            params,
            holds: c.holds(),
            lhs: format_rational(&c.lhs),
            rhs: format_rational(&c.rhs),
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds { "ok  " } else { "FAIL" };
        write!(f, "{status} {} [{}]", self.identity, self.params)?;
        if !self.holds {
            write!(f, " lhs={} rhs={}", self.lhs, self.rhs)?;
        }
        Ok(())
    }
}

struct RationalDisplay(Rational);

impl fmt::Display for RationalDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl PartialEq for RationalDisplay {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// `C(m+i, 2i) / (1+m-i)_l` as the polynomial `(m-i+l+1)_{2i-l} / (2i)!`.
///
/// For `i > m` both the binomial and the Pochhammer symbol vanish; the ratio
/// is the continuous extension in `m`.
fn corollary1_weight(i: usize, m: usize, l: usize) -> Rational {
    let start = int(m as i64 - i as i64 + l as i64 + 1);
    pochhammer(&start, 2 * i - l) / Rational::from_integer(factorial(2 * i))
}

/// Double-sum side of the identity, without the comparison.
pub fn corollary1_lhs(i: usize, m: usize, n: usize, r: usize) -> Result<Rational> {
    check_corollary1(i, m, n, r)?;
    let (ii, mm, nn, rr) = (i as i64, m as i64, n as i64, r as i64);
    let lo = (ii - rr).max(0) as usize;
    let mut total = Rational::zero();
    for l in lo..=i.min(n) {
        let ll = l as i64;
        let outer = corollary1_weight(i, m, l)
            * pochhammer(&int(-ii), l)
            * pochhammer(&int(-nn), l)
            * pochhammer(&int(nn + 1), l)
            / (pochhammer(&int(-mm - ii), l) * Rational::from_integer(factorial(l)));
        if outer.is_zero() {
            continue;
        }
        let k_hi = ll.min(ll + ii - rr);
        for k in lo as i64..=k_hi {
            let ku = k as usize;
            let shifted = (rr - ii + k) as usize;
            let num = pochhammer(&int(-ll), ku)
                * pochhammer(&int(-ll), shifted)
                * pochhammer(&int(mm + nn - ii + 2), ku)
                * pochhammer(&int(-nn - mm + ii - 1), ku);
            let den = Rational::from_integer(factorial(ku) * factorial(shifted))
                * pochhammer(&int(nn - ll + 1), ku)
                * pochhammer(&int(-nn - ll), ku);
            total += &outer * num / den;
        }
    }
    Ok(total)
}

pub fn corollary1_rhs(i: usize, m: usize, n: usize, r: usize) -> Result<Rational> {
    check_corollary1(i, m, n, r)?;
    let sign = if r.is_multiple_of(2) { int(1) } else { int(-1) };
    Ok(sign
        * binomial_general((m + n + 1) as i64, 2 * i - r)
        * binomial_general(n as i64 - i as i64 + r as i64, r))
}

fn check_corollary1(i: usize, m: usize, n: usize, r: usize) -> Result<()> {
    for (name, v) in [("i", i), ("m", m), ("n", n)] {
        if v == 0 {
            return Err(Error::out_of_range(name, 0, ">= 1"));
        }
    }
    if r > 2 * i {
        return Err(Error::out_of_range("r", r as i64, format!("0..={}", 2 * i)));
    }
    Ok(())
}

/// The double-sum identity obtained by comparing coefficients of `a^{-r}`
/// between the single-sum formula and the Carlitz expansion of
/// `beta_{n+m-i}^{(n,m)}`.
pub fn corollary1_check(i: usize, m: usize, n: usize, r: usize) -> Result<IdentityReport> {
    let lhs = corollary1_lhs(i, m, n, r)?;
    let rhs = corollary1_rhs(i, m, n, r)?;
    let params = Params::new()
        .with("i", i)
        .with("m", m)
        .with("n", n)
        .with("r", r);
    Ok(IdentityReport::equality(
        "corollary1",
        params,
        RationalDisplay(lhs),
        RationalDisplay(rhs),
    ))
}

/// Right side of the equal-degree formula
///
/// ```text
/// (4a(1-a))^i / 4^n (-n)_i (n+1/2)_i / (i! (-n+1/2)_i) 2F1(i-n, -n-1/2; 1/2; (2a-1)^2)
/// ```
pub fn equal_degree_rhs(n: usize, i: usize) -> Result<Poly> {
    if i > n {
        return Err(Error::out_of_range("i", i as i64, format!("0..={n}")));
    }
    let (nn, half) = (n as i64, rat(1, 2));
    let four_ab = Poly::from_ints(&[0, 4, -4]).pow(i);
    let scalar = pochhammer(&int(-nn), i) * pochhammer(&(int(nn) + &half), i)
        / (Rational::from_integer(factorial(i))
            * pochhammer(&(int(-nn) + &half), i)
            * int(4).power(n));
    let arg = Poly::from_ints(&[-1, 2]).pow(2);
    let series = F21Params::new(int(i as i64 - nn), int(-nn) - &half, half)?.eval(&arg);
    Ok((four_ab * series).scale(&scalar))
}

/// `beta_{n+i}^{(n,n)}` against the equal-degree formula.
pub fn equal_degree_check(n: usize, i: usize) -> Result<IdentityReport> {
    let rhs = equal_degree_rhs(n, i)?;
    let lhs = beta_single_sum(n, n, n + i)?;
    let params = Params::new().with("n", n).with("i", i);
    Ok(IdentityReport::equality("equal-degree", params, lhs, rhs))
}

/// The Pfaff-transformed form used for positivity when
/// `n <= k <= (n+m-1)/2`:
///
/// ```text
/// beta_k = a^{k-m} (1-a)^{m+k+1} (1/2)_{n+m-k} (1/2)_k / ((1/2)_n (1/2)_m)
///          C(n-k-1, n+m-2k-1) 2F1(-n-m-1, m-k; n+m-2k; 1/(1-a))
/// ```
///
/// Checked after multiplying through by `a^{m-k}`, so both sides are
/// polynomials: `2F1(..; 1/(1-a)) (1-a)^{m+k+1}` is `sum_t c_t (1-a)^{m+k+1-t}`.
pub fn pfaff_positivity_check(n: usize, m: usize, k: usize) -> Result<IdentityReport> {
    let total = n + m;
    if k < n || 2 * k + 1 > total {
        return Err(Error::out_of_range(
            "k",
            k as i64,
            format!("{n}..=(n+m-1)/2 for n={n}, m={m}"),
        ));
    }
    let f = F21Params::new(
        int(-(total as i64) - 1),
        int(m as i64 - k as i64),
        int(total as i64 - 2 * k as i64),
    )?;
    let top = m + k + 1;
    let b = Poly::one_minus_var();
    let mut series = Poly::zero();
    for (t, c) in f.coefficients().iter().enumerate() {
        series = &series + &b.pow(top - t).scale(c);
    }
    let scalar = pochhammer_half(total - k) * pochhammer_half(k)
        / (pochhammer_half(n) * pochhammer_half(m))
        * binomial_general(n as i64 - k as i64 - 1, total - 2 * k - 1);
    let rhs = series.scale(&scalar);
    let lhs = beta_single_sum(n, m, k)?.shift(m - k);
    let params = Params::new().with("n", n).with("m", m).with("k", k);
    Ok(IdentityReport::equality(
        "pfaff-positivity",
        params,
        lhs,
        rhs,
    ))
}

/// Sign requirement on a coefficient at one sample point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClaim {
    /// `n < m` and `n <= k < m`.
    Strict,
    Nonnegative,
}

/// A vanishing sample outside the strictly positive range. Not a failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroSample {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    #[serde(with = "crate::exact::serde_rational")]
    pub a: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PositivityScan {
    pub reports: Vec<IdentityReport>,
    pub zeros_outside_strict_range: Vec<ZeroSample>,
}

impl PositivityScan {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.holds)
    }
}

/// The points `j/10`, `j = 1..=9`.
pub fn tenths() -> Vec<Rational> {
    (1..=9).map(|j| rat(j, 10)).collect()
}

/// Sign scan of every `beta_k^{(n,m)}`, `n, m <= n_max`, at the sample
/// points: strictly positive where `n < m`, `n <= k < m`, and nonnegative
/// everywhere else.
pub fn positivity_scan(n_max: usize, samples: &[Rational]) -> Result<PositivityScan> {
    if let Some(bad) = samples.iter().find(|a| !a.is_positive() || **a >= int(1)) {
        return Err(Error::Domain(format!(
            "sample point {} is not inside (0, 1)",
            format_rational(bad)
        )));
    }
    let mut table = RecurrenceTable::new();
    let mut scan = PositivityScan::default();
    for n in 0..=n_max {
        for m in 0..=n_max {
            let row = table.row(n, m)?.clone();
            for (k, beta) in row.iter().enumerate() {
                let claim = if n < m && n <= k && k < m {
                    SignClaim::Strict
                } else {
                    SignClaim::Nonnegative
                };
                let values: Vec<Rational> = samples.iter().map(|a| beta.eval(a)).collect();
                let holds = values.iter().all(|v| match claim {
                    SignClaim::Strict => v.is_positive(),
                    SignClaim::Nonnegative => !v.is_negative(),
                });
                if claim == SignClaim::Nonnegative {
                    for (a, v) in samples.iter().zip(&values) {
                        if v.is_zero() && k >= n.min(m) {
                            scan.zeros_outside_strict_range.push(ZeroSample {
                                n,
                                m,
                                k,
                                a: a.clone(),
                            });
                        }
                    }
                }
                let min = values.iter().min().cloned().unwrap_or_else(Rational::zero);
                let (identity, rhs) = match claim {
                    SignClaim::Strict => ("positivity-strict", "> 0"),
                    SignClaim::Nonnegative => ("positivity-nonneg", ">= 0"),
                };
                scan.reports.push(IdentityReport {
                    identity: identity.to_string(),
                    params: Params::new().with("n", n).with("m", m).with("k", k),
                    holds,
                    lhs: format!("min {}", format_rational(&min)),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    Ok(scan)
}

/// Which `2F1` relation a randomized suite exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HypergeomIdentity {
    Pfaff,
    Gauss,
    Contiguous,
    Quadratic,
}

impl HypergeomIdentity {
    pub const ALL: [HypergeomIdentity; 4] = [
        HypergeomIdentity::Pfaff,
        HypergeomIdentity::Gauss,
        HypergeomIdentity::Contiguous,
        HypergeomIdentity::Quadratic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HypergeomIdentity::Pfaff => "pfaff",
            HypergeomIdentity::Gauss => "gauss",
            HypergeomIdentity::Contiguous => "contiguous",
            HypergeomIdentity::Quadratic => "quadratic",
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-12..=12), rng.gen_range(1..=6))
}

/// Random rational that is not a nonpositive integer.
fn random_parameter(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let c = random_rational(rng);
        if !(c.is_integer() && !c.is_positive()) {
            return c;
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng, forbidden: &Rational) -> Rational {
    loop {
        let x = random_rational(rng);
        if x != *forbidden {
            return x;
        }
    }
}

/// `trials` random terminating parameter draws for one relation, seeded
/// deterministically.
pub fn hypergeom_suite(
    kind: HypergeomIdentity,
    trials: usize,
    seed: u64,
) -> Result<Vec<IdentityReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let order = rng.gen_range(0..=8);
        let a = int(-order);
        let report = match kind {
            HypergeomIdentity::Pfaff => {
                let b = random_rational(&mut rng);
                let c = random_parameter(&mut rng);
                let x = random_point(&mut rng, &int(1));
                let p = F21Params::new(a.clone(), b.clone(), c.clone())?;
                let params = hyper_params(&a, &b, &c, &x);
                IdentityReport::from_comparison("pfaff", params, pfaff_check(&p, &x)?)
            }
            HypergeomIdentity::Gauss | HypergeomIdentity::Contiguous => {
                let b = random_rational(&mut rng);
                let c = random_parameter(&mut rng);
                let z = random_rational(&mut rng);
                let params = hyper_params(&a, &b, &c, &z);
                let cmp = if kind == HypergeomIdentity::Gauss {
                    gauss_contiguous_check(&a, &b, &c, &z)?
                } else {
                    contiguous2_check(&a, &b, &c, &z)?
                };
                IdentityReport::from_comparison(kind.name(), params, cmp)
            }
            HypergeomIdentity::Quadratic => {
                let b = int(-order);
                let a_param = loop {
                    let cand = random_rational(&mut rng);
                    let twice = &cand * int(2);
                    let shifted = &cand + rat(1, 2);
                    let pole = |z: &Rational| z.is_integer() && !z.is_positive();
                    if !pole(&twice) && !pole(&shifted) {
                        break cand;
                    }
                };
                let x = random_point(&mut rng, &int(2));
                let params = Params::new()
                    .with("a", format_rational(&a_param))
                    .with("b", format_rational(&b))
                    .with("x", format_rational(&x));
                IdentityReport::from_comparison(
                    "quadratic",
                    params,
                    quadratic_transform_check(&a_param, &b, &x)?,
                )
            }
        };
        out.push(report);
    }
    Ok(out)
}

fn hyper_params(a: &Rational, b: &Rational, c: &Rational, x: &Rational) -> Params {
    Params::new()
        .with("A", format_rational(a))
        .with("B", format_rational(b))
        .with("C", format_rational(c))
        .with("x", format_rational(x))
}

/// Every `corollary1_check` with `1 <= i, m, n <= max` and `0 <= r <= 2i`.
pub fn corollary1_grid(max: usize) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for i in 1..=max {
        for m in 1..=max {
            for n in 1..=max {
                for r in 0..=2 * i {
                    out.push(corollary1_check(i, m, n, r)?);
                }
            }
        }
    }
    Ok(out)
}

/// Every `equal_degree_check` with `n <= max`, `i <= n`.
pub fn equal_degree_grid(max: usize) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for n in 0..=max {
        for i in 0..=n {
            out.push(equal_degree_check(n, i)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corollary1_examples() {
        let r = corollary1_check(1, 1, 1, 2).unwrap();
        assert!(r.holds, "{r}");
        assert_eq!(r.rhs, "1");
        let r = corollary1_check(1, 2, 1, 0).unwrap();
        assert!(r.holds, "{r}");
        assert_eq!(r.rhs, "6");
        assert!(corollary1_check(2, 3, 2, 1).unwrap().holds);
    }

    #[test]
    fn corollary1_ranges() {
        assert!(corollary1_check(0, 1, 1, 0).is_err());
        assert!(corollary1_check(1, 1, 1, 3).is_err());
    }

    #[test]
    fn corollary1_weight_is_the_removable_limit() {
        // i <= m: ordinary quotient
        for (i, m, l) in [(2, 3, 1), (3, 5, 2), (1, 1, 0)] {
            let direct = binomial_general((m + i) as i64, 2 * i)
                / pochhammer(&int(1 + m as i64 - i as i64), l);
            assert_eq!(corollary1_weight(i, m, l), direct);
        }
        // i > m: (m-i+l+1)_{2i-l}/(2i)! with i=2, m=1, l=1 -> (1)_3/24
        assert_eq!(corollary1_weight(2, 1, 1), rat(6, 24));
    }

    #[test]
    fn corollary1_fails_beyond_i_le_n() {
        // the re-indexed double sum truncates l at n
        let r = corollary1_check(2, 2, 1, 0).unwrap();
        assert!(!r.holds);
        assert_eq!(r.lhs, "0");
        assert_eq!(r.rhs, "1");
    }

    #[test]
    fn equal_degree_examples() {
        let r = equal_degree_check(1, 0).unwrap();
        assert!(r.holds, "{r}");
        assert_eq!(
            equal_degree_rhs(1, 0).unwrap(),
            Poly::from_ints(&[1, -3, 3])
        );
        assert!(equal_degree_check(2, 1).unwrap().holds);
        assert!(equal_degree_check(3, 3).unwrap().holds);
        assert!(equal_degree_check(2, 3).is_err());
    }

    #[test]
    fn pfaff_positivity_small() {
        assert!(pfaff_positivity_check(1, 4, 1).unwrap().holds);
        assert!(pfaff_positivity_check(2, 5, 3).unwrap().holds);
        assert!(pfaff_positivity_check(2, 5, 4).is_err());
        assert!(pfaff_positivity_check(2, 5, 1).is_err());
    }

    #[test]
    fn positivity_examples() {
        let half = rat(1, 2);
        assert_eq!(beta_single_sum(3, 5, 4).unwrap().eval(&half), rat(7, 256));
        assert_eq!(beta_single_sum(1, 1, 1).unwrap().eval(&half), rat(1, 4));
        let scan = positivity_scan(4, &tenths()).unwrap();
        assert!(scan.passed());
        assert!(positivity_scan(2, &[int(0)]).is_err());
        assert!(positivity_scan(2, &[int(1)]).is_err());
    }

    #[test]
    fn suites_are_deterministic() {
        let a = hypergeom_suite(HypergeomIdentity::Pfaff, 20, 7).unwrap();
        let b = hypergeom_suite(HypergeomIdentity::Pfaff, 20, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.holds));
    }

    #[test]
    fn report_json_shape() {
        let r = corollary1_check(1, 1, 1, 2).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["identity"], "corollary1");
        assert_eq!(v["params"]["r"], "2");
        assert_eq!(v["holds"], true);
    }
}
