//! Linearization coefficients `beta_k^{(n,m)}(a)` by the closed single sum,
//! its two terminating `2F1` forms, and the `(n, m)` recurrence.
//!
//! Both closed forms contain `(1-a)^{k-n}`, which only makes sense as a
//! polynomial once `n <= m` and `k >= n`. Every entry point therefore
//! reduces to that case first: for `n > m` it computes the `(m, n)`
//! coefficient and reflects `a -> 1 - a`, and for `k < min(n, m)` the
//! coefficient is zero.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::Serialize;

use crate::carlitz::beta_oracle;
use crate::exact::{binomial_general, int, pochhammer_half, rat, LaurentPoly, Poly, Rational};
use crate::hypergeom::F21Params;
use crate::{check_degree, Error, Result};

/// `beta_k` for `k = 0..=n+m`.
pub type BetaRow = Vec<Poly>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    SingleSum,
    Hypergeom,
    Recurrence,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::SingleSum,
        Method::Hypergeom,
        Method::Recurrence,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::SingleSum => "single-sum",
            Method::Hypergeom => "hypergeom",
            Method::Recurrence => "recurrence",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                expected: "one of single-sum, hypergeom, recurrence, oracle",
            })
    }
}

/// Which of the two hypergeometric forms to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `k >= ceil((n+m-1)/2)`: `2F1(-2(n+m-k), k-m+1; 2k-n-m+2; 1/a)`.
    Upper,
    /// `k <= floor((n+m-1)/2)`: `2F1(-n-m-1, n-k; n+m-2k; 1/a)`.
    Lower,
}

impl Branch {
    pub fn applies(self, n: usize, m: usize, k: usize) -> bool {
        let twice_k = 2 * k as i64;
        let edge = (n + m) as i64 - 1;
        match self {
            Branch::Upper => twice_k >= edge,
            Branch::Lower => twice_k <= edge,
        }
    }
}

fn check_index(n: usize, m: usize, k: usize) -> Result<()> {
    check_degree(n + m)?;
    if k > n + m {
        return Err(Error::out_of_range("k", k as i64, format!("0..={}", n + m)));
    }
    Ok(())
}

/// `(1/2)_{n+m-k} (1/2)_k / ((1/2)_n (1/2)_m)`.
fn half_prefactor(n: usize, m: usize, k: usize) -> Rational {
    pochhammer_half(n + m - k) * pochhammer_half(k) / (pochhammer_half(n) * pochhammer_half(m))
}

/// `a^e (1-a)^f` as a Laurent polynomial.
fn monomial_factor(a_exp: i64, one_minus_a_exp: usize) -> LaurentPoly {
    Poly::one_minus_var()
        .pow(one_minus_a_exp)
        .to_laurent()
        .shift(a_exp)
}

/// Shared reduction: swap to `n <= m`, zero below `min(n, m)`.
fn reduced(
    n: usize,
    m: usize,
    k: usize,
    body: impl Fn(usize, usize, usize) -> Result<Poly>,
) -> Result<Poly> {
    check_index(n, m, k)?;
    if n > m {
        return Ok(reduced(m, n, k, body)?.reflect());
    }
    if k < n {
        return Ok(Poly::zero());
    }
    body(n, m, k)
}

fn expect_polynomial(p: LaurentPoly, n: usize, m: usize, k: usize) -> Poly {
    assert!(
        p.min_degree() >= 0,
        "beta_{k}^({n},{m}) kept a negative power of a: {p}"
    );
    p.to_poly().expect("nonnegative min degree")
}

/// The closed single-sum formula
///
/// ```text
/// a^{2n+m-k} (1-a)^{k-n} (1/2)_{n+m-k} (1/2)_k / ((1/2)_n (1/2)_m)
///   * sum_{j=0}^{2(n+m-k)} (-1)^j C(n+m+1, 2n+2m-2k-j) C(k-m+j, j) a^{-j}
/// ```
pub fn beta_single_sum(n: usize, m: usize, k: usize) -> Result<Poly> {
    reduced(n, m, k, |n, m, k| {
        let total = n + m;
        let span = 2 * (total - k);
        let sum: Vec<Rational> = (0..=span)
            .map(|j| {
                let sign = if j % 2 == 0 { int(1) } else { int(-1) };
                sign * binomial_general(total as i64 + 1, span - j)
                    * binomial_general(k as i64 - m as i64 + j as i64, j)
            })
            .rev()
            .collect();
        // reversed: coefficient of a^{-span}, ..., a^0
        let series = LaurentPoly::new(-(span as i64), sum);
        let factor = monomial_factor((2 * n + m - k) as i64, k - n);
        let beta = (&series * &factor).scale(&half_prefactor(n, m, k));
        Ok(expect_polynomial(beta, n, m, k))
    })
}

/// The hypergeometric form appropriate for `k`.
pub fn beta_hypergeom(n: usize, m: usize, k: usize) -> Result<Poly> {
    let branch = if Branch::Upper.applies(n, m, k) {
        Branch::Upper
    } else {
        Branch::Lower
    };
    beta_hypergeom_branch(n, m, k, branch)
}

/// One specific hypergeometric form. The branch condition is checked on the
/// reduced indices (`n <= m`); when `n + m - 1` is even both branches apply
/// at `k = (n+m-1)/2`.
pub fn beta_hypergeom_branch(n: usize, m: usize, k: usize, branch: Branch) -> Result<Poly> {
    reduced(n, m, k, |n, m, k| {
        if !branch.applies(n, m, k) {
            return Err(Error::out_of_range(
                "k",
                k as i64,
                format!("{branch:?} branch condition for n={n}, m={m}"),
            ));
        }
        let total = n + m;
        let x = LaurentPoly::inverse_var();
        let (scalar, a_exp, series) = match branch {
            Branch::Upper => {
                let f = F21Params::new(
                    int(-2 * (total - k) as i64),
                    int(k as i64 - m as i64 + 1),
                    int(2 * k as i64 - total as i64 + 2),
                )?;
                let c = binomial_general(total as i64 + 1, 2 * (total - k));
                (c, (2 * n + m - k) as i64, f.eval(&x))
            }
            Branch::Lower => {
                let f = F21Params::new(
                    int(-(total as i64) - 1),
                    int(n as i64 - k as i64),
                    int(total as i64 - 2 * k as i64),
                )?;
                let sign = if (total + 1) % 2 == 0 {
                    int(1)
                } else {
                    int(-1)
                };
                let c = binomial_general(n as i64 - k as i64 - 1, total - 2 * k - 1);
                (sign * c, (n + k + 1) as i64, f.eval(&x))
            }
        };
        let factor = monomial_factor(a_exp, k - n);
        let beta = (&series * &factor).scale(&(scalar * half_prefactor(n, m, k)));
        Ok(expect_polynomial(beta, n, m, k))
    })
}

/// The `m = 0` row: `beta_n^{(n,0)} = a^n` and, for `k < n`,
///
/// ```text
/// a^k (1-a) C(n,k)/C(2n,2k) sum_{j=0}^{min(n-k-1, k)} C(n+1, k-j) C(n-k-1, j) (1-a)^j
/// ```
pub fn beta_boundary(n: usize, k: usize) -> Result<Poly> {
    check_degree(n)?;
    if k > n {
        return Err(Error::out_of_range("k", k as i64, format!("0..={n}")));
    }
    if k == n {
        return Ok(Poly::monomial(Rational::one(), n));
    }
    let one_minus_a = Poly::one_minus_var();
    let upper = (n - k - 1).min(k);
    let mut sum = Poly::zero();
    let mut power = Poly::one();
    for j in 0..=upper {
        let c = binomial_general(n as i64 + 1, k - j) * binomial_general((n - k - 1) as i64, j);
        sum = &sum + &power.scale(&c);
        power = &power * &one_minus_a;
    }
    let ratio = binomial_general(n as i64, k) / binomial_general(2 * n as i64, 2 * k);
    Ok((&sum * &one_minus_a).shift(k).scale(&ratio))
}

/// Full boundary row `beta_k^{(n,0)}`, `k = 0..=n`.
pub fn boundary_row(n: usize) -> Result<BetaRow> {
    (0..=n).map(|k| beta_boundary(n, k)).collect()
}

/// Rows keyed by `(n, m)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BetaTable {
    entries: BTreeMap<(usize, usize), BetaRow>,
}

impl BetaTable {
    pub fn new() -> Self {
        BetaTable::default()
    }

    /// Every row with `n <= n_max`, `m <= m_max` by one method.
    pub fn build(method: Method, n_max: usize, m_max: usize) -> Result<Self> {
        let mut table = BetaTable::new();
        let mut rec = RecurrenceTable::new();
        for n in 0..=n_max {
            for m in 0..=m_max {
                let row = match method {
                    Method::Recurrence => rec.row(n, m)?.clone(),
                    _ => beta_row(method, n, m)?,
                };
                table.insert(n, m, row);
            }
        }
        Ok(table)
    }

    pub fn insert(&mut self, n: usize, m: usize, row: BetaRow) {
        debug_assert_eq!(row.len(), n + m + 1);
        self.entries.insert((n, m), row);
    }

    pub fn get(&self, n: usize, m: usize) -> Option<&BetaRow> {
        self.entries.get(&(n, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &BetaRow)> {
        self.entries.iter()
    }
}

/// Memoized recurrence
///
/// ```text
/// beta_{k+1}^{(n,m)} / (2k+1) = a^2/(2n-1) beta_k^{(n-1,m)} + (1-a)^2/(2m-1) beta_k^{(n,m-1)}
/// ```
///
/// with `beta_0^{(n,m)} = 0` for `n, m >= 1`, the boundary row at `m = 0`,
/// and its reflection at `n = 0`. Each row is computed once and never
/// modified afterwards. The table is not shared between threads; give each
/// worker its own.
#[derive(Clone, Debug, Default)]
pub struct RecurrenceTable {
    rows: HashMap<(usize, usize), BetaRow>,
}

impl RecurrenceTable {
    pub fn new() -> Self {
        RecurrenceTable::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&mut self, n: usize, m: usize) -> Result<&BetaRow> {
        check_degree(n + m)?;
        if !self.rows.contains_key(&(n, m)) {
            self.fill(n, m)?;
        }
        Ok(&self.rows[&(n, m)])
    }

    fn fill(&mut self, n_max: usize, m_max: usize) -> Result<()> {
        let a_sq = Poly::monomial(Rational::one(), 2);
        let b_sq = Poly::one_minus_var().pow(2);
        for n in 0..=n_max {
            for m in 0..=m_max {
                if self.rows.contains_key(&(n, m)) {
                    continue;
                }
                let row = match (n, m) {
                    (_, 0) => boundary_row(n)?,
                    (0, _) => boundary_row(m)?.iter().map(Poly::reflect).collect(),
                    _ => {
                        let left = &self.rows[&(n - 1, m)];
                        let right = &self.rows[&(n, m - 1)];
                        let wl = a_sq.scale(&rat(1, 2 * n as i64 - 1));
                        let wr = b_sq.scale(&rat(1, 2 * m as i64 - 1));
                        let mut row = Vec::with_capacity(n + m + 1);
                        row.push(Poly::zero());
                        for k in 0..n + m {
                            let next = &(&wl * &left[k]) + &(&wr * &right[k]);
                            row.push(next.scale(&int(2 * k as i64 + 1)));
                        }
                        row
                    }
                };
                self.rows.insert((n, m), row);
            }
        }
        Ok(())
    }
}

/// One-shot recurrence row with a private memo table.
pub fn beta_recurrence(n: usize, m: usize) -> Result<BetaRow> {
    RecurrenceTable::new().row(n, m).cloned()
}

/// Full row by the requested method.
pub fn beta_row(method: Method, n: usize, m: usize) -> Result<BetaRow> {
    check_degree(n + m)?;
    match method {
        Method::SingleSum => (0..=n + m).map(|k| beta_single_sum(n, m, k)).collect(),
        Method::Hypergeom => (0..=n + m).map(|k| beta_hypergeom(n, m, k)).collect(),
        Method::Recurrence => beta_recurrence(n, m),
        Method::Oracle => beta_oracle(n, m),
    }
}

/// Rows from all four methods side by side.
#[derive(Clone, Debug)]
pub struct Agreement {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<(Method, BetaRow)>,
}

impl Agreement {
    pub fn compute(n: usize, m: usize) -> Result<Self> {
        let rows = Method::ALL
            .into_iter()
            .map(|method| beta_row(method, n, m).map(|r| (method, r)))
            .collect::<Result<_>>()?;
        Ok(Agreement { n, m, rows })
    }

    pub fn all_agree(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].1 == w[1].1)
    }

    /// Methods whose `k`-th entry differs from the oracle's.
    pub fn disagreements(&self, k: usize) -> Vec<Method> {
        let oracle = &self
            .rows
            .iter()
            .find(|(m, _)| *m == Method::Oracle)
            .expect("oracle row present")
            .1;
        self.rows
            .iter()
            .filter(|(_, row)| row[k] != oracle[k])
            .map(|(m, _)| *m)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Poly {
        Poly::one_minus_var()
    }

    fn a_pow(e: usize) -> Poly {
        Poly::monomial(int(1), e)
    }

    #[test]
    fn single_sum_examples() {
        let expected = a_pow(7) * b() * Poly::constant(int(7));
        assert_eq!(beta_single_sum(3, 5, 4).unwrap(), expected);
        assert!(beta_single_sum(3, 5, 1).unwrap().is_zero());
        assert_eq!(
            beta_single_sum(1, 1, 1).unwrap(),
            Poly::from_ints(&[1, -3, 3])
        );
    }

    #[test]
    fn hypergeom_examples() {
        let top = a_pow(3) * b().pow(5) * Poly::constant(int(143));
        assert_eq!(beta_hypergeom(3, 5, 8).unwrap(), top);
        let six = a_pow(1)
            * b().pow(3)
            * Poly::from_ints(&[5, -36, 108, -168, 126])
            * Poly::constant(rat(11, 5));
        assert_eq!(beta_hypergeom(3, 5, 6).unwrap(), six);
    }

    #[test]
    fn branches_meet_on_the_overlap() {
        let upper = beta_hypergeom_branch(1, 2, 1, Branch::Upper).unwrap();
        let lower = beta_hypergeom_branch(1, 2, 1, Branch::Lower).unwrap();
        assert_eq!(upper, lower);
        assert_eq!(upper, beta_single_sum(1, 2, 1).unwrap());
        // n + m - 1 = 5: k = 2 is lower-only, k = 3 upper-only
        assert!(beta_hypergeom_branch(2, 4, 2, Branch::Upper).is_err());
        assert!(beta_hypergeom_branch(2, 4, 3, Branch::Lower).is_err());
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(beta_boundary(4, 4).unwrap(), a_pow(4));
        assert_eq!(beta_boundary(1, 0).unwrap(), b());
        assert_eq!(beta_boundary(3, 1).unwrap(), beta_oracle(3, 0).unwrap()[1]);
        assert!(beta_boundary(2, 3).is_err());
    }

    #[test]
    fn recurrence_examples() {
        let row = beta_recurrence(1, 1).unwrap();
        assert_eq!(
            row,
            vec![
                Poly::zero(),
                Poly::from_ints(&[1, -3, 3]),
                Poly::from_ints(&[0, 3, -3])
            ]
        );
        let row = beta_recurrence(3, 5).unwrap();
        let five = b().pow(2) * Poly::from_ints(&[1, -9, 36, -84, 126, -126, 84]);
        assert_eq!(row[5], five);
        assert_eq!(beta_recurrence(6, 0).unwrap()[6], a_pow(6));
    }

    #[test]
    fn memo_fills_every_subrow_once() {
        let mut table = RecurrenceTable::new();
        table.row(3, 2).unwrap();
        assert_eq!(table.len(), 12);
        table.row(2, 2).unwrap();
        assert_eq!(table.len(), 12);
    }

    #[test]
    fn swap_reduction_matches_reflection() {
        for (n, m) in [(4, 1), (5, 2), (3, 0)] {
            for k in 0..=n + m {
                let direct = beta_single_sum(n, m, k).unwrap();
                assert_eq!(direct, beta_single_sum(m, n, k).unwrap().reflect());
                assert_eq!(direct, beta_hypergeom(n, m, k).unwrap());
            }
        }
    }

    #[test]
    fn range_errors() {
        assert!(beta_single_sum(2, 2, 5).is_err());
        assert!(beta_hypergeom(2, 2, 5).is_err());
        assert!(matches!(
            beta_row(Method::Oracle, 60, 10),
            Err(Error::DegreeCap { .. })
        ));
    }

    #[test]
    fn agreement_small() {
        let ag = Agreement::compute(2, 3).unwrap();
        assert!(ag.all_agree());
        assert!(ag.disagreements(3).is_empty());
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("all".parse::<Method>().is_err());
    }
}
