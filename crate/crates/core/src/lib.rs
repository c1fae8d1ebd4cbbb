//! Exact linearization coefficients of Bessel polynomials.
//!
//! The Bessel polynomials `q_n(u) = 1F1(-n; -2n; 2u)` satisfy
//!
//! ```text
//! q_n(a u) q_m((1 - a) u) = sum_{k=0}^{n+m} beta_k^{(n,m)}(a) q_k(u)
//! ```
//!
//! and this crate computes the coefficients `beta_k^{(n,m)}(a)` as exact
//! polynomials in `a` over the rationals by four independent routes:
//!
//! - [`carlitz::beta_oracle`]: expand the product in the monomial basis and
//!   convert back with Carlitz's connection coefficients,
//! - [`linearize::beta_single_sum`]: the closed single-sum formula,
//! - [`linearize::beta_hypergeom`]: the same formula as a terminating `2F1`,
//! - [`linearize::RecurrenceTable`]: the three-term recurrence in `(n, m)`
//!   seeded by the `m = 0` boundary row.
//!
//! On top of that, [`hypergeom`] checks the Pfaff, contiguous and quadratic
//! transformations used along the way, [`identities`] verifies the double-sum,
//! positivity and equal-degree corollaries, and [`student_t`] validates the
//! generalized Boros–Moll integral against adaptive quadrature.
//!
//! Runnable walkthroughs for each capability live in `examples/`; the
//! `bessel-linc` binary exposes the same functionality from the command line.

pub mod basis;
pub mod carlitz;
pub mod cli;
pub mod exact;
pub mod hypergeom;
pub mod identities;
pub mod linearize;
pub mod quadrature;
pub mod student_t;

mod error;

pub use error::{Error, Result};
pub use exact::{LaurentPoly, Poly, Rational};

/// Largest polynomial degree accepted at the public API boundary.
pub const DEGREE_CAP: usize = 64;

pub(crate) fn check_degree(degree: usize) -> Result<()> {
    if degree > DEGREE_CAP {
        Err(Error::DegreeCap {
            degree,
            cap: DEGREE_CAP,
        })
    } else {
        Ok(())
    }
}
