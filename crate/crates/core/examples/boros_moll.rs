//! The generalized Boros-Moll integral: exact right side against adaptive
//! quadrature, and the weights gamma_k by two routes.

use bessel_linc::exact::format_rational;
use bessel_linc::student_t::{
    boros_moll_lhs_quadrature, boros_moll_rhs, gamma_coeffs, gamma_coeffs_printed, gamma_from_beta,
};
use num_rational::BigRational;

fn main() -> bessel_linc::Result<()> {
    let g = gamma_coeffs(1, 1)?;
    let unweighted = gamma_coeffs_printed(1, 1)?;
    println!(
        "gamma^(1,1) = {:?}, sum {}; unweighted sum {}",
        g.values.iter().map(format_rational).collect::<Vec<_>>(),
        format_rational(&g.sum()),
        format_rational(&unweighted.sum())
    );
    for (n, m) in [(2, 3), (4, 1)] {
        assert_eq!(gamma_coeffs(n, m)?, gamma_from_beta(n, m)?);
    }

    println!(
        "{:>2} {:>2} {:>5} {:>22} {:>22} {:>10}",
        "n", "m", "x", "exact", "quadrature", "rel dev"
    );
    for (n, m) in [(1, 1), (2, 3), (3, 3)] {
        for x in [0.0, 0.5, 2.0] {
            let exact = boros_moll_rhs(n, m, &BigRational::from_float(x).expect("finite"))?;
            let quad = boros_moll_lhs_quadrature(n, m, x, 1e-12)?;
            let dev = (quad.value / exact.to_f64() - 1.0).abs();
            println!(
                "{n:>2} {m:>2} {x:>5} {:>22} {:>22.15e} {dev:>10.2e}",
                exact.to_string(),
                quad.value
            );
        }
    }
    Ok(())
}
