//! Prints q_n, theta_n and y_n for small degrees and checks the reversal
//! relation y_n(u) = u^n theta_n(1/u).

use bessel_linc::basis::{coeffs, theta_scale, BesselKind};

fn main() -> bessel_linc::Result<()> {
    for n in 0..=5 {
        for kind in [BesselKind::Q, BesselKind::Theta, BesselKind::Y] {
            let poly = coeffs(kind, n)?.to_poly().to_string().replace('a', "u");
            println!("{kind}_{n}(u) = {poly}");
        }
        let mut theta = coeffs(BesselKind::Theta, n)?.coeffs;
        theta.reverse();
        assert_eq!(theta, coeffs(BesselKind::Y, n)?.coeffs);
        println!("  theta_{n} / q_{n} = {}\n", theta_scale(n));
    }
    Ok(())
}
