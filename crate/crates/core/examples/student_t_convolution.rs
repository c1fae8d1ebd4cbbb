//! The density of a X + (1-a) Y for Student-t variables with odd degrees of
//! freedom is the mixture sum_k beta_k(a) f_{k+1/2}: compare it with a direct
//! convolution integral.

use bessel_linc::exact::{rat, rational_to_f64};
use bessel_linc::linearize::beta_row;
use bessel_linc::linearize::Method;
use bessel_linc::student_t::{convolution_expansion, convolution_quadrature};

fn main() -> bessel_linc::Result<()> {
    let (n, m) = (2, 3);
    for a in [rat(1, 4), rat(1, 2), rat(3, 4)] {
        let row = beta_row(Method::SingleSum, n, m)?;
        let af = rational_to_f64(&a);
        for x in [0.0, 0.7, 3.0] {
            let mixture = convolution_expansion(&row, &a, x);
            let direct = convolution_quadrature(n, m, af, x, 1e-13)?.value;
            println!("a={af:<4} x={x:<3} mixture={mixture:.15e} convolution={direct:.15e}");
        }
    }
    Ok(())
}
