//! The row beta_k^{(3,5)}(a), k = 0..=8, with values at a = 1/2.

use bessel_linc::exact::{format_rational, rat};
use bessel_linc::linearize::beta_single_sum;

fn main() -> bessel_linc::Result<()> {
    let half = rat(1, 2);
    for k in 0..=8 {
        let beta = beta_single_sum(3, 5, k)?;
        println!("beta_{k}(a) = {beta}");
        println!("    at 1/2: {}", format_rational(&beta.eval(&half)));
    }
    Ok(())
}
