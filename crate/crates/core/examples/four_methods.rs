//! Computes every row with n, m <= 8 by all four methods and reports
//! agreement and timings.

use std::time::Instant;

use bessel_linc::linearize::{beta_row, Agreement, Method};

fn main() -> bessel_linc::Result<()> {
    let max = 8;
    for method in Method::ALL {
        let start = Instant::now();
        for n in 0..=max {
            for m in 0..=max {
                beta_row(method, n, m)?;
            }
        }
        println!("{method:>11}: {:?}", start.elapsed());
    }
    let mut rows = 0;
    for n in 0..=max {
        for m in 0..=max {
            let agreement = Agreement::compute(n, m)?;
            assert!(agreement.all_agree(), "methods disagree at ({n}, {m})");
            rows += 1;
        }
    }
    println!("{rows} rows agree across all four methods");
    Ok(())
}
