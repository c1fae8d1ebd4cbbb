//! Randomized exact checks of the Pfaff, contiguous and quadratic
//! transformations, plus a terminating series evaluated at 1/a.

use bessel_linc::exact::LaurentPoly;
use bessel_linc::hypergeom::F21Params;
use bessel_linc::identities::{hypergeom_suite, HypergeomIdentity};

fn main() -> bessel_linc::Result<()> {
    let seed = 7;
    for kind in HypergeomIdentity::ALL {
        let reports = hypergeom_suite(kind, 200, seed)?;
        let passed = reports.iter().filter(|r| r.holds).count();
        println!(
            "{:>10}: {passed}/{} trials exact",
            kind.name(),
            reports.len()
        );
        if let Some(r) = reports.last() {
            println!("            last draw {}", r.params);
        }
    }
    let f = F21Params::from_ints(-4, 2, 6)?;
    println!(
        "2F1(-4, 2; 6; 1/a) = {}",
        f.eval(&LaurentPoly::inverse_var())
    );
    Ok(())
}
