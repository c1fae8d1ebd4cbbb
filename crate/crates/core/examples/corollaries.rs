//! Exact checks of the consequences of the closed form: double-sum identity,
//! positivity, the Pfaff positivity form and the equal-degree formula.

use bessel_linc::identities::{
    corollary1_grid, equal_degree_grid, pfaff_positivity_check, positivity_scan, tenths,
};

fn main() -> bessel_linc::Result<()> {
    let grid = corollary1_grid(4)?;
    let failing: Vec<_> = grid.iter().filter(|r| !r.holds).collect();
    println!(
        "double sum: {} of {} cases hold",
        grid.len() - failing.len(),
        grid.len()
    );
    for r in failing.iter().take(3) {
        println!("  {r}");
    }

    let scan = positivity_scan(6, &tenths())?;
    println!(
        "positivity: {} coefficients scanned, passed = {}, {} zero samples",
        scan.reports.len(),
        scan.passed(),
        scan.zeros_outside_strict_range.len()
    );

    for (n, m, k) in [(1, 4, 1), (2, 5, 2), (2, 5, 3), (3, 8, 4)] {
        println!("{}", pfaff_positivity_check(n, m, k)?);
    }

    let eq = equal_degree_grid(6)?;
    println!(
        "equal degree: all {} cases hold = {}",
        eq.len(),
        eq.iter().all(|r| r.holds)
    );
    Ok(())
}
