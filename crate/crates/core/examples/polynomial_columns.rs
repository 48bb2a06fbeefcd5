//! Fits each fixed-k column (and each bar diagonal) with an exact polynomial in n.

use strip_divisions::analysis::{bar_diagonal_leading_coefficient, check_column_recurrence, fit_column, fit_diagonal};
use strip_divisions::counting::{bar_triangle, hex_triangle};

fn main() -> strip_divisions::Result<()> {
    let n_max = 40;
    for triangle in [bar_triangle(n_max), hex_triangle(n_max)] {
        println!("{}", triangle.family());
        for k in 1..=5 {
            let p = fit_column(&triangle, k)?;
            let rec = check_column_recurrence(&triangle, k, n_max)?;
            println!("  c_{k}(n) = {p}    (binomial recurrence holds: {rec})");
        }
    }

    let bars = bar_triangle(n_max);
    for j in 0..=4 {
        let p = fit_diagonal(&bars, j)?;
        println!("r_(2n-{j})(n) = {p}    lead {} = 3^{j}/{j}! is {}", p.leading_coefficient(),
            p.leading_coefficient() == bar_diagonal_leading_coefficient(j));
    }
    Ok(())
}
