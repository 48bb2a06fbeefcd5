//! Mean number of parts, its first difference and the limiting slope.

use strip_divisions::analysis::{expected_parts, AsymptoticProfile};
use strip_divisions::counting::{bar_triangle, hex_triangle};
use strip_divisions::export::format_decimal;
use strip_divisions::lattice::Family;

fn main() -> strip_divisions::Result<()> {
    let n_max = 100;
    for family in [Family::ChocolateBar, Family::Honeycomb] {
        let triangle = match family {
            Family::ChocolateBar => bar_triangle(n_max + 1),
            Family::Honeycomb => hex_triangle(n_max + 1),
        };
        let profile = AsymptoticProfile::observe(family, &triangle, n_max)?;
        println!("{family}: slope -> {:.10}, growth -> {:.10}", profile.slope_target, profile.growth_target);
        for n in [2, 5, 10, 25, 50, 100] {
            let e = expected_parts(&triangle, n)?;
            println!(
                "  n={n:<3} E={:<16} dE={:.10} ratio={:.10}",
                format_decimal(&e, 10),
                profile.observed_slope[n - 1],
                profile.observed_growth[n - 1]
            );
        }
    }
    Ok(())
}
