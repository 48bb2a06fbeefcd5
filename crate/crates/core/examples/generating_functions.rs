//! Expands both bivariate generating functions and their `y = 1` specialisations.

use strip_divisions::lattice::Family;
use strip_divisions::series::{expand_rational, gf_for, specialize_y};

fn main() -> strip_divisions::Result<()> {
    let order = 6;
    for family in [Family::ChocolateBar, Family::Honeycomb] {
        let gf = gf_for(family);
        println!("{family}: numerator {:?}", gf.numerator.iter().map(|p| p.to_string()).collect::<Vec<_>>());
        println!("{family}: denominator {:?}", gf.denominator.iter().map(|p| p.to_string()).collect::<Vec<_>>());

        let series = expand_rational(&gf, order)?;
        for n in 1..=order {
            println!("  [x^{n}] {}", series.term(n));
        }

        let totals = specialize_y(&gf).expand(order)?;
        let shown: Vec<String> = totals.iter().skip(1).map(|c| c.to_string()).collect();
        println!("  totals: {}", shown.join(", "));
    }
    Ok(())
}
