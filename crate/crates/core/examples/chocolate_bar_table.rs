//! Prints the bar triangle `r_k(n)` with row totals.
//!
//! ```bash
//! cargo run --example chocolate_bar_table -- 8
//! ```

use strip_divisions::counting::{bar_q_counts, bar_total, bar_triangle};

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let triangle = bar_triangle(n_max);
    let q = bar_q_counts(n_max);

    for (n, row) in triangle.rows() {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        println!("n={n:<2} total={:<10} {}", bar_total(n), cells.join(" "));
    }

    // last column split, by part count
    let last: Vec<String> = q[n_max - 1].iter().map(|c| c.to_string()).collect();
    println!("q_k({n_max}) = {}", last.join(" "));
}
