//! Lists every division of a honeycomb strip and checks the count against
//! the binomial closed form.

use strip_divisions::counting::hex_closed_form;
use strip_divisions::lattice::Lattice;
use strip_divisions::oracle::{enumerate_divisions, OracleConfig};

fn main() -> strip_divisions::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let lattice = Lattice::hex(n);
    let graph = lattice.graph()?;
    println!("edges: {:?}", graph.edges());

    let mut per_k = vec![0u64; n + 1];
    for division in enumerate_divisions(lattice, &OracleConfig::default())? {
        per_k[division.part_count()] += 1;
        println!("  {division}");
    }
    for k in 1..=n {
        println!("k={k}: {} listed, C(n+k-2, n-k) = {}", per_k[k], hex_closed_form(n, k as i64));
    }
    Ok(())
}
