//! Writes both triangles as b-files into a directory (default: current).

use std::path::PathBuf;

use strip_divisions::counting::{bar_triangle, hex_triangle};
use strip_divisions::export::{to_bfile, to_csv};

fn main() -> std::io::Result<()> {
    let dir: PathBuf = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| ".".into());
    let n_max = 30;
    for t in [bar_triangle(n_max), hex_triangle(n_max)] {
        let name = t.family().short_name();
        std::fs::write(dir.join(format!("b-{name}.txt")), to_bfile(&t))?;
        std::fs::write(dir.join(format!("{name}.csv")), to_csv(&t))?;
        println!("wrote {name}: {} entries", t.rows().map(|(_, r)| r.len()).sum::<usize>());
    }
    Ok(())
}
