use strip_divisions::oracle::OracleConfig;
use strip_divisions::verify::{run_suite, Suite};

fn main() {
    let results = run_suite(Suite::All, 30, &OracleConfig::default());
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} checks, {failed} failed", results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
