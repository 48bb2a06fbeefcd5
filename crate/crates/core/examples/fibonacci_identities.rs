use num_bigint::BigUint;
use strip_divisions::analysis::{oracle_gluing_check, verify_binomial_fib_sum, verify_gluing_identity};
use strip_divisions::counting::{hex_refined, hex_total, FibCache};
use strip_divisions::oracle::OracleConfig;

fn main() -> strip_divisions::Result<()> {
    let fib = FibCache::up_to(40);
    for n in 1..=10 {
        // total, then split by whether the last two hexagons share a part
        let (mut s, mut t) = (BigUint::default(), BigUint::default());
        for k in 1..=n as i64 {
            let (sk, tk) = hex_refined(n, k);
            s += sk;
            t += tk;
        }
        println!("n={n:<2} d={:<6} F_(2n-1)={:<6} split={s} together={t}", hex_total(n), fib.get(2 * n - 1));
    }

    let grid = (1..=20).all(|n| (1..=20).all(|m| verify_gluing_identity(n, m)));
    println!("gluing identity on 1..=20 squared: {grid}");
    println!("binomial sum for n <= 30: {}", verify_binomial_fib_sum(30));

    let cfg = OracleConfig::default();
    let mut glued = true;
    for n in 1..8 {
        glued &= oracle_gluing_check(n, 8 - n, &cfg)?;
    }
    println!("gluing via enumeration, n+m=8: {glued}");
    Ok(())
}
