//! Named verification suites; each check reports one `PASS|FAIL` line.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::analysis::{
    bar_diagonal_leading_coefficient, check_column_recurrence, fit_column, fit_diagonal, oracle_gluing_check, slope_exact,
    verify_binomial_fib_sum, verify_gluing_identity, AsymptoticProfile,
};
use crate::counting::{
    bar_q_counts, bar_total, bar_triangle, hex_closed_form_triangle, hex_refined, hex_total, hex_triangle, CountTriangle, FibCache,
};
use crate::lattice::{Family, Lattice};
use crate::oracle::{oracle_refined_counts, oracle_triangle, OracleConfig};
use crate::series::triangle_from_gf;
use crate::transfer::{
    bar_matrix, dominant_eigenvalue_at_one, hex_matrix, matrix_power, triangle_by_transfer, verify_fib_power,
    verify_h_power_closed_form,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    Columns,
    Diagonals,
    Lemmas,
    Identities,
    Oracle,
    Asymptotics,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Columns,
        Suite::Diagonals,
        Suite::Lemmas,
        Suite::Identities,
        Suite::Oracle,
        Suite::Asymptotics,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub params: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(id: &str, params: String, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            id: id.to_string(),
            params,
            passed,
            detail: detail.into(),
        }
    }

    /// Passes iff `failure` is `None`; the failure text becomes the detail.
    fn from_failure(id: &str, params: String, failure: Option<String>) -> Self {
        match failure {
            None => CheckResult::new(id, params, true, ""),
            Some(detail) => CheckResult::new(id, params, false, detail),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.id, self.params)?;
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, n_max: usize, config: &OracleConfig) -> Vec<CheckResult> {
    match suite {
        Suite::Columns => columns(n_max),
        Suite::Diagonals => diagonals(n_max),
        Suite::Lemmas => lemmas(n_max),
        Suite::Identities => identities(n_max, config),
        Suite::Oracle => oracle(n_max, config),
        Suite::Asymptotics => asymptotics(n_max),
        Suite::All => {
            let per_suite: Vec<Vec<CheckResult>> = std::thread::scope(|scope| {
                let handles: Vec<_> = Suite::EACH
                    .iter()
                    .map(|&s| scope.spawn(move || run_suite(s, n_max, config)))
                    .collect();
                handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
            });
            per_suite.into_iter().flatten().collect()
        }
    }
}

fn triangle(family: Family, n_max: usize) -> CountTriangle {
    match family {
        Family::ChocolateBar => bar_triangle(n_max),
        Family::Honeycomb => hex_triangle(n_max),
    }
}

fn first_failure(range: impl IntoIterator<Item = usize>, ok: impl Fn(usize) -> bool, name: &str) -> Option<String> {
    range.into_iter().find(|&i| !ok(i)).map(|i| format!("first failure at {name}={i}"))
}

fn columns(n_max: usize) -> Vec<CheckResult> {
    let n_max = n_max.max(2);
    let mut out = Vec::new();
    for family in [Family::ChocolateBar, Family::Honeycomb] {
        let t = triangle(family, n_max);
        for k in 1..=8 {
            let params = format!("family={family} k={k} n_max={n_max}");
            let result = check_column_recurrence(&t, k, n_max);
            let failure = match result {
                Ok(true) => None,
                Ok(false) => Some("alternating binomial sum is nonzero".to_string()),
                Err(e) => Some(e.to_string()),
            };
            out.push(CheckResult::from_failure("column-recurrence", params, failure));
        }
        for k in (1..=6).filter(|&k| 3 * k - 2 <= n_max) {
            let params = format!("family={family} k={k} n_max={n_max}");
            out.push(match fit_column(&t, k) {
                Ok(p) => CheckResult::new("column-polynomial", params, true, format!("c_{k}(n) = {p}")),
                Err(e) => CheckResult::new("column-polynomial", params, false, e.to_string()),
            });
        }
    }
    out
}

fn diagonals(n_max: usize) -> Vec<CheckResult> {
    let n_max = n_max.max(4);
    let t = bar_triangle(n_max);
    let mut out = Vec::new();
    for j in 0..=6 {
        let params = format!("family=bar j={j} n_max={n_max}");
        out.push(match fit_diagonal(&t, j) {
            Ok(p) => {
                let target = bar_diagonal_leading_coefficient(j);
                let lead = p.leading_coefficient();
                let degree_ok = p.degree() == Some(j);
                CheckResult::new(
                    "diagonal-polynomial",
                    params,
                    degree_ok && lead == target,
                    format!("r_{{2n-{j}}}(n) = {p}; leading {lead} vs 3^{j}/{j}! = {target}"),
                )
            }
            Err(e) => CheckResult::new("diagonal-polynomial", params, false, e.to_string()),
        });
    }
    let dimers = first_failure(1..=n_max, |n| t.get(n, 2 * n - 1) == BigUint::from(3 * n - 2), "n");
    out.push(CheckResult::from_failure(
        "diagonal-spot",
        format!("r_{{2n-1}}(n)=3n-2 n_max={n_max}"),
        dimers,
    ));
    let r43 = t.get(3, 4);
    out.push(CheckResult::new(
        "diagonal-spot",
        "r_4(3)=21".to_string(),
        r43 == BigUint::from(21u32),
        format!("got {r43}"),
    ));
    out
}

fn lemmas(n_max: usize) -> Vec<CheckResult> {
    let n_max = n_max.max(3);
    let mut out = vec![
        CheckResult::from_failure(
            "h-power-closed-form",
            format!("n=1..{n_max}"),
            first_failure(1..=n_max, verify_h_power_closed_form, "n"),
        ),
        CheckResult::from_failure(
            "h-one-power-fibonacci",
            format!("n=1..{n_max}"),
            first_failure(1..=n_max, verify_fib_power, "n"),
        ),
    ];
    let h2 = matrix_power(&hex_matrix(), 2);
    let h3 = matrix_power(&hex_matrix(), 3);
    let shown = |m: &crate::transfer::TransferMatrix2| {
        m.entries.iter().flatten().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    };
    out.push(CheckResult::new(
        "h-power-displayed",
        "n=2".to_string(),
        shown(&h2) == "1+y, 2+y, 2y+y^2, 1+3y+y^2",
        shown(&h2),
    ));
    out.push(CheckResult::new(
        "h-power-displayed",
        "n=3".to_string(),
        shown(&h3) == "1+3y+y^2, 3+4y+y^2, 3y+4y^2+y^3, 1+6y+5y^2+y^3",
        shown(&h3),
    ));
    for (family, matrix, target) in [
        (Family::Honeycomb, hex_matrix(), (3.0 + 5f64.sqrt()) / 2.0),
        (Family::ChocolateBar, bar_matrix(), 3.0 + 10f64.sqrt()),
    ] {
        let lambda = dominant_eigenvalue_at_one(&matrix);
        out.push(CheckResult::new(
            "dominant-eigenvalue",
            format!("family={family}"),
            (lambda - target).abs() <= 1e-12 * target,
            format!("{lambda:.12}"),
        ));
    }
    out
}

fn identities(n_max: usize, config: &OracleConfig) -> Vec<CheckResult> {
    let n_max = n_max.max(1);
    let grid_failure = (1..=n_max)
        .flat_map(|n| (1..=n_max).map(move |m| (n, m)))
        .find(|&(n, m)| !verify_gluing_identity(n, m))
        .map(|(n, m)| format!("first failure at n={n} m={m}"));
    let mut out = vec![
        CheckResult::from_failure("gluing-identity", format!("1<=n,m<={n_max}"), grid_failure),
        CheckResult::new(
            "binomial-fibonacci-sum",
            format!("n=1..{n_max}"),
            verify_binomial_fib_sum(n_max),
            "",
        ),
    ];

    let fib = FibCache::up_to(2 * n_max);
    let hex = hex_triangle(n_max);
    out.push(CheckResult::from_failure(
        "hex-total-fibonacci",
        format!("n=1..{n_max}"),
        first_failure(1..=n_max, |n| hex.row_sum(n) == *fib.get(2 * n - 1) && hex_total(n) == *fib.get(2 * n - 1), "n"),
    ));
    let bar = bar_triangle(n_max);
    out.push(CheckResult::from_failure(
        "bar-total-recurrence",
        format!("n=1..{n_max}"),
        first_failure(1..=n_max, |n| bar.row_sum(n) == bar_total(n), "n"),
    ));

    let glue_max = (1..=12).rev().find(|&s| config.check(Lattice::hex(s)).is_ok()).unwrap_or(0);
    let mut oracle_failure = None;
    'outer: for total in 2..=glue_max {
        for n in 1..total {
            match oracle_gluing_check(n, total - n, config) {
                Ok(true) => {}
                Ok(false) => {
                    oracle_failure = Some(format!("first failure at n={n} m={}", total - n));
                    break 'outer;
                }
                Err(e) => {
                    oracle_failure = Some(e.to_string());
                    break 'outer;
                }
            }
        }
    }
    out.push(CheckResult::from_failure(
        "gluing-oracle",
        format!("n+m<={glue_max}"),
        oracle_failure,
    ));
    out
}

/// Bars up to `n_max` and honeycomb strips up to `2·n_max`, each capped by the cell limit.
fn oracle(n_max: usize, config: &OracleConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (family, wanted) in [(Family::ChocolateBar, n_max), (Family::Honeycomb, 2 * n_max)] {
        let reach = (1..=wanted.max(1))
            .rev()
            .find(|&n| config.check(Lattice::new(family, n)).is_ok())
            .unwrap_or(0);
        if reach == 0 {
            out.push(CheckResult::new("oracle-agreement", format!("family={family}"), false, "oracle limit too small"));
            continue;
        }
        let truth = match oracle_triangle(family, reach, config) {
            Ok(t) => t,
            Err(e) => {
                out.push(CheckResult::new("oracle-agreement", format!("family={family}"), false, e.to_string()));
                continue;
            }
        };
        let mut methods = vec![
            ("recurrence", triangle(family, reach)),
            ("genfunc", triangle_from_gf(family, reach)),
            ("transfer", triangle_by_transfer(family, reach)),
        ];
        if family == Family::Honeycomb {
            methods.push(("closed-form", hex_closed_form_triangle(reach)));
        }
        for (name, t) in methods {
            let failure = truth.first_difference(&t).map(|(n, k)| {
                format!("n={n} k={k}: oracle {} vs {name} {}", truth.get(n, k), t.get(n, k))
            });
            out.push(CheckResult::from_failure(
                "oracle-agreement",
                format!("family={family} method={name} n<={reach}"),
                failure,
            ));
        }
        out.push(refined_check(family, reach, config));
    }
    out
}

fn refined_check(family: Family, reach: usize, config: &OracleConfig) -> CheckResult {
    let q = bar_q_counts(reach);
    let bar = bar_triangle(reach);
    let params = format!("family={family} n=2..{reach}");
    for n in 2..=reach {
        let counts = match oracle_refined_counts(Lattice::new(family, n), config) {
            Ok(c) => c,
            Err(e) => return CheckResult::new("oracle-refined", params, false, e.to_string()),
        };
        for k in 1..=family.k_max(n) {
            let (expected_sep, expected_tog) = match family {
                Family::ChocolateBar => {
                    let sep = q[n - 1][k - 1].clone();
                    let together = bar.get(n, k) - &sep;
                    (sep, together)
                }
                Family::Honeycomb => hex_refined(n, k as i64),
            };
            if counts.separated(k) != expected_sep || counts.together(k) != expected_tog {
                return CheckResult::new(
                    "oracle-refined",
                    params,
                    false,
                    format!(
                        "n={n} k={k}: oracle separated/together {}/{} vs {expected_sep}/{expected_tog}",
                        counts.separated(k),
                        counts.together(k)
                    ),
                );
            }
        }
    }
    CheckResult::new("oracle-refined", params, true, "")
}

/// Digits used for the exact slope-error comparison; enough to resolve the
/// error through n = 100 for both families.
pub const SLOPE_ERROR_DIGITS: u32 = 400;

fn asymptotics(n_max: usize) -> Vec<CheckResult> {
    let n = n_max.max(11);
    let mut out = Vec::new();
    for family in [Family::ChocolateBar, Family::Honeycomb] {
        let t = triangle(family, n + 1);
        let profile = match AsymptoticProfile::observe(family, &t, n) {
            Ok(p) => p,
            Err(e) => {
                out.push(CheckResult::new("slope-limit", format!("family={family}"), false, e.to_string()));
                continue;
            }
        };
        let slope = profile.observed_slope[n - 1];
        let err = (slope - profile.slope_target).abs();
        out.push(CheckResult::new(
            "slope-limit",
            format!("family={family} n={n} tol=1e-6"),
            err <= 1e-6,
            format!("dE={slope:.10} target={:.10} err={err:.3e}", profile.slope_target),
        ));

        let growth = profile.observed_growth[n - 1];
        let gerr = (growth - profile.growth_target).abs();
        out.push(CheckResult::new(
            "growth-limit",
            format!("family={family} n={n} tol=1e-10"),
            gerr <= 1e-10,
            format!("ratio={growth:.12} target={:.12}", profile.growth_target),
        ));

        let errors: Vec<BigInt> = (10..=n)
            .map(|m| {
                let s: BigRational = slope_exact(&t, m).unwrap_or_else(|_| BigRational::one());
                profile.slope_exact.scaled_distance(&s, SLOPE_ERROR_DIGITS)
            })
            .collect();
        let failure = errors
            .windows(2)
            .position(|w| w[1] >= w[0])
            .map(|i| format!("error stops decreasing at n={}", 11 + i));
        out.push(CheckResult::from_failure(
            "slope-monotone",
            format!("family={family} n=10..{n}"),
            failure,
        ));
    }
    out
}
