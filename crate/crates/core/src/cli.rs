//! Command-line surface. The binary only forwards `argv` to [`run`].
//!
//! Exit codes: 0 success, 1 failed verification or I/O, 2 usage or a method
//! that does not apply to the lattice, 3 oracle size limit, 4 methods disagree.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::analysis::{expected_parts, AsymptoticProfile};
use crate::counting::{bar_triangle, hex_closed_form, hex_closed_form_triangle, hex_triangle, CountTriangle};
use crate::error::Error;
use crate::export::{format_decimal, from_csv, series_dump, to_bfile, to_csv, to_json, to_text};
use crate::lattice::{Division, Family, Lattice};
use crate::oracle::{enumerate_divisions, oracle_totals, oracle_triangle, OracleConfig, DEFAULT_CELL_LIMIT};
use crate::series::{expand_rational, gf_for, triangle_from_gf};
use crate::transfer::{polynomial_for, triangle_by_transfer};
use crate::verify::{run_suite, Suite};

pub const CACHE_DIR_ENV: &str = "STRIP_DIVISIONS_CACHE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Recurrence,
    ClosedForm,
    Genfunc,
    Transfer,
    All,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Emit {
    #[default]
    Triangle,
    Gf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub family: Family,
    pub n: usize,
    pub n_max: usize,
    pub k: Option<usize>,
    pub method: Method,
    pub format: Format,
    pub oracle_cell_limit: usize,
    pub cache_dir: Option<PathBuf>,
    pub precision: usize,
    /// Adds one to a single entry produced by this method.
    pub inject_fault: Option<Method>,
}

impl RunConfig {
    pub fn new(family: Family) -> Self {
        RunConfig {
            family,
            n: 1,
            n_max: 1,
            k: None,
            method: Method::Recurrence,
            format: Format::Text,
            oracle_cell_limit: DEFAULT_CELL_LIMIT,
            cache_dir: None,
            precision: 10,
            inject_fault: None,
        }
    }

    fn oracle(&self) -> OracleConfig {
        OracleConfig::with_cell_limit(self.oracle_cell_limit)
    }

    fn validate(&self) -> Result<(), Error> {
        if self.method == Method::ClosedForm && self.family != Family::Honeycomb {
            return Err(Error::MethodMismatch {
                method: self.method.to_string(),
                family: self.family,
            });
        }
        Ok(())
    }
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MethodMismatch { .. } => 2,
            Error::OracleScale { .. } => 3,
            Error::Disagreement(_) => 4,
            _ => 1,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    out.write_all(text.as_bytes()).map_err(|source| Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn single_methods(config: &RunConfig) -> Vec<Method> {
    let mut methods = vec![Method::Recurrence, Method::Genfunc, Method::Transfer];
    if config.family == Family::Honeycomb {
        methods.push(Method::ClosedForm);
    }
    let largest = config.n.max(config.n_max);
    if config.oracle().check(Lattice::new(config.family, largest)).is_ok() {
        methods.push(Method::Oracle);
    }
    methods
}

fn perturb(value: &mut BigUint) {
    *value += 1u32;
}

/// `c_k(n)` for `k = 1..=k_max(n)` by one method.
fn row_by(method: Method, config: &RunConfig) -> Result<Vec<BigUint>, Error> {
    let (family, n) = (config.family, config.n);
    let k_max = family.k_max(n);
    let mut row = match method {
        Method::Oracle => {
            let mut totals = oracle_totals(Lattice::new(family, n), &config.oracle())?;
            totals.remove(0);
            totals
        }
        Method::Recurrence => recurrence_triangle(family, n).row(n).expect("row n present").to_vec(),
        Method::ClosedForm => (1..=n as i64).map(|k| hex_closed_form(n, k)).collect(),
        Method::Genfunc => triangle_from_gf(family, n).row(n).expect("row n present").to_vec(),
        Method::Transfer => polynomial_for(family, n)
            .to_count_row(k_max)
            .expect("transfer counts are nonnegative"),
        Method::All => unreachable!("resolved by caller"),
    };
    if config.inject_fault == Some(method) {
        let k = config.k.unwrap_or(1).clamp(1, k_max);
        perturb(&mut row[k - 1]);
    }
    Ok(row)
}

fn recurrence_triangle(family: Family, n_max: usize) -> CountTriangle {
    match family {
        Family::ChocolateBar => bar_triangle(n_max),
        Family::Honeycomb => hex_triangle(n_max),
    }
}

fn triangle_by(method: Method, config: &RunConfig) -> Result<CountTriangle, Error> {
    let (family, n_max) = (config.family, config.n_max);
    let mut t = match method {
        Method::Oracle => oracle_triangle(family, n_max, &config.oracle())?,
        Method::Recurrence => recurrence_triangle(family, n_max),
        Method::ClosedForm => hex_closed_form_triangle(n_max),
        Method::Genfunc => triangle_from_gf(family, n_max),
        Method::Transfer => triangle_by_transfer(family, n_max),
        Method::All => unreachable!("resolved by caller"),
    };
    if config.inject_fault == Some(method) {
        let mut v = t.get(n_max, 1);
        perturb(&mut v);
        t.set(n_max, 1, v);
    }
    Ok(t)
}

fn pick(row: &[BigUint], k: Option<usize>) -> BigUint {
    match k {
        Some(k) => k.checked_sub(1).and_then(|i| row.get(i)).cloned().unwrap_or_default(),
        None => row.iter().sum(),
    }
}

pub fn cmd_count(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    config.validate()?;
    if config.n == 0 {
        return Err(Error::EmptyLattice.into());
    }
    let value = if config.method == Method::All {
        let values = single_methods(config)
            .into_iter()
            .map(|m| row_by(m, config).map(|row| (m, pick(&row, config.k))))
            .collect::<Result<Vec<_>, Error>>()?;
        if values.iter().any(|(_, v)| *v != values[0].1) {
            let listing: Vec<String> = values.iter().map(|(m, v)| format!("{m}={v}")).collect();
            return Err(Error::Disagreement(listing.join(" ")).into());
        }
        values[0].1.clone()
    } else {
        pick(&row_by(config.method, config)?, config.k)
    };
    write_out(out, &format!("{value}\n"))?;
    Ok(())
}

fn cache_path(dir: &Path, family: Family, n_max: usize) -> PathBuf {
    dir.join(format!("{}-n{n_max}.csv", family.short_name()))
}

fn cached_triangle(config: &RunConfig, dir: &Path) -> Result<CountTriangle, Error> {
    let path = cache_path(dir, config.family, config.n_max);
    let io = |source| Error::Io {
        path: path.clone(),
        source,
    };
    if path.exists() {
        let text = fs::read_to_string(&path).map_err(io)?;
        return from_csv(config.family, &text).map_err(|e| match e {
            Error::Cache { reason, .. } => Error::Cache {
                path: path.clone(),
                reason,
            },
            other => other,
        });
    }
    let t = triangle_by(config.method, config)?;
    fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    fs::write(&path, to_csv(&t)).map_err(io)?;
    Ok(t)
}

/// The triangle for `config`, cross-checking every method when asked to.
pub fn compute_triangle(config: &RunConfig) -> Result<CountTriangle, Error> {
    config.validate()?;
    if config.n_max == 0 {
        return Err(Error::EmptyLattice);
    }
    if config.method != Method::All {
        if let (Some(dir), None) = (&config.cache_dir, config.inject_fault) {
            return cached_triangle(config, dir);
        }
        return triangle_by(config.method, config);
    }
    let all = single_methods(config)
        .into_iter()
        .map(|m| triangle_by(m, config).map(|t| (m, t)))
        .collect::<Result<Vec<_>, Error>>()?;
    let (_, first) = &all[0];
    for (_, t) in &all[1..] {
        if let Some((n, k)) = first.first_difference(t) {
            let listing: Vec<String> = all.iter().map(|(m, t)| format!("{m}={}", t.get(n, k))).collect();
            return Err(Error::Disagreement(format!("n={n} k={k}: {}", listing.join(" "))));
        }
    }
    Ok(all.into_iter().next().expect("at least one method").1)
}

pub fn render(triangle: &CountTriangle, format: Format) -> String {
    match format {
        Format::Text => to_text(triangle),
        Format::Csv => to_csv(triangle),
        Format::Json => to_json(triangle),
        Format::Bfile => to_bfile(triangle),
    }
}

pub fn cmd_table(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let t = compute_triangle(config)?;
    write_out(out, &render(&t, config.format))?;
    Ok(())
}

pub fn cmd_gf(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let series = expand_rational(&gf_for(config.family), config.n_max)?;
    write_out(out, &series_dump(&series, config.n_max))?;
    Ok(())
}

pub fn cmd_enumerate(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let lattice = Lattice::new(config.family, config.n);
    let mut by_k: Vec<Vec<Division>> = vec![Vec::new(); lattice.cell_count() + 1];
    for d in enumerate_divisions(lattice, &config.oracle())? {
        by_k[d.part_count()].push(d);
    }
    let mut text = String::new();
    let mut total = 0usize;
    for (k, group) in by_k.iter().enumerate().skip(1) {
        if config.k.is_some_and(|want| want != k) {
            continue;
        }
        text.push_str(&format!("# k={k} count={}\n", group.len()));
        for d in group {
            text.push_str(&format!("{d}\n"));
        }
        total += group.len();
    }
    text.push_str(&format!("# total={total}\n"));
    write_out(out, &text)?;
    Ok(())
}

/// Returns whether every check passed; the lines go to `out` in suite order.
pub fn cmd_verify(suite: Suite, n_max: usize, config: &OracleConfig, out: &mut dyn Write) -> Result<bool, CliError> {
    let results = run_suite(suite, n_max, config);
    let mut text = String::new();
    for r in &results {
        text.push_str(&format!("{r}\n"));
    }
    write_out(out, &text)?;
    match results.iter().find(|r| !r.passed) {
        None => Ok(true),
        Some(first) => Err(CliError {
            code: 1,
            message: format!("first failing check: {first}"),
        }),
    }
}

pub fn cmd_expected_parts(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let n_max = config.n_max.max(2);
    let t = recurrence_triangle(config.family, n_max + 1);
    let target = AsymptoticProfile::targets(config.family);
    let digits = config.precision;
    let mut text = String::from("# n E(n) E(n)_exact dE(n) target error\n");
    let mut next = expected_parts(&t, 1)?;
    for n in 1..=n_max {
        let e = next;
        next = expected_parts(&t, n + 1)?;
        let slope: BigRational = &next - &e;
        // error to 30 places, exact up to the final digit
        let scaled = target.slope_exact.scaled_distance(&slope, 30);
        let err = BigRational::new(scaled, BigInt::from(10).pow(30));
        text.push_str(&format!(
            "{n} {} {e} {} {:.*} {}\n",
            format_decimal(&e, digits),
            format_decimal(&slope, digits),
            digits.min(16),
            target.slope_target,
            format_decimal(&err, digits.max(12)),
        ));
    }
    write_out(out, &text)?;
    Ok(())
}

#[derive(Debug, Parser)]
#[command(name = "strip-divisions", version, about = "Count connected divisions of 2×n bars and honeycomb strips")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One count `c_k(n)`, or the row total without `-k`
    Count(CountArgs),
    /// The whole triangle for rows `1..=n_max`
    Table(TableArgs),
    /// List every division of one strip, grouped by part count
    Enumerate(EnumerateArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Mean part count with its first difference and limit
    ExpectedParts(ExpectedArgs),
    /// Coefficients of the bivariate generating function
    Gf(GfArgs),
}

#[derive(Debug, Args)]
pub struct LatticeArg {
    #[arg(long, default_value = "bar")]
    pub lattice: Family,
}

#[derive(Debug, Args)]
pub struct OracleArg {
    #[arg(long = "oracle-limit", default_value_t = DEFAULT_CELL_LIMIT)]
    pub oracle_limit: usize,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub lattice: LatticeArg,
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(short = 'k')]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Method::Recurrence)]
    pub method: Method,
    #[command(flatten)]
    pub oracle: OracleArg,
    #[arg(long = "inject-fault", value_enum, hide = true)]
    pub inject_fault: Option<Method>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub lattice: LatticeArg,
    #[arg(long = "n-max")]
    pub n_max: usize,
    #[arg(long, value_enum, default_value_t = Method::Recurrence)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = Emit::Triangle)]
    pub emit: Emit,
    #[command(flatten)]
    pub oracle: OracleArg,
    #[arg(long = "cache-dir", env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long = "inject-fault", value_enum, hide = true)]
    pub inject_fault: Option<Method>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub lattice: LatticeArg,
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(short = 'k')]
    pub k: Option<usize>,
    #[command(flatten)]
    pub oracle: OracleArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long = "n-max", default_value_t = 30)]
    pub n_max: usize,
    #[command(flatten)]
    pub oracle: OracleArg,
}

#[derive(Debug, Args)]
pub struct ExpectedArgs {
    #[command(flatten)]
    pub lattice: LatticeArg,
    #[arg(long = "n-max", default_value_t = 20)]
    pub n_max: usize,
    #[arg(long, default_value_t = 10)]
    pub precision: usize,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    #[command(flatten)]
    pub lattice: LatticeArg,
    #[arg(long = "n-max")]
    pub n_max: usize,
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Count(a) => {
            let mut c = RunConfig::new(a.lattice.lattice);
            c.n = a.n;
            c.k = a.k;
            c.method = a.method;
            c.oracle_cell_limit = a.oracle.oracle_limit;
            c.inject_fault = a.inject_fault;
            cmd_count(&c, out)
        }
        Command::Table(a) => {
            let mut c = RunConfig::new(a.lattice.lattice);
            c.n_max = a.n_max;
            if a.emit == Emit::Gf {
                return cmd_gf(&c, out);
            }
            c.method = a.method;
            c.format = a.format;
            c.oracle_cell_limit = a.oracle.oracle_limit;
            c.cache_dir = a.cache_dir;
            c.inject_fault = a.inject_fault;
            cmd_table(&c, out)
        }
        Command::Enumerate(a) => {
            let mut c = RunConfig::new(a.lattice.lattice);
            c.n = a.n;
            c.k = a.k;
            c.oracle_cell_limit = a.oracle.oracle_limit;
            cmd_enumerate(&c, out)
        }
        Command::Verify(a) => {
            cmd_verify(a.suite, a.n_max, &OracleConfig::with_cell_limit(a.oracle.oracle_limit), out).map(|_| ())
        }
        Command::ExpectedParts(a) => {
            let mut c = RunConfig::new(a.lattice.lattice);
            c.n_max = a.n_max;
            c.precision = a.precision;
            cmd_expected_parts(&c, out)
        }
        Command::Gf(a) => {
            let mut c = RunConfig::new(a.lattice.lattice);
            c.n_max = a.n_max;
            cmd_gf(&c, out)
        }
    }
}

/// Parses `args` (program name first) and runs; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
