//! The `closurelab` command line.

pub mod manifest;
pub mod report;
pub mod univariate;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{field_create, DynField, Field, FieldDescriptor, Rationals, DEFAULT_PRIMES};
use crate::closure::{
    divides_check, falling_factorial, monogenic_tower, presentation_closure, presentation_closure_dim,
    transform_monic, Arithmetic, IntegerTower, Method, DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::multipoly::parse_presentation;

use manifest::Manifest;
use report::ReportRecord;
use univariate::{format_univariate, parse_univariate};
use verify::{run_suite, Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

/// Exit status for an error that ends a command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::UnknownVariable(_)
        | Error::UnsupportedField(_)
        | Error::NotPrime(_)
        | Error::ReducibleModulus(_)
        | Error::Io(_) => EXIT_PARSE,
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        Error::PrimeDisagreement(_) | Error::CertificateFailure(_) => EXIT_MISMATCH,
        _ => EXIT_PRECONDITION,
    }
}

#[derive(Debug, Parser)]
#[command(name = "closurelab", version, about = "S_n-closures of finite commutative algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute A^(m) for one algebra.
    Close(CloseArgs),
    /// Reproduce the dimensions listed in a manifest.
    Table(TableArgs),
    /// Run property suites.
    Verify(VerifyArgs),
    /// Send the roots of a monic f to their images under g.
    Transform(TransformArgs),
    /// The closure tower of K[x]/(f).
    Tower(TowerArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Dim,
    Full,
}

#[derive(Debug, Args)]
pub struct CloseArgs {
    /// Presentation such as "Q[x,y]/((x,y)^2)".
    #[arg(long)]
    pub algebra: String,
    #[arg(long)]
    pub m: usize,
    /// general, local or naive.
    #[arg(long, default_value = "general")]
    pub method: Method,
    /// Work over ℚ instead of modulo the default primes.
    #[arg(long)]
    pub exact: bool,
    #[arg(long)]
    pub json: bool,
    #[arg(long, value_enum, default_value = "dim")]
    pub emit: Emit,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub manifest: PathBuf,
    /// Entries to run: names or 1-based indices and ranges, e.g. "1,3-5".
    #[arg(long)]
    pub rows: Option<String>,
    /// Skip expected values with larger m.
    #[arg(long)]
    pub max_m: Option<usize>,
    /// Rows computed in parallel.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value = "general")]
    pub method: Method,
    #[arg(long)]
    pub exact: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// Monic polynomial in Z.
    #[arg(long)]
    pub f: String,
    /// Polynomial in X.
    #[arg(long)]
    pub g: String,
    /// Comma-separated names of symbolic coefficients, e.g. "r1,r2,r3".
    #[arg(long)]
    pub params: Option<String>,
    #[arg(long, default_value = "Q")]
    pub field: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TowerArgs {
    /// Monic polynomial in Z.
    #[arg(long)]
    pub f: String,
    #[arg(long)]
    pub m: usize,
    /// Q, Z, Fp or GF(p,k).
    #[arg(long, default_value = "Q")]
    pub field: String,
    #[arg(long)]
    pub json: bool,
}

/// Settings read from the environment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub primes: Vec<u64>,
    pub budget: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { primes: DEFAULT_PRIMES.to_vec(), budget: DEFAULT_BUDGET }
    }
}

impl Config {
    /// `CLOSURELAB_PRIMES` (comma-separated) and `CLOSURELAB_BUDGET`.
    pub fn from_vars(primes: Option<&str>, budget: Option<&str>) -> Result<Self> {
        let mut cfg = Config::default();
        if let Some(text) = primes {
            cfg.primes = text
                .split(',')
                .map(|t| {
                    let p: u64 = t.trim().parse().map_err(|_| Error::Syntax {
                        pos: 0,
                        msg: format!("CLOSURELAB_PRIMES: `{t}` is not an integer"),
                    })?;
                    crate::arith::PrimeField::new(p).map(|_| p)
                })
                .collect::<Result<_>>()?;
            if cfg.primes.is_empty() {
                return Err(Error::InvalidArgument("CLOSURELAB_PRIMES is empty".into()));
            }
        }
        if let Some(text) = budget {
            cfg.budget = text.trim().parse().map_err(|_| Error::Syntax {
                pos: 0,
                msg: format!("CLOSURELAB_BUDGET: `{text}` is not an integer"),
            })?;
        }
        Ok(cfg)
    }

    pub fn from_env() -> Result<Self> {
        let primes = std::env::var("CLOSURELAB_PRIMES").ok();
        let budget = std::env::var("CLOSURELAB_BUDGET").ok();
        Self::from_vars(primes.as_deref(), budget.as_deref())
    }

    fn arithmetic(&self, exact: bool) -> Arithmetic {
        if exact {
            Arithmetic::Exact
        } else {
            Arithmetic::Modular(self.primes.clone())
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, config: &Config, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Close(a) => cmd_close(a, config, out),
        Command::Table(a) => cmd_table(a, config, out, err),
        Command::Verify(a) => cmd_verify(a, config, out, err),
        Command::Transform(a) => cmd_transform(a, out),
        Command::Tower(a) => cmd_tower(a, config, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e == Error::InfiniteFieldUnsupported {
                let _ = writeln!(err, "hint: use --method general for the true closure");
            }
            exit_code(&e)
        }
    }
}

/// Entry point of the binary.
pub fn main_with_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let config = match Config::from_env() {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    run(std::env::args_os(), &config, &mut out, &mut err)
}

#[derive(Serialize)]
struct FullRecord<'a> {
    #[serde(flatten)]
    record: &'a ReportRecord,
    basis: Vec<String>,
    maps: Vec<Vec<Vec<String>>>,
}

fn cmd_close(a: &CloseArgs, config: &Config, out: &mut dyn Write) -> Result<i32> {
    let pres = parse_presentation(&a.algebra)?;
    let name = a.algebra.trim();
    match a.emit {
        Emit::Dim => {
            let report = presentation_closure_dim(&pres, a.m, a.method, &config.arithmetic(a.exact), config.budget)?;
            let record = ReportRecord::from_report(name, &report, None);
            if a.json {
                writeln!(out, "{}", record.to_json()).map_err(io)?;
            } else {
                writeln!(out, "dim = {}", report.stats.dim).map_err(io)?;
            }
        }
        Emit::Full => {
            let r = presentation_closure(&pres, a.m, a.method, config.budget)?;
            divides_check(&r)?;
            let f = r.closure.field().clone();
            let report = crate::closure::PresentationReport { field: pres.field.to_string(), stats: r.stats.clone() };
            let record = ReportRecord::from_report(name, &report, None);
            let basis: Vec<String> = r.closure.labels().to_vec();
            let maps: Vec<Vec<Vec<String>>> = r
                .maps
                .iter()
                .map(|m| m.images().iter().map(|v| v.iter().map(|c| f.format(c)).collect()).collect())
                .collect();
            if a.json {
                let full = FullRecord { record: &record, basis, maps };
                writeln!(out, "{}", serde_json::to_string(&full).expect("records serialize")).map_err(io)?;
            } else {
                writeln!(out, "dim = {}", r.dim()).map_err(io)?;
                writeln!(out, "field = {}", pres.field).map_err(io)?;
                writeln!(out, "basis = [{}]", basis.join(", ")).map_err(io)?;
                let source = r.source.labels();
                for (s, map) in maps.iter().enumerate() {
                    writeln!(out, "alpha_{}:", s + 1).map_err(io)?;
                    for (label, row) in source.iter().zip(map) {
                        writeln!(out, "  {label} -> [{}]", row.join(" ")).map_err(io)?;
                    }
                }
                writeln!(out, "certificate = ok").map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn table_records(
    m: &Manifest,
    a: &TableArgs,
    config: &Config,
) -> Result<Vec<ReportRecord>> {
    let entries = match &a.rows {
        Some(rows) => m.select(rows)?,
        None => m.entries.iter().collect(),
    };
    let arithmetic = config.arithmetic(a.exact);
    let run_entry = |e: &manifest::ManifestEntry| -> Vec<ReportRecord> {
        let dims = match e.expected_dims() {
            Ok(d) => d,
            Err(err) => return vec![ReportRecord::failed(&e.name, 0, &a.method.to_string(), &e.field, None, err.to_string())],
        };
        let pres = e.presentation();
        dims.into_iter()
            .filter(|(k, _)| a.max_m.is_none_or(|max| *k <= max))
            .map(|(k, want)| {
                let result = pres.clone().and_then(|p| presentation_closure_dim(&p, k, a.method, &arithmetic, config.budget));
                match result {
                    Ok(report) => ReportRecord::from_report(&e.name, &report, Some(want)),
                    Err(err) => ReportRecord::failed(&e.name, k, &a.method.to_string(), &e.field, Some(want), err.to_string()),
                }
            })
            .collect()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let nested: Vec<Vec<ReportRecord>> = pool.install(|| entries.par_iter().map(|e| run_entry(e)).collect());
    Ok(nested.into_iter().flatten().collect())
}

fn cmd_table(a: &TableArgs, config: &Config, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let m = Manifest::load(&a.manifest)?;
    let records = table_records(&m, a, config)?;
    for r in &records {
        if a.json {
            writeln!(out, "{}", r.to_json()).map_err(io)?;
        } else {
            writeln!(out, "{r}").map_err(io)?;
        }
    }
    let bad = records.iter().filter(|r| !r.ok()).count();
    writeln!(err, "{} of {} records match", records.len() - bad, records.len()).map_err(io)?;
    Ok(if bad == 0 { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_verify(a: &VerifyArgs, config: &Config, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let opts = VerifyOptions { seed: a.seed, prime: config.primes[0], budget: config.budget };
    let checks = run_suite(a.suite, &opts)?;
    for c in &checks {
        if a.json {
            writeln!(out, "{}", serde_json::to_string(c).expect("checks serialize")).map_err(io)?;
        } else {
            let status = if c.ok { "PASS" } else { "FAIL" };
            let detail = if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) };
            writeln!(out, "{status} {}: {}{detail}", c.suite, c.property).map_err(io)?;
        }
    }
    match checks.iter().find(|c| !c.ok) {
        Some(c) => {
            writeln!(err, "first failing property: {}: {}", c.suite, c.property).map_err(io)?;
            Ok(EXIT_MISMATCH)
        }
        None => Ok(EXIT_OK),
    }
}

#[derive(Serialize)]
struct TransformRecord<'a> {
    f: &'a str,
    g: &'a str,
    field: String,
    result: String,
}

/// `φ_g(f)` as compact text; `f` in `Z`, `g` in `X`, both possibly with
/// coefficients in the named parameters.
pub fn transform_text(field: &str, f: &str, g: &str, params: &[String]) -> Result<String> {
    let desc: FieldDescriptor = field.parse()?;
    let field = field_create(&desc)?;
    let f = parse_univariate(&field, f, "Z", params)?;
    let g = parse_univariate(&field, g, "X", params)?;
    Ok(format_univariate(&transform_monic(&f.coeffs, &f.terms, &g.terms)?, "Z"))
}

fn cmd_transform(a: &TransformArgs, out: &mut dyn Write) -> Result<i32> {
    let params: Vec<String> = a
        .params
        .as_deref()
        .map(|p| p.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect())
        .unwrap_or_default();
    let result = transform_text(&a.field, &a.f, &a.g, &params)?;
    if a.json {
        let desc: FieldDescriptor = a.field.parse()?;
        let rec = TransformRecord { f: &a.f, g: &a.g, field: desc.to_string(), result };
        writeln!(out, "{}", serde_json::to_string(&rec).expect("records serialize")).map_err(io)?;
    } else {
        writeln!(out, "{result}").map_err(io)?;
    }
    Ok(EXIT_OK)
}

/// The splitting tower of a monic polynomial after `m` steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerSummary {
    /// Field label, or `Z` for the integral tower.
    pub field: String,
    /// Dimension over the field, or rank over `Z`.
    pub dim: u128,
    /// `f_{i−1}(x_i)` for `i = 1..m`.
    pub relations: Vec<String>,
}

/// Build the tower of `f` (in `Z`) over `field`, or over the integers when
/// `field` is `Z`. Field towers are refused above `budget` dimensions.
pub fn tower_summary(field: &str, f: &str, m: usize, budget: usize) -> Result<TowerSummary> {
    let integral = field.trim() == "Z";
    let desc: FieldDescriptor = if integral { FieldDescriptor::Rationals } else { field.parse()? };
    let field = field_create(&desc)?;
    let f = parse_univariate(&field, f, "Z", &[])?;
    let coeffs: Vec<_> = f.terms.iter().map(|c| c.coeff(&crate::multipoly::Monomial::one(0))).collect();
    let degree = coeffs.len() - 1;
    let expected = falling_factorial(degree, m);
    if integral {
        let ints = coeffs
            .iter()
            .map(|c| match Rationals.from_scalar(&field.to_scalar(c)) {
                Ok(q) if q.is_integer() => Ok(q.to_integer()),
                _ => Err(Error::InvalidArgument("integral tower needs integer coefficients".into())),
            })
            .collect::<Result<Vec<BigInt>>>()?;
        let t = IntegerTower::new(&ints, m)?;
        let relations = t.relations.iter().map(|r| r.to_string()).collect();
        return Ok(TowerSummary { field: "Z".into(), dim: t.rank, relations });
    }
    if expected > budget as u128 {
        return Err(Error::BudgetExceeded(format!("tower dimension {expected} exceeds budget {budget}")));
    }
    let tower = monogenic_tower::<DynField>(&field, &coeffs, m)?;
    let (_, rels) = crate::closure::tower_relations(&field, &coeffs, m)?;
    Ok(TowerSummary {
        field: desc.to_string(),
        dim: tower.algebra.dim() as u128,
        relations: rels.iter().map(|r| r.to_string()).collect(),
    })
}

#[derive(Serialize)]
struct TowerRecord<'a> {
    f: &'a str,
    m: usize,
    #[serde(flatten)]
    summary: &'a TowerSummary,
}

fn cmd_tower(a: &TowerArgs, config: &Config, out: &mut dyn Write) -> Result<i32> {
    let summary = tower_summary(&a.field, &a.f, a.m, config.budget)?;
    if a.json {
        let rec = TowerRecord { f: &a.f, m: a.m, summary: &summary };
        writeln!(out, "{}", serde_json::to_string(&rec).expect("records serialize")).map_err(io)?;
    } else {
        let word = if summary.field == "Z" { "rank" } else { "dim" };
        writeln!(out, "{word} = {}", summary.dim).map_err(io)?;
        for r in &summary.relations {
            writeln!(out, "  {r} = 0").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["closurelab"];
        full.extend_from_slice(args);
        let code = run(full, &Config::default(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn close_prints_dimension() {
        assert_eq!(call(&["close", "--algebra", "Q[x,y]/((x,y)^2)", "--m", "2"]), (0, "dim = 6\n".into(), String::new()));
        assert_eq!(call(&["close", "--algebra", "F2[x,y]/(x^2,y^2)", "--m", "3"]).1, "dim = 32\n");
        assert_eq!(call(&["close", "--algebra", "Q[x]/(x^2)", "--m", "3"]).1, "dim = 0\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["close", "--algebra", "Q[x]/(x^", "--m", "2"]).0, EXIT_PARSE);
        assert_eq!(call(&["close", "--algebra", "Q[x]/(x^2)"]).0, EXIT_PARSE);
        assert_eq!(call(&["close", "--algebra", "Q[x]/(x^2)", "--m", "2", "--method", "naive"]).0, EXIT_PRECONDITION);
        assert_eq!(call(&["close", "--algebra", "Q[x,y]/(x^2,y^2)", "--m", "2", "--method", "local"]).0, EXIT_OK);
        assert_eq!(call(&["close", "--algebra", "Q[x]/(x^2 - 1)", "--m", "2", "--method", "local"]).0, EXIT_PRECONDITION);
        assert_eq!(call(&["close", "--algebra", "Q[x]/(x^9)", "--m", "6"]).0, EXIT_BUDGET);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn environment_settings() {
        let c = Config::from_vars(Some("101, 103"), Some("500")).unwrap();
        assert_eq!(c, Config { primes: vec![101, 103], budget: 500 });
        assert!(matches!(Config::from_vars(Some("100"), None), Err(Error::NotPrime(100))));
        assert!(matches!(Config::from_vars(None, Some("lots")), Err(Error::Syntax { .. })));
    }

    #[test]
    fn transform_and_tower_output() {
        assert_eq!(call(&["transform", "--f", "Z^3-6Z^2+11Z-6", "--g", "X^2"]).1, "Z^3-14Z^2+49Z-36\n");
        let (code, text, _) = call(&["tower", "--f", "Z^4+1", "--m", "3"]);
        assert_eq!(code, 0);
        assert!(text.starts_with("dim = 24\n"));
        assert!(call(&["tower", "--f", "Z^2+Z+1", "--m", "2"]).1.starts_with("dim = 2\n"));
        assert!(call(&["tower", "--f", "Z^2+Z+1", "--m", "2", "--field", "Z"]).1.starts_with("rank = 2\n"));
        assert_eq!(call(&["tower", "--f", "Z^2+1", "--m", "3"]).0, EXIT_PRECONDITION);
        assert_eq!(call(&["transform", "--f", "Z^3-", "--g", "X"]).0, EXIT_PARSE);
    }
}
