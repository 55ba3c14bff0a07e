//! One PASS/FAIL line per acceptance criterion.
//!
//! The process exits nonzero only when a failure appears that is not in
//! `KNOWN`, the list of published values this implementation disputes. Those
//! still print FAIL.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use closurelab::arith::DEFAULT_PRIMES;
use closurelab::cli::manifest::{Manifest, ManifestEntry};
use closurelab::cli::verify::{run_suite, Suite, VerifyOptions};
use closurelab::closure::{presentation_closure_dim, Arithmetic, Method, DEFAULT_BUDGET};
use closurelab::multipoly::parse_presentation;
use serde_json::Value;

/// Disputed published values, keyed by `criterion:row:m`.
const KNOWN: [&str; 3] = ["2:t2-14:3", "3:t2-25:5", "4:F2:3"];

struct Outcome {
    criterion: u8,
    title: &'static str,
    failures: Vec<String>,
    detail: String,
    elapsed: Duration,
}

impl Outcome {
    fn print(&self) {
        let verdict = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "{verdict} criterion {}: {} ({}; {:.1} s)",
            self.criterion,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        );
    }

    fn unexpected(&self) -> Vec<String> {
        self.failures
            .iter()
            .filter(|f| !KNOWN.contains(&format!("{}:{f}", self.criterion).as_str()))
            .cloned()
            .collect()
    }
}

/// Compare every expected value of `entries` with `ms` in range; returns
/// `(checked, failures)` with failures as `row:m` plus a human note.
fn compare(entries: &[ManifestEntry], ms: std::ops::RangeInclusive<usize>, arithmetic: &Arithmetic) -> (usize, Vec<(String, String)>) {
    let mut checked = 0;
    let mut failures = Vec::new();
    for e in entries {
        let pres = e.presentation().expect("bundled manifest parses");
        for (m, expected) in e.expected_dims().expect("bundled manifest keys") {
            if !ms.contains(&m) {
                continue;
            }
            checked += 1;
            match presentation_closure_dim(&pres, m, Method::General, arithmetic, DEFAULT_BUDGET) {
                Ok(r) if r.stats.dim == expected => {}
                Ok(r) => failures.push((format!("{}:{m}", e.name), format!("{} m={m}: {} vs {expected}", e.name, r.stats.dim))),
                Err(err) => failures.push((format!("{}:{m}", e.name), format!("{} m={m}: {err}", e.name))),
            }
        }
    }
    (checked, failures)
}

fn summary(checked: usize, failures: &[(String, String)]) -> String {
    let mut s = format!("{} of {checked} values match", checked - failures.len());
    if !failures.is_empty() {
        let notes: Vec<&str> = failures.iter().map(|(_, n)| n.as_str()).collect();
        s.push_str(&format!("; computed vs printed: {}", notes.join(", ")));
    }
    s
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let rows = Manifest::table1().entries;
    let (n_mod, f_mod) = compare(&rows, 0..=5, &Arithmetic::Modular(DEFAULT_PRIMES.to_vec()));
    let (n_ex, f_ex) = compare(&rows, 0..=5, &Arithmetic::Exact);
    let elapsed = start.elapsed();
    let mut failures: Vec<String> = f_mod.iter().chain(f_ex.iter()).map(|(k, _)| k.clone()).collect();
    if elapsed > Duration::from_secs(300) {
        failures.push("runtime".into());
    }
    Outcome {
        criterion: 1,
        title: "Table 1, modular and exact",
        detail: format!("modular: {}; exact: {}", summary(n_mod, &f_mod), summary(n_ex, &f_ex)),
        failures,
        elapsed,
    }
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let (checked, f) = compare(&Manifest::table2().entries, 2..=3, &Arithmetic::default());
    let elapsed = start.elapsed();
    let mut failures: Vec<String> = f.iter().map(|(k, _)| k.clone()).collect();
    if elapsed > Duration::from_secs(1800) {
        failures.push("runtime".into());
    }
    Outcome { criterion: 2, title: "Table 2, m = 2, 3", detail: summary(checked, &f), failures, elapsed }
}

fn criterion_3() -> (Outcome, String) {
    let start = Instant::now();
    let table = Manifest::table2().entries;
    let (gate, rest): (Vec<_>, Vec<_>) = table.into_iter().partition(|e| e.has_tag("gate"));
    let (checked, f) = compare(&gate, 4..=5, &Arithmetic::default());
    let elapsed = start.elapsed();
    let mut failures: Vec<String> = f.iter().map(|(k, _)| k.clone()).collect();
    if elapsed > Duration::from_secs(7200) {
        failures.push("runtime".into());
    }
    let ext_start = Instant::now();
    let (ext_checked, ext_f) = compare(&rest, 4..=5, &Arithmetic::default());
    let extended = format!(
        "INFO extended Table 2, m = 4, 5, remaining rows: {} ({:.1} s)",
        summary(ext_checked, &ext_f),
        ext_start.elapsed().as_secs_f64()
    );
    (Outcome { criterion: 3, title: "Table 2 gate rows, m = 4, 5", detail: summary(checked, &f), failures, elapsed }, extended)
}

fn dim(text: &str, m: usize, method: Method) -> Result<usize, String> {
    let pres = parse_presentation(text).map_err(|e| e.to_string())?;
    presentation_closure_dim(&pres, m, method, &Arithmetic::default(), DEFAULT_BUDGET)
        .map(|r| r.stats.dim)
        .map_err(|e| e.to_string())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let body = "[x1,x2,x3,x4]/((x1,x2,x3,x4)^2)";
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for (key, field, printed) in [("F2", "F2", 110), ("F4", "GF(2,2)", 105)] {
        match dim(&format!("{field}{body}"), 3, Method::Naive) {
            Ok(d) if d == printed => notes.push(format!("naive {key} = {d}")),
            Ok(d) => {
                failures.push(format!("{key}:3"));
                notes.push(format!("naive {key} = {d}, printed {printed}"));
            }
            Err(e) => {
                failures.push(format!("{key}:3:error"));
                notes.push(format!("naive {key}: {e}"));
            }
        }
    }
    let true_dims: Vec<Result<usize, String>> =
        ["F2", "GF(2,2)"].iter().map(|f| dim(&format!("{f}{body}"), 3, Method::General)).collect();
    match (&true_dims[0], &true_dims[1]) {
        (Ok(a), Ok(b)) if a == b => notes.push(format!("true closure {a} over both")),
        _ => {
            failures.push("true-closure".into());
            notes.push(format!("true closure {:?} vs {:?}", true_dims[0], true_dims[1]));
        }
    }
    Outcome { criterion: 4, title: "naive closure counterexample", detail: notes.join(", "), failures, elapsed: start.elapsed() }
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for (field, m, want) in [("F2", 2, 16), ("F2", 3, 32), ("Q", 2, 13), ("Q", 3, 26)] {
        let got = dim(&format!("{field}[x,y]/(x^2, y^2)"), m, Method::General);
        if got != Ok(want) {
            failures.push(format!("{field}:{m}"));
        }
        notes.push(format!("{field} m={m}: {}", got.map_or_else(|e| e, |d| d.to_string())));
    }
    Outcome { criterion: 5, title: "characteristic 2 deviation", detail: notes.join(", "), failures, elapsed: start.elapsed() }
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let opts = VerifyOptions { seed: 0, prime: DEFAULT_PRIMES[0], budget: DEFAULT_BUDGET };
    let mut failures = Vec::new();
    let mut total = 0;
    let mut suites = BTreeSet::new();
    for suite in Suite::EACH.into_iter().filter(|s| *s != Suite::Naive) {
        suites.insert(suite.name());
        match run_suite(suite, &opts) {
            Ok(checks) => {
                total += checks.len();
                failures.extend(checks.iter().filter(|c| !c.ok).map(|c| format!("{}:{}", c.suite, c.property)));
            }
            Err(e) => failures.push(format!("{}:{e}", suite.name())),
        }
    }
    let detail = format!("{} of {total} checks pass in {} suites", total - failures.len(), suites.len());
    Outcome { criterion: 6, title: "property suites", detail, failures, elapsed: start.elapsed() }
}

fn table1_json() -> Result<Vec<Value>, String> {
    let manifest = format!("{}/manifests/table1.json", env!("CARGO_MANIFEST_DIR"));
    let out = Command::new(env!("CARGO_BIN_EXE_closurelab"))
        .args(["table", "--manifest", &manifest, "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    text.lines()
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).map_err(|e| e.to_string())?;
            v.as_object_mut().map(|o| o.remove("ms"));
            Ok(v)
        })
        .collect()
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let (a, b) = (table1_json(), table1_json());
    let (failures, detail) = match (a, b) {
        (Ok(a), Ok(b)) if a == b && !a.is_empty() => (vec![], format!("{} records identical", a.len())),
        (Ok(a), Ok(b)) => (vec!["differ".into()], format!("{} vs {} records, not identical", a.len(), b.len())),
        (Err(e), _) | (_, Err(e)) => (vec!["error".into()], e),
    };
    Outcome { criterion: 7, title: "deterministic table output", detail, failures, elapsed: start.elapsed() }
}

fn main() {
    let (c3, extended) = criterion_3();
    let outcomes = [criterion_1(), criterion_2(), c3, criterion_4(), criterion_5(), criterion_6(), criterion_7()];
    let mut unexpected = Vec::new();
    for o in &outcomes {
        o.print();
        unexpected.extend(o.unexpected().into_iter().map(|f| format!("criterion {}: {f}", o.criterion)));
    }
    println!("{extended}");
    let passed = outcomes.iter().filter(|o| o.failures.is_empty()).count();
    println!("{passed} of {} criteria pass", outcomes.len());
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {}", unexpected.join("; "));
        std::process::exit(1);
    }
}
