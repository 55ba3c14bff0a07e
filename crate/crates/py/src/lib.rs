//! Python bindings. Build with `--features extension-module` and load the
//! resulting shared library as `closurelab`.

use closurelab::cli::verify::{run_suite, Suite, VerifyOptions};
use closurelab::cli::{exit_code, tower_summary, transform_text, EXIT_BUDGET, EXIT_PARSE};
use closurelab::closure::{presentation_closure_dim, Arithmetic, Method, DEFAULT_BUDGET};
use closurelab::multipoly::parse_presentation;
use closurelab::arith::DEFAULT_PRIMES;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(closurelab, BudgetExceeded, PyRuntimeError);

fn to_py(e: closurelab::Error) -> PyErr {
    match exit_code(&e) {
        EXIT_PARSE => PyValueError::new_err(e.to_string()),
        EXIT_BUDGET => BudgetExceeded::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

/// `dim A^(m)` for an algebra written as `Q[x,y]/(x^2, y^2)`.
#[pyfunction]
#[pyo3(signature = (algebra, m, method = "general", exact = false, budget = DEFAULT_BUDGET))]
fn closure_dim(algebra: &str, m: usize, method: &str, exact: bool, budget: usize) -> PyResult<usize> {
    let method: Method = method.parse().map_err(to_py)?;
    let pres = parse_presentation(algebra).map_err(to_py)?;
    let arithmetic = if exact { Arithmetic::Exact } else { Arithmetic::default() };
    let report = presentation_closure_dim(&pres, m, method, &arithmetic, budget).map_err(to_py)?;
    Ok(report.stats.dim)
}

/// `∏(Z − g(a_i))` for `f = ∏(Z − a_i)`; `f` is in `Z`, `g` in `X`.
#[pyfunction]
#[pyo3(signature = (f, g, params = Vec::new(), field = "Q"))]
fn transform(f: &str, g: &str, params: Vec<String>, field: &str) -> PyResult<String> {
    transform_text(field, f, g, &params).map_err(to_py)
}

/// `(dim, relations)` of the splitting tower of `f` after `m` steps. Use
/// `field="Z"` for the integral tower, where `dim` is the rank.
#[pyfunction]
#[pyo3(signature = (f, m, field = "Q", budget = DEFAULT_BUDGET))]
fn tower(f: &str, m: usize, field: &str, budget: usize) -> PyResult<(u128, Vec<String>)> {
    let t = tower_summary(field, f, m, budget).map_err(to_py)?;
    Ok((t.dim, t.relations))
}

/// `(suite, property, ok, detail)` for each check of a property suite.
#[pyfunction]
#[pyo3(signature = (suite = "all", seed = 0))]
fn verify(suite: &str, seed: u64) -> PyResult<Vec<(String, String, bool, String)>> {
    let suite = Suite::EACH
        .into_iter()
        .chain([Suite::All])
        .find(|s| s.name() == suite)
        .ok_or_else(|| PyValueError::new_err(format!("unknown suite {suite}")))?;
    let opts = VerifyOptions { seed, prime: DEFAULT_PRIMES[0], budget: DEFAULT_BUDGET };
    let checks = run_suite(suite, &opts).map_err(to_py)?;
    Ok(checks.into_iter().map(|c| (c.suite, c.property, c.ok, c.detail)).collect())
}

#[pymodule]
#[pyo3(name = "closurelab")]
fn py_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(closure_dim, m)?)?;
    m.add_function(wrap_pyfunction!(transform, m)?)?;
    m.add_function(wrap_pyfunction!(tower, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    Ok(())
}
