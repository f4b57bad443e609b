//! Python bindings. Counts come back as Python `int`.

use circulant_trees as ct;
use ct::{CyclePowerSpec, CyclePowerVariant, DirectedCirculantSpec, PrecisionBudget};
use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py_err(e: ct::Error) -> PyErr {
    match e {
        ct::Error::InvalidSpec(_) | ct::Error::IndexOutOfRange { .. } => PyValueError::new_err(e.to_string()),
        ct::Error::PrecisionExhausted { .. } => PyArithmeticError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn to_int<'py>(py: Python<'py>, value: &ct::TreeCount) -> PyResult<Bound<'py, PyAny>> {
    py.import("builtins")?.getattr("int")?.call1((value.to_string(),))
}

fn digraph(beta: u64, n: u64, p: u64, gammas: Vec<u64>) -> PyResult<DirectedCirculantSpec> {
    DirectedCirculantSpec::new(beta, n, p, gammas).map_err(to_py_err)
}

fn cycle_power(beta: u64, n: u64, power: &str) -> PyResult<CyclePowerSpec> {
    let variant = match power {
        "n" => CyclePowerVariant::PowerN,
        "n-1" => CyclePowerVariant::PowerNMinus1,
        other => return Err(PyValueError::new_err(format!("power must be 'n' or 'n-1', got {other:?}"))),
    };
    CyclePowerSpec::new(beta, n, variant).map_err(to_py_err)
}

fn budget(start_bits: u32, cap_bits: u32) -> PyResult<PrecisionBudget> {
    PrecisionBudget::new(start_bits, cap_bits).map_err(to_py_err)
}

/// Arborescence count of the circulant digraph from the paired product formula.
#[pyfunction]
#[pyo3(signature = (beta, n, p, gammas, start_bits=128, cap_bits=65536))]
fn theorem1_count(
    py: Python<'_>,
    beta: u64,
    n: u64,
    p: u64,
    gammas: Vec<u64>,
    start_bits: u32,
    cap_bits: u32,
) -> PyResult<Bound<'_, PyAny>> {
    let spec = digraph(beta, n, p, gammas)?;
    let r = ct::theorem1_count(&spec, budget(start_bits, cap_bits)?).map_err(to_py_err)?;
    to_int(py, &r.count)
}

#[pyfunction]
#[pyo3(signature = (beta, n, p, gamma, start_bits=128, cap_bits=65536))]
fn theorem2_count(
    py: Python<'_>,
    beta: u64,
    n: u64,
    p: u64,
    gamma: u64,
    start_bits: u32,
    cap_bits: u32,
) -> PyResult<Bound<'_, PyAny>> {
    let spec = digraph(beta, n, p, vec![gamma])?;
    let r = ct::theorem2_count(&spec, budget(start_bits, cap_bits)?).map_err(to_py_err)?;
    to_int(py, &r.count)
}

#[pyfunction]
#[pyo3(signature = (beta, n, p, gammas, start_bits=128, cap_bits=65536))]
fn betaproduct_count(
    py: Python<'_>,
    beta: u64,
    n: u64,
    p: u64,
    gammas: Vec<u64>,
    start_bits: u32,
    cap_bits: u32,
) -> PyResult<Bound<'_, PyAny>> {
    let spec = digraph(beta, n, p, gammas)?;
    let r = ct::betaproduct_count(&spec, budget(start_bits, cap_bits)?).map_err(to_py_err)?;
    to_int(py, &r.count)
}

/// Spanning trees of `C^n_{βn}` (`power="n"`) or `C^{n-1}_{βn}` (`power="n-1"`).
#[pyfunction]
#[pyo3(signature = (beta, n, power="n", start_bits=128, cap_bits=65536))]
fn cycle_power_count<'py>(
    py: Python<'py>,
    beta: u64,
    n: u64,
    power: &str,
    start_bits: u32,
    cap_bits: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let spec = cycle_power(beta, n, power)?;
    let r = ct::cycle_power_count(&spec, budget(start_bits, cap_bits)?).map_err(to_py_err)?;
    to_int(py, &r.count)
}

/// Exact cofactor count for the digraph.
#[pyfunction]
fn tau_directed(py: Python<'_>, beta: u64, n: u64, p: u64, gammas: Vec<u64>) -> PyResult<Bound<'_, PyAny>> {
    let spec = digraph(beta, n, p, gammas)?;
    let inst = ct::reduce_to_instance(&spec).map_err(to_py_err)?;
    to_int(py, &ct::tau_directed(&inst).map_err(to_py_err)?)
}

/// Exact cofactor count for the cycle power graph.
#[pyfunction]
#[pyo3(signature = (beta, n, power="n"))]
fn tau_undirected<'py>(py: Python<'py>, beta: u64, n: u64, power: &str) -> PyResult<Bound<'py, PyAny>> {
    let spec = cycle_power(beta, n, power)?;
    let inst = ct::cycle_power_instance(&spec).map_err(to_py_err)?;
    to_int(py, &ct::tau_undirected(&inst).map_err(to_py_err)?)
}

/// Reason string when the digraph is disconnected by a gcd or parity condition.
#[pyfunction]
fn structural_zero_reason(beta: u64, n: u64, p: u64, gammas: Vec<u64>) -> PyResult<Option<&'static str>> {
    let spec = digraph(beta, n, p, gammas)?;
    Ok(ct::is_structurally_zero(&spec).map(|r| r.as_str()))
}

#[pymodule]
fn circulant_trees_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(theorem1_count, m)?)?;
    m.add_function(wrap_pyfunction!(theorem2_count, m)?)?;
    m.add_function(wrap_pyfunction!(betaproduct_count, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_power_count, m)?)?;
    m.add_function(wrap_pyfunction!(tau_directed, m)?)?;
    m.add_function(wrap_pyfunction!(tau_undirected, m)?)?;
    m.add_function(wrap_pyfunction!(structural_zero_reason, m)?)?;
    Ok(())
}
