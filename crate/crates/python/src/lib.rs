//! Python module `hdiff`: normal forms and verification suites.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use hdiff_core::ring::{Element, RingCtx};
use hdiff_core::suites::{run_suite, Suite, SuiteParams};
use hdiff_core::Error;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        e => PyValueError::new_err(e.to_string()),
    }
}

/// An element of `Diff_h(n, N)` in normal form.
#[pyclass(name = "Element", frozen)]
struct PyElement {
    inner: Element,
}

#[pymethods]
impl PyElement {
    #[new]
    #[pyo3(signature = (text, n, copies = 1))]
    fn new(text: &str, n: usize, copies: usize) -> PyResult<Self> {
        let ctx = RingCtx::new(n, copies).map_err(to_py)?;
        let inner = hdiff_core::expr::parse_element(text, ctx).map_err(to_py)?;
        Ok(PyElement { inner })
    }

    fn __mul__(&self, other: &PyElement) -> PyResult<PyElement> {
        let inner = self.inner.product(&other.inner).map_err(to_py)?;
        Ok(PyElement { inner })
    }

    fn __add__(&self, other: &PyElement) -> PyResult<PyElement> {
        let inner = self.inner.try_add(&other.inner).map_err(to_py)?;
        Ok(PyElement { inner })
    }

    fn __sub__(&self, other: &PyElement) -> PyResult<PyElement> {
        let inner = self.inner.try_sub(&other.inner).map_err(to_py)?;
        Ok(PyElement { inner })
    }

    fn __pow__(&self, e: u32, _modulo: Option<Py<PyAny>>) -> PyElement {
        PyElement { inner: self.inner.pow(e) }
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.inner == other.inner
    }

    fn commutator(&self, other: &PyElement) -> PyResult<PyElement> {
        let inner = self.inner.commutator(&other.inner).map_err(to_py)?;
        Ok(PyElement { inner })
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({:?})", self.inner.to_string())
    }
}

/// Normal form of `text` in `Diff_h(n, copies)`, as a string.
#[pyfunction]
#[pyo3(signature = (text, n, copies = 1))]
fn normal_form(text: &str, n: usize, copies: usize) -> PyResult<String> {
    Ok(PyElement::new(text, n, copies)?.inner.to_string())
}

/// Runs a named suite and returns its report as a JSON string.
#[pyfunction]
#[pyo3(signature = (suite, n = 2, copies = 1, seed = 0, degree = 3))]
fn suite_json(py: Python<'_>, suite: &str, n: usize, copies: usize, seed: u64, degree: usize) -> PyResult<String> {
    let suite: Suite = suite.parse().map_err(to_py)?;
    let params = SuiteParams { n, copies, seed, degree };
    let report = py.detach(|| run_suite(suite, params)).map_err(to_py)?;
    serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
fn hdiff(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyElement>()?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(suite_json, m)?)?;
    Ok(())
}
