//! Python bindings: the module `polystoch_py`.
//!
//! Entries cross the boundary as canonical rational strings (`"1/2"`), so
//! `fractions.Fraction(s)` recovers them exactly.

use polystoch::{
    self as core, EnumerateOptions, Error, MultiMatrix, NonVertexCertificate, CATALOG_NAMES,
};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(polystoch_py, PolystochError, PyValueError);

fn to_py(e: Error) -> PyErr {
    PolystochError::new_err(e.to_string())
}

/// A d-dimensional matrix of order n with exact rational entries.
#[pyclass(name = "MultiMatrix", module = "polystoch_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyMultiMatrix {
    inner: MultiMatrix,
}

impl From<MultiMatrix> for PyMultiMatrix {
    fn from(inner: MultiMatrix) -> Self {
        PyMultiMatrix { inner }
    }
}

#[pymethods]
impl PyMultiMatrix {
    /// `entries` in storage order (last axis fastest); each item's `str()`
    /// must be a canonical rational such as `3`, `-1/2`.
    #[new]
    fn new(n: usize, d: usize, entries: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let values = entries
            .iter()
            .map(|e| {
                let s = e.str()?.to_string();
                core::parse_rational(&s).map_err(PolystochError::new_err)
            })
            .collect::<PyResult<Vec<_>>>()?;
        Ok(MultiMatrix::new(n, d, values).map_err(to_py)?.into())
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(core::parse_matrix(text.as_bytes()).map_err(to_py)?.into())
    }

    fn to_json(&self) -> String {
        core::serialize_matrix(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn d(&self) -> usize {
        self.inner.d()
    }

    fn entries(&self) -> Vec<String> {
        self.inner.entries().iter().map(core::format_rational).collect()
    }

    fn get(&self, index: Vec<usize>) -> PyResult<String> {
        if index.len() != self.inner.d() || index.iter().any(|&i| i >= self.inner.n()) {
            return Err(PolystochError::new_err(format!("index {index:?} out of range")));
        }
        Ok(core::format_rational(self.inner.get(&index)))
    }

    fn support_size(&self) -> usize {
        self.inner.support_size()
    }

    fn is_polystochastic(&self) -> bool {
        self.inner.is_polystochastic()
    }

    fn is_permutation(&self) -> bool {
        self.inner.is_permutation()
    }

    fn __repr__(&self) -> String {
        format!("MultiMatrix({})", self.to_json())
    }
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    CATALOG_NAMES.to_vec()
}

#[pyfunction]
fn catalog(name: &str) -> PyResult<PyMultiMatrix> {
    Ok(core::catalog(name).map_err(to_py)?.into())
}

#[pyfunction]
fn is_vertex(m: &PyMultiMatrix) -> PyResult<bool> {
    core::is_vertex(&m.inner).map_err(to_py)
}

/// JSON certificate that `m` is not a vertex, or `None` for a vertex.
#[pyfunction]
fn certificate(m: &PyMultiMatrix) -> PyResult<Option<String>> {
    Ok(core::non_vertex_certificate(&m.inner)
        .map_err(to_py)?
        .map(|c| c.to_json()))
}

#[pyfunction]
fn verify_certificate(m: &PyMultiMatrix, certificate: &str) -> PyResult<bool> {
    let cert = NonVertexCertificate::from_json(certificate.as_bytes()).map_err(to_py)?;
    Ok(cert.verify(&m.inner))
}

#[pyfunction]
fn check_support_bound(m: &PyMultiMatrix) -> bool {
    core::check_support_bound(&m.inner)
}

#[pyfunction]
fn kronecker(a: &PyMultiMatrix, b: &PyMultiMatrix) -> PyResult<PyMultiMatrix> {
    Ok(core::kronecker(&a.inner, &b.inner).map_err(to_py)?.into())
}

#[pyfunction]
fn dot(a: &PyMultiMatrix, b: &PyMultiMatrix) -> PyResult<PyMultiMatrix> {
    Ok(core::dot(&a.inner, &b.inner).map_err(to_py)?.into())
}

#[pyfunction]
fn dot_plane_equivalence_check(a: &PyMultiMatrix, b: &PyMultiMatrix) -> PyResult<bool> {
    core::dot_plane_equivalence_check(&a.inner, &b.inner).map_err(to_py)
}

#[pyfunction]
fn canonical_form(py: Python<'_>, m: &PyMultiMatrix) -> PyResult<PyMultiMatrix> {
    let inner = m.inner.clone();
    Ok(py
        .detach(move || core::canonical_form(&inner))
        .map_err(to_py)?
        .into())
}

#[pyfunction]
fn are_equivalent(py: Python<'_>, a: &PyMultiMatrix, b: &PyMultiMatrix) -> PyResult<bool> {
    let (a, b) = (a.inner.clone(), b.inner.clone());
    py.detach(move || core::are_equivalent(&a, &b)).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (n, d, threads = 1))]
fn enumerate_vertices(py: Python<'_>, n: usize, d: usize, threads: usize) -> PyResult<Vec<PyMultiMatrix>> {
    let opts = EnumerateOptions {
        threads,
        cell_order: None,
    };
    let vs = py
        .detach(move || core::enumerate_vertices_with(n, d, &opts))
        .map_err(to_py)?;
    Ok(vs.into_iter().map(Into::into).collect())
}

#[pyfunction]
fn sample_vertex(py: Python<'_>, n: usize, d: usize, seed: u64) -> PyResult<PyMultiMatrix> {
    if n == 0 || d == 0 {
        return Err(PolystochError::new_err("order and dimension must be at least 1"));
    }
    Ok(py.detach(move || core::sample_vertex(n, d, seed)).into())
}

/// Survey report as JSON.
#[pyfunction]
#[pyo3(signature = (n, d, seeds, seed0, threads = 1))]
fn survey(py: Python<'_>, n: usize, d: usize, seeds: usize, seed0: u64, threads: usize) -> PyResult<String> {
    if n == 0 || d == 0 {
        return Err(PolystochError::new_err("order and dimension must be at least 1"));
    }
    py.detach(move || core::sample_survey(n, d, seeds, seed0, threads))
        .map(|r| r.to_json())
        .map_err(to_py)
}

/// Bound report as JSON; big integers are decimal strings.
#[pyfunction]
fn bound_report(n: usize, d: usize) -> PyResult<String> {
    if n < 2 || d == 0 {
        return Err(PolystochError::new_err("bounds need n >= 2 and d >= 1"));
    }
    Ok(core::bound_report(n, d).to_json())
}

#[pymodule]
fn polystoch_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("PolystochError", m.py().get_type::<PolystochError>())?;
    m.add_class::<PyMultiMatrix>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(is_vertex, m)?)?;
    m.add_function(wrap_pyfunction!(certificate, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(check_support_bound, m)?)?;
    m.add_function(wrap_pyfunction!(kronecker, m)?)?;
    m.add_function(wrap_pyfunction!(dot, m)?)?;
    m.add_function(wrap_pyfunction!(dot_plane_equivalence_check, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(are_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(sample_vertex, m)?)?;
    m.add_function(wrap_pyfunction!(survey, m)?)?;
    m.add_function(wrap_pyfunction!(bound_report, m)?)?;
    Ok(())
}
