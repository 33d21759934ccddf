//! Python bindings. Rationals cross the boundary as `"p/q"` strings and
//! reports as JSON text.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use reductive_workbench::catalog;
use reductive_workbench::cli::{self, CheckLevel, ReportOptions};
use reductive_workbench::liealg::{self, scalar, Scalar, SubspaceBasis, Vector};
use reductive_workbench::numlab;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_scalar(text: &str) -> PyResult<Scalar> {
    scalar::parse(text).ok_or_else(|| value_error(format!("invalid rational `{text}`")))
}

fn parse_vector(coords: &[String], dim: usize) -> PyResult<Vector> {
    if coords.len() != dim {
        return Err(value_error(format!("expected {dim} coordinates, got {}", coords.len())));
    }
    coords.iter().map(|c| parse_scalar(c)).collect::<PyResult<Vec<_>>>().map(Vector::new)
}

fn options(checks: &str, numeric: bool) -> PyResult<ReportOptions> {
    let checks = match checks {
        "all" => CheckLevel::All,
        "fast" => CheckLevel::Fast,
        other => return Err(value_error(format!("checks must be `all` or `fast`, got `{other}`"))),
    };
    Ok(ReportOptions { checks, numeric })
}

/// A real Lie algebra given by exact structure constants.
#[pyclass(name = "LieAlgebra", frozen)]
struct PyLieAlgebra {
    inner: liealg::LieAlgebra,
}

#[pymethods]
impl PyLieAlgebra {
    /// `brackets` holds `(i, j, k, "p/q")` with `[e_i, e_j] = Σ c e_k`, 0-based.
    #[new]
    #[pyo3(signature = (labels, brackets))]
    fn new(labels: Vec<String>, brackets: Vec<(usize, usize, usize, String)>) -> PyResult<Self> {
        let entries = brackets
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, parse_scalar(c)?)))
            .collect::<PyResult<Vec<_>>>()?;
        let inner = liealg::make_lie_algebra(labels.len(), labels, &entries).map_err(value_error)?;
        Ok(PyLieAlgebra { inner })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn structure_constants(&self) -> Vec<(usize, usize, usize, String)> {
        self.inner
            .structure_entries()
            .into_iter()
            .map(|(i, j, k, c)| (i, j, k, scalar::format(&c)))
            .collect()
    }

    fn bracket(&self, x: Vec<String>, y: Vec<String>) -> PyResult<Vec<String>> {
        let n = self.inner.dim();
        let (x, y) = (parse_vector(&x, n)?, parse_vector(&y, n)?);
        Ok(self.inner.bracket(&x, &y).to_strings())
    }

    fn killing_form(&self) -> Vec<Vec<String>> {
        liealg::killing_form(&self.inner).gram().to_strings()
    }

    fn center(&self) -> Vec<Vec<String>> {
        liealg::center(&self.inner).to_strings()
    }

    fn is_subalgebra(&self, vectors: Vec<Vec<String>>) -> PyResult<bool> {
        let n = self.inner.dim();
        let vs = vectors.iter().map(|v| parse_vector(v, n)).collect::<PyResult<Vec<_>>>()?;
        Ok(self.inner.is_subalgebra(&SubspaceBasis::span(n, &vs)))
    }

    /// Center and simple ideals, each as an echelon basis.
    fn simple_ideals(&self) -> PyResult<(Vec<Vec<String>>, Vec<Vec<Vec<String>>>)> {
        let d = liealg::simple_ideal_decomposition(&self.inner).map_err(value_error)?;
        Ok((d.center.to_strings(), d.simple_ideals.iter().map(SubspaceBasis::to_strings).collect()))
    }

    fn __repr__(&self) -> String {
        format!("LieAlgebra(dim={}, labels={:?})", self.inner.dim(), self.inner.labels())
    }
}

/// A named catalog presentation.
#[pyclass(name = "CatalogEntry", frozen)]
struct PyCatalogEntry {
    inner: catalog::CatalogEntry,
}

#[pymethods]
impl PyCatalogEntry {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        catalog::construct(name).map(|inner| PyCatalogEntry { inner }).map_err(value_error)
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    fn algebra(&self) -> PyLieAlgebra {
        PyLieAlgebra {
            inner: self.inner.algebra.clone(),
        }
    }

    fn subalgebra(&self) -> Vec<Vec<String>> {
        self.inner.h.to_strings()
    }

    #[pyo3(signature = (checks = "all", numeric = false))]
    fn report(&self, checks: &str, numeric: bool) -> PyResult<String> {
        let r = cli::catalog_report(&self.inner, options(checks, numeric)?).map_err(value_error)?;
        Ok(cli::to_json(&r))
    }

    fn __repr__(&self) -> String {
        format!("CatalogEntry({:?})", self.inner.name)
    }
}

#[pyfunction]
fn list_catalog() -> Vec<&'static str> {
    catalog::list().to_vec()
}

/// JSON report for a catalog entry.
#[pyfunction]
#[pyo3(signature = (name, checks = "all", numeric = false))]
fn analyze_catalog(name: &str, checks: &str, numeric: bool) -> PyResult<String> {
    let r = cli::analyze_catalog_entry(name, options(checks, numeric)?).map_err(value_error)?;
    Ok(cli::to_json(&r))
}

/// JSON report for a space specification given as JSON text.
#[pyfunction]
#[pyo3(signature = (text, checks = "all"))]
fn analyze_spec(text: &str, checks: &str) -> PyResult<String> {
    let r = cli::analyze_spec_text(text, "<python>", options(checks, false)?).map_err(value_error)?;
    Ok(cli::to_json(&r))
}

#[pyfunction]
fn matrix_exp(a: Vec<Vec<f64>>) -> PyResult<Vec<Vec<f64>>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(value_error("matrix must be square"));
    }
    let m = numlab::matrix_exp(&nalgebra_from(&a)).map_err(value_error)?;
    Ok((0..n).map(|i| (0..n).map(|j| m[(i, j)]).collect()).collect())
}

fn nalgebra_from(a: &[Vec<f64>]) -> numlab::FloatMatrix {
    let n = a.len();
    numlab::FloatMatrix::from_fn(n, n, |i, j| a[i][j])
}

#[pymodule]
fn reductive_workbench_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLieAlgebra>()?;
    m.add_class::<PyCatalogEntry>()?;
    m.add_function(wrap_pyfunction!(list_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_spec, m)?)?;
    m.add_function(wrap_pyfunction!(matrix_exp, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
