//! Python bindings for the term engine: polygraph parsing and validation,
//! typing, normalization, cell equality, bounded enumeration, and checking
//! of equational theories and finite models.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use polycat::freecat::{
    self, cell_to_term, decide_equal, infer_type, normalize as nf, parse_term, EnumOptions,
};
use polycat::{eat, polygraph};

fn err(e: polycat::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A polygraph: generators in each dimension with boundary terms.
#[pyclass]
struct Polygraph {
    inner: polygraph::Polygraph,
}

#[pymethods]
impl Polygraph {
    /// Parses the textual format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Polygraph { inner: polygraph::parse_polygraph(text).map_err(err)? })
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| PyValueError::new_err(format!("cannot read {path}: {e}")))?;
        Self::parse(&text)
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Raises if some boundary term is ill-typed or not parallel.
    fn validate(&self) -> PyResult<()> {
        self.inner.validate().map_err(err)
    }

    fn gens(&self, dim: usize) -> Vec<String> {
        self.inner.gens(dim).map(str::to_string).collect()
    }

    /// The source and target terms of a generator, as strings.
    fn boundary(&self, gen: &str) -> PyResult<(String, String)> {
        let (s, t) = self.inner.boundary_terms(gen).map_err(err)?;
        Ok((s.to_string(), t.to_string()))
    }

    /// Infers the dimension and boundaries of a term over this polygraph.
    fn type_of<'py>(&self, py: Python<'py>, term: &str) -> PyResult<Bound<'py, PyDict>> {
        let t = parse_term(term).map_err(err)?;
        let ty = infer_type(&self.inner, &t).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("dim", ty.dim)?;
        let bound = |c: &Option<freecat::Cell>| -> PyResult<Option<String>> {
            Ok(match c {
                None => None,
                Some(c) => Some(cell_to_term(&self.inner, c).map_err(err)?.to_string()),
            })
        };
        d.set_item("src", bound(&ty.src)?)?;
        d.set_item("tgt", bound(&ty.tgt)?)?;
        Ok(d)
    }

    /// The canonical form of a term, printed back as a term.
    fn normalize(&self, term: &str) -> PyResult<String> {
        let t = parse_term(term).map_err(err)?;
        let c = nf(&self.inner, &t).map_err(err)?;
        Ok(cell_to_term(&self.inner, &c).map_err(err)?.to_string())
    }

    /// Whether two terms denote the same cell.
    fn equal(&self, left: &str, right: &str) -> PyResult<bool> {
        let l = parse_term(left).map_err(err)?;
        let r = parse_term(right).map_err(err)?;
        decide_equal(&self.inner, &l, &r).map_err(err)
    }

    /// All cells of the given dimension within the size bound, as terms.
    fn enumerate(&self, dim: usize, max: usize) -> PyResult<Vec<String>> {
        let cells = freecat::enumerate(&self.inner, dim, EnumOptions { max }).map_err(err)?;
        cells
            .iter()
            .map(|c| Ok(cell_to_term(&self.inner, c).map_err(err)?.to_string()))
            .collect()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

/// Parses a theory and checks its well-formedness; returns its name.
#[pyfunction]
fn check_theory(text: &str) -> PyResult<String> {
    let t = eat::parse_theory(text).map_err(err)?;
    t.check().map_err(err)?;
    Ok(t.name.clone())
}

/// Checks a finite model against a theory. Returns a dict with `ok`,
/// `structural` and `violations`.
#[pyfunction]
fn check_model<'py>(py: Python<'py>, theory: &str, model: &str) -> PyResult<Bound<'py, PyDict>> {
    let t = eat::parse_theory(theory).map_err(err)?;
    t.check().map_err(err)?;
    let m = eat::parse_model(model).map_err(err)?;
    let report = eat::check_model(&t, &m).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("ok", report.ok())?;
    d.set_item("structural", report.structural.clone())?;
    d.set_item("violations", report.violations.clone())?;
    Ok(d)
}

#[pymodule]
fn polycat_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polygraph>()?;
    m.add_function(wrap_pyfunction!(check_theory, m)?)?;
    m.add_function(wrap_pyfunction!(check_model, m)?)?;
    Ok(())
}
