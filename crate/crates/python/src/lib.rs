//! Python bindings. Certificates cross the boundary as plain dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use matroid_liaison::chain::{build_chain, ChainConfig};
use matroid_liaison::monomial::{default_vars, matroid_ideal, parse_monomial, slightly_mixed_power};
use matroid_liaison::poly::Budget;
use matroid_liaison::{cm_check_ideal, FieldSpec, Monomial, Side};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_error)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn parse_side(side: &str) -> PyResult<Side> {
    match side {
        "sr" => Ok(Side::Sr),
        "cover" => Ok(Side::Cover),
        other => Err(PyValueError::new_err(format!("side must be 'sr' or 'cover', got '{other}'"))),
    }
}

fn parse_field(field: &str) -> PyResult<FieldSpec> {
    field.parse().map_err(PyValueError::new_err)
}

/// A matroid on `1..=n` given by its bases.
#[pyclass(name = "Matroid", module = "matroid_liaison", frozen)]
struct PyMatroid(matroid_liaison::Matroid);

#[pymethods]
impl PyMatroid {
    #[new]
    fn new(n: usize, bases: Vec<Vec<usize>>) -> PyResult<Self> {
        matroid_liaison::Matroid::from_bases(n, &bases).map(PyMatroid).map_err(value_error)
    }

    #[staticmethod]
    fn uniform(r: usize, n: usize) -> PyResult<Self> {
        matroid_liaison::Matroid::uniform(r, n).map(PyMatroid).map_err(value_error)
    }

    /// Cycle matroid of a connected graph on vertices `1..=vertices`.
    #[staticmethod]
    fn graphic(vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        matroid_liaison::Matroid::graphic(vertices, &edges).map(PyMatroid).map_err(value_error)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(value_error)?;
        matroid_liaison::Matroid::from_json(&value).map(PyMatroid).map_err(value_error)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn bases(&self) -> Vec<Vec<usize>> {
        self.0.bases()
    }

    fn dual(&self) -> Self {
        PyMatroid(self.0.dual())
    }

    fn delete(&self, i: usize) -> PyResult<Self> {
        self.0.delete(i).map(PyMatroid).map_err(value_error)
    }

    fn loops(&self) -> Vec<usize> {
        self.0.loops()
    }

    fn coloops(&self) -> Vec<usize> {
        self.0.coloops()
    }

    /// `J^(l) : N` on the Stanley-Reisner (`"sr"`) or cover side.
    #[pyo3(signature = (side = "cover", l = 1, colon = ""))]
    fn ideal(&self, side: &str, l: u32, colon: &str) -> PyResult<PyMonomialIdeal> {
        let vars = default_vars(self.0.n());
        let n = parse_monomial(colon, &vars).map_err(value_error)?;
        let (_, radical) = matroid_ideal(&self.0, parse_side(side)?);
        let (ideal, _) = slightly_mixed_power(&radical, l, &n, &vars).map_err(value_error)?;
        Ok(PyMonomialIdeal(ideal))
    }

    /// Builds and verifies a glicci chain; returns the certificate as a dict.
    #[allow(clippy::too_many_arguments)]
    #[pyo3(signature = (side = "cover", l = 1, colon = "", deep = false, budget_pairs = None, field = "q"))]
    fn glicci<'py>(
        &self,
        py: Python<'py>,
        side: &str,
        l: u32,
        colon: &str,
        deep: bool,
        budget_pairs: Option<usize>,
        field: &str,
    ) -> PyResult<Bound<'py, PyAny>> {
        let vars = default_vars(self.0.n());
        let n = parse_monomial(colon, &vars).map_err(value_error)?;
        let mut budget = Budget::default();
        if let Some(p) = budget_pairs {
            budget.max_pairs = Some(p);
        }
        let cfg = ChainConfig { deep, budget, field: parse_field(field)?, deadline: None };
        let side = parse_side(side)?;
        let cert = py.detach(|| build_chain(&self.0, side, l, &n, &cfg)).map_err(value_error)?;
        to_py(py, &cert)
    }

    fn __repr__(&self) -> String {
        format!("Matroid(n={}, rank={}, bases={})", self.0.n(), self.0.rank(), self.0.bases().len())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// A monomial ideal with minimal generators as exponent vectors.
#[pyclass(name = "MonomialIdeal", module = "matroid_liaison", frozen)]
struct PyMonomialIdeal(matroid_liaison::MonomialIdeal);

#[pymethods]
impl PyMonomialIdeal {
    #[new]
    fn new(vars: Vec<String>, gens: Vec<Vec<u32>>) -> PyResult<Self> {
        let gens = gens.into_iter().map(Monomial).collect();
        matroid_liaison::MonomialIdeal::new(vars, gens).map(PyMonomialIdeal).map_err(value_error)
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.0.vars().to_vec()
    }

    #[getter]
    fn gens(&self) -> Vec<Vec<u32>> {
        self.0.gens().iter().map(|g| g.0.clone()).collect()
    }

    fn gens_text(&self) -> Vec<String> {
        self.0.gens_text()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_unit(&self) -> bool {
        self.0.is_unit()
    }

    fn is_squarefree(&self) -> bool {
        self.0.is_squarefree()
    }

    fn contains(&self, exps: Vec<u32>) -> PyResult<bool> {
        if exps.len() != self.0.nvars() {
            return Err(PyValueError::new_err("exponent vector has the wrong length"));
        }
        Ok(self.0.contains(&Monomial(exps)))
    }

    fn colon(&self, exps: Vec<u32>) -> PyResult<Self> {
        if exps.len() != self.0.nvars() {
            return Err(PyValueError::new_err("exponent vector has the wrong length"));
        }
        Ok(PyMonomialIdeal(self.0.colon(&Monomial(exps))))
    }

    fn intersect(&self, other: &Self) -> PyResult<Self> {
        self.0.intersect(&other.0).map(PyMonomialIdeal).map_err(value_error)
    }

    fn radical(&self) -> Self {
        PyMonomialIdeal(self.0.radical())
    }

    fn polarize(&self) -> Self {
        PyMonomialIdeal(self.0.polarize())
    }

    fn height(&self) -> PyResult<usize> {
        self.0.height().map_err(value_error)
    }

    /// Cohen-Macaulay check over `"q"` or `"fp:<p>"`; returns the
    /// certificate as a dict.
    #[pyo3(signature = (field = "q"))]
    fn cm_check<'py>(&self, py: Python<'py>, field: &str) -> PyResult<Bound<'py, PyAny>> {
        let field = parse_field(field)?;
        let (_, cert) = py.detach(|| cm_check_ideal(&self.0, field)).map_err(value_error)?;
        to_py(py, &cert)
    }

    fn __len__(&self) -> usize {
        self.0.gens().len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MonomialIdeal{}", self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// Whether `ideal` is Cohen-Macaulay over `field`.
#[pyfunction]
#[pyo3(signature = (ideal, field = "q"))]
fn is_cohen_macaulay(py: Python<'_>, ideal: &PyMonomialIdeal, field: &str) -> PyResult<bool> {
    let field = parse_field(field)?;
    py.detach(|| cm_check_ideal(&ideal.0, field)).map(|(cm, _)| cm).map_err(value_error)
}

#[pymodule]
#[pyo3(name = "matroid_liaison")]
fn matroid_liaison_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatroid>()?;
    m.add_class::<PyMonomialIdeal>()?;
    m.add_function(wrap_pyfunction!(is_cohen_macaulay, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
