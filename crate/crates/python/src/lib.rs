//! Python bindings. Sets of elements cross the boundary as sorted lists of
//! indices, tables as lists of rows, reports as plain dicts.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyType;
use serde::Serialize;

use skewbrace::corpus::{generate_corpus, run_conjecture_suite};
use skewbrace::doc::{load_brace, BraceDoc};
use skewbrace::enumeration::{classify_up_to_iso, enumerate_braces_on};
use skewbrace::series::{series_of_kind, SeriesKind};
use skewbrace::substructures::{all_ideals, distinguished_sets, ideal_closure, is_ideal, is_left_ideal};
use skewbrace::ybe::{canonical_solution, summarize};
use skewbrace::{
    analyze, braces_isomorphic, make_brace, nilpotency_report, opposite_brace, smith_commutator, trivial_brace,
    verify_identities, ElementSet, Error, FiniteGroup, SkewBrace,
};

create_exception!(skewbrace_py, BraceError, PyValueError, "Invalid input: bad table, broken axiom, bad argument.");
create_exception!(
    skewbrace_py,
    InconsistencyError,
    PyRuntimeError,
    "A proved identity failed to hold; indicates a bug."
);

fn err(e: Error) -> PyErr {
    if e.is_internal() {
        InconsistencyError::new_err(e.to_string())
    } else {
        BraceError::new_err(e.to_string())
    }
}

fn to_py<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Brace", module = "skewbrace_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyBrace {
    inner: SkewBrace,
}

impl PyBrace {
    fn set(&self, members: Vec<usize>) -> PyResult<ElementSet> {
        let n = self.inner.order();
        if let Some(&x) = members.iter().find(|&&x| x >= n) {
            return Err(BraceError::new_err(format!("{x} is not an element of 0..{n}")));
        }
        Ok(ElementSet::from_members(n, members))
    }

    fn element(&self, x: usize) -> PyResult<usize> {
        if x < self.inner.order() {
            Ok(x)
        } else {
            Err(BraceError::new_err(format!("{x} is not an element of 0..{}", self.inner.order())))
        }
    }
}

fn group(rows: Vec<Vec<usize>>) -> PyResult<FiniteGroup> {
    FiniteGroup::new(&rows).map_err(err)
}

#[pymethods]
impl PyBrace {
    /// Validates both tables and the brace axiom.
    #[new]
    fn new(add: Vec<Vec<usize>>, circ: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyBrace { inner: make_brace(&add, &circ).map_err(err)? })
    }

    #[classmethod]
    fn load(_cls: &Bound<'_, PyType>, path: &str) -> PyResult<Self> {
        let (_, inner) = load_brace(path).map_err(err)?;
        Ok(PyBrace { inner })
    }

    #[classmethod]
    fn trivial(_cls: &Bound<'_, PyType>, table: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyBrace { inner: trivial_brace(&group(table)?) })
    }

    #[classmethod]
    fn opposite(_cls: &Bound<'_, PyType>, table: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyBrace { inner: opposite_brace(&group(table)?) })
    }

    fn save(&self, path: &str, name: &str) -> PyResult<()> {
        BraceDoc::from_brace(name, &self.inner).save(path).map_err(err)
    }

    fn to_text(&self, name: &str) -> String {
        BraceDoc::from_brace(name, &self.inner).to_text()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Brace(order={})", self.inner.order())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    #[getter]
    fn add_table(&self) -> Vec<Vec<usize>> {
        self.inner.add_rows()
    }

    #[getter]
    fn circ_table(&self) -> Vec<Vec<usize>> {
        self.inner.circ_rows()
    }

    fn add(&self, x: usize, y: usize) -> PyResult<usize> {
        Ok(self.inner.add(self.element(x)?, self.element(y)?))
    }

    fn circ(&self, x: usize, y: usize) -> PyResult<usize> {
        Ok(self.inner.circ(self.element(x)?, self.element(y)?))
    }

    fn lam(&self, x: usize, y: usize) -> PyResult<usize> {
        Ok(self.inner.lambda(self.element(x)?, self.element(y)?))
    }

    fn star(&self, x: usize, y: usize) -> PyResult<usize> {
        Ok(self.inner.star(self.element(x)?, self.element(y)?))
    }

    fn is_abelian_type(&self) -> bool {
        self.inner.is_abelian_type()
    }

    /// Names of identities that fail; empty for every valid brace.
    fn failing_identities(&self) -> Vec<String> {
        verify_identities(&self.inner).checks.into_iter().filter(|c| !c.passed).map(|c| c.name.to_string()).collect()
    }

    /// `fix`, `ker_lambda`, `soc`, `zeta` as lists.
    fn distinguished_sets<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &distinguished_sets(&self.inner).map_err(err)?)
    }

    fn ideals(&self) -> Vec<Vec<usize>> {
        all_ideals(&self.inner).iter().map(ElementSet::members).collect()
    }

    fn is_ideal(&self, members: Vec<usize>) -> PyResult<bool> {
        is_ideal(&self.inner, &self.set(members)?).map_err(err)
    }

    fn is_left_ideal(&self, members: Vec<usize>) -> PyResult<bool> {
        Ok(is_left_ideal(&self.inner, &self.set(members)?))
    }

    fn ideal_closure(&self, members: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(ideal_closure(&self.inner, &self.set(members)?).members())
    }

    /// Commutator of two ideals, given by their members.
    fn commutator(&self, i: Vec<usize>, j: Vec<usize>) -> PyResult<Vec<usize>> {
        let (i, j) = (self.set(i)?, self.set(j)?);
        Ok(smith_commutator(&self.inner, &i, &j).map_err(err)?.members())
    }

    /// Stages of one series: `zeta`, `gamma`, `left`, `right` or `mixed`.
    fn series(&self, kind: &str) -> PyResult<Vec<Vec<usize>>> {
        let kind = SeriesKind::from_name(kind).ok_or_else(|| BraceError::new_err(format!("unknown series '{kind}'")))?;
        let s = series_of_kind(&self.inner, kind).map_err(err)?;
        Ok(s.stages.iter().map(ElementSet::members).collect())
    }

    fn nilpotency<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &nilpotency_report(&self.inner).map_err(err)?)
    }

    fn analyze<'py>(&self, py: Python<'py>, name: &str) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &analyze(name, &self.inner).map_err(err)?)
    }

    /// `holds`, `nondegenerate`, `involutive` for the canonical solution.
    fn ybe<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &summarize(&canonical_solution(&self.inner).map_err(err)?))
    }

    /// `r(x, y)` of the canonical solution.
    fn solution(&self, x: usize, y: usize) -> PyResult<(usize, usize)> {
        let (x, y) = (self.element(x)?, self.element(y)?);
        let l = self.inner.lambda(x, y);
        Ok((l, self.inner.circ(self.inner.circ(self.inner.bar(l), x), y)))
    }

    /// Bijection onto `other` preserving both operations, if one exists.
    fn isomorphism(&self, other: &Self) -> Option<Vec<usize>> {
        braces_isomorphic(&self.inner, &other.inner)
    }
}

/// Every brace on the group with the given table; one per isomorphism class
/// when `up_to_iso`.
#[pyfunction]
#[pyo3(signature = (table, up_to_iso = false))]
fn enumerate(py: Python<'_>, table: Vec<Vec<usize>>, up_to_iso: bool) -> PyResult<Vec<PyBrace>> {
    let g = group(table)?;
    let family = py.detach(|| enumerate_braces_on(&g).map(classify_up_to_iso)).map_err(err)?;
    let chosen: Vec<usize> = if up_to_iso { family.iso_classes.clone() } else { (0..family.braces.len()).collect() };
    Ok(chosen.into_iter().map(|i| PyBrace { inner: family.braces[i].clone() }).collect())
}

/// The built-in test corpus as `(name, Brace)` pairs.
#[pyfunction]
fn corpus(py: Python<'_>) -> PyResult<Vec<(String, PyBrace)>> {
    let docs = py.detach(generate_corpus).map_err(err)?;
    Ok(docs.into_iter().map(|(doc, inner)| (doc.name, PyBrace { inner })).collect())
}

/// Open-question scan over a directory of brace documents.
#[pyfunction]
fn conjecture_suite<'py>(py: Python<'py>, directory: &str) -> PyResult<Bound<'py, PyAny>> {
    let summary = py.detach(|| run_conjecture_suite(directory)).map_err(err)?;
    to_py(py, &summary)
}

#[pymodule]
fn skewbrace_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBrace>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(corpus, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_suite, m)?)?;
    m.add("BraceError", m.py().get_type::<BraceError>())?;
    m.add("InconsistencyError", m.py().get_type::<InconsistencyError>())?;
    Ok(())
}
