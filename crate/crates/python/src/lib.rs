//! Python bindings. Reports come back as plain dicts and lists, decoded from
//! the same JSON the command-line tool prints.

use graphconv::graph::{self, VertexFunction};
use graphconv::infinite::{Family, DEFAULT_RADIUS};
use graphconv::report::{self, Report, VerificationReport};
use graphconv::{io, pretopology, solvers, verifier, Error, VertexSet};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Graph", module = "graphconv_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: graphconv::Graph,
}

impl PyGraph {
    fn set(&self, members: Vec<usize>) -> PyResult<VertexSet> {
        let n = self.inner.n();
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(err(Error::VertexOutOfRange { vertex: v, n }));
        }
        Ok(VertexSet::from_members(n, members))
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self {
            inner: graphconv::Graph::from_edges(n, &edges).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: io::parse_edge_list(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        Self {
            inner: graphconv::Graph::complete(n),
        }
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        Self {
            inner: graphconv::Graph::path(n),
        }
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        Self {
            inner: graphconv::Graph::cycle(n),
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn to_edge_list(&self) -> String {
        io::to_edge_list(&self.inner)
    }

    #[pyo3(signature = (name = "graph"))]
    fn to_dot(&self, name: &str) -> String {
        io::to_dot(&self.inner, name)
    }

    fn closed_neighborhood(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.closed_neighborhood(v).map_err(err)?.to_vec())
    }

    fn adherence(&self, a: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(pretopology::adherence(&self.inner, &self.set(a)?).map_err(err)?.to_vec())
    }

    fn interior(&self, a: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(pretopology::interior(&self.inner, &self.set(a)?).map_err(err)?.to_vec())
    }

    fn is_open(&self, a: Vec<usize>) -> PyResult<bool> {
        pretopology::is_open(&self.inner, &self.set(a)?).map_err(err)
    }

    fn is_closed(&self, a: Vec<usize>) -> PyResult<bool> {
        pretopology::is_closed(&self.inner, &self.set(a)?).map_err(err)
    }

    fn is_transitive(&self) -> bool {
        graph::is_transitive(&self.inner)
    }

    fn components(&self) -> Vec<Vec<usize>> {
        graph::connected_components(&self.inner).iter().map(VertexSet::to_vec).collect()
    }

    fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        solvers::bipartition(&self.inner).map(|(a, b)| (a.to_vec(), b.to_vec()))
    }

    fn min_dominating_set(&self) -> PyResult<Vec<usize>> {
        Ok(solvers::min_dominating_set(&self.inner).map_err(err)?.set.to_vec())
    }

    /// Edges and internal vertices of a spanning tree with fewest internal
    /// vertices.
    fn min_internal_spanning_tree(&self) -> PyResult<(Vec<(usize, usize)>, Vec<usize>)> {
        let t = solvers::min_internal_spanning_tree(&self.inner).map_err(err)?;
        Ok((t.edges, t.internal))
    }

    fn tensor_product(&self, other: &PyGraph) -> PyResult<PyGraph> {
        Ok(PyGraph {
            inner: graph::tensor_product(&self.inner, &other.inner).map_err(err)?,
        })
    }

    fn strong_product(&self, other: &PyGraph) -> PyResult<PyGraph> {
        Ok(PyGraph {
            inner: graph::strong_product(&self.inner, &other.inner).map_err(err)?,
        })
    }

    /// Whether `f`, given as its list of values, is continuous into `h`.
    fn is_continuous_map(&self, f: Vec<usize>, h: &PyGraph) -> PyResult<bool> {
        let f = VertexFunction::new(h.inner.n(), f).map_err(err)?;
        solvers::is_continuous_map(&f, &self.inner, &h.inner).map_err(err)
    }

    fn is_homomorphism(&self, f: Vec<usize>, h: &PyGraph) -> PyResult<bool> {
        let f = VertexFunction::new(h.inner.n(), f).map_err(err)?;
        graph::is_homomorphism(&f, &self.inner, &h.inner).map_err(err)
    }

    #[pyo3(signature = (skip_exact = false, input = "python"))]
    fn analyze<'py>(&self, py: Python<'py>, skip_exact: bool, input: &str) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &Report::Analysis(report::analyze(&self.inner, input, skip_exact)))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={:?})", self.inner.n(), self.inner.edges().collect::<Vec<_>>())
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction]
fn theorems() -> Vec<&'static str> {
    verifier::THEOREMS.to_vec()
}

#[pyfunction]
fn families() -> Vec<String> {
    Family::catalog().iter().map(Family::to_string).collect()
}

#[pyfunction]
#[pyo3(signature = (theorem, n_max = 6, seed = 0))]
fn verify<'py>(py: Python<'py>, theorem: &str, n_max: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let check = py.detach(|| verifier::verify(theorem, n_max, seed)).map_err(err)?;
    to_py(py, &check)
}

#[pyfunction]
#[pyo3(signature = (n_max = 6, seed = 0))]
fn verify_all<'py>(py: Python<'py>, n_max: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let checks = py.detach(|| verifier::verify_all(n_max, seed));
    to_py(py, &Report::Verification(VerificationReport::new(n_max, seed, checks)))
}

#[pyfunction]
#[pyo3(signature = (name, radius = DEFAULT_RADIUS))]
fn family_report<'py>(py: Python<'py>, name: &str, radius: usize) -> PyResult<Bound<'py, PyAny>> {
    let family = Family::parse(name).map_err(err)?;
    let r = py.detach(|| report::family_report(family, radius));
    to_py(py, &Report::Family(r))
}

#[pymodule]
fn graphconv_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(theorems, m)?)?;
    m.add_function(wrap_pyfunction!(families, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add_function(wrap_pyfunction!(family_report, m)?)?;
    m.add("FORMAT_VERSION", report::FORMAT_VERSION)?;
    Ok(())
}
