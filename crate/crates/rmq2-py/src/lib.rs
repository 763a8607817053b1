//! Python bindings for the `rmq2` succinct range-minimum library.
//!
//! Builds as a `cdylib`; the resulting shared object imports as the
//! `rmq2_py` module and exposes [`RmqIndex`] and [`DocIndex`] wrappers.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBytes, PyDict};
use rmq2::{Corpus, DocIndex, RmqIndex, TiePolicy};

fn to_py_err(e: rmq2::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_tie(tie: &str) -> PyResult<TiePolicy> {
    match tie {
        "rightmost" => Ok(TiePolicy::Rightmost),
        "leftmost" => Ok(TiePolicy::Leftmost),
        other => Err(PyValueError::new_err(format!(
            "unknown tie policy {other:?}; expected \"rightmost\" or \"leftmost\""
        ))),
    }
}

/// Range-minimum index over a sequence of integers.
///
/// Positions are 1-based, matching the native API: valid queries are
/// `1 <= i <= j <= len(index)` and answers are positions in that range.
#[pyclass(frozen, name = "RmqIndex", module = "rmq2_py")]
struct PyRmqIndex {
    inner: RmqIndex,
}

#[pymethods]
impl PyRmqIndex {
    /// Builds an index over `values`. `tie` selects which position is
    /// reported when the minimum is not unique: "rightmost" (default)
    /// or "leftmost".
    #[staticmethod]
    #[pyo3(signature = (values, tie = "rightmost"))]
    fn build(values: Vec<i64>, tie: &str) -> PyResult<Self> {
        let n = values.len();
        let inner = RmqIndex::build(&values, n, parse_tie(tie)?).map_err(to_py_err)?;
        Ok(PyRmqIndex { inner })
    }

    /// Position of the minimum in `values[i..=j]` (1-based, inclusive).
    fn query(&self, i: usize, j: usize) -> PyResult<usize> {
        self.inner.query(i, j).map_err(to_py_err)
    }

    /// Parent of node `v` in the underlying tree, or 0 for the root.
    fn parent(&self, v: usize) -> PyResult<usize> {
        self.inner.parent(v).map_err(to_py_err)
    }

    /// Lowest common ancestor of nodes `i` and `j` (0 denotes the root).
    fn lca(&self, i: usize, j: usize) -> PyResult<usize> {
        self.inner.lca(i, j).map_err(to_py_err)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// Tie policy the index was built with ("rightmost" or "leftmost").
    #[getter]
    fn tie(&self) -> &'static str {
        match self.inner.tie() {
            TiePolicy::Rightmost => "rightmost",
            TiePolicy::Leftmost => "leftmost",
        }
    }

    /// Per-component sizes in bits, plus "total", "aux" and
    /// "bits_per_element" summary entries.
    fn size_breakdown<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let sb = self.inner.size_breakdown();
        let d = PyDict::new(py);
        for (name, bits) in sb.components() {
            d.set_item(name, bits)?;
        }
        d.set_item("total", sb.total_bits())?;
        d.set_item("aux", sb.aux_bits())?;
        d.set_item("bits_per_element", sb.bits_per_element())?;
        Ok(d)
    }

    /// Serializes the index into its portable container format.
    fn serialize<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        PyBytes::new(py, &self.inner.serialize())
    }

    /// Restores an index serialized by [`serialize`].
    #[staticmethod]
    fn deserialize(bytes: &[u8]) -> PyResult<Self> {
        let inner = RmqIndex::deserialize(bytes).map_err(to_py_err)?;
        Ok(PyRmqIndex { inner })
    }

    fn __repr__(&self) -> String {
        format!("RmqIndex(len={}, tie={:?})", self.inner.len(), self.tie())
    }
}

/// Document-listing index over a collection of byte documents.
#[pyclass(frozen, name = "DocIndex", module = "rmq2_py")]
struct PyDocIndex {
    inner: DocIndex,
}

#[pymethods]
impl PyDocIndex {
    /// Builds the index from a list of documents (each a `bytes` object;
    /// documents must not contain the byte 0).
    #[staticmethod]
    fn build(docs: Vec<Vec<u8>>) -> PyResult<Self> {
        let corpus = Corpus::new(docs).map_err(to_py_err)?;
        let inner = DocIndex::build(&corpus).map_err(to_py_err)?;
        Ok(PyDocIndex { inner })
    }

    /// Ids (1-based, ascending) of every document containing `pattern`.
    fn list_docs(&self, pattern: &[u8]) -> PyResult<Vec<usize>> {
        self.inner.list_docs(pattern).map_err(to_py_err)
    }

    /// Number of documents in the indexed collection.
    #[getter]
    fn num_docs(&self) -> usize {
        self.inner.num_docs()
    }

    /// Length of the concatenated text, separators included.
    #[getter]
    fn text_len(&self) -> usize {
        self.inner.text_len()
    }

    /// Document id owning text position `p` (1-based).
    fn doc_of(&self, p: usize) -> PyResult<usize> {
        self.inner.doc_of(p).map_err(to_py_err)
    }

    /// Serializes the index into its portable container format.
    fn serialize<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        PyBytes::new(py, &self.inner.serialize())
    }

    /// Restores an index serialized by [`serialize`].
    #[staticmethod]
    fn deserialize(bytes: &[u8]) -> PyResult<Self> {
        let inner = DocIndex::deserialize(bytes).map_err(to_py_err)?;
        Ok(PyDocIndex { inner })
    }

    fn __repr__(&self) -> String {
        format!(
            "DocIndex(num_docs={}, text_len={})",
            self.inner.num_docs(),
            self.inner.text_len()
        )
    }
}

#[pymodule]
fn rmq2_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRmqIndex>()?;
    m.add_class::<PyDocIndex>()?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
