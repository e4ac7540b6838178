//! Python bindings for the classification toolkit.
//!
//! Exposes the algebra type and the main operations — catalog access,
//! verification, orbit enumeration, the isomorphism check, and the Psi
//! invariant — so the results can be driven from Python. Field elements
//! cross the boundary as strings (or ints), fields as "q" / "fp:P".

use evoclass_core::algebra::EvolutionAlgebra;
use evoclass_core::aut;
use evoclass_core::catalog;
use evoclass_core::cocycle::{psi_subspace, Cocycle};
use evoclass_core::enumerate;
use evoclass_core::extension::{self, ExtensionSpec};
use evoclass_core::field::{Elem, Field};
use evoclass_core::fingerprint::{self, Verdict};
use evoclass_core::json as core_json;
use evoclass_core::report;
use evoclass_core::verify as core_verify;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

const DEFAULT_BUDGET: u64 = 100_000_000;

fn parse_field(spec: &str) -> PyResult<Field> {
    if spec == "q" || spec == "Q" {
        return Ok(Field::rational());
    }
    if let Some(p) = spec.strip_prefix("fp:") {
        let p: u64 = p
            .parse()
            .map_err(|_| PyValueError::new_err(format!("bad modulus in {spec:?}")))?;
        return Field::fp(p).map_err(|e| PyValueError::new_err(e.to_string()));
    }
    Err(PyValueError::new_err(format!(
        "unknown field spec {spec:?} (expected \"q\" or \"fp:P\")"
    )))
}

fn parse_elem(field: &Field, value: &Bound<'_, PyAny>) -> PyResult<Elem> {
    if let Ok(n) = value.extract::<i64>() {
        return Ok(field.from_i64(n));
    }
    let s: String = value.extract()?;
    field
        .parse(&s)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

fn parse_vector(field: &Field, value: &Bound<'_, PyAny>) -> PyResult<Vec<Elem>> {
    let items: Vec<Bound<'_, PyAny>> = value.extract()?;
    items.iter().map(|v| parse_elem(field, v)).collect()
}

fn format_vector(field: &Field, v: &[Elem]) -> Vec<String> {
    v.iter().map(|e| field.format(e)).collect()
}

fn parse_cocycles(field: &Field, value: &Bound<'_, PyAny>) -> PyResult<Vec<Cocycle>> {
    let rows: Vec<Bound<'_, PyAny>> = value.extract()?;
    rows.iter()
        .map(|r| Ok(Cocycle::new(*field, parse_vector(field, r)?)))
        .collect()
}

fn matrix_rows(field: &Field, m: &evoclass_core::linalg::Mat) -> Vec<Vec<String>> {
    (0..m.rows)
        .map(|i| m.row(i).iter().map(|e| field.format(e)).collect())
        .collect()
}

/// An evolution algebra presented by its natural-basis structure matrix.
#[pyclass(name = "Algebra", from_py_object)]
#[derive(Clone)]
struct PyAlgebra {
    inner: EvolutionAlgebra,
}

#[pymethods]
impl PyAlgebra {
    /// Build from a structure matrix: row i holds the coordinates of the
    /// square of basis vector i.
    #[new]
    #[pyo3(signature = (squares, field="q"))]
    fn new(squares: &Bound<'_, PyAny>, field: &str) -> PyResult<Self> {
        let f = parse_field(field)?;
        let rows: Vec<Bound<'_, PyAny>> = squares.extract()?;
        let dim = rows.len();
        let mut mat = evoclass_core::linalg::Mat::zeros(f, dim, dim);
        for (i, row) in rows.iter().enumerate() {
            let v = parse_vector(&f, row)?;
            if v.len() != dim {
                return Err(PyValueError::new_err("squares matrix must be square"));
            }
            for (j, e) in v.into_iter().enumerate() {
                mat.set(i, j, e);
            }
        }
        EvolutionAlgebra::new(f, dim, mat)
            .map(|inner| PyAlgebra { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Look up a catalog entry, optionally with a family parameter.
    #[staticmethod]
    #[pyo3(signature = (name, field="q", alpha=None))]
    fn from_catalog(name: &str, field: &str, alpha: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let f = parse_field(field)?;
        let a = alpha.map(|v| parse_elem(&f, v)).transpose()?;
        catalog::get(name, f, a.as_ref())
            .map(|inner| PyAlgebra { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        core_json::algebra_from_str(text)
            .map(|inner| PyAlgebra { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        core_json::algebra_to_string(&self.inner, None)
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn field(&self) -> String {
        self.inner.field().to_string()
    }

    /// Human-readable multiplication table.
    fn table(&self) -> String {
        self.inner.table()
    }

    fn squares(&self) -> Vec<Vec<String>> {
        let f = self.inner.field();
        matrix_rows(&f, self.inner.squares())
    }

    fn multiply(&self, x: &Bound<'_, PyAny>, y: &Bound<'_, PyAny>) -> PyResult<Vec<String>> {
        let f = self.inner.field();
        let xv = parse_vector(&f, x)?;
        let yv = parse_vector(&f, y)?;
        self.inner
            .multiply(&xv, &yv)
            .map(|v| format_vector(&f, &v))
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn power_chain_dims(&self) -> Vec<usize> {
        self.inner.power_chain().iter().map(|s| s.dim()).collect()
    }

    /// Minimal power with vanishing product subspace, or None.
    fn nilpotency_index(&self) -> Option<usize> {
        self.inner.nilpotency_index()
    }

    fn is_nilpotent(&self) -> bool {
        self.inner.is_nilpotent()
    }

    /// 1-based indices of the natural basis vectors spanning the annihilator.
    fn annihilator_basis(&self) -> Vec<usize> {
        self.inner.annihilator_indices().iter().map(|i| i + 1).collect()
    }

    fn annihilator_dim(&self) -> usize {
        self.inner.annihilator_indices().len()
    }

    /// 1-based witness index of an annihilator component, if one exists.
    fn annihilator_component(&self) -> Option<usize> {
        self.inner.annihilator_component().map(|i| i + 1)
    }

    fn direct_sum(&self, other: &PyAlgebra) -> PyResult<PyAlgebra> {
        self.inner
            .direct_sum(&other.inner)
            .map(|inner| PyAlgebra { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn permuted(&self, perm: Vec<usize>) -> PyResult<PyAlgebra> {
        if perm.len() != self.inner.dim() {
            return Err(PyValueError::new_err("permutation length mismatch"));
        }
        Ok(PyAlgebra { inner: self.inner.permuted(&perm) })
    }

    fn __repr__(&self) -> String {
        format!("Algebra({})", self.inner)
    }

    fn __eq__(&self, other: &PyAlgebra) -> bool {
        self.inner == other.inner
    }
}

/// Catalog entry names, optionally restricted to one dimension.
#[pyfunction]
#[pyo3(signature = (dim=None))]
fn catalog_names(dim: Option<usize>) -> Vec<String> {
    catalog::entries()
        .iter()
        .filter(|e| dim.map_or(true, |d| e.dim == d))
        .map(|e| e.name.to_string())
        .collect()
}

/// Recompute one catalog entry's structure data and diff it against the
/// stored expectations.
#[pyfunction]
#[pyo3(signature = (name, field="q", alpha=None))]
fn verify_entry<'py>(
    py: Python<'py>,
    name: &str,
    field: &str,
    alpha: Option<&Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyDict>> {
    let f = parse_field(field)?;
    let a = alpha.map(|v| parse_elem(&f, v)).transpose()?;
    let rep = catalog::verify_entry(name, f, a.as_ref())
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let out = PyDict::new(py);
    out.set_item("name", &rep.name)?;
    out.set_item("pass", rep.pass())?;
    let checks = PyList::empty(py);
    for c in &rep.checks {
        let item = PyDict::new(py);
        item.set_item("label", c.label)?;
        item.set_item("pass", c.pass)?;
        item.set_item("detail", &c.detail)?;
        checks.append(item)?;
    }
    out.set_item("checks", checks)?;
    Ok(out)
}

/// Full verification run for a dimension; returns True when every check
/// passes.
#[pyfunction]
#[pyo3(signature = (dim, field="q"))]
fn verify_dimension(dim: usize, field: &str) -> PyResult<bool> {
    if !(1..=5).contains(&dim) {
        return Err(PyValueError::new_err("dimension out of the catalog range"));
    }
    let f = parse_field(field)?;
    let opts = core_verify::VerifyOptions { field: f, ..Default::default() };
    Ok(core_verify::run_verify(dim, &opts).pass())
}

/// Three-stage isomorphism decision; returns a dict with the verdict and
/// either the witness matrix or the distinguishing invariant.
#[pyfunction]
#[pyo3(signature = (a, b, budget=None))]
fn isomorphism_check<'py>(
    py: Python<'py>,
    a: &PyAlgebra,
    b: &PyAlgebra,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let verdict = fingerprint::isocheck(&a.inner, &b.inner, budget.unwrap_or(DEFAULT_BUDGET))
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let out = PyDict::new(py);
    match verdict {
        Verdict::Isomorphic { witness } => {
            out.set_item("verdict", "isomorphic")?;
            let f = a.inner.field();
            out.set_item("witness", matrix_rows(&f, &witness))?;
        }
        Verdict::NonIsomorphic { invariant } => {
            out.set_item("verdict", "non-isomorphic")?;
            out.set_item("invariant", invariant)?;
        }
        Verdict::Inconclusive { reason } => {
            out.set_item("verdict", "inconclusive")?;
            out.set_item("reason", reason)?;
        }
    }
    Ok(out)
}

/// Annihilator extension of a base algebra by cocycle diagonals.
#[pyfunction]
fn extend(base: &PyAlgebra, thetas: &Bound<'_, PyAny>) -> PyResult<PyAlgebra> {
    let f = base.inner.field();
    let cocycles = parse_cocycles(&f, thetas)?;
    let spec = ExtensionSpec::new(base.inner.clone(), cocycles);
    extension::extend(&spec)
        .map(|inner| PyAlgebra { inner })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Invert the extension construction: returns (base, thetas, permutation).
#[pyfunction]
fn reconstruct(a: &PyAlgebra) -> PyResult<(PyAlgebra, Vec<Vec<String>>, Vec<usize>)> {
    let rec = extension::reconstruct(&a.inner)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let f = a.inner.field();
    let thetas = rec
        .thetas()
        .iter()
        .map(|t| format_vector(&f, &t.diag))
        .collect();
    Ok((
        PyAlgebra { inner: rec.base().clone() },
        thetas,
        rec.permutation.clone(),
    ))
}

/// The automorphism orbit test on extension cocycles over a common base;
/// returns the witness matrix or None.
#[pyfunction]
#[pyo3(signature = (base, thetas, varthetas, budget=None))]
fn same_orbit(
    base: &PyAlgebra,
    thetas: &Bound<'_, PyAny>,
    varthetas: &Bound<'_, PyAny>,
    budget: Option<u64>,
) -> PyResult<Option<Vec<Vec<String>>>> {
    let f = base.inner.field();
    let t = parse_cocycles(&f, thetas)?;
    let v = parse_cocycles(&f, varthetas)?;
    aut::same_orbit(&base.inner, &t, &v, budget.unwrap_or(DEFAULT_BUDGET))
        .map(|w| w.map(|m| matrix_rows(&f, &m)))
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Psi of the class subspace spanned by the given cocycles.
#[pyfunction]
#[pyo3(signature = (base, classes, budget=None))]
fn psi(base: &PyAlgebra, classes: &Bound<'_, PyAny>, budget: Option<u64>) -> PyResult<Vec<usize>> {
    let f = base.inner.field();
    let c = parse_cocycles(&f, classes)?;
    psi_subspace(&base.inner, &c, budget.unwrap_or(1 << 26))
        .map(|s| s.0)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Enumerate admissible cocycle tuples over a finite-field base algebra,
/// bucketed into isomorphism classes.
#[pyfunction]
#[pyo3(signature = (base, ext, budget=None))]
fn enumerate_orbits<'py>(
    py: Python<'py>,
    base: &PyAlgebra,
    ext: usize,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let e = enumerate::enumerate_orbits(&base.inner, ext, budget.unwrap_or(DEFAULT_BUDGET))
        .map_err(|err| PyValueError::new_err(err.to_string()))?;
    let f = base.inner.field();
    let out = PyDict::new(py);
    out.set_item("admissible", e.admissible)?;
    out.set_item("complete", e.complete)?;
    out.set_item("class_orbits", e.class_orbits.len())?;
    let classes = PyList::empty(py);
    for c in &e.iso_classes {
        let item = PyDict::new(py);
        let rep: Vec<Vec<String>> = c.rep.iter().map(|t| format_vector(&f, &t.diag)).collect();
        item.set_item("rep", rep)?;
        item.set_item("members", c.members)?;
        item.set_item("table", c.algebra.table())?;
        classes.append(item)?;
    }
    out.set_item("iso_classes", classes)?;
    Ok(out)
}

/// The six parameter values isomorphic to alpha in the first family.
#[pyfunction]
fn family_orbit(field: &str, alpha: &Bound<'_, PyAny>) -> PyResult<Vec<String>> {
    let f = parse_field(field)?;
    let a = parse_elem(&f, alpha)?;
    catalog::e518_orbit(&f, &a)
        .map(|v| format_vector(&f, &v))
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Expand both forms of the family's degree-six parameter relation and
/// compare them exactly; returns (equal, unit).
#[pyfunction]
fn verify_sextic_identity() -> (bool, i64) {
    catalog::verify_sextic_identity()
}

/// The classification document for a dimension, as text.
#[pyfunction]
#[pyo3(signature = (dim=5))]
fn classification_report(dim: usize) -> PyResult<String> {
    if !(1..=5).contains(&dim) {
        return Err(PyValueError::new_err("dimension out of the catalog range"));
    }
    Ok(report::classification_text(dim))
}

#[pymodule]
fn evoclass_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(verify_entry, m)?)?;
    m.add_function(wrap_pyfunction!(verify_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(isomorphism_check, m)?)?;
    m.add_function(wrap_pyfunction!(extend, m)?)?;
    m.add_function(wrap_pyfunction!(reconstruct, m)?)?;
    m.add_function(wrap_pyfunction!(same_orbit, m)?)?;
    m.add_function(wrap_pyfunction!(psi, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_orbits, m)?)?;
    m.add_function(wrap_pyfunction!(family_orbit, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sextic_identity, m)?)?;
    m.add_function(wrap_pyfunction!(classification_report, m)?)?;
    Ok(())
}
