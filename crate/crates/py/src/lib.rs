//! Python bindings. Records come back as plain dicts and lists, built from
//! the same JSON the CLI prints.

use pyo3::exceptions::{PyOSError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyModule;
use serde::Serialize;
use serde_json::json;

use chromratio::asymptotics::{self, RateParams};
use chromratio::conjectures::{self, ConjectureVerdict, DEFAULT_S_MAX};
use chromratio::extremal::{self, FRecord, Strategy};
use chromratio::graph::{self as core_graph, canon};
use chromratio::ramsey::{self, BoundsTable, RamseyValue};
use chromratio::Error;

const DEFAULT_BUDGET: u64 = 10_000_000;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Verification(_) => PyRuntimeError::new_err(e.to_string()),
        Error::Io(_) => PyOSError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

trait OrPy<T> {
    fn or_py(self) -> PyResult<T>;
}

impl<T> OrPy<T> for chromratio::Result<T> {
    fn or_py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn params(delta: Option<f64>) -> PyResult<RateParams> {
    match delta {
        Some(d) => RateParams::new(d).or_py(),
        None => Ok(RateParams::default()),
    }
}

fn table(path: Option<&str>) -> PyResult<BoundsTable> {
    match path {
        Some(p) => BoundsTable::load(p).or_py(),
        None => Ok(BoundsTable::default_table()),
    }
}

/// A simple graph on at most 64 vertices.
#[pyclass(name = "Graph", module = "chromratio", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: chromratio::Graph,
}

impl From<chromratio::Graph> for PyGraph {
    fn from(inner: chromratio::Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(chromratio::Graph::from_edges(n, &edges).or_py()?.into())
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(chromratio::Graph::from_graph6(text).or_py()?.into())
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Ok(chromratio::Graph::complete(n).or_py()?.into())
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Ok(chromratio::Graph::cycle(n).or_py()?.into())
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        Ok(chromratio::Graph::path(n).or_py()?.into())
    }

    #[staticmethod]
    fn paley(q: usize) -> PyResult<Self> {
        Ok(chromratio::Graph::paley(q).or_py()?.into())
    }

    /// `levels` Mycielskians applied to K2.
    #[staticmethod]
    fn mycielski_tower(levels: usize) -> PyResult<Self> {
        Ok(chromratio::Graph::mycielski_tower(levels).or_py()?.into())
    }

    #[staticmethod]
    #[pyo3(signature = (n, p, seed = 0))]
    fn random(n: usize, p: f64, seed: u64) -> PyResult<Self> {
        Ok(chromratio::Graph::random(n, p, seed).or_py()?.into())
    }

    fn to_graph6(&self) -> String {
        self.inner.to_graph6()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner
            .to_edge_list()
            .edges
            .into_iter()
            .map(|[u, v]| (u, v))
            .collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn complement(&self) -> Self {
        self.inner.complement().into()
    }

    fn mycielski(&self) -> PyResult<Self> {
        Ok(self.inner.mycielski().or_py()?.into())
    }

    /// Canonical representative of the isomorphism class.
    fn canonical(&self) -> Self {
        canon::canonical_form(&self.inner).0.into()
    }

    fn clique_number(&self) -> u32 {
        core_graph::clique_number(&self.inner).value
    }

    fn independence_number(&self) -> u32 {
        core_graph::independence_number(&self.inner).value
    }

    /// `{"lower", "upper", "exact", "nodes", "coloring"}`.
    #[pyo3(signature = (budget = DEFAULT_BUDGET))]
    fn chromatic_bounds(&self, py: Python<'_>, budget: u64) -> PyResult<Py<PyAny>> {
        let b = core_graph::chromatic_bounds(&self.inner, budget);
        to_py(
            py,
            &json!({
                "lower": b.lower,
                "upper": b.upper,
                "exact": b.exact,
                "nodes": b.nodes,
                "coloring": b.coloring.colors,
            }),
        )
    }

    #[pyo3(signature = (m0 = 1))]
    fn greedy_coloring(&self, py: Python<'_>, m0: usize) -> PyResult<Py<PyAny>> {
        let (coloring, stats) = core_graph::greedy_erdos_coloring(&self.inner, m0).or_py()?;
        let bound = stats.color_bound();
        to_py(
            py,
            &json!({ "coloring": coloring.colors, "stats": stats, "bound": bound }),
        )
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.inner.to_graph6())
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.inner.to_graph6().hash(&mut h);
        h.finish()
    }
}

#[pyfunction]
#[pyo3(signature = (s, t, n_max = 64, budget = DEFAULT_BUDGET))]
fn ramsey_exact_small(
    py: Python<'_>,
    s: u32,
    t: u32,
    n_max: usize,
    budget: u64,
) -> PyResult<Py<PyAny>> {
    let out = ramsey::ramsey_exact_small(s, t, n_max, budget).or_py()?;
    let (exact, lower, upper) = match out.value {
        RamseyValue::Exact(v) => (true, v, Some(v)),
        RamseyValue::Interval { lower, upper } => (false, lower, upper),
    };
    to_py(
        py,
        &json!({
            "exact": exact,
            "lower": lower,
            "upper": upper,
            "witness_red": out.witness.as_ref().map(|w| w.red.to_graph6()),
            "nodes": out.nodes,
            "budget_exhausted": out.budget_exhausted,
        }),
    )
}

/// The bounds table as JSON text; built from computation alone when
/// `derive` is set.
#[pyfunction]
#[pyo3(signature = (derive = false, budget = DEFAULT_BUDGET))]
fn ramsey_table(derive: bool, budget: u64) -> PyResult<String> {
    let t = if derive {
        ramsey::derive_small_table(budget).or_py()?
    } else {
        BoundsTable::default_table()
    };
    Ok(t.to_json_string())
}

#[pyfunction]
#[pyo3(signature = (delta = None, tol = 1e-10))]
fn maximize_phi(py: Python<'_>, delta: Option<f64>, tol: f64) -> PyResult<Py<PyAny>> {
    to_py(
        py,
        &asymptotics::maximize_phi(&params(delta)?, tol).or_py()?,
    )
}

#[pyfunction]
#[pyo3(signature = (x, delta = None))]
fn phi(x: f64, delta: Option<f64>) -> PyResult<f64> {
    asymptotics::phi(x, &params(delta)?).or_py()
}

#[pyfunction]
#[pyo3(signature = (delta = None))]
fn diagonal_constant(delta: Option<f64>) -> PyResult<f64> {
    Ok(asymptotics::diagonal_constant(&params(delta)?))
}

/// `(k, st)` from the central binomial rule.
#[pyfunction]
fn min_product_binom(n: u64) -> PyResult<(u64, u64)> {
    asymptotics::min_product_binom(n).or_py()
}

#[pyfunction]
fn min_product_brute_force(n: u64) -> u64 {
    asymptotics::min_product_brute_force(n)
}

fn record(py: Python<'_>, r: &FRecord) -> PyResult<Py<PyAny>> {
    to_py(
        py,
        &json!({
            "n": r.n,
            "chi": r.value.num,
            "omega": r.value.den,
            "witness_graph6": r.witness.to_graph6(),
            "exhaustive": r.exhaustive,
            "search_meta": r.search_meta,
        }),
    )
}

#[pyfunction]
#[pyo3(signature = (n, budget = u64::MAX, allow_nine = false))]
fn f_exact(py: Python<'_>, n: usize, budget: u64, allow_nine: bool) -> PyResult<Py<PyAny>> {
    let r = py
        .detach(|| extremal::f_exact(n, budget, allow_nine))
        .or_py()?;
    record(py, &r)
}

#[pyfunction]
#[pyo3(signature = (n, strategy = "hybrid", seed = 0, budget = DEFAULT_BUDGET))]
fn f_lower_search(
    py: Python<'_>,
    n: usize,
    strategy: &str,
    seed: u64,
    budget: u64,
) -> PyResult<Py<PyAny>> {
    let strategy: Strategy = strategy.parse().or_py()?;
    let r = py
        .detach(|| extremal::f_lower_search(n, strategy, seed, budget))
        .or_py()?;
    record(py, &r)
}

/// Re-verifies an f-table (the shipped one when `text` is omitted).
#[pyfunction]
#[pyo3(signature = (text = None))]
fn verify_f_table(text: Option<&str>) -> PyResult<usize> {
    let rows =
        extremal::f_table_from_json(text.unwrap_or(extremal::DEFAULT_F_TABLE_JSON)).or_py()?;
    extremal::verify_f_table(&rows).or_py()?;
    Ok(rows.len())
}

fn verdicts(py: Python<'_>, v: Vec<ConjectureVerdict>) -> PyResult<Py<PyAny>> {
    to_py(py, &v)
}

#[pyfunction]
#[pyo3(signature = (s_max = DEFAULT_S_MAX, table_path = None))]
fn check_rdc(py: Python<'_>, s_max: u32, table_path: Option<&str>) -> PyResult<Py<PyAny>> {
    verdicts(py, conjectures::check_rdc(&table(table_path)?, s_max))
}

#[pyfunction]
#[pyo3(signature = (s_max = DEFAULT_S_MAX, table_path = None))]
fn check_mult_rdc(py: Python<'_>, s_max: u32, table_path: Option<&str>) -> PyResult<Py<PyAny>> {
    verdicts(py, conjectures::check_mult_rdc(&table(table_path)?, s_max))
}

#[pyfunction]
#[pyo3(signature = (s_max = DEFAULT_S_MAX, table_path = None))]
fn check_weak_mult_rdc(
    py: Python<'_>,
    s_max: u32,
    table_path: Option<&str>,
) -> PyResult<Py<PyAny>> {
    verdicts(
        py,
        conjectures::check_weak_mult_rdc(&table(table_path)?, s_max),
    )
}

/// First nested quadruple with the product bound but not the sum bound.
#[pyfunction]
fn implication_quadruples(n: u32) -> Option<(u32, u32, u32, u32)> {
    conjectures::implication_quadruples(n)
}

#[pyfunction]
#[pyo3(signature = (table_path = None))]
fn empirical_rates(py: Python<'_>, table_path: Option<&str>) -> PyResult<Py<PyAny>> {
    to_py(py, &conjectures::empirical_rates(&table(table_path)?))
}

#[pymodule]
#[pyo3(name = "chromratio")]
pub fn chromratio_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(ramsey_exact_small, m)?)?;
    m.add_function(wrap_pyfunction!(ramsey_table, m)?)?;
    m.add_function(wrap_pyfunction!(maximize_phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(diagonal_constant, m)?)?;
    m.add_function(wrap_pyfunction!(min_product_binom, m)?)?;
    m.add_function(wrap_pyfunction!(min_product_brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(f_exact, m)?)?;
    m.add_function(wrap_pyfunction!(f_lower_search, m)?)?;
    m.add_function(wrap_pyfunction!(verify_f_table, m)?)?;
    m.add_function(wrap_pyfunction!(check_rdc, m)?)?;
    m.add_function(wrap_pyfunction!(check_mult_rdc, m)?)?;
    m.add_function(wrap_pyfunction!(check_weak_mult_rdc, m)?)?;
    m.add_function(wrap_pyfunction!(implication_quadruples, m)?)?;
    m.add_function(wrap_pyfunction!(empirical_rates, m)?)?;
    Ok(())
}
