//! Python bindings for the `secant-census` engine. Counts are returned as
//! Python integers of arbitrary size.

use num_bigint::BigInt;
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use secant_census::census::{self, BandDiagram, GridSpec, ProhibitionSequence};
use secant_census::chains::{
    self, ChainTable, ClaimParams, ComponentOrders, RectTableau, WordType,
};
use secant_census::macdonald::{self, Version};
use secant_census::{iecf, plucker, Error};

/// `(incoming, outgoing)` vanishing orders of one component.
type Component = (Vec<i64>, Vec<i64>);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Io { .. } => PyOSError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse_version(version: &str) -> PyResult<Version> {
    match version {
        "one" => Ok(Version::One),
        "two" => Ok(Version::Two),
        other => Err(PyValueError::new_err(format!(
            "version must be 'one' or 'two', got {other:?}"
        ))),
    }
}

/// Parameters `(g, s, m, d, r)` of a secant-plane problem.
#[pyclass(name = "SecantParams", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySecantParams {
    inner: macdonald::SecantParams,
}

#[pymethods]
impl PySecantParams {
    #[new]
    fn new(g: u64, s: u64, m: u64, d: u64, r: u64) -> PyResult<Self> {
        let inner = macdonald::SecantParams::new(g, s, m, d, r).map_err(to_py)?;
        Ok(PySecantParams { inner })
    }

    #[getter]
    fn g(&self) -> u64 {
        self.inner.g
    }

    #[getter]
    fn s(&self) -> u64 {
        self.inner.s
    }

    #[getter]
    fn m(&self) -> u64 {
        self.inner.m
    }

    #[getter]
    fn d(&self) -> u64 {
        self.inner.d
    }

    #[getter]
    fn r(&self) -> u64 {
        self.inner.r
    }

    fn rho(&self) -> i64 {
        self.inner.rho()
    }

    fn mu(&self) -> i64 {
        self.inner.mu()
    }

    /// Macdonald's number, by either extraction.
    #[pyo3(signature = (version = "one"))]
    fn macdonald(&self, version: &str) -> PyResult<BigInt> {
        macdonald::macdonald_general(&self.inner, parse_version(version)?).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        let p = &self.inner;
        format!(
            "SecantParams(g={}, s={}, m={}, d={}, r={})",
            p.g, p.s, p.m, p.d, p.r
        )
    }
}

#[pyfunction]
#[pyo3(signature = (g, s, m, d, r, version = "one"))]
fn macdonald_general(g: u64, s: u64, m: u64, d: u64, r: u64, version: &str) -> PyResult<BigInt> {
    let p = macdonald::SecantParams::new(g, s, m, d, r).map_err(to_py)?;
    macdonald::macdonald_general(&p, parse_version(version)?).map_err(to_py)
}

#[pyfunction]
fn macdonald_r1(d: u64, g: u64, m: u64) -> BigInt {
    macdonald::macdonald_r1(d, g, m)
}

#[pyfunction]
fn macdonald_rs1(r: u64, u: u64) -> PyResult<BigInt> {
    macdonald::macdonald_rs1(r, u).map_err(to_py)
}

#[pyfunction]
fn eta(g: u64, s: u64, m: u64) -> PyResult<BigInt> {
    macdonald::eta(g, s, m).map_err(to_py)
}

#[pyfunction]
fn count_set_s(t: u32, u: u32) -> PyResult<BigInt> {
    census::count_set_s(t, u).map_err(to_py)
}

#[pyfunction]
fn count_r1(t: u32, u: u32) -> PyResult<BigInt> {
    census::count_r1(t, u).map_err(to_py)
}

#[pyfunction]
fn count_rs1(r: u32, u: u32) -> PyResult<BigInt> {
    plucker::count_rs1(r, u).map_err(to_py)
}

/// Positive traversals of a `g`-column grid with the given forbidden labels.
#[pyfunction]
#[pyo3(signature = (labels, modulus, g, method = "dp"))]
fn count_traversals(labels: Vec<u32>, modulus: u32, g: u64, method: &str) -> PyResult<BigInt> {
    let spec = GridSpec::new(g, ProhibitionSequence::new(labels, modulus).map_err(to_py)?);
    match method {
        "dp" => Ok(census::count_traversals_dp(&spec)),
        "brute" => census::count_traversals_brute(&spec).map_err(to_py),
        other => Err(PyValueError::new_err(format!(
            "method must be 'dp' or 'brute', got {other:?}"
        ))),
    }
}

#[pyfunction]
fn enumerate_w(s: u32, d: u32) -> PyResult<Vec<u64>> {
    census::enumerate_w(s, d).map_err(to_py)
}

/// Band strata, stratified count and leftover of a prohibition sequence
/// on the `modulus * u`-column grid.
#[pyfunction]
fn band_decomposition<'py>(
    py: Python<'py>,
    labels: Vec<u32>,
    modulus: u32,
    u: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let lam = ProhibitionSequence::new(labels, modulus).map_err(to_py)?;
    let band = BandDiagram::new(&lam);
    let out = PyDict::new(py);
    out.set_item("bands", band.bands.clone())?;
    out.set_item("periods", band.periods)?;
    out.set_item("strata", band.strata())?;
    out.set_item("stratified", band.stratified_count(u))?;
    out.set_item("leftover", band.leftover(u))?;
    Ok(out)
}

/// Maximal chains of `Gr(2, n)` as lists of `(a, b)` pairs.
#[pyfunction]
fn maximal_chains(n: u32) -> PyResult<Vec<Vec<(u32, u32)>>> {
    let chains = plucker::maximal_chains(n).map_err(to_py)?;
    Ok(chains
        .iter()
        .map(|c| c.vertices().iter().map(|v| (v.a, v.b)).collect())
        .collect())
}

/// Prohibition sequence of every maximal chain of `Gr(2, n)`.
#[pyfunction]
fn chain_prohibitions(n: u32) -> PyResult<Vec<Vec<u32>>> {
    let chains = plucker::maximal_chains(n).map_err(to_py)?;
    Ok(chains
        .iter()
        .map(|c| plucker::prohibition_of_chain(c).labels().to_vec())
        .collect())
}

#[pyfunction]
fn word_to_tableau(letters: Vec<usize>, s: usize) -> PyResult<Vec<Vec<usize>>> {
    let w = WordType::new(letters, s).map_err(to_py)?;
    Ok(chains::word_to_tableau(&w).map_err(to_py)?.rows().to_vec())
}

#[pyfunction]
fn tableau_to_word(rows: Vec<Vec<usize>>) -> PyResult<Vec<usize>> {
    let t = RectTableau::new(rows).map_err(to_py)?;
    Ok(chains::tableau_to_word(&t).letters().to_vec())
}

#[pyfunction]
fn enumerate_tableaux(rows: usize, cols: usize) -> PyResult<Vec<Vec<Vec<usize>>>> {
    let all = chains::enumerate_tableaux(rows, cols).map_err(to_py)?;
    Ok(all.into_iter().map(|t| t.rows().to_vec()).collect())
}

/// Exhaustive check of one claim instance; `kind` is `"A"` or `"B"`.
#[pyfunction]
#[pyo3(signature = (kind, s, m, i0, big_m, sstar))]
fn verify_claim<'py>(
    py: Python<'py>,
    kind: &str,
    s: u64,
    m: u64,
    i0: u64,
    big_m: u64,
    sstar: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let p = ClaimParams {
        s,
        m,
        i0,
        big_m,
        sstar,
    };
    let report = match kind {
        "A" | "a" => chains::verify_claim_a(p),
        "B" | "b" => chains::verify_claim_b(p),
        other => {
            return Err(PyValueError::new_err(format!(
                "kind must be 'A' or 'B', got {other:?}"
            )))
        }
    }
    .map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("min_shift", report.min_shift)?;
    out.set_item("vacuous", report.vacuous)?;
    out.set_item("bound", report.bound)?;
    out.set_item("feasible_pairs", report.feasible_pairs)?;
    Ok(out)
}

/// Nodes violating compatibility, as `(node, index, sum)` triples. Each
/// component is `(incoming, outgoing)`.
#[pyfunction]
fn eh_violations(components: Vec<Component>, d: i64) -> PyResult<Vec<(usize, usize, i64)>> {
    let table = ChainTable {
        components: components
            .into_iter()
            .map(|(incoming, outgoing)| ComponentOrders { incoming, outgoing })
            .collect(),
    };
    let v = chains::eh_violations(&table, d).map_err(to_py)?;
    Ok(v.into_iter().map(|x| (x.node, x.index, x.sum)).collect())
}

/// The shipped ambient and included tables as `(incoming, outgoing)` lists.
#[pyfunction]
fn chan_tables() -> (Vec<Component>, Vec<Component>) {
    let flat = |t: ChainTable| {
        t.components
            .into_iter()
            .map(|c| (c.incoming, c.outgoing))
            .collect()
    };
    (
        flat(chains::chan_ambient_table()),
        flat(chains::chan_included_table()),
    )
}

#[pyfunction]
fn n_plus(d: u64, j: u64) -> PyResult<BigInt> {
    iecf::n_plus(d, j).map_err(to_py)
}

#[pyfunction]
fn n_top(d: u64) -> PyResult<BigInt> {
    iecf::n_top(d).map_err(to_py)
}

#[pymodule]
#[pyo3(name = "secant_census")]
fn secant_census_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySecantParams>()?;
    m.add_function(wrap_pyfunction!(macdonald_general, m)?)?;
    m.add_function(wrap_pyfunction!(macdonald_r1, m)?)?;
    m.add_function(wrap_pyfunction!(macdonald_rs1, m)?)?;
    m.add_function(wrap_pyfunction!(eta, m)?)?;
    m.add_function(wrap_pyfunction!(count_set_s, m)?)?;
    m.add_function(wrap_pyfunction!(count_r1, m)?)?;
    m.add_function(wrap_pyfunction!(count_rs1, m)?)?;
    m.add_function(wrap_pyfunction!(count_traversals, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_w, m)?)?;
    m.add_function(wrap_pyfunction!(band_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_chains, m)?)?;
    m.add_function(wrap_pyfunction!(chain_prohibitions, m)?)?;
    m.add_function(wrap_pyfunction!(word_to_tableau, m)?)?;
    m.add_function(wrap_pyfunction!(tableau_to_word, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(verify_claim, m)?)?;
    m.add_function(wrap_pyfunction!(eh_violations, m)?)?;
    m.add_function(wrap_pyfunction!(chan_tables, m)?)?;
    m.add_function(wrap_pyfunction!(n_plus, m)?)?;
    m.add_function(wrap_pyfunction!(n_top, m)?)?;
    Ok(())
}
