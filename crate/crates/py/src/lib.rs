//! Python module `kalvar`: degrees, minor generators, membership tests,
//! witnesses and the d = 2 Gröbner checks of kalvar-core.

use std::collections::BTreeMap;

use kalvar_core::arith::{Field, PrimeField, RationalField};
use kalvar_core::degrees::{self, DegreeMethod};
use kalvar_core::groebner_d2;
use kalvar_core::kalman::{self, GeneratorSource, StratumSpec, DEFAULT_ENUMERATION_CAP};
use kalvar_core::matrix::Matrix;
use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

fn err(e: kalvar_core::Error) -> PyErr {
    match e {
        kalvar_core::Error::CriteriaDisagree { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn json_to_py<'py>(py: Python<'py>, v: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn parse_matrix<F: Field>(field: &F, rows: &[Vec<Bound<'_, PyAny>>]) -> PyResult<Matrix<F::Elem>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(PyValueError::new_err("matrix must be a square list of rows"));
    }
    let mut entries = Vec::with_capacity(n * n);
    for x in rows.iter().flatten() {
        entries.push(field.parse_elem(&x.str()?.to_cow()?).map_err(err)?);
    }
    Matrix::from_vec(n, n, entries).map_err(err)
}

fn prime(p: u64) -> PyResult<PrimeField> {
    PrimeField::new(p).map_err(err)
}

fn source(name: &str) -> PyResult<GeneratorSource> {
    name.parse().map_err(err)
}

/// The stratum K_{s,d,n} of n×n matrices with an invariant subspace of
/// dimension at least s inside span(e_1, ..., e_d).
#[pyclass(frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Stratum {
    spec: StratumSpec,
}

#[pymethods]
impl Stratum {
    #[new]
    fn new(s: usize, d: usize, n: usize) -> PyResult<Self> {
        Ok(Stratum {
            spec: StratumSpec::new(s, d, n).map_err(err)?,
        })
    }

    #[getter]
    fn s(&self) -> usize {
        self.spec.s
    }

    #[getter]
    fn d(&self) -> usize {
        self.spec.d
    }

    #[getter]
    fn n(&self) -> usize {
        self.spec.n
    }

    fn codimension(&self) -> usize {
        self.spec.codimension()
    }

    /// Degree by `method`: "schur", "binomial", "univariate" or "koutschan".
    #[pyo3(signature = (method = "schur"))]
    fn degree(&self, method: &str) -> PyResult<BigInt> {
        let m: DegreeMethod = method.parse().map_err(err)?;
        m.compute(&self.spec).map_err(err)
    }

    /// Every applicable method's value plus an `agree` flag.
    fn degrees<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &degrees::degree_all(&self.spec).map_err(err)?)
    }

    /// Schur coefficients of the Chern-root series, keyed by partition tuples.
    fn schur_expansion<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let series = degrees::expand_degree_series(&self.spec).map_err(err)?;
        let e = degrees::schur_decompose(&series).map_err(err)?;
        let out = PyDict::new(py);
        for (p, c) in e.coeffs() {
            out.set_item(PyTuple::new(py, p.parts())?, c.clone())?;
        }
        Ok(out)
    }

    /// Nonzero minors generating the ideal, as polynomial strings.
    #[pyo3(signature = (source = "reduced", p = None))]
    fn generators(&self, source: &str, p: Option<u64>) -> PyResult<Vec<String>> {
        let src = self::source(source)?;
        let gens = match p {
            None => kalman::stratum_generators(&RationalField, &self.spec, src)
                .map_err(err)?
                .iter()
                .map(|g| g.to_text())
                .collect(),
            Some(p) => kalman::stratum_generators(&prime(p)?, &self.spec, src)
                .map_err(err)?
                .iter()
                .map(|g| g.to_text())
                .collect(),
        };
        Ok(gens)
    }

    /// Number of generators in each degree.
    #[pyo3(signature = (source = "reduced"))]
    fn census(&self, source: &str) -> PyResult<BTreeMap<u32, usize>> {
        let gens = kalman::stratum_generators(&RationalField, &self.spec, self::source(source)?).map_err(err)?;
        Ok(kalman::degree_census(&gens))
    }

    /// Seeded random member over GF(p), entries as ints in [0, p).
    #[pyo3(signature = (seed, p = 101))]
    fn witness(&self, seed: u64, p: u64) -> PyResult<Vec<Vec<u32>>> {
        let w = kalman::make_witness(&self.spec, &prime(p)?, seed);
        let m = &w.matrix;
        Ok((0..m.rows()).map(|i| m.row(i).iter().map(|x| x.value()).collect()).collect())
    }

    /// Rank-criterion membership over Q, or GF(p) when `p` is given. Entries
    /// may be ints, Fractions or strings such as "3/4".
    #[pyo3(signature = (matrix, p = None))]
    fn contains(&self, matrix: Vec<Vec<Bound<'_, PyAny>>>, p: Option<u64>) -> PyResult<bool> {
        Ok(self.membership_report(matrix, p)?.member)
    }

    /// Both rank criteria as a dict.
    #[pyo3(signature = (matrix, p = None))]
    fn membership<'py>(
        &self,
        py: Python<'py>,
        matrix: Vec<Vec<Bound<'py, PyAny>>>,
        p: Option<u64>,
    ) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.membership_report(matrix, p)?)
    }

    /// Membership decided by enumerating subspaces of L over GF(p).
    fn brute_force_contains(&self, matrix: Vec<Vec<Bound<'_, PyAny>>>, p: u64) -> PyResult<bool> {
        let f = prime(p)?;
        let a = parse_matrix(&f, &matrix)?;
        kalman::brute_force_member(&f, &a, &self.spec, DEFAULT_ENUMERATION_CAP).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Stratum(s={}, d={}, n={})", self.spec.s, self.spec.d, self.spec.n)
    }
}

impl Stratum {
    fn membership_report(
        &self,
        matrix: Vec<Vec<Bound<'_, PyAny>>>,
        p: Option<u64>,
    ) -> PyResult<kalman::MembershipReport> {
        match p {
            None => kalman::membership(&RationalField, &parse_matrix(&RationalField, &matrix)?, &self.spec),
            Some(p) => {
                let f = prime(p)?;
                kalman::membership(&f, &parse_matrix(&f, &matrix)?, &self.spec)
            }
        }
        .map_err(err)
    }
}

/// deg K_{s,d,n} by the given method.
#[pyfunction]
#[pyo3(signature = (s, d, n, method = "schur"))]
fn degree(s: usize, d: usize, n: usize, method: &str) -> PyResult<BigInt> {
    Stratum::new(s, d, n)?.degree(method)
}

/// Degree reports for every stratum with n <= nmax.
#[pyfunction]
fn degree_grid(py: Python<'_>, nmax: usize) -> PyResult<Bound<'_, PyAny>> {
    json_to_py(py, &degrees::degree_grid(nmax).map_err(err)?)
}

/// The explicit d = 2 Gröbner basis as polynomial strings.
#[pyfunction]
#[pyo3(signature = (n, reduced = false))]
fn gb_generators(n: usize, reduced: bool) -> PyResult<Vec<String>> {
    let basis = groebner_d2::gb_generators(&RationalField, n, reduced).map_err(err)?;
    Ok(basis.elements().iter().map(|g| g.to_text()).collect())
}

/// All d = 2 checks for one n as a list of dicts.
#[pyfunction]
#[pyo3(signature = (n, max_t = 8))]
fn gb_check(py: Python<'_>, n: usize, max_t: u32) -> PyResult<Bound<'_, PyAny>> {
    json_to_py(py, &groebner_d2::gb_reports(n, max_t).map_err(err)?)
}

/// Standard monomials of degree t for the d = 2 Kalman variety.
#[pyfunction]
fn hilbert_function(n: usize, t: u32) -> PyResult<BigInt> {
    groebner_d2::hilbert_function(n, t).map_err(err)
}

/// Closed-form Hilbert series and Hilbert polynomial as strings.
#[pyfunction]
fn hilbert_data<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("series", groebner_d2::hilbert_series_closed(n).map_err(err)?.to_string())?;
    out.set_item("polynomial", groebner_d2::hilbert_polynomial(n).map_err(err)?.to_string())?;
    Ok(out)
}

/// Coefficients of the eigenvector-incidence multidegree before and after
/// t1 -> t1 + t2.
#[pyfunction]
fn multidegree(n: usize) -> PyResult<(Vec<BigInt>, Vec<BigInt>)> {
    let (plain, shifted) = degrees::multidegree_incidence(n).map_err(err)?;
    Ok((plain.coeffs, shifted.coeffs))
}

#[pymodule]
fn kalvar(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Stratum>()?;
    m.add_function(wrap_pyfunction!(degree, m)?)?;
    m.add_function(wrap_pyfunction!(degree_grid, m)?)?;
    m.add_function(wrap_pyfunction!(gb_generators, m)?)?;
    m.add_function(wrap_pyfunction!(gb_check, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_function, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_data, m)?)?;
    m.add_function(wrap_pyfunction!(multidegree, m)?)?;
    Ok(())
}
