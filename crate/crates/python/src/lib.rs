//! Python bindings: rings, ideals and the class computations.

use std::sync::Arc;

use charclass::{Error, FieldPrime, RandomPolicy, DEFAULT_PRIME};
use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

pyo3::create_exception!(charclass_py, GenericityError, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Genericity { .. } | Error::VerificationMismatch { .. } => GenericityError::new_err(e.to_string()),
        Error::Invariant(_) | Error::InexactDivision => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(name = "Ring", frozen)]
struct PyRing {
    inner: Arc<charclass::Ring>,
}

#[pymethods]
impl PyRing {
    #[new]
    #[pyo3(signature = (names, prime = DEFAULT_PRIME as u64))]
    fn new(names: Vec<String>, prime: u64) -> PyResult<Self> {
        let field = FieldPrime::new(prime).map_err(to_py)?;
        Ok(PyRing { inner: charclass::Ring::new(&names, field).map_err(to_py)? })
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.inner.nvars()
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.inner.var_names().to_vec()
    }

    #[getter]
    fn prime(&self) -> u32 {
        self.inner.field().modulus()
    }

    fn __repr__(&self) -> String {
        format!("Ring({})", self.inner)
    }
}

#[pyclass(name = "Ideal", frozen)]
struct PyIdeal {
    inner: charclass::Ideal,
}

fn wrap(inner: charclass::Ideal) -> PyIdeal {
    PyIdeal { inner }
}

#[pymethods]
impl PyIdeal {
    /// `generators` is a comma-separated string or a list of strings.
    #[new]
    fn new(ring: &PyRing, generators: &Bound<'_, PyAny>) -> PyResult<Self> {
        let text = match generators.extract::<String>() {
            Ok(s) => s,
            Err(_) => generators.extract::<Vec<String>>()?.join(", "),
        };
        Ok(wrap(charclass::Ideal::parse(&ring.inner, &text).map_err(to_py)?))
    }

    #[staticmethod]
    fn jacobian(ring: &PyRing, f: &str) -> PyResult<Self> {
        let f = charclass::parse_polynomial(f, &ring.inner).map_err(to_py)?;
        Ok(wrap(charclass::jacobian_ideal(&f).map_err(to_py)?))
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.inner.generators().iter().map(ToString::to_string).collect()
    }

    fn groebner_basis(&self) -> Vec<String> {
        self.inner.groebner_basis().elements().iter().map(ToString::to_string).collect()
    }

    fn proj_dim(&self) -> i64 {
        self.inner.proj_dim()
    }

    fn degree(&self) -> Option<BigInt> {
        self.inner.hilbert().degree.clone()
    }

    fn is_projectively_empty(&self) -> bool {
        self.inner.is_projectively_empty()
    }

    fn contains(&self, f: &str) -> PyResult<bool> {
        let f = charclass::parse_polynomial(f, self.inner.ring()).map_err(to_py)?;
        self.inner.contains(&f).map_err(to_py)
    }

    fn __add__(&self, other: &PyIdeal) -> PyResult<Self> {
        Ok(wrap(self.inner.sum(&other.inner).map_err(to_py)?))
    }

    fn __mul__(&self, other: &PyIdeal) -> PyResult<Self> {
        Ok(wrap(self.inner.product(&other.inner).map_err(to_py)?))
    }

    fn __eq__(&self, other: &PyIdeal) -> PyResult<bool> {
        self.inner.same_ideal(&other.inner).map_err(to_py)
    }

    fn intersection(&self, other: &PyIdeal) -> PyResult<Self> {
        Ok(wrap(self.inner.intersection(&other.inner).map_err(to_py)?))
    }

    fn quotient(&self, other: &PyIdeal) -> PyResult<Self> {
        Ok(wrap(self.inner.quotient_by_ideal(&other.inner).map_err(to_py)?))
    }

    fn saturation(&self, other: &PyIdeal) -> PyResult<Self> {
        Ok(wrap(self.inner.saturation_by_ideal(&other.inner).map_err(to_py)?))
    }

    fn __repr__(&self) -> String {
        format!("Ideal({})", self.generators().join(", "))
    }
}

#[pyclass(name = "ClassReport", frozen, get_all)]
struct PyClassReport {
    kind: String,
    n: usize,
    k: i64,
    d: Option<u32>,
    degrees: Vec<BigInt>,
    poly: String,
    coefficients: Vec<BigInt>,
    euler: Option<BigInt>,
    seed: u64,
    retries: usize,
}

#[pymethods]
impl PyClassReport {
    fn __repr__(&self) -> String {
        let degrees: Vec<String> = self.degrees.iter().map(ToString::to_string).collect();
        format!("ClassReport({}, {{{}}}, {})", self.kind, degrees.join(", "), self.poly)
    }
}

impl From<charclass::ClassReport> for PyClassReport {
    fn from(r: charclass::ClassReport) -> Self {
        PyClassReport {
            kind: r.kind.to_string(),
            n: r.n,
            k: r.k,
            d: r.d,
            degrees: r.degrees,
            poly: r.chow.to_string(),
            coefficients: r.chow.coeffs().to_vec(),
            euler: r.euler,
            seed: r.seed,
            retries: r.retries,
        }
    }
}

fn policy(seed: u64, retries: usize, verify: bool) -> RandomPolicy {
    RandomPolicy { seed, max_retries: retries, verify }
}

type Op = fn(&charclass::Ideal, &RandomPolicy) -> charclass::Result<charclass::ClassReport>;

fn report(py: Python<'_>, op: Op, ideal: &PyIdeal, p: RandomPolicy) -> PyResult<PyClassReport> {
    py.detach(|| op(&ideal.inner, &p)).map(Into::into).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (ideal, seed = 0, retries = 5, verify = false))]
fn segre_class(py: Python<'_>, ideal: &PyIdeal, seed: u64, retries: usize, verify: bool) -> PyResult<PyClassReport> {
    report(py, charclass::segre_class, ideal, policy(seed, retries, verify))
}

#[pyfunction]
#[pyo3(signature = (ideal, seed = 0, retries = 5, verify = false))]
fn chern_class(py: Python<'_>, ideal: &PyIdeal, seed: u64, retries: usize, verify: bool) -> PyResult<PyClassReport> {
    report(py, charclass::chern_class, ideal, policy(seed, retries, verify))
}

#[pyfunction]
#[pyo3(signature = (ideal, seed = 0, retries = 5, verify = false))]
fn csm_class(py: Python<'_>, ideal: &PyIdeal, seed: u64, retries: usize, verify: bool) -> PyResult<PyClassReport> {
    report(py, charclass::csm_class, ideal, policy(seed, retries, verify))
}

#[pyfunction]
#[pyo3(signature = (ideal, seed = 0, retries = 5, verify = false))]
fn euler_characteristic(py: Python<'_>, ideal: &PyIdeal, seed: u64, retries: usize, verify: bool) -> PyResult<BigInt> {
    let p = policy(seed, retries, verify);
    py.detach(|| charclass::euler_characteristic(&ideal.inner, &p)).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (ideal, removed, seed = 0, retries = 5, verify = false))]
fn euler_complement(
    py: Python<'_>,
    ideal: &PyIdeal,
    removed: &PyIdeal,
    seed: u64,
    retries: usize,
    verify: bool,
) -> PyResult<BigInt> {
    let p = policy(seed, retries, verify);
    py.detach(|| charclass::euler_complement(&ideal.inner, &removed.inner, &p)).map_err(to_py)
}

#[pymodule]
fn charclass_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyClassReport>()?;
    m.add("GenericityError", m.py().get_type::<GenericityError>())?;
    m.add_function(wrap_pyfunction!(segre_class, m)?)?;
    m.add_function(wrap_pyfunction!(chern_class, m)?)?;
    m.add_function(wrap_pyfunction!(csm_class, m)?)?;
    m.add_function(wrap_pyfunction!(euler_characteristic, m)?)?;
    m.add_function(wrap_pyfunction!(euler_complement, m)?)?;
    Ok(())
}
