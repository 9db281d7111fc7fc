//! Python bindings: exact values come back as Python `int`, `fractions.Fraction`
//! or [`PyLaurentPoly`] objects; suite reports come back as JSON text.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use std::collections::HashMap;
use twl_core::arith::{ExactRat, LaurentPoly};
use twl_core::classical::{self, ClassicalFamily};
use twl_core::qcalc::{self, QBase};
use twl_core::verify::{self, Mode, ParamValue, Params, Suite, SuiteConfig};
use twl_core::{qwhitney, whitney, Error};

struct CoreError(Error);

impl From<Error> for CoreError {
    fn from(e: Error) -> Self {
        CoreError(e)
    }
}

impl From<CoreError> for PyErr {
    fn from(e: CoreError) -> Self {
        PyValueError::new_err(e.0.to_string())
    }
}

type CoreResult<T> = Result<T, CoreError>;

fn fraction<'py>(py: Python<'py>, r: &ExactRat) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.numer().clone(), r.denom().clone()))
}

/// Laurent polynomial in `q` with exact rational coefficients.
#[pyclass(name = "LaurentPoly", module = "twl", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLaurentPoly(LaurentPoly);

#[derive(FromPyObject)]
enum Operand {
    Poly(PyLaurentPoly),
    Int(BigInt),
}

impl Operand {
    fn into_poly(self) -> LaurentPoly {
        match self {
            Operand::Poly(p) => p.0,
            Operand::Int(n) => LaurentPoly::from_exact_int(&n),
        }
    }
}

#[pymethods]
impl PyLaurentPoly {
    /// Parses the canonical text form, e.g. `"-q^-1 + 2 + 3/2*q^4"`.
    #[new]
    #[pyo3(signature = (text = "0"))]
    fn new(text: &str) -> PyResult<Self> {
        text.parse()
            .map(PyLaurentPoly)
            .map_err(|e| PyValueError::new_err(format!("{e}")))
    }

    /// `c * q^e` for an integer `c`.
    #[staticmethod]
    #[pyo3(signature = (e, c = BigInt::from(1)))]
    fn monomial(e: i64, c: BigInt) -> Self {
        PyLaurentPoly(LaurentPoly::from_exact_int(&c).shift(e))
    }

    /// `{exponent: Fraction}` for the nonzero terms.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (e, c) in self.0.terms() {
            d.set_item(e, fraction(py, c)?)?;
        }
        Ok(d)
    }

    fn eval_q1<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.eval_q1())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn min_exp(&self) -> Option<i64> {
        self.0.min_exp()
    }

    fn max_exp(&self) -> Option<i64> {
        self.0.max_exp()
    }

    fn shift(&self, e: i64) -> Self {
        PyLaurentPoly(self.0.shift(e))
    }

    /// Substitutes `q -> q^a`.
    fn subst_power(&self, a: i64) -> Self {
        PyLaurentPoly(self.0.subst_power(a))
    }

    fn div_exact(&self, divisor: &PyLaurentPoly) -> CoreResult<Self> {
        Ok(PyLaurentPoly(self.0.div_exact(&divisor.0)?))
    }

    fn __add__(&self, other: Operand) -> Self {
        PyLaurentPoly(&self.0 + &other.into_poly())
    }

    fn __radd__(&self, other: Operand) -> Self {
        self.__add__(other)
    }

    fn __sub__(&self, other: Operand) -> Self {
        PyLaurentPoly(&self.0 - &other.into_poly())
    }

    fn __rsub__(&self, other: Operand) -> Self {
        PyLaurentPoly(&other.into_poly() - &self.0)
    }

    fn __mul__(&self, other: Operand) -> Self {
        PyLaurentPoly(&self.0 * &other.into_poly())
    }

    fn __rmul__(&self, other: Operand) -> Self {
        self.__mul__(other)
    }

    fn __neg__(&self) -> Self {
        PyLaurentPoly(-&self.0)
    }

    fn __pow__(&self, k: u32, _modulo: Option<i64>) -> Self {
        PyLaurentPoly(self.0.pow(k))
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.to_string().hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly('{}')", self.0)
    }
}

fn poly(p: LaurentPoly) -> PyLaurentPoly {
    PyLaurentPoly(p)
}

fn qbase(a: u32) -> CoreResult<QBase> {
    Ok(QBase::new(a)?)
}

fn twl_method(name: &str) -> PyResult<whitney::TwlMethod> {
    use whitney::TwlMethod::*;
    match name {
        "recurrence" => Ok(Recurrence),
        "explicit" => Ok(Explicit),
        "product" => Ok(Product),
        "scaled" => Ok(Scaled),
        _ => Err(PyValueError::new_err(format!(
            "unknown method `{name}` (expected recurrence, explicit, product or scaled)"
        ))),
    }
}

/// Lah number `L(n, k)`.
#[pyfunction]
fn lah(n: usize, k: usize) -> BigInt {
    classical::lah(n, k)
}

/// Unsigned Stirling numbers of the first (`kind=1`) or second (`kind=2`) kind.
#[pyfunction]
fn stirling(kind: u8, n: usize, k: usize) -> PyResult<BigInt> {
    match kind {
        1 => Ok(classical::stirling1u(n, k)),
        2 => Ok(classical::stirling2(n, k)),
        _ => Err(PyValueError::new_err("kind must be 1 or 2")),
    }
}

/// Rows `0..=n_max` of a classical triangle: `"lah"`, `"stirling1u"` or
/// `"stirling2"`.
#[pyfunction]
fn classical_table(family: &str, n_max: usize) -> PyResult<Vec<Vec<BigInt>>> {
    let f = match family {
        "lah" => ClassicalFamily::Lah,
        "stirling1u" => ClassicalFamily::Stirling1u,
        "stirling2" => ClassicalFamily::Stirling2,
        _ => return Err(PyValueError::new_err(format!("unknown family `{family}`"))),
    };
    Ok(classical::ClassicalTriangle::build(f, n_max)
        .rows()
        .to_vec())
}

#[pyfunction]
fn bell(n: usize) -> BigInt {
    classical::bell(n)
}

/// Translated Whitney number of the first kind.
#[pyfunction]
fn tw1(alpha: i64, n: usize, k: usize) -> CoreResult<BigInt> {
    Ok(whitney::tw1(alpha, n, k)?)
}

/// Translated Whitney number of the second kind.
#[pyfunction]
fn tw2(alpha: i64, n: usize, k: usize) -> CoreResult<BigInt> {
    Ok(whitney::tw2(alpha, n, k)?)
}

/// Translated Whitney-Lah number through one of four independent routes.
#[pyfunction(name = "twl")]
#[pyo3(signature = (alpha, n, k, method = "recurrence"))]
fn whitney_lah(alpha: i64, n: usize, k: usize, method: &str) -> PyResult<BigInt> {
    Ok(whitney::twl(alpha, n, k, twl_method(method)?).map_err(CoreError)?)
}

#[pyfunction]
fn dowling(alpha: i64, n: usize) -> CoreResult<BigInt> {
    Ok(whitney::dowling(alpha, n)?)
}

/// Floating-point Dobiński-type series for the translated Dowling number.
#[pyfunction]
#[pyo3(signature = (alpha, n, rel_tol = 1e-12, max_terms = 200))]
fn dobinski(alpha: i64, n: usize, rel_tol: f64, max_terms: usize) -> CoreResult<f64> {
    Ok(whitney::dowling_dobinski(alpha, n, rel_tol, max_terms)?)
}

/// `[n]_{q^base}`
#[pyfunction]
#[pyo3(signature = (n, base = 1))]
fn qint(n: u64, base: u32) -> CoreResult<PyLaurentPoly> {
    Ok(poly(qcalc::qint(n, qbase(base)?)))
}

/// `[n]_{q^base}!`
#[pyfunction]
#[pyo3(signature = (n, base = 1))]
fn qfact(n: u64, base: u32) -> CoreResult<PyLaurentPoly> {
    Ok(poly(qcalc::qfact(n, qbase(base)?)))
}

/// Gaussian binomial coefficient in base `q^base`.
#[pyfunction]
#[pyo3(signature = (n, k, base = 1))]
fn qbinom(n: i64, k: i64, base: u32) -> CoreResult<PyLaurentPoly> {
    Ok(poly(qcalc::qbinom(n, k, qbase(base)?)))
}

#[pyfunction]
fn qw1(alpha: i64, n: usize, k: usize) -> CoreResult<PyLaurentPoly> {
    Ok(poly(qwhitney::qw1(alpha, n, k)?))
}

#[pyfunction]
fn qw2(alpha: i64, n: usize, k: usize) -> CoreResult<PyLaurentPoly> {
    Ok(poly(qwhitney::qw2(alpha, n, k)?))
}

#[pyfunction]
fn qwl(alpha: i64, n: usize, k: usize) -> CoreResult<PyLaurentPoly> {
    Ok(poly(qwhitney::qwl(alpha, n, k)?))
}

/// Garsia-Remmel q-Lah number.
#[pyfunction]
fn qlah(n: usize, k: usize) -> CoreResult<PyLaurentPoly> {
    Ok(poly(qwhitney::qlah_gr(
        n,
        k,
        qwhitney::QLahRoute::Recurrence,
    )?))
}

#[pyfunction]
fn qdowling(alpha: i64, n: usize) -> CoreResult<PyLaurentPoly> {
    Ok(poly(qwhitney::qdowling(alpha, n)?))
}

fn parse<T: std::str::FromStr<Err = String>>(s: &str) -> PyResult<T> {
    s.parse().map_err(PyValueError::new_err)
}

/// Runs the identity suite and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (suite = "all", alpha_list = vec![1, 2], n_max = 8, mode = "corrected", timing = false))]
fn run_suite(
    py: Python<'_>,
    suite: &str,
    alpha_list: Vec<i64>,
    n_max: usize,
    mode: &str,
    timing: bool,
) -> PyResult<String> {
    if n_max < 1 || alpha_list.is_empty() || alpha_list.contains(&0) {
        return Err(PyValueError::new_err(
            "need n_max >= 1 and a non-empty list of nonzero alphas",
        ));
    }
    let config = SuiteConfig::new(
        parse::<Suite>(suite)?,
        alpha_list,
        n_max,
        parse::<Mode>(mode)?,
    );
    let report = py.detach(|| verify::run_suite(&config));
    Ok(report.to_json(timing))
}

#[derive(FromPyObject)]
enum Param {
    Int(i64),
    Str(String),
}

/// Checks one identity at one parameter point; returns
/// `{"passed": bool, "lhs": str, "rhs": str}`.
#[pyfunction]
fn check_identity<'py>(
    py: Python<'py>,
    id: &str,
    params: HashMap<String, Param>,
) -> PyResult<Bound<'py, PyDict>> {
    let p: Params = params
        .into_iter()
        .map(|(k, v)| {
            let v = match v {
                Param::Int(i) => ParamValue::Int(i),
                Param::Str(s) => ParamValue::Str(s),
            };
            (k, v)
        })
        .collect();
    let r = verify::check_identity(id, &p).map_err(CoreError)?;
    let d = PyDict::new(py);
    d.set_item("passed", r.passed)?;
    d.set_item("lhs", r.lhs_canonical)?;
    d.set_item("rhs", r.rhs_canonical)?;
    Ok(d)
}

#[pymodule]
#[pyo3(name = "twl")]
fn twl_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLaurentPoly>()?;
    m.add_function(wrap_pyfunction!(lah, m)?)?;
    m.add_function(wrap_pyfunction!(stirling, m)?)?;
    m.add_function(wrap_pyfunction!(classical_table, m)?)?;
    m.add_function(wrap_pyfunction!(bell, m)?)?;
    m.add_function(wrap_pyfunction!(tw1, m)?)?;
    m.add_function(wrap_pyfunction!(tw2, m)?)?;
    m.add_function(wrap_pyfunction!(whitney_lah, m)?)?;
    m.add_function(wrap_pyfunction!(dowling, m)?)?;
    m.add_function(wrap_pyfunction!(dobinski, m)?)?;
    m.add_function(wrap_pyfunction!(qint, m)?)?;
    m.add_function(wrap_pyfunction!(qfact, m)?)?;
    m.add_function(wrap_pyfunction!(qbinom, m)?)?;
    m.add_function(wrap_pyfunction!(qw1, m)?)?;
    m.add_function(wrap_pyfunction!(qw2, m)?)?;
    m.add_function(wrap_pyfunction!(qwl, m)?)?;
    m.add_function(wrap_pyfunction!(qlah, m)?)?;
    m.add_function(wrap_pyfunction!(qdowling, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(check_identity, m)?)?;
    Ok(())
}
