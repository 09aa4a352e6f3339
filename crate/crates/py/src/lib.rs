//! Python bindings. Sets cross the boundary as `FuzzySet` objects or plain
//! float lists; methods are named by id strings such as `"cri:goedel"`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyFloat};

use ::fuzzy_reductive as fr;
use fr::harness::{CheckRecord, Quantity};
use fr::{DiscreteFuzzySet, DmmBase, FuzzyRule, OperatorFamily, Variant};

fn value_error(err: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn family(name: &str) -> PyResult<OperatorFamily> {
    name.parse().map_err(value_error)
}

#[pyclass(name = "FuzzySet", module = "fuzzy_reductive", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyFuzzySet(DiscreteFuzzySet);

#[pymethods]
impl PyFuzzySet {
    #[new]
    fn new(memberships: Vec<f64>) -> PyResult<Self> {
        DiscreteFuzzySet::new(memberships).map(Self).map_err(value_error)
    }

    #[getter]
    fn memberships(&self) -> Vec<f64> {
        self.0.memberships().to_vec()
    }

    fn complement(&self) -> Self {
        Self(self.0.complement())
    }

    fn very(&self) -> Self {
        Self(self.0.very())
    }

    fn more_or_less(&self) -> Self {
        Self(self.0.more_or_less())
    }

    fn is_normal(&self) -> bool {
        self.0.is_normal()
    }

    fn __len__(&self) -> usize {
        self.0.universe_size()
    }

    fn __repr__(&self) -> String {
        format!("FuzzySet({})", self.0)
    }
}

#[pyclass(name = "Rule", module = "fuzzy_reductive", frozen)]
struct PyRule(FuzzyRule);

#[pymethods]
impl PyRule {
    #[new]
    fn new(antecedent: Vec<f64>, consequent: Vec<f64>) -> PyResult<Self> {
        let a = DiscreteFuzzySet::new(antecedent).map_err(value_error)?;
        let b = DiscreteFuzzySet::new(consequent).map_err(value_error)?;
        Ok(Self(FuzzyRule::new(a, b)))
    }

    /// A = [1, 0.3, 0, 0, 0], B = [0, 0, 0, 0.3, 1].
    #[staticmethod]
    fn small_large() -> Self {
        Self(FuzzyRule::small_large())
    }

    #[getter]
    fn antecedent(&self) -> PyFuzzySet {
        PyFuzzySet(self.0.antecedent.clone())
    }

    #[getter]
    fn consequent(&self) -> PyFuzzySet {
        PyFuzzySet(self.0.consequent.clone())
    }

    fn __repr__(&self) -> String {
        format!("Rule({} -> {})", self.0.antecedent, self.0.consequent)
    }
}

#[derive(FromPyObject)]
enum SetLike {
    Set(PyFuzzySet),
    List(Vec<f64>),
}

impl SetLike {
    fn into_set(self) -> PyResult<DiscreteFuzzySet> {
        match self {
            SetLike::Set(s) => Ok(s.0),
            SetLike::List(v) => DiscreteFuzzySet::new(v).map_err(value_error),
        }
    }
}

fn dmm_base(base: Option<SetLike>, plain: bool) -> PyResult<DmmBase> {
    Ok(match base {
        None if plain => DmmBase::Plain,
        None => DmmBase::Complement,
        Some(set) => DmmBase::Tilted(set.into_set()?),
    })
}

/// Runs one method in one direction. For DMM, `complement_base` selects
/// 1 - B (FMP) or 1 - A (FMT) as the base and `base` supplies an explicit one.
fn infer(
    rule: &PyRule,
    method: &str,
    premise: SetLike,
    fmp: bool,
    complement_base: bool,
    base: Option<SetLike>,
) -> PyResult<PyFuzzySet> {
    let variant: Variant = method.parse().map_err(value_error)?;
    let (rule, premise) = (&rule.0, &premise.into_set()?);
    let outcome = match (variant, fmp) {
        (Variant::Cri(f), true) => fr::cri_fmp(rule, premise, f),
        (Variant::Cri(f), false) => fr::cri_fmt(rule, premise, f),
        (Variant::Tip(f), true) => fr::tip_fmp(rule, premise, f),
        (Variant::Tip(f), false) => fr::tip_fmt(rule, premise, f),
        (Variant::Qip(f), true) => fr::qip_fmp(rule, premise, f),
        (Variant::Qip(f), false) => fr::qip_fmt(rule, premise, f),
        (Variant::Aars(form), true) => fr::aars_fmp(rule, premise, form),
        (Variant::Aars(form), false) => fr::aars_fmt(rule, premise, form),
        (Variant::Dmm(form), true) => fr::dmm_fmp(rule, premise, &dmm_base(base, !complement_base)?, form),
        (Variant::Dmm(form), false) => fr::dmm_fmt(rule, premise, &dmm_base(base, !complement_base)?, form),
    };
    outcome.map(|o| PyFuzzySet(o.conclusion)).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (rule, method, premise, *, complement_base = false, base = None))]
fn fmp(
    rule: &PyRule,
    method: &str,
    premise: SetLike,
    complement_base: bool,
    base: Option<SetLike>,
) -> PyResult<PyFuzzySet> {
    infer(rule, method, premise, true, complement_base, base)
}

#[pyfunction]
#[pyo3(signature = (rule, method, premise, *, complement_base = false, base = None))]
fn fmt(
    rule: &PyRule,
    method: &str,
    premise: SetLike,
    complement_base: bool,
    base: Option<SetLike>,
) -> PyResult<PyFuzzySet> {
    infer(rule, method, premise, false, complement_base, base)
}

#[pyfunction]
fn implies(family_name: &str, a: f64, b: f64) -> PyResult<f64> {
    family(family_name)?.implies(a, b).map_err(value_error)
}

#[pyfunction]
fn tnorm(family_name: &str, a: f64, b: f64) -> PyResult<f64> {
    family(family_name)?.tnorm(a, b).map_err(value_error)
}

#[pyfunction]
fn rpcf(conclusion: SetLike, target: SetLike) -> PyResult<f64> {
    fr::rpcf_single(&conclusion.into_set()?, &target.into_set()?).map_err(value_error)
}

#[pyfunction]
fn distance(u: SetLike, v: SetLike) -> PyResult<f64> {
    fr::euclid_dm(&u.into_set()?, &v.into_set()?).map_err(value_error)
}

#[pyfunction]
fn similarity(u: SetLike, v: SetLike) -> PyResult<f64> {
    fr::similarity(&u.into_set()?, &v.into_set()?).map_err(value_error)
}

/// Every method id in the standard roster.
#[pyfunction]
fn methods() -> Vec<String> {
    Variant::roster().into_iter().map(Variant::id).collect()
}

#[pyclass(name = "Report", module = "fuzzy_reductive", frozen)]
struct PyReport(fr::Report);

#[pymethods]
impl PyReport {
    fn to_csv(&self) -> String {
        self.0.to_csv()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn to_markdown(&self) -> String {
        self.0.to_markdown()
    }

    /// One dict per (method, class) with `fmp`, `fmt` and `overall` scores.
    fn aggregates<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        self.0
            .aggregates
            .iter()
            .map(|agg| {
                let d = PyDict::new(py);
                d.set_item("method", agg.variant.id())?;
                d.set_item("class", agg.class.id())?;
                d.set_item("fmp", agg.fmp)?;
                d.set_item("fmt", agg.fmt)?;
                d.set_item("overall", agg.overall)?;
                Ok(d)
            })
            .collect()
    }

    /// One dict per (method, case).
    fn rows<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        self.0
            .rows
            .iter()
            .map(|row| {
                let d = PyDict::new(py);
                d.set_item("method", row.variant.id())?;
                d.set_item("case", row.case.get())?;
                d.set_item("premise", row.premise.memberships().to_vec())?;
                d.set_item("conclusion", row.conclusion.memberships().to_vec())?;
                d.set_item("rpcf", row.rpcf)?;
                d.set_item("annotation", row.annotation.clone())?;
                Ok(d)
            })
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("Report({} rows, {} aggregates)", self.0.rows.len(), self.0.aggregates.len())
    }
}

/// Runs the suite described by a TOML config string (empty = defaults).
#[pyfunction]
#[pyo3(signature = (config = ""))]
fn run_suite(config: &str) -> PyResult<PyReport> {
    let config = fr::parse_config(config).map_err(value_error)?;
    fr::run_suite(&config).map(PyReport).map_err(value_error)
}

fn quantity<'py>(py: Python<'py>, q: &Quantity) -> PyResult<Bound<'py, PyAny>> {
    match q {
        Quantity::Score(v) => Ok(PyFloat::new(py, *v).into_any()),
        Quantity::Conclusion(v) => v.clone().into_pyobject(py),
    }
}

fn record<'py>(py: Python<'py>, r: &CheckRecord) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("method", r.variant.id())?;
    d.set_item("class", r.class.map(|c| c.id()))?;
    d.set_item("cell", &r.cell)?;
    d.set_item("table", r.table)?;
    d.set_item("status", r.status.map(|s| s.id()))?;
    d.set_item("reference", quantity(py, &r.reference)?)?;
    d.set_item("oracle", quantity(py, &r.oracle)?)?;
    d.set_item("delta", r.delta)?;
    d.set_item("label", r.label.id())?;
    Ok(d)
}

/// Oracle audit of the suite described by a TOML config string.
#[pyfunction]
#[pyo3(signature = (config = ""))]
fn oracle_check<'py>(py: Python<'py>, config: &str) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let config = fr::parse_config(config).map_err(value_error)?;
    let records = fr::oracle_check(&config).map_err(value_error)?;
    records.iter().map(|r| record(py, r)).collect()
}

#[pymodule]
#[pyo3(name = "fuzzy_reductive")]
fn fuzzy_reductive_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFuzzySet>()?;
    m.add_class::<PyRule>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(fmp, m)?)?;
    m.add_function(wrap_pyfunction!(fmt, m)?)?;
    m.add_function(wrap_pyfunction!(implies, m)?)?;
    m.add_function(wrap_pyfunction!(tnorm, m)?)?;
    m.add_function(wrap_pyfunction!(rpcf, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(similarity, m)?)?;
    m.add_function(wrap_pyfunction!(methods, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_check, m)?)?;
    Ok(())
}
