//! Python bindings: `import ks_coset`.
//!
//! Rational quantities cross the boundary as `"p/q"` strings, which
//! `fractions.Fraction` accepts directly.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ks_coset_core::{
    affine, coset, modular, AffineWeight, Coset, CosetField, CosetSpec, Error, SMatrix, SpinKind,
    SpinLabel, U1Charge, DEFAULT_BUDGET,
};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(
    name = "CosetSpec",
    module = "ks_coset",
    frozen,
    eq,
    hash,
    ord,
    from_py_object
)]
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PySpec(CosetSpec);

#[pymethods]
impl PySpec {
    #[new]
    fn new(m: u32, n: u32, k: u32) -> PyResult<Self> {
        CosetSpec::new(m, n, k).map(PySpec).map_err(err)
    }

    #[getter]
    fn m(&self) -> u32 {
        self.0.m
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n
    }

    #[getter]
    fn k(&self) -> u32 {
        self.0.k
    }

    #[getter]
    fn central_charge(&self) -> String {
        self.0.central_charge().to_string()
    }

    #[getter]
    fn u1_modulus(&self) -> u64 {
        self.0.u1_modulus()
    }

    #[getter]
    fn candidate_count(&self) -> u128 {
        self.0.candidate_count()
    }

    /// `G(k, n, m)`.
    fn level_rank_dual(&self) -> Self {
        PySpec(self.0.level_rank_dual())
    }

    fn swap_mn(&self) -> Self {
        PySpec(self.0.swap_mn())
    }

    fn __repr__(&self) -> String {
        format!("CosetSpec({}, {}, {})", self.0.m, self.0.n, self.0.k)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

fn spin_kind(name: &str) -> PyResult<SpinKind> {
    SpinKind::ALL
        .into_iter()
        .find(|k| k.name() == name)
        .ok_or_else(|| {
            PyValueError::new_err(format!(
                "unknown Spin label {name:?}; expected vacuum, vector, spinor or cospinor"
            ))
        })
}

#[pyclass(
    name = "CosetField",
    module = "ks_coset",
    frozen,
    eq,
    hash,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyField(CosetField);

#[pymethods]
impl PyField {
    /// Dynkin labels exclude the affine label; `pi0` is one of
    /// `"vacuum"`, `"vector"`, `"spinor"`, `"cospinor"`.
    #[new]
    fn new(
        spec: PySpec,
        lambda0: Vec<u32>,
        pi0: &str,
        lam1: Vec<u32>,
        lam2: Vec<u32>,
        qdot: i64,
    ) -> PyResult<Self> {
        let s = spec.0;
        let field = CosetField::new(
            &s,
            AffineWeight::new(s.big_rank(), s.k, lambda0).map_err(err)?,
            SpinLabel::new(s.spin_half_dim(), spin_kind(pi0)?).map_err(err)?,
            AffineWeight::new(s.m as usize, s.n + s.k, lam1).map_err(err)?,
            AffineWeight::new(s.n as usize, s.m + s.k, lam2).map_err(err)?,
            U1Charge::new(s.u1_modulus(), qdot).map_err(err)?,
        )
        .map_err(err)?;
        Ok(PyField(field))
    }

    #[staticmethod]
    fn vacuum(spec: PySpec) -> Self {
        PyField(CosetField::vacuum(&spec.0))
    }

    #[getter]
    fn lambda0(&self) -> Vec<u32> {
        self.0.lambda0.labels().to_vec()
    }

    #[getter]
    fn pi0(&self) -> &'static str {
        self.0.pi0.kind().name()
    }

    #[getter]
    fn lam1(&self) -> Vec<u32> {
        self.0.lam1.labels().to_vec()
    }

    #[getter]
    fn lam2(&self) -> Vec<u32> {
        self.0.lam2.labels().to_vec()
    }

    #[getter]
    fn qdot(&self) -> u64 {
        self.0.qdot.value()
    }

    fn __repr__(&self) -> String {
        format!("CosetField{}", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(name = "VpElement", module = "ks_coset", frozen, get_all)]
struct PyVpElement {
    j: i64,
    i: i64,
    image: PyField,
    order: usize,
}

#[pyclass(name = "SpectrumRow", module = "ks_coset", frozen, get_all)]
struct PySpectrumRow {
    representative: PyField,
    orbit_size: usize,
    stabilizer_order: usize,
    dimension: f64,
    piece_dimension: f64,
    h_mod1: String,
}

#[pyclass(name = "Spectrum", module = "ks_coset", frozen, get_all)]
struct PySpectrum {
    spec: PySpec,
    central_charge: String,
    exp_size: usize,
    vp_order: usize,
    irrep_count: usize,
    rows: Vec<Py<PySpectrumRow>>,
}

#[pyclass(name = "Coset", module = "ks_coset", frozen)]
struct PyCoset(Coset);

#[pymethods]
impl PyCoset {
    #[new]
    fn new(spec: PySpec) -> PyResult<Self> {
        Coset::new(spec.0).map(PyCoset).map_err(err)
    }

    #[getter]
    fn spec(&self) -> PySpec {
        PySpec(self.0.spec())
    }

    /// Vacuum partners, identity first.
    fn vp_group(&self) -> Vec<PyVpElement> {
        let group = self.0.vp_group();
        group
            .elements()
            .iter()
            .enumerate()
            .map(|(index, w)| PyVpElement {
                j: w.j,
                i: w.i,
                image: PyField(w.image.clone()),
                order: group.element_order(index),
            })
            .collect()
    }

    #[pyo3(signature = (budget = DEFAULT_BUDGET))]
    fn enumerate_exp(&self, py: Python<'_>, budget: u128) -> PyResult<Vec<PyField>> {
        let exp = py.detach(|| self.0.enumerate_exp(budget)).map_err(err)?;
        Ok(exp.into_iter().map(PyField).collect())
    }

    #[pyo3(signature = (budget = DEFAULT_BUDGET))]
    fn resolve_spectrum(&self, py: Python<'_>, budget: u128) -> PyResult<PySpectrum> {
        let r = py.detach(|| self.0.resolve_spectrum(budget)).map_err(err)?;
        let rows = r
            .rows
            .into_iter()
            .map(|row| {
                Py::new(
                    py,
                    PySpectrumRow {
                        representative: PyField(row.representative),
                        orbit_size: row.orbit_size,
                        stabilizer_order: row.stabilizer_order,
                        dimension: row.dimension,
                        piece_dimension: row.piece_dimension,
                        h_mod1: row.h_mod1.to_string(),
                    },
                )
            })
            .collect::<PyResult<_>>()?;
        Ok(PySpectrum {
            spec: PySpec(r.spec),
            central_charge: r.central_charge.to_string(),
            exp_size: r.exp_size,
            vp_order: r.vp_order,
            irrep_count: r.irrep_count,
            rows,
        })
    }

    fn selection_check(&self, field: &PyField) -> PyResult<bool> {
        coset::selection_check(&field.0, &self.0.spec()).map_err(err)
    }

    fn b_coeff(&self, field: &PyField) -> PyResult<f64> {
        self.0.b_coeff(&field.0).map_err(err)
    }

    fn stat_dim(&self, field: &PyField) -> PyResult<f64> {
        self.0.stat_dim(&field.0).map_err(err)
    }

    fn qdim_product(&self, field: &PyField) -> PyResult<f64> {
        self.0.qdim_product(&field.0).map_err(err)
    }

    fn h_mod1(&self, field: &PyField) -> PyResult<String> {
        self.0.h_mod1(&field.0).map(|h| h.to_string()).map_err(err)
    }

    fn stabilizer_order(&self, field: &PyField) -> usize {
        self.0.stabilizer_order(&field.0)
    }
}

#[pyclass(name = "DualityReport", module = "ks_coset", frozen, get_all)]
struct PyDualityReport {
    left: PySpec,
    right: PySpec,
    central_charge_equal: bool,
    irrep_count_equal: bool,
    rows_equal: bool,
    row_mismatches: Vec<String>,
    passed: bool,
    /// `(h_mod1, dimension, multiplicity)` per fingerprint row.
    left_rows: Vec<(String, f64, usize)>,
    right_rows: Vec<(String, f64, usize)>,
}

fn rows(fp: &ks_coset_core::Fingerprint) -> Vec<(String, f64, usize)> {
    fp.rows
        .iter()
        .map(|r| (r.h_mod1.to_string(), r.dimension, r.multiplicity))
        .collect()
}

/// Compares `G(m,n,k)` with `G(k,n,m)`.
#[pyfunction]
#[pyo3(signature = (spec, budget = DEFAULT_BUDGET))]
fn check_duality(py: Python<'_>, spec: PySpec, budget: u128) -> PyResult<PyDualityReport> {
    let report = py
        .detach(|| ks_coset_core::check_duality(spec.0, budget))
        .map_err(err)?;
    Ok(PyDualityReport {
        left: PySpec(report.left.spec),
        right: PySpec(report.right.spec),
        central_charge_equal: report.central_charge_equal,
        irrep_count_equal: report.irrep_count_equal,
        rows_equal: report.rows_equal,
        row_mismatches: report.row_mismatches.clone(),
        passed: report.passed(),
        left_rows: rows(&report.left),
        right_rows: rows(&report.right),
    })
}

#[pyfunction]
fn enumerate_su(rank: usize, level: u32) -> Vec<Vec<u32>> {
    affine::enumerate_su(rank, level)
        .into_iter()
        .map(|w| w.labels().to_vec())
        .collect()
}

#[pyfunction]
fn h_su(rank: usize, level: u32, labels: Vec<u32>) -> PyResult<String> {
    let w = AffineWeight::new(rank, level, labels).map_err(err)?;
    Ok(modular::h_su(&w).to_string())
}

fn matrix(s: SMatrix) -> Vec<Vec<Complex64>> {
    (0..s.dim()).map(|r| s.row(r).to_vec()).collect()
}

/// Rows and columns follow `enumerate_su(rank, level)`.
#[pyfunction]
fn s_su(rank: usize, level: u32) -> Vec<Vec<Complex64>> {
    matrix(modular::s_su(rank, level))
}

#[pyfunction]
fn s_u1(modulus: u64) -> Vec<Vec<Complex64>> {
    matrix(modular::s_u1(modulus))
}

/// Order: vacuum, vector, spinor, cospinor.
#[pyfunction]
fn s_spin(half_dim: u32) -> Vec<Vec<Complex64>> {
    matrix(modular::s_spin(half_dim))
}

#[pyfunction]
fn u1_coset_vps(a: u64, b: u64) -> PyResult<Vec<(u64, u64, u64)>> {
    Ok(coset::u1_coset_vps(a, b)
        .map_err(err)?
        .into_iter()
        .map(|v| (v.x.value(), v.y.value(), v.z.value()))
        .collect())
}

#[pyfunction]
fn u1_coset_b_vacuum(a: u64, b: u64) -> PyResult<f64> {
    coset::u1_coset_b_vacuum(a, b).map_err(err)
}

#[pyfunction]
fn u1_coset_b_closed_form(a: u64, b: u64) -> f64 {
    coset::u1_coset_b_closed_form(a, b)
}

#[pymodule]
fn ks_coset(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DEFAULT_BUDGET", DEFAULT_BUDGET)?;
    m.add_class::<PySpec>()?;
    m.add_class::<PyField>()?;
    m.add_class::<PyCoset>()?;
    m.add_class::<PyVpElement>()?;
    m.add_class::<PySpectrum>()?;
    m.add_class::<PySpectrumRow>()?;
    m.add_class::<PyDualityReport>()?;
    m.add_function(wrap_pyfunction!(check_duality, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_su, m)?)?;
    m.add_function(wrap_pyfunction!(h_su, m)?)?;
    m.add_function(wrap_pyfunction!(s_su, m)?)?;
    m.add_function(wrap_pyfunction!(s_u1, m)?)?;
    m.add_function(wrap_pyfunction!(s_spin, m)?)?;
    m.add_function(wrap_pyfunction!(u1_coset_vps, m)?)?;
    m.add_function(wrap_pyfunction!(u1_coset_b_vacuum, m)?)?;
    m.add_function(wrap_pyfunction!(u1_coset_b_closed_form, m)?)?;
    Ok(())
}
