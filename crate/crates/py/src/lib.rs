//! Python bindings: momenta, solved higher-spin fields, and the composite
//! field operations.

use num_complex::Complex64 as C64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use spinweave_core::angmom::{extend_rep, irreducibility_witness, AngMomBasis};
use spinweave_core::composite::{
    antisym_residual, antisym_solve, spin2_decompose, Spin2Field,
};
use spinweave_core::dirac::clifford_residual as core_clifford_residual;
use spinweave_core::field::{self, PlaneWave};
use spinweave_core::json::two_j_from_spin;
use spinweave_core::sectors::{HigherSpinField, SectorId, SectorTensor};
use spinweave_core::spinor::{metric_g as core_metric_g, MinkCovector, MinkVector};
use spinweave_core::SpinError;

fn err(e: SpinError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// On-shell, future-pointing momentum covector.
#[pyclass(name = "Momentum", frozen)]
struct PyMomentum {
    inner: field::Momentum,
}

#[pymethods]
impl PyMomentum {
    /// `spatial` gives `(P1, P2, P3)`; `covector` gives all four components.
    #[new]
    #[pyo3(signature = (mass, spatial=None, covector=None))]
    fn new(mass: f64, spatial: Option<[f64; 3]>, covector: Option<[f64; 4]>) -> PyResult<Self> {
        let inner = match (spatial, covector) {
            (None, None) => field::Momentum::rest(mass),
            (Some(s), None) => field::Momentum::from_spatial(mass, s),
            (None, Some(p)) => field::Momentum::new(MinkCovector::from_pauli(p), mass),
            _ => return Err(PyValueError::new_err("give spatial or covector, not both")),
        }
        .map_err(err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn mass(&self) -> f64 {
        self.inner.mass()
    }

    #[getter]
    fn covector(&self) -> [f64; 4] {
        self.inner.covector().pauli()
    }

    fn __repr__(&self) -> String {
        format!("Momentum(mass={}, covector={:?})", self.mass(), self.covector())
    }
}

/// Element of `W^{2j}`: the full sector sequence.
#[pyclass(name = "Field", frozen)]
struct PyField {
    inner: HigherSpinField,
}

#[pymethods]
impl PyField {
    #[getter]
    fn two_j(&self) -> usize {
        self.inner.two_j()
    }

    #[getter]
    fn spin(&self) -> f64 {
        self.inner.spin()
    }

    /// All sectors concatenated in packed layout.
    fn packed(&self) -> Vec<C64> {
        self.inner.packed()
    }

    /// `[(family, h, k, packed), ...]` in sequence order.
    fn sectors(&self) -> Vec<(String, usize, usize, Vec<C64>)> {
        self.inner
            .sectors()
            .iter()
            .map(|s| {
                let id = s.id();
                let fam = serde_json::to_value(id.family).expect("family serializes");
                (fam.as_str().unwrap_or_default().to_string(), id.h, id.k, s.packed())
            })
            .collect()
    }

    fn algebraic_residual(&self, p: &PyMomentum) -> PyResult<f64> {
        field::algebraic_residual(&self.inner, &p.inner).map_err(err)
    }

    fn jw_residual(&self, p: &PyMomentum) -> PyResult<f64> {
        field::jw_residual(&self.inner, &p.inner).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("fields serialize")
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(|inner| Self { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[staticmethod]
    fn from_packed(two_j: usize, packed: Vec<C64>) -> PyResult<Self> {
        HigherSpinField::from_packed(two_j, &packed)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Field(spin={}, sectors={})", self.spin(), self.inner.sectors().len())
    }
}

/// Solves `γ̌[P]Ψ = mΨ` from the packed main sector `plain(2j, 0)`.
#[pyfunction]
fn solve(spin: f64, momentum: &PyMomentum, main: Vec<C64>) -> PyResult<PyField> {
    let two_j = two_j_from_spin(spin).map_err(err)?;
    let t = SectorTensor::from_packed(SectorId::plain(two_j, 0), &main).map_err(err)?;
    field::solve_algebraic(two_j, &momentum.inner, &t)
        .map(|inner| PyField { inner })
        .map_err(err)
}

/// Dimension of the solution space of the algebraic equation.
#[pyfunction]
fn solution_space_dim(two_j: usize, momentum: &PyMomentum) -> PyResult<usize> {
    field::solution_space_nullity(two_j, &momentum.inner).map_err(err)
}

/// `(lagrangian, energy tensor rows as [[complex; 4]; 4])` of a solved plane wave.
#[pyfunction]
fn energy_tensor(psi: &PyField, momentum: &PyMomentum) -> PyResult<(C64, Vec<Vec<C64>>)> {
    let w = PlaneWave::new(momentum.inner.clone(), psi.inner.clone()).map_err(err)?;
    let et = field::energy_tensor(&w).map_err(err)?;
    Ok((et.lagrangian, et.values.iter().map(|r| r.to_vec()).collect()))
}

/// `g(Y, Z)` from Pauli components.
#[pyfunction]
fn metric_g(y: [f64; 4], z: [f64; 4]) -> f64 {
    core_metric_g(&MinkVector::from_pauli(y), &MinkVector::from_pauli(z))
}

/// `‖{γ[Y], γ[Z]} − 2g(Y, Z)‖_max` from Pauli components.
#[pyfunction]
fn clifford_residual(y: [f64; 4], z: [f64; 4]) -> f64 {
    core_clifford_residual(&MinkVector::from_pauli(y), &MinkVector::from_pauli(z))
}

/// `(eigenvalue, residual, commutant dimension)` of the Casimir on `∨^r U`.
#[pyfunction]
fn casimir(r: usize) -> (f64, f64, usize) {
    let rep = extend_rep(&AngMomBasis::standard(), r);
    let w = irreducibility_witness(&rep);
    (rep.casimir_value(), w.casimir_residual, w.commutant_dim)
}

/// Ten components `(a, b11, b12, b21, b22, c, d11, d12, d21, d22)` and the residual.
#[pyfunction]
fn solve_antisym(momentum: &PyMomentum, main: C64) -> (Vec<C64>, f64) {
    let f = antisym_solve(&momentum.inner, main);
    let res = antisym_residual(&momentum.inner, &f);
    (f.components(), res)
}

/// `(check part, dilaton scalar)` of a pair-symmetric spin-2 field given
/// as 16 components in `((A·2 + Ȧ)·2 + B)·2 + Ḃ` order.
#[pyfunction]
fn decompose_spin2(g: Vec<C64>) -> PyResult<(Vec<C64>, C64)> {
    let data: [C64; 16] = g
        .try_into()
        .map_err(|v: Vec<C64>| PyValueError::new_err(format!("expected 16 components, got {}", v.len())))?;
    let parts = spin2_decompose(&Spin2Field::new(data).map_err(err)?).map_err(err)?;
    Ok((parts.check.data().to_vec(), parts.dilaton))
}

#[pymodule]
fn spinweave(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMomentum>()?;
    m.add_class::<PyField>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(solution_space_dim, m)?)?;
    m.add_function(wrap_pyfunction!(energy_tensor, m)?)?;
    m.add_function(wrap_pyfunction!(metric_g, m)?)?;
    m.add_function(wrap_pyfunction!(clifford_residual, m)?)?;
    m.add_function(wrap_pyfunction!(casimir, m)?)?;
    m.add_function(wrap_pyfunction!(solve_antisym, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_spin2, m)?)?;
    Ok(())
}
