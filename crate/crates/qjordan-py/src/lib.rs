//! Python bindings for the qjordan workbench.
//!
//! Exposes the quadratic-algebra type with its verification suites,
//! derivation spaces, Moufang-set checks, and the exhaustive search, so the
//! whole pipeline can be driven from Python. Elements are passed as strings
//! of space-separated coordinates in the file serialization (for example
//! `"1 0"`, or `"1,0 0,1"` over an extension field), matching the CLI.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qjordan::constructions::{field_algebra, matrix_plus_algebra};
use qjordan::deriv::{derivation_space, inverse_compatible_space, Epsilon};
use qjordan::gf::Fe;
use qjordan::identities::{self, IdentityId, Suite};
use qjordan::moufang::{
    build_moufang, is_proper, little_projective_group_order, recover_structure,
    verify_moufang_axioms, DEFAULT_GROUP_BOUND,
};
use qjordan::qjcore::QuadraticAlgebra;
use qjordan::search;

fn to_py_err(e: qjordan::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_suite(name: &str) -> PyResult<Suite> {
    match name {
        "weak" => Ok(Suite::Weak),
        "strict" => Ok(Suite::Strict),
        "lemmas" => Ok(Suite::Lemmas),
        "division" => Ok(Suite::Division),
        "all" => Ok(Suite::All),
        other => Err(PyValueError::new_err(format!(
            "unknown suite '{other}' (weak|strict|lemmas|division|all)"
        ))),
    }
}

fn parse_epsilon(name: &str) -> PyResult<Epsilon> {
    match name {
        "plus" | "+" => Ok(Epsilon::Plus),
        "minus" | "-" => Ok(Epsilon::Minus),
        other => Err(PyValueError::new_err(format!(
            "unknown epsilon '{other}' (plus|minus)"
        ))),
    }
}

/// A finite quadratic algebra with a distinguished unit.
#[pyclass(name = "Algebra", from_py_object)]
#[derive(Clone)]
struct PyAlgebra {
    inner: QuadraticAlgebra,
}

impl PyAlgebra {
    fn coords(&self, s: &str) -> PyResult<Vec<Fe>> {
        let coords: Vec<Fe> = s
            .split_whitespace()
            .map(|w| self.inner.field().parse_element(w))
            .collect::<qjordan::Result<_>>()
            .map_err(to_py_err)?;
        if coords.len() != self.inner.dim() {
            return Err(PyValueError::new_err(format!(
                "expected {} coordinates, got {}",
                self.inner.dim(),
                coords.len()
            )));
        }
        Ok(coords)
    }

    fn render(&self, v: &[Fe]) -> String {
        self.inner.render_vector(v)
    }
}

#[pymethods]
impl PyAlgebra {
    /// The field F_{p^m} viewed as an algebra over F_p, with bQ_a = a²b.
    #[staticmethod]
    fn field(p: u64, m: usize) -> PyResult<PyAlgebra> {
        Ok(PyAlgebra {
            inner: field_algebra(p, m).map_err(to_py_err)?,
        })
    }

    /// The matrix algebra M_r(F_p) with the sandwich operator bQ_a = aba.
    #[staticmethod]
    fn matrix_plus(p: u64, r: usize) -> PyResult<PyAlgebra> {
        Ok(PyAlgebra {
            inner: matrix_plus_algebra(p, r).map_err(to_py_err)?,
        })
    }

    /// Parses the qja text format.
    #[staticmethod]
    fn loads(text: &str) -> PyResult<PyAlgebra> {
        Ok(PyAlgebra {
            inner: QuadraticAlgebra::parse(text).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<PyAlgebra> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| PyValueError::new_err(format!("cannot read {path}: {e}")))?;
        PyAlgebra::loads(&text)
    }

    /// Serializes to the qja text format.
    fn dumps(&self) -> String {
        self.inner.to_text()
    }

    fn save(&self, path: &str) -> PyResult<()> {
        std::fs::write(path, self.inner.to_text())
            .map_err(|e| PyValueError::new_err(format!("cannot write {path}: {e}")))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.field().p()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.field().m()
    }

    /// Number of elements of the algebra, q^dim.
    #[getter]
    fn size(&self) -> u128 {
        self.inner.element_count()
    }

    #[getter]
    fn unit(&self) -> String {
        self.render(self.inner.unit())
    }

    /// All elements in canonical order, as coordinate strings.
    fn elements(&self) -> PyResult<Vec<String>> {
        Ok(self
            .inner
            .elements()
            .map_err(to_py_err)?
            .iter()
            .map(|v| self.render(v))
            .collect())
    }

    /// The operator Q_a, rendered one row per line.
    fn q_op(&self, a: &str) -> PyResult<String> {
        Ok(self.inner.q_op(&self.coords(a)?).render(self.inner.field()))
    }

    /// The polar operator Q_{a,b}.
    fn q_polar(&self, a: &str, b: &str) -> PyResult<String> {
        Ok(self
            .inner
            .q_polar(&self.coords(a)?, &self.coords(b)?)
            .render(self.inner.field()))
    }

    /// The inverse a^{-1} = aQ_a^{-1}, or None when Q_a is singular.
    fn inverse(&self, a: &str) -> PyResult<Option<String>> {
        Ok(self.inner.inverse(&self.coords(a)?).map(|v| self.render(&v)))
    }

    fn is_invertible(&self, a: &str) -> PyResult<bool> {
        Ok(self.inner.is_invertible(&self.coords(a)?))
    }

    /// The isotope at an invertible element.
    fn isotope(&self, a: &str) -> PyResult<PyAlgebra> {
        Ok(PyAlgebra {
            inner: self.inner.isotope(&self.coords(a)?).map_err(to_py_err)?,
        })
    }

    /// Scalar extension of a prime-field algebra to F_{p^degree}.
    fn extend(&self, degree: usize) -> PyResult<PyAlgebra> {
        Ok(PyAlgebra {
            inner: self.inner.scalar_extension(degree).map_err(to_py_err)?,
        })
    }

    /// The linear-algebra side of the bridge (odd characteristic): the
    /// multiplication table `a·b = ½ 1Q_{a,b}` in the lja text format.
    fn to_linear(&self) -> PyResult<String> {
        Ok(qjordan::constructions::to_linear(&self.inner)
            .map_err(to_py_err)?
            .to_text())
    }

    /// Rebuilds a quadratic algebra from an lja multiplication table via
    /// `bQ_a = −a²·b + 2a·(a·b)`.
    #[staticmethod]
    fn from_linear(text: &str) -> PyResult<PyAlgebra> {
        let linear =
            qjordan::constructions::LinearJordanAlgebra::parse(text).map_err(to_py_err)?;
        Ok(PyAlgebra {
            inner: qjordan::constructions::from_linear(&linear).map_err(to_py_err)?,
        })
    }

    fn is_weak(&self) -> PyResult<bool> {
        identities::is_weak_qja(&self.inner).map_err(to_py_err)
    }

    fn is_strict(&self) -> PyResult<bool> {
        identities::is_strict_qja(&self.inner).map_err(to_py_err)
    }

    fn is_strict_via_extension(&self) -> PyResult<bool> {
        identities::is_strict_via_extension(&self.inner).map_err(to_py_err)
    }

    fn is_division(&self) -> PyResult<bool> {
        identities::is_division(&self.inner).map_err(to_py_err)
    }

    /// Runs a verification suite and returns the report text.
    #[pyo3(signature = (suite = "all", machine = false))]
    fn verify(&self, suite: &str, machine: bool) -> PyResult<String> {
        let lines = identities::run_suite(&self.inner, parse_suite(suite)?).map_err(to_py_err)?;
        Ok(identities::render_lines(&lines, machine))
    }

    /// Whether every check of a suite passes.
    #[pyo3(signature = (suite = "all"))]
    fn passes(&self, suite: &str) -> PyResult<bool> {
        let lines = identities::run_suite(&self.inner, parse_suite(suite)?).map_err(to_py_err)?;
        Ok(identities::all_pass(&lines))
    }

    /// The Hua identity report as (holds, checked, skipped).
    fn hua(&self) -> PyResult<(bool, usize, usize)> {
        let r = identities::check_identity(&self.inner, IdentityId::Hua).map_err(to_py_err)?;
        Ok((r.holds, r.checked, r.skipped))
    }

    /// Dimension of the ε-derivation space ("plus" or "minus").
    fn derivation_dim(&self, epsilon: &str) -> PyResult<usize> {
        Ok(derivation_space(&self.inner, parse_epsilon(epsilon)?).dim())
    }

    /// Canonical basis of the ε-derivation space, one rendered matrix each.
    fn derivation_basis(&self, epsilon: &str) -> PyResult<Vec<String>> {
        let space = derivation_space(&self.inner, parse_epsilon(epsilon)?);
        Ok(space
            .basis
            .iter()
            .map(|d| d.render(self.inner.field()))
            .collect())
    }

    /// Whether the inverse-compatibility space equals the ε-derivation
    /// space (division algebras only).
    fn inverse_compatible_equals_derivations(&self, epsilon: &str) -> PyResult<bool> {
        let eps = parse_epsilon(epsilon)?;
        let a = inverse_compatible_space(&self.inner, eps).map_err(to_py_err)?;
        Ok(a.same_span(&derivation_space(&self.inner, eps)))
    }

    /// Builds the Moufang set and returns its summary as a dict:
    /// points, root_group_size, axioms, order, proper.
    fn moufang<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let ms = build_moufang(&self.inner).map_err(to_py_err)?;
        let d = PyDict::new(py);
        d.set_item("points", ms.n_points())?;
        d.set_item("root_group_size", ms.root_group(0).len())?;
        d.set_item("axioms", verify_moufang_axioms(&ms))?;
        d.set_item(
            "order",
            little_projective_group_order(&ms, DEFAULT_GROUP_BOUND).map_err(to_py_err)?,
        )?;
        d.set_item("proper", is_proper(&ms, DEFAULT_GROUP_BOUND).map_err(to_py_err)?)?;
        Ok(d)
    }

    /// Runs the Hua-map recovery at base point `e` and returns the check
    /// dict plus the reconstructed algebra under "reconstruction".
    fn moufang_recover<'py>(&self, py: Python<'py>, e: &str) -> PyResult<Bound<'py, PyDict>> {
        let ms = build_moufang(&self.inner).map_err(to_py_err)?;
        let e_idx = ms.table().index_of(&self.coords(e)?);
        let report = recover_structure(&ms, e_idx).map_err(to_py_err)?;
        let d = PyDict::new(py);
        d.set_item("linear", report.linear)?;
        d.set_item("qj1", report.qj1)?;
        d.set_item("qj2", report.qj2)?;
        d.set_item("qj3", report.qj3)?;
        d.set_item("tau_inverse", report.tau_inverse)?;
        d.set_item("biadditive", report.biadditive)?;
        d.set_item("homogeneous", report.homogeneous)?;
        d.set_item("quadratic", report.quadratic)?;
        d.set_item("weak", report.weak)?;
        d.set_item("all_pass", report.all_pass())?;
        d.set_item(
            "identical",
            report.reconstruction.as_ref() == Some(&self.inner),
        )?;
        d.set_item(
            "reconstruction",
            report
                .reconstruction
                .map(|inner| PyAlgebra { inner }.into_pyobject(py))
                .transpose()?,
        )?;
        Ok(d)
    }

    fn __eq__(&self, other: &PyAlgebra) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(p={}, m={}, dim={})",
            self.inner.field().p(),
            self.inner.field().m(),
            self.inner.dim()
        )
    }
}

/// Classifies every candidate algebra of a fully enumerable space and
/// returns the census as a dict.
#[pyfunction]
fn search_census(py: Python<'_>, p: u64, n: usize) -> PyResult<Bound<'_, PyDict>> {
    census_dict(py, search::classify_candidates(p, n).map_err(to_py_err)?)
}

/// Classifies a seeded deterministic sample of a larger space.
#[pyfunction]
fn search_census_sampled(
    py: Python<'_>,
    p: u64,
    n: usize,
    sample: u64,
    seed: u64,
) -> PyResult<Bound<'_, PyDict>> {
    census_dict(
        py,
        search::classify_sampled(p, n, sample, seed).map_err(to_py_err)?,
    )
}

fn census_dict(py: Python<'_>, census: search::Census) -> PyResult<Bound<'_, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("p", census.p)?;
    d.set_item("n", census.n)?;
    d.set_item("total", census.total)?;
    d.set_item("examined", census.examined)?;
    d.set_item("weak", census.weak)?;
    d.set_item("strict", census.strict)?;
    d.set_item("weak_division", census.weak_division)?;
    d.set_item("strict_division", census.strict_division)?;
    d.set_item("weak_not_strict", census.weak_not_strict.clone())?;
    d.set_item(
        "weak_division_not_strict",
        census.weak_division_not_strict.clone(),
    )?;
    d.set_item("rendered", search::render_census(&census))?;
    Ok(d)
}

/// Agreement of the two strictness routes over every weak candidate of a
/// fully enumerable space.
#[pyfunction]
fn strictness_agreement(p: u64, n: usize) -> PyResult<bool> {
    search::strictness_agreement_sweep(p, n).map_err(to_py_err)
}

/// The canonical monic irreducible polynomial of degree m over F_p,
/// as its coefficient list (constant term first).
#[pyfunction]
fn find_irreducible(p: u64, m: usize) -> PyResult<Vec<u64>> {
    qjordan::gf::find_irreducible(p, m).map_err(to_py_err)
}

#[pymodule]
fn qjordan_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(search_census, m)?)?;
    m.add_function(wrap_pyfunction!(search_census_sampled, m)?)?;
    m.add_function(wrap_pyfunction!(strictness_agreement, m)?)?;
    m.add_function(wrap_pyfunction!(find_irreducible, m)?)?;
    Ok(())
}
