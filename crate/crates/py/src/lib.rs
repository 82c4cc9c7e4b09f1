//! Python bindings for the doubler library: towers, elements, the Hilbert-90
//! constructions and the property checker.

use std::sync::Arc;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use doubler::{
    check_identity, compare_towers, find_counterexample, hilbert90_witness, norm_one_from_seed,
    param_coordinates, pythagorean_tuple, random_element, IdentityId, SearchBudget, SeedVector,
    SplitMix64, TowerSpec,
};

fn to_py_err(err: doubler::Error) -> PyErr {
    PyValueError::new_err(format!("{}: {}", err.code(), err))
}

/// A tower specification, e.g. `Tower("cd:-1,cs:-1/2")`.
#[pyclass(frozen)]
struct Tower {
    inner: Arc<TowerSpec>,
}

#[pymethods]
impl Tower {
    #[new]
    fn new(spec: &str) -> PyResult<Tower> {
        let inner = TowerSpec::parse(spec).map_err(to_py_err)?;
        Ok(Tower {
            inner: Arc::new(inner),
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn depth(&self) -> usize {
        self.inner.depth()
    }

    /// The coefficient of x_i^2 in the diagonal norm form (1-based i).
    fn form_weight(&self, i: usize) -> PyResult<String> {
        Ok(self.inner.form_weight(i).map_err(to_py_err)?.to_string())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tower(\"{}\")", self.inner)
    }
}

/// An element of a tower; coordinates are exact rational strings.
#[pyclass(frozen)]
struct Element {
    inner: doubler::Element,
}

impl Element {
    fn wrap(inner: doubler::Element) -> Element {
        Element { inner }
    }
}

#[pymethods]
impl Element {
    #[new]
    fn new(tower: &Tower, coords: Vec<String>) -> PyResult<Element> {
        doubler::Element::from_coord_strings(tower.inner.clone(), &coords)
            .map(Element::wrap)
            .map_err(to_py_err)
    }

    fn coords(&self) -> Vec<String> {
        self.inner.coord_strings()
    }

    fn conj(&self) -> Element {
        Element::wrap(self.inner.conjugate())
    }

    fn trace(&self) -> String {
        self.inner.trace().to_string()
    }

    fn norm_form(&self) -> String {
        self.inner.norm_form().to_string()
    }

    fn norm_via_mul(&self) -> PyResult<String> {
        Ok(self.inner.norm_via_mul().map_err(to_py_err)?.to_string())
    }

    fn inverse(&self) -> PyResult<Element> {
        self.inner.inverse().map(Element::wrap).map_err(to_py_err)
    }

    fn is_imaginary(&self) -> bool {
        self.inner.is_imaginary()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn scale(&self, s: &str) -> PyResult<Element> {
        let s = doubler::Rational::parse(s).map_err(to_py_err)?;
        Ok(Element::wrap(self.inner.scale(&s)))
    }

    fn __mul__(&self, other: &Element) -> PyResult<Element> {
        self.inner
            .mul(&other.inner)
            .map(Element::wrap)
            .map_err(to_py_err)
    }

    fn __add__(&self, other: &Element) -> PyResult<Element> {
        self.inner
            .add(&other.inner)
            .map(Element::wrap)
            .map_err(to_py_err)
    }

    fn __sub__(&self, other: &Element) -> PyResult<Element> {
        self.inner
            .sub(&other.inner)
            .map(Element::wrap)
            .map_err(to_py_err)
    }

    fn __neg__(&self) -> Element {
        Element::wrap(self.inner.neg())
    }

    fn __eq__(&self, other: &Element) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Element({:?})", self.inner)
    }
}

/// The basis element e_i of a tower (1-based).
#[pyfunction]
fn basis(tower: &Tower, i: usize) -> PyResult<Element> {
    doubler::Element::basis(tower.inner.clone(), i)
        .map(Element::wrap)
        .map_err(to_py_err)
}

/// Hilbert-90 witness for a norm-one element: returns (witness, branch).
#[pyfunction]
fn witness(a: &Element) -> PyResult<(Element, String)> {
    let w = hilbert90_witness(&a.inner).map_err(to_py_err)?;
    Ok((Element::wrap(w.witness), w.branch.as_str().to_string()))
}

/// The norm-one element s^2 / n(s) for a nonzero anisotropic seed.
#[pyfunction]
fn norm_one(s: &Element) -> PyResult<Element> {
    norm_one_from_seed(&s.inner).map(Element::wrap).map_err(to_py_err)
}

/// Coordinates of the norm-one parametrization at a rational seed vector.
#[pyfunction]
fn param(tower: &Tower, seeds: Vec<String>) -> PyResult<Vec<String>> {
    let seeds = seeds
        .iter()
        .map(|s| doubler::Rational::parse(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(to_py_err)?;
    let sv = SeedVector::new(tower.inner.clone(), seeds).map_err(to_py_err)?;
    Ok(param_coordinates(&sv)
        .map_err(to_py_err)?
        .iter()
        .map(|c| c.to_string())
        .collect())
}

/// Pythagorean tuple from integer seeds: squares of all but the last entry
/// sum to the square of the last.
#[pyfunction]
fn pythagoras(seeds: Vec<BigInt>) -> PyResult<Vec<BigInt>> {
    pythagorean_tuple(&seeds).map_err(to_py_err)
}

/// Deterministic random element with integer coordinates in [-bound, bound].
#[pyfunction]
#[pyo3(signature = (tower, seed, bound = 4))]
fn random(tower: &Tower, seed: u64, bound: u32) -> Element {
    let mut rng = SplitMix64::new(seed);
    Element::wrap(random_element(&tower.inner, &mut rng, bound))
}

/// Runs an identity check over random elements; returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (tower, identity, trials = 100, seed = 0, bound = 4))]
fn check(tower: &Tower, identity: &str, trials: u64, seed: u64, bound: u32) -> PyResult<String> {
    let id: IdentityId = identity.parse().map_err(to_py_err)?;
    let report = check_identity(id, &tower.inner, trials, seed, bound).map_err(to_py_err)?;
    Ok(report.to_json())
}

/// Two-phase counterexample search; returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (tower, identity, phase2_trials = 0, seed = 0, bound = 4))]
fn search(
    tower: &Tower,
    identity: &str,
    phase2_trials: u64,
    seed: u64,
    bound: u32,
) -> PyResult<String> {
    let id: IdentityId = identity.parse().map_err(to_py_err)?;
    let budget = SearchBudget {
        phase2_trials,
        phase2_bound: bound,
        ..SearchBudget::default()
    };
    let report = find_counterexample(id, &tower.inner, &budget, seed).map_err(to_py_err)?;
    Ok(report.to_json())
}

/// Differential product test between two same-dimension towers; JSON report.
#[pyfunction]
#[pyo3(signature = (tower, other, trials = 100, seed = 0, bound = 4))]
fn diff(tower: &Tower, other: &Tower, trials: u64, seed: u64, bound: u32) -> PyResult<String> {
    let report = compare_towers(&tower.inner, &other.inner, trials, seed, bound)
        .map_err(to_py_err)?;
    Ok(report.to_json())
}

/// Names of every identity in the catalog.
#[pyfunction]
fn identity_names() -> Vec<&'static str> {
    IdentityId::ALL.iter().map(|id| id.name()).collect()
}

#[pymodule]
fn doubler_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Tower>()?;
    m.add_class::<Element>()?;
    m.add_function(wrap_pyfunction!(basis, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(norm_one, m)?)?;
    m.add_function(wrap_pyfunction!(param, m)?)?;
    m.add_function(wrap_pyfunction!(pythagoras, m)?)?;
    m.add_function(wrap_pyfunction!(random, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(diff, m)?)?;
    m.add_function(wrap_pyfunction!(identity_names, m)?)?;
    Ok(())
}
