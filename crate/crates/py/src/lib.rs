//! Python bindings: order ideals, border basis schemes and Gröbner basis schemes.
//!
//! Polynomials cross the boundary as strings and scheme points as JSON strings
//! of the form `{"c": {"i,j": "p/q"}}`.

use std::collections::BTreeMap;

use bbscheme_core::border::{is_border_basis_point, BorderScheme, SchemePoint};
use bbscheme_core::gb::{krull_dimension_split, GbConfig, Ideal};
use bbscheme_core::gbscheme::{affine_cell_detect, point_from_ideal, AffineCell, GbScheme, ReductionPolicy, Route};
use bbscheme_core::order_ideal::OrderIdeal;
use bbscheme_core::poly::text::parse_coeff;
use bbscheme_core::poly::{c_name, parse_polynomial_list, Polynomial, TermOrdering, Universe};
use bbscheme_core::{Error, ErrorKind};
use pyo3::exceptions::{PyArithmeticError, PyMemoryError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    match e.kind() {
        ErrorKind::Input => PyValueError::new_err(e.to_string()),
        ErrorKind::Math => PyArithmeticError::new_err(e.to_string()),
        ErrorKind::Resource => PyMemoryError::new_err(e.to_string()),
    }
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn route(name: &str) -> PyResult<Route> {
    match name {
        "substitution" => Ok(Route::Substitution),
        "reduction" => Ok(Route::Reduction(ReductionPolicy::default())),
        "elimination" => Ok(Route::EliminationOracle),
        other => Err(PyValueError::new_err(format!("unknown route `{other}`"))),
    }
}

fn point(json: &str) -> PyResult<SchemePoint> {
    SchemePoint::from_json_str(json).map_err(py_err)
}

/// A finite order ideal of terms in the given variables.
#[pyclass(name = "OrderIdeal", frozen)]
struct PyOrderIdeal {
    inner: OrderIdeal,
}

#[pymethods]
impl PyOrderIdeal {
    #[new]
    fn new(terms: &str, variables: Vec<String>) -> PyResult<Self> {
        let u = Universe::with_x(&variables).map_err(py_err)?;
        Ok(PyOrderIdeal {
            inner: OrderIdeal::parse(terms, &u).map_err(py_err)?,
        })
    }

    #[getter]
    fn mu(&self) -> usize {
        self.inner.mu()
    }

    #[getter]
    fn nu(&self) -> usize {
        self.inner.nu()
    }

    #[getter]
    fn eta(&self) -> usize {
        self.inner.eta()
    }

    fn terms(&self) -> Vec<String> {
        self.inner.terms().iter().map(|t| self.inner.format_term(t)).collect()
    }

    fn border(&self) -> Vec<String> {
        self.inner.border().iter().map(|t| self.inner.format_term(t)).collect()
    }

    fn corners(&self) -> Vec<String> {
        self.inner.corners().iter().map(|t| self.inner.format_term(t)).collect()
    }

    /// Generators of the border basis scheme ideal.
    fn border_scheme(&self) -> PyResult<Vec<String>> {
        let bs = BorderScheme::new(&self.inner).map_err(py_err)?;
        Ok(strings(&bs.commutator_generators()))
    }

    fn is_border_basis_point(&self, point_json: &str) -> PyResult<bool> {
        is_border_basis_point(&self.inner, &point(point_json)?).map_err(py_err)
    }

    /// Krull dimension of the border basis scheme.
    fn border_scheme_dimension(&self) -> PyResult<usize> {
        let bs = BorderScheme::new(&self.inner).map_err(py_err)?;
        krull_dimension_split(&bs.ideal(), &GbConfig::default()).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("OrderIdeal({:?})", self.terms().join(", "))
    }
}

/// The Gröbner basis scheme of an order ideal under a term ordering.
#[pyclass(name = "GbScheme", frozen)]
struct PyGbScheme {
    inner: GbScheme,
}

#[pymethods]
impl PyGbScheme {
    #[new]
    #[pyo3(signature = (order_ideal, sigma = "degrevlex"))]
    fn new(order_ideal: &PyOrderIdeal, sigma: &str) -> PyResult<Self> {
        let o = &order_ideal.inner;
        let s = TermOrdering::from_name(sigma, &o.universe().names()).map_err(py_err)?;
        Ok(PyGbScheme {
            inner: GbScheme::new(o, &s).map_err(py_err)?,
        })
    }

    fn scheme_variables(&self) -> Vec<String> {
        let mut ks: Vec<(usize, usize)> = self.inner.vars().s_co.iter().copied().collect();
        ks.sort_by_key(|&(i, j)| (j, i));
        ks.into_iter().map(|(i, j)| c_name(i, j)).collect()
    }

    /// Nonzero generators of the scheme ideal along `route`
    /// (`substitution`, `reduction` or `elimination`).
    #[pyo3(signature = (route = "substitution"))]
    fn generators(&self, route: &str) -> PyResult<Vec<String>> {
        let ideal = self.inner.ideal(self::route(route)?, &GbConfig::default()).map_err(py_err)?;
        Ok(strings(&ideal.nonzero_generators()))
    }

    /// Weights as three maps: x-variables, then `W` and `Wbar` keyed by c-variable name.
    fn weights(&self) -> (BTreeMap<String, u64>, BTreeMap<String, u64>, BTreeMap<String, u64>) {
        let ws = self.inner.weights();
        let by_name = |m: &BTreeMap<(usize, usize), u64>| m.iter().map(|(&(i, j), &w)| (c_name(i, j), w)).collect();
        let v = self.inner.order_ideal().universe().names().into_iter().zip(ws.v.iter().copied()).collect();
        (v, by_name(&ws.w), by_name(&ws.wbar))
    }

    /// Whether the point (on the scheme variables or all c-variables) lies on the scheme.
    fn contains(&self, point_json: &str) -> PyResult<bool> {
        match self.inner.expand_point(&point(point_json)?) {
            Ok(full) => self.inner.border_scheme().is_point(&full).map_err(py_err),
            Err(Error::NotAPoint { .. }) => Ok(false),
            Err(e) => Err(py_err(e)),
        }
    }

    /// Reduced Gröbner basis of the ideal belonging to a point.
    fn ideal_from_point(&self, point_json: &str) -> PyResult<Vec<String>> {
        Ok(strings(&self.inner.ideal_from_point(&point(point_json)?).map_err(py_err)?))
    }

    /// Fibers of the flat degeneration through a point at the given parameter values.
    fn deform(&self, point_json: &str, at: Vec<String>) -> PyResult<Vec<Vec<String>>> {
        let fam = self.inner.deform(&point(point_json)?, "t").map_err(py_err)?;
        at.iter()
            .map(|s| {
                let t = parse_coeff(s).map_err(|e| PyValueError::new_err(e.to_string()))?;
                Ok(strings(&fam.fiber_generators(&t).map_err(py_err)?))
            })
            .collect()
    }

    /// Free variables when the scheme is an affine space, else `None`.
    fn affine_cell(&self) -> PyResult<Option<Vec<String>>> {
        let ig = self.inner.ideal(Route::Substitution, &GbConfig::default()).map_err(py_err)?;
        let w = self.inner.weights().vector_for(ig.universe(), false);
        Ok(match affine_cell_detect(&ig, &w).map_err(py_err)? {
            AffineCell::AffineSpace(vars) => Some(vars),
            AffineCell::Residual(_) => None,
        })
    }
}

/// The order ideal and scheme point of a zero-dimensional ideal, with
/// variables `x`, `y`, `z` or `x1..xn` as given.
#[pyfunction]
#[pyo3(signature = (generators, variables, sigma = "degrevlex"))]
fn point_from_generators(generators: &str, variables: Vec<String>, sigma: &str) -> PyResult<(Vec<String>, String)> {
    let u = Universe::with_x(&variables).map_err(py_err)?;
    let ideal = Ideal::new(&u, parse_polynomial_list(generators, &u).map_err(py_err)?).map_err(py_err)?;
    let s = TermOrdering::from_name(sigma, &variables).map_err(py_err)?;
    let (o, p) = point_from_ideal(&ideal, &s, &GbConfig::default()).map_err(py_err)?;
    Ok((o.terms().iter().map(|t| o.format_term(t)).collect(), p.to_json_string()))
}

#[pymodule]
fn pybbscheme(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyOrderIdeal>()?;
    m.add_class::<PyGbScheme>()?;
    m.add_function(wrap_pyfunction!(point_from_generators, m)?)?;
    Ok(())
}
